"""Classify a polynomial by the span of its matrix values.

The symbolic evaluation on generic matrices decides the verdict; a seeded
sample of exact numeric values cross-checks it.  Sampling can only ever
confirm a subspace of the predicted one, so a sampled vector outside the
prediction is a bug and raises :class:`InconsistencyError`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .freealg import NcPolynomial
from .generic import GenericContext, eval_generic, eval_numeric, is_central, is_identity, trace_zero
from .matrices import (
    CanonicalName,
    Involution,
    Matrix,
    Subspace,
    apply_star,
    as_involution,
    canonical_subspace,
    check_lie_closure,
    random_matrix,
)
from .scalars import CPoly

STABLE_WINDOW = 8
DEFAULT_BUDGET = 512

VERDICTS = {
    "i": "Identity",
    "ii": "Central",
    "iii": "Skew",
    "iv": "CentralPlusSkew",
    "v": "SymmetricTraceZero",
    "vi": "Symmetric",
    "vii": "SumOfCommutators",
    "viii": "Full",
}
_FIRST_KIND_SPAN = {
    "i": CanonicalName.ZERO,
    "ii": CanonicalName.Z,
    "iii": CanonicalName.K,
    "iv": CanonicalName.ZPLUSK,
    "v": CanonicalName.SK,
    "vi": CanonicalName.S,
    "vii": CanonicalName.COMM,
    "viii": CanonicalName.FULL,
}
# four-way tree: case label -> (verdict, span)
_FOUR_WAY = {
    "i": ("Identity", CanonicalName.ZERO),
    "ii": ("Central", CanonicalName.Z),
    "iii": ("SumOfCommutators", CanonicalName.COMM),
    "iv": ("Full", CanonicalName.FULL),
}

CENTRAL_READING = "central means the generic evaluation is a scalar matrix (star letters allowed)"
EXCEPTIONAL_DIM = "span claim unproven for this dimension; sampled evidence attached"


class InconsistencyError(RuntimeError):
    """Sampled values disagree with the symbolic verdict."""


@dataclass
class SpanSample:
    space: Subspace
    samples_used: int
    stopped: str

    @property
    def rank(self) -> int:
        return self.space.dim


@dataclass
class ClassReport:
    verdict: str
    case: str
    involution: str
    d: int
    span_name: CanonicalName
    span_dim: int
    certificates: list = field(default_factory=list)
    sample: SpanSample | None = None
    warnings: list = field(default_factory=list)
    seed: int = 0
    polynomial: str = ""

    @property
    def samples_used(self) -> int:
        return self.sample.samples_used if self.sample else 0

    @property
    def sampled_dim(self) -> int:
        return self.sample.rank if self.sample else 0

    def to_json(self, include_basis: bool = True) -> dict:
        span = {"name": str(self.span_name), "dimension": self.span_dim}
        if self.sample is not None:
            span["sampled_dimension"] = self.sample.rank
            if include_basis:
                span["basis"] = [str(m) for m in self.sample.space.reduced_basis()]
        return {
            "polynomial": self.polynomial,
            "d": self.d,
            "involution": self.involution,
            "verdict": self.verdict,
            "case": self.case,
            "span": span,
            "certificates": self.certificates,
            "samples_used": self.samples_used,
            "sampling_stopped": self.sample.stopped if self.sample else None,
            "warnings": list(self.warnings),
            "seed": self.seed,
        }


# ---------------------------------------------------------------------------


def span_sample(
    f: NcPolynomial,
    d: int,
    inv="none",
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    predicted_dim: int | None = None,
) -> SpanSample:
    """Exact span of ``f`` at seeded random integer matrix tuples.

    Stops once the rank has not moved for ``STABLE_WINDOW`` samples, or it
    reaches ``predicted_dim``, or ``budget`` samples were drawn.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    inv = as_involution(inv)
    inv.validate(d)
    rng = random.Random(seed)
    n = max(1, f.max_index())
    gaussian = inv.second_kind
    space = Subspace(d)
    if f.is_zero():
        return SpanSample(space, 0, "zero polynomial")
    if predicted_dim == 0:
        return SpanSample(space, 0, "predicted dimension reached")
    quiet = 0
    used = 0
    stopped = "budget exhausted"
    while used < budget:
        mats = [random_matrix(rng, d, gaussian) for _ in range(n)]
        value = eval_numeric(f, mats, inv)
        used += 1
        if space.add(value):
            quiet = 0
        else:
            quiet += 1
        if predicted_dim is not None and space.dim >= predicted_dim:
            stopped = "predicted dimension reached"
            break
        if quiet >= STABLE_WINDOW:
            stopped = "rank stable"
            break
    return SpanSample(space, used, stopped)


# ---------------------------------------------------------------------------


def _scalar_nonzero(m: Matrix):
    c = m.scalar_part()
    return c is not None and c != 0


def _trace_is_zero(e: Matrix) -> bool:
    tr = e.trace()
    return tr.is_zero() if isinstance(tr, CPoly) else tr == 0


def _decide_four_way(e: Matrix) -> str:
    if e.is_zero():
        return "i"
    if _scalar_nonzero(e):
        return "ii"
    if _trace_is_zero(e):
        return "iii"
    return "iv"


def _decide_eight_way(e: Matrix, es: Matrix) -> tuple[str, list[dict]]:
    """Case label plus the symbolic tests that fired, in order."""
    plus, minus = e + es, e - es
    tests = []

    def record(name, value):
        tests.append({"test": name, "result": value})
        return value

    if record("e = 0", e.is_zero()):
        return "i", tests
    if record("e = c*I, c != 0", _scalar_nonzero(e)):
        return "ii", tests
    if record("e + e* = 0", plus.is_zero()):
        return "iii", tests
    if record("e + e* = c*I, c != 0", _scalar_nonzero(plus)):
        return "iv", tests
    symmetric = record("e - e* = 0", minus.is_zero())
    traceless = record("tr e = 0", _trace_is_zero(e))
    if symmetric:
        return ("v" if traceless else "vi"), tests
    if traceless:
        return "vii", tests
    return "viii", tests


def _finish(report: ClassReport, f: NcPolynomial, inv: Involution, seed: int, budget: int, sample: bool) -> ClassReport:
    target = canonical_subspace(report.d, inv, report.span_name)
    report.span_dim = target.dim
    if not sample:
        return report
    s = span_sample(f, report.d, inv, seed=seed, budget=budget, predicted_dim=target.dim)
    report.sample = s
    if s.rank > target.dim or not s.space.is_subspace_of(target):
        raise InconsistencyError(
            f"sampled span (dim {s.rank}) escapes the predicted {report.span_name} (dim {target.dim})"
        )
    if s.rank < target.dim:
        report.warnings.append(
            f"sampling reached dimension {s.rank} of the predicted {target.dim} ({s.stopped})"
        )
    return report


def classify_nostar(f: NcPolynomial, d: int, seed: int = 0, budget: int = DEFAULT_BUDGET, sample: bool = True) -> ClassReport:
    if not f.is_star_free():
        raise ValueError("starred variables need an involution; use classify_star_firstkind/secondkind")
    if d < 2:
        raise ValueError("classification needs d >= 2")
    if f.has_gaussian_coefficients():
        raise ValueError("coefficients must be rational without an involution")
    ctx = GenericContext.for_poly(f, d, "none")
    e = eval_generic(f, ctx)
    case = _decide_four_way(e)
    verdict, span = _FOUR_WAY[case]
    certs = [is_identity(f, ctx, e).to_json()]
    if case != "i":
        certs.append(is_central(f, ctx, e).to_json())
    if case in ("iii", "iv"):
        certs.append(trace_zero(f, ctx, e).to_json())
    report = ClassReport(verdict, case, "none", d, span, 0, certs, seed=seed, polynomial=str(f))
    return _finish(report, f, Involution("none"), seed, budget, sample)


def classify_star_firstkind(
    f: NcPolynomial, d: int, inv="transpose", seed: int = 0, budget: int = DEFAULT_BUDGET, sample: bool = True
) -> ClassReport:
    inv = as_involution(inv)
    if not inv.first_kind:
        raise ValueError(f"expected transpose or symplectic, got {inv.kind}")
    if d < 2:
        raise ValueError("classification needs d >= 2")
    inv.validate(d)
    if f.has_gaussian_coefficients():
        raise ValueError("first-kind involutions need rational coefficients")
    ctx = GenericContext.for_poly(f, d, inv)
    e = eval_generic(f, ctx)
    es = apply_star(e, inv)
    case, tests = _decide_eight_way(e, es)
    certs: list = [{"kind": "decision_tree", "tests": tests}]
    certs.append(is_identity(f, ctx, e).to_json())
    if case not in ("i",):
        certs.append(is_central(f, ctx, e).to_json())
    if case in ("v", "vi", "vii", "viii"):
        certs.append(trace_zero(f, ctx, e).to_json())
    warnings = []
    if d in (2, 4):
        warnings.append(EXCEPTIONAL_DIM)
    if case in ("ii", "iv"):
        warnings.append(CENTRAL_READING)
    report = ClassReport(
        VERDICTS[case], case, inv.kind, d, _FIRST_KIND_SPAN[case], 0, certs, warnings=warnings, seed=seed, polynomial=str(f)
    )
    return _finish(report, f, inv, seed, budget, sample)


def classify_star_secondkind(f: NcPolynomial, d: int, seed: int = 0, budget: int = DEFAULT_BUDGET, sample: bool = True) -> ClassReport:
    if d < 2:
        raise ValueError("classification needs d >= 2")
    inv = Involution("unitary")
    ctx = GenericContext.for_poly(f, d, inv)
    e = eval_generic(f, ctx)
    case = _decide_four_way(e)
    verdict, span = _FOUR_WAY[case]
    certs = [is_identity(f, ctx, e).to_json()]
    if case != "i":
        certs.append(is_central(f, ctx, e).to_json())
    if case in ("iii", "iv"):
        certs.append(trace_zero(f, ctx, e).to_json())
    warnings = [CENTRAL_READING] if case == "ii" and not f.is_star_free() else []
    report = ClassReport(verdict, case, "unitary", d, span, 0, certs, warnings=warnings, seed=seed, polynomial=str(f))
    return _finish(report, f, inv, seed, budget, sample)


def classify(f: NcPolynomial, d: int, inv="none", seed: int = 0, budget: int = DEFAULT_BUDGET, sample: bool = True) -> ClassReport:
    inv = as_involution(inv)
    if inv.is_none:
        return classify_nostar(f, d, seed, budget, sample)
    if inv.first_kind:
        return classify_star_firstkind(f, d, inv, seed, budget, sample)
    return classify_star_secondkind(f, d, seed, budget, sample)


def sampled_span_closed(report: ClassReport) -> bool:
    """Closure of the sampled span under [., A] or [., K]."""
    if report.sample is None:
        raise ValueError("report carries no sampled span")
    return check_lie_closure(report.sample.space, report.involution)
