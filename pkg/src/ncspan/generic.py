"""Generic matrices and symbolic certificates.

``eval_generic`` maps x_l to the generic matrix Y_l = [z_l_ij] and x_l' to
its image under the model's involution:

* orthogonal: the transpose of Y_l;
* symplectic: the usual symplectic star of Y_l (d even);
* unitary: an independent generic matrix W_l = [w_l_ij].  Over Q(i) with
  the conjugate transpose, a and a^h are algebraically independent, so the
  *-identities are exactly the ordinary identities in 2n variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import kernels as _k
from .freealg import NcPolynomial
from .matrices import Involution, Matrix, apply_star, as_involution
from .scalars import CPoly, Var

MODELS = ("none", "orthogonal", "symplectic", "unitary")
_FROM_INVOLUTION = {"none": "none", "transpose": "orthogonal", "symplectic": "symplectic", "unitary": "unitary"}
_TO_INVOLUTION = {"none": "none", "orthogonal": "transpose", "symplectic": "symplectic", "unitary": "unitary"}

DEFAULT_TERM_BUDGET = 10**7


class TermBudgetExceeded(ValueError):
    pass


def model_of(inv) -> str:
    """Model name for an involution (``transpose`` becomes ``orthogonal``)."""
    if isinstance(inv, str) and inv in MODELS:
        return inv
    return _FROM_INVOLUTION[as_involution(inv).kind]


class GenericContext:
    """Generic d x d matrices Y_1..Y_n for one involution model."""

    def __init__(self, d: int, model="none", n: int = 1, term_budget: int = DEFAULT_TERM_BUDGET) -> None:
        self.model = model_of(model)
        self.involution = Involution(_TO_INVOLUTION[self.model])
        if d < 1:
            raise ValueError("dimension must be >= 1")
        self.involution.validate(d)
        self.d = d
        self.n = n
        self.term_budget = term_budget
        self._y: dict[int, list] = {}
        self._ys: dict[int, list] = {}

    @classmethod
    def for_poly(cls, f: NcPolynomial, d: int, model="none", **kw) -> "GenericContext":
        return cls(d, model, max(1, f.max_index()), **kw)

    def generic(self, ell: int) -> Matrix:
        return Matrix.from_flat(self.d, (CPoly._wrap(t) for t in self._letter(ell, False)))

    def generic_star(self, ell: int) -> Matrix:
        return Matrix.from_flat(self.d, (CPoly._wrap(t) for t in self._letter(ell, True)))

    def _letter(self, ell: int, starred: bool) -> list:
        if not 1 <= ell <= self.n:
            raise IndexError(f"variable x{ell} outside the context's {self.n} generic matrices")
        d = self.d
        if ell not in self._y:
            self._y[ell] = [{(Var(ell, i, j).id,): 1} for i in range(1, d + 1) for j in range(1, d + 1)]
        if not starred:
            return self._y[ell]
        if self.model == "none":
            raise ValueError("starred variable used without an involution")
        if ell not in self._ys:
            if self.model == "unitary":
                self._ys[ell] = [{(Var(ell, i, j, 1).id,): 1} for i in range(1, d + 1) for j in range(1, d + 1)]
            else:
                y = Matrix.from_flat(d, (CPoly._wrap(t) for t in self._y[ell]))
                self._ys[ell] = [x.terms for x in apply_star(y, self.involution).entries]
        return self._ys[ell]

    def point(self, matrices: Sequence[Matrix]) -> dict:
        """The z (and w) assignment induced by numeric matrices.

        ``matrices[l-1]`` is substituted for Y_l; in the unitary model the
        companion W_l receives the conjugate transpose.
        """
        pt = {}
        for ell, a in enumerate(matrices, start=1):
            d = a.d
            for i in range(d):
                for j in range(d):
                    pt[Var(ell, i + 1, j + 1)] = a[i, j]
            if self.model == "unitary":
                ah = apply_star(a, "unitary")
                for i in range(d):
                    for j in range(d):
                        pt[Var(ell, i + 1, j + 1, 1)] = ah[i, j]
        return pt

    def predicted_terms(self, f: NcPolynomial) -> int:
        return sum(self.d ** (len(w) + 1) for w in f.terms)


def _check_poly(f: NcPolynomial, ctx: GenericContext) -> None:
    if ctx.model == "none" and not f.is_star_free():
        raise ValueError("starred variable used without an involution")
    if f.max_index() > ctx.n:
        raise IndexError(f"polynomial uses x{f.max_index()} but the context has {ctx.n} generic matrices")
    need = ctx.predicted_terms(f)
    if need > ctx.term_budget:
        raise TermBudgetExceeded(f"predicted {need} terms exceeds the budget of {ctx.term_budget}")


def eval_generic(f: NcPolynomial, ctx: GenericContext) -> Matrix:
    """Symbolic image of ``f`` in M_d(F[z])."""
    _check_poly(f, ctx)
    d = ctx.d
    memo: dict = {}

    def product(w):
        got = memo.get(w)
        if got is not None:
            return got
        last = ctx._letter(w[-1].index, w[-1].starred)
        out = last if len(w) == 1 else _k.matmul(product(w[:-1]), last, d)
        memo[w] = out
        return out

    total: list = [{} for _ in range(d * d)]
    for w, c in sorted(f.terms.items(), key=lambda wc: (len(wc[0]), wc[0])):
        if not w:
            for i in range(d):
                total[i * d + i] = _k.poly_add(total[i * d + i], {(): c})
            continue
        m = product(w)
        total = [_k.poly_add(t, _k.poly_scale(x, c)) if x else t for t, x in zip(total, m)]
    return Matrix.from_flat(d, (CPoly._wrap(t) for t in total))


def eval_numeric(f: NcPolynomial, matrices: Sequence[Matrix], inv="none") -> Matrix:
    """Exact value of ``f`` at a tuple of numeric matrices.

    ``matrices[l-1]`` is substituted for x_l; x_l' gets its image under
    ``inv``.
    """
    inv = as_involution(inv)
    if not matrices:
        if f.max_index() > 0:
            raise ValueError("no matrices supplied")
        raise ValueError("dimension needed: supply at least one matrix")
    d = matrices[0].d
    if any(m.d != d for m in matrices):
        raise ValueError("all matrices must share one dimension")
    if f.max_index() > len(matrices):
        raise ValueError(f"polynomial uses x{f.max_index()} but only {len(matrices)} matrices were given")
    if inv.is_none and not f.is_star_free():
        raise ValueError("starred variable used without an involution")
    stars: dict[int, Matrix] = {}

    def letter(a):
        if not a.starred:
            return matrices[a.index - 1]
        if a.index not in stars:
            stars[a.index] = apply_star(matrices[a.index - 1], inv)
        return stars[a.index]

    memo: dict = {}

    def product(w):
        got = memo.get(w)
        if got is not None:
            return got
        out = letter(w[-1]) if len(w) == 1 else product(w[:-1]) * letter(w[-1])
        memo[w] = out
        return out

    total = Matrix.zero(d)
    for w, c in f.terms.items():
        total = total + (Matrix.identity(d, c) if not w else product(w).scale(c))
    return total


def evaluate_entries(m: Matrix, point: dict) -> Matrix:
    return Matrix.from_flat(m.d, (x.eval(point) if isinstance(x, CPoly) else x for x in m.entries))


# ---------------------------------------------------------------------------
# certificates

THEOREM_PLAIN = "generic-matrices"
THEOREM_INVOLUTION = "generic-matrices-involution"
THEOREM_TRACE = "trace-criterion"
THEOREM_TRACE_SYMMETRIC = "trace-criterion-symmetric"


@dataclass
class Certificate:
    kind: str
    verdict: bool
    theorem: str
    evidence: dict
    statement: str
    warnings: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "verdict": self.verdict,
            "theorem": self.theorem,
            "evidence": self.evidence,
            "statement": self.statement,
            "warnings": list(self.warnings),
        }

    def recheck(self, e: Matrix | None = None) -> bool:
        """Re-derive the verdict from the evaluation matrix ``e``, or from
        the recorded evidence when ``e`` is omitted."""
        if e is None:
            return self._recheck_evidence()
        if self.kind == "identity":
            return e.is_zero() == self.verdict
        if self.kind == "central":
            c = e.scalar_part()
            return (c is not None and c != 0) == self.verdict
        if self.kind == "trace_zero":
            return (e.trace() == 0) == self.verdict
        raise ValueError(self.kind)

    def _recheck_evidence(self) -> bool:
        ev = self.evidence
        if self.kind == "identity":
            return ev["zero"] == self.verdict and (self.verdict or "nonzero_entry" in ev)
        if self.kind == "central":
            scalar = ev["scalar"]
            nonzero = scalar is not None and not CPoly.parse(scalar).is_zero()
            return (ev["residue"] == "0") == (scalar is not None) and nonzero == self.verdict
        if self.kind == "trace_zero":
            return CPoly.parse(ev["trace_poly"]).is_zero() == self.verdict
        raise ValueError(self.kind)


def _base_warnings(ctx: GenericContext) -> list[str]:
    if ctx.d == 1:
        return ["commutative case: every 1x1 matrix commutes"]
    return []


def _theorem(ctx: GenericContext) -> str:
    return THEOREM_PLAIN if ctx.model == "none" else THEOREM_INVOLUTION


def is_identity(f: NcPolynomial, ctx: GenericContext, e: Matrix | None = None) -> Certificate:
    e = eval_generic(f, ctx) if e is None else e
    zero = e.is_zero()
    evidence: dict = {"zero": zero}
    if not zero:
        k = next(k for k, x in enumerate(e.entries) if x != 0)
        i, j = divmod(k, ctx.d)
        evidence["nonzero_entry"] = {"row": i + 1, "col": j + 1, "value": str(e.entries[k])}
    statement = (
        f"f vanishes on generic {ctx.d}x{ctx.d} matrices, so it is an identity"
        if zero
        else f"f is nonzero on generic {ctx.d}x{ctx.d} matrices, so it is not an identity"
    )
    return Certificate("identity", zero, _theorem(ctx), evidence, statement, _base_warnings(ctx))


def is_central(f: NcPolynomial, ctx: GenericContext, e: Matrix | None = None) -> Certificate:
    e = eval_generic(f, ctx) if e is None else e
    c = e.scalar_part()
    central = c is not None and c != 0
    residue = e - Matrix.identity(ctx.d, e.entries[0])
    evidence = {"residue": "0" if residue.is_zero() else str(residue), "scalar": str(c) if c is not None else None}
    if central:
        statement = "generic evaluation is a nonzero scalar matrix c*I, so f is central"
    elif c is not None:
        statement = "generic evaluation is zero, so f is an identity rather than central"
    else:
        statement = "generic evaluation is not a scalar matrix, so f is not central"
    return Certificate("central", central, _theorem(ctx), evidence, statement, _base_warnings(ctx))


def trace_zero(f: NcPolynomial, ctx: GenericContext, e: Matrix | None = None) -> Certificate:
    e = eval_generic(f, ctx) if e is None else e
    tr = e.trace()
    tr = tr if isinstance(tr, CPoly) else CPoly.constant(tr)
    vanishes = tr.is_zero()
    warnings = _base_warnings(ctx)
    theorem = _theorem(ctx)
    if not vanishes:
        statement = "the trace of the generic evaluation is a nonzero polynomial"
    elif ctx.model == "none":
        if ctx.d >= 2:
            theorem = THEOREM_TRACE
            statement = f"tr f = 0 on generic matrices, so f is cyclically equivalent to an identity of M_{ctx.d}"
        else:
            statement = "tr f = 0 on generic matrices"
    elif ctx.model == "unitary":
        statement = "tr f = 0 on generic matrices with involution, so f is a sum of commutators there"
    else:
        statement = "tr f = 0 on generic matrices with involution"
        if f != f.star():
            warnings.append("f is not symmetric; the sum-of-commutators reading needs f = f*")
        elif ctx.d in (1, 2, 4):
            warnings.append(f"d={ctx.d} is excluded for the symmetric trace criterion")
        else:
            theorem = THEOREM_TRACE_SYMMETRIC
            statement = f"f = f* and tr f = 0, so f is cyclically equivalent to a *-identity of M_{ctx.d}"
    evidence = {"trace_poly": str(tr)}
    return Certificate("trace_zero", vanishes, theorem, evidence, statement, warnings)


def trace_witness(f: NcPolynomial, ctx: GenericContext, rng, attempts: int = 64):
    """A numeric tuple at which tr f != 0, or None if none was found."""
    from .matrices import random_matrix

    gaussian = ctx.model == "unitary"
    for _ in range(attempts):
        mats = [random_matrix(rng, ctx.d, gaussian) for _ in range(ctx.n)]
        val = eval_numeric(f, mats, ctx.involution).trace()
        if val != 0:
            return mats, val
    return None
