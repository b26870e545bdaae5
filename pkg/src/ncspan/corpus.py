"""Bundled regression fixtures."""

from __future__ import annotations

from .classifier import classify
from .freealg import standard_polynomial
from .matrices import Matrix, Subspace, check_lie_closure, classify_subspace, skew_ideal_closure
from .parser import parse_poly

# (polynomial, d, involution, expected case, expected span dimension)
POLYNOMIAL_FIXTURES = [
    ("s4", 2, "none", "i", 0),
    ("[x1,x2]^2", 2, "none", "ii", 1),
    ("0", 3, "transpose", "i", 0),
    ("1", 3, "transpose", "ii", 1),
    ("x1 - x1'", 3, "transpose", "iii", 3),
    ("1 + x1 - x1'", 3, "transpose", "iv", 4),
    ("x1*x1' - x1'*x1", 3, "transpose", "v", 5),
    ("x1 + x1'", 3, "transpose", "vi", 6),
    ("[x1,x2]", 3, "transpose", "vii", 8),
    ("x1", 3, "transpose", "viii", 9),
]


def E(d: int, i: int, j: int) -> Matrix:
    return Matrix.unit(d, i, j)


def single_generator_fixture() -> Matrix:
    """E11 + E12 - E21 + E22 in M_2: a non-*-invariant skew-ideal generator."""
    return E(2, 1, 1) + E(2, 1, 2) - E(2, 2, 1) + E(2, 2, 2)


def split_skew_fixtures() -> tuple[list[Matrix], list[Matrix]]:
    """The two 3-dimensional simple summands of K in M_4 (transpose)."""

    def k(i, j):
        return E(4, i, j) - E(4, j, i)

    k1 = [k(1, 2) + k(3, 4), k(1, 3) + k(4, 2), k(1, 4) + k(2, 3)]
    k2 = [k(1, 2) - k(3, 4), k(1, 3) - k(4, 2), k(1, 4) - k(2, 3)]
    return k1, k2


def _poly(text: str):
    return standard_polynomial(4) if text == "s4" else parse_poly(text)


def run_corpus(seed: int = 0, budget: int = 512) -> list[dict]:
    results = []
    for text, d, inv, case, dim in POLYNOMIAL_FIXTURES:
        r = classify(_poly(text), d, inv, seed=seed, budget=budget)
        ok = r.case == case and r.span_dim == dim and r.sampled_dim == dim
        results.append(
            {
                "name": f"{text} @ d={d} {inv}",
                "passed": ok,
                "detail": f"case {r.case} (want {case}), span {r.span_dim}/{r.sampled_dim} (want {dim})",
            }
        )

    gen = single_generator_fixture()
    space = Subspace(2, [gen])
    closed = skew_ideal_closure([gen], "transpose")
    name = classify_subspace(space, "transpose")
    ok = check_lie_closure(space, "transpose") and closed == space and str(name) == "Other"
    results.append(
        {"name": "E11+E12-E21+E22 skew-ideal @ d=2 transpose", "passed": ok, "detail": f"closure dim {closed.dim}, class {name}"}
    )

    for label, basis in zip(("K1", "K2"), split_skew_fixtures()):
        space = Subspace(4, basis)
        name = classify_subspace(space, "transpose")
        ok = space.dim == 3 and check_lie_closure(space, "transpose") and str(name) == "Other"
        results.append(
            {"name": f"{label} skew-ideal @ d=4 transpose", "passed": ok, "detail": f"dim {space.dim}, class {name}"}
        )
    return results
