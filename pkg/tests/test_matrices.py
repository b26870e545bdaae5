import pytest

from ncspan import Matrix, Subspace, gauss
from ncspan.corpus import single_generator_fixture, split_skew_fixtures
from ncspan.matrices import (
    CanonicalName,
    apply_star,
    canonical_subspace,
    check_lie_closure,
    classify_subspace,
    commutator,
    congruence_closure,
    exact_span,
    lie_ideal_closure,
    parse_matrix,
    random_matrix,
    skew_basis,
    skew_ideal_closure,
    sym_basis,
)

from helpers import rng_for

E = Matrix.unit
N = CanonicalName


def test_apply_star_examples():
    assert apply_star(E(2, 1, 2), "transpose") == E(2, 2, 1)
    assert apply_star(Matrix([[1, 2], [3, 4]]), "symplectic") == Matrix([[4, -2], [-3, 1]])
    i = gauss(0, 1)
    assert apply_star(E(2, 1, 1, i), "unitary") == E(2, 1, 1, -i)


def test_symplectic_block_formula_d4():
    a = Matrix.from_flat(4, range(1, 17))
    blk = lambda m, r, c: [[m[r + i, c + j] for j in range(2)] for i in range(2)]  # noqa: E731
    A, B, C, D = blk(a, 0, 0), blk(a, 0, 2), blk(a, 2, 0), blk(a, 2, 2)
    t = lambda x, s=1: [[s * x[j][i] for j in range(2)] for i in range(2)]  # noqa: E731
    top = [r1 + r2 for r1, r2 in zip(t(D), t(B, -1))]
    bottom = [r1 + r2 for r1, r2 in zip(t(C, -1), t(A))]
    assert apply_star(a, "symplectic") == Matrix(top + bottom)


def test_symplectic_needs_even_d():
    with pytest.raises(ValueError):
        apply_star(Matrix.identity(3), "symplectic")


@pytest.mark.parametrize("inv,ds", [("transpose", (1, 2, 3, 4)), ("symplectic", (2, 4)), ("unitary", (1, 2, 3))])
def test_anti_automorphism_of_order_two(inv, ds):
    rng = rng_for("star", inv)
    for d in ds:
        for _ in range(20):
            a = random_matrix(rng, d, gaussian=inv == "unitary")
            b = random_matrix(rng, d, gaussian=inv == "unitary")
            assert apply_star(apply_star(a, inv), inv) == a
            assert apply_star(a * b, inv) == apply_star(b, inv) * apply_star(a, inv)
            if inv != "unitary":
                assert apply_star(a, inv).trace() == a.trace()


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_transpose_dimension_table(d):
    dims = {n: canonical_subspace(d, "transpose", n).dim for n in N if n is not N.OTHER}
    assert dims[N.ZERO] == 0 and dims[N.Z] == 1
    assert dims[N.S] == d * (d + 1) // 2
    assert dims[N.K] == d * (d - 1) // 2
    assert dims[N.SK] == d * (d + 1) // 2 - 1
    assert dims[N.ZPLUSK] == 1 + d * (d - 1) // 2
    assert dims[N.COMM] == d * d - 1 and dims[N.FULL] == d * d


@pytest.mark.parametrize("d", [2, 4, 6])
def test_symplectic_dimension_table(d):
    assert canonical_subspace(d, "symplectic", N.S).dim == d * (d - 1) // 2
    assert canonical_subspace(d, "symplectic", N.K).dim == d * (d + 1) // 2
    assert canonical_subspace(d, "symplectic", N.COMM).dim == d * d - 1


def test_canonical_examples():
    k = canonical_subspace(2, "transpose", N.K)
    assert k == Subspace(2, [E(2, 1, 2) - E(2, 2, 1)])
    assert canonical_subspace(3, "transpose", N.SK).dim == 5
    assert canonical_subspace(4, "symplectic", N.S).dim == 6
    with pytest.raises(ValueError):
        canonical_subspace(3, "none", N.K)
    with pytest.raises(ValueError):
        canonical_subspace(2, "unitary", N.S)


def test_sk_is_trace_zero_symmetric():
    sk = canonical_subspace(3, "transpose", N.SK)
    for b in sk.basis:
        assert b.trace() == 0 and b.transpose() == b


@pytest.mark.parametrize("inv,d", [("transpose", 2), ("transpose", 3), ("transpose", 4), ("symplectic", 2), ("symplectic", 4)])
def test_canonical_subspaces_closed(inv, d):
    for n in N:
        if n is N.OTHER:
            continue
        space = canonical_subspace(d, inv, n)
        assert check_lie_closure(space, inv), n
        if n in (N.ZERO, N.Z, N.COMM, N.FULL):
            assert check_lie_closure(space, "none"), n


def test_unitary_k_spans_everything_over_gaussians():
    d = 2
    ks = skew_basis(d, "unitary")
    assert len(ks) == d * d and len(sym_basis(d, "unitary")) == d * d
    assert exact_span(ks, d).dim == d * d
    for k in ks:
        assert apply_star(k, "unitary") == -k


@pytest.mark.parametrize("inv,d", [("transpose", 3), ("transpose", 4), ("transpose", 5), ("symplectic", 2), ("symplectic", 4)])
def test_sk_plus_k_is_comm(inv, d):
    sk = canonical_subspace(d, inv, N.SK)
    k = canonical_subspace(d, inv, N.K)
    assert sk.sum(k) == canonical_subspace(d, inv, N.COMM)


@pytest.mark.parametrize("inv,d", [("transpose", 3), ("transpose", 5), ("symplectic", 2), ("symplectic", 4), ("symplectic", 6)])
def test_kk_generates_k(inv, d):
    ks = skew_basis(d, inv)
    kk = [commutator(a, b) for a in ks for b in ks]
    assert skew_ideal_closure(kk, inv, d) == canonical_subspace(d, inv, N.K)
    # at these sizes [K,K] is already all of K
    assert exact_span(kk, d) == canonical_subspace(d, inv, N.K)


def test_skew_ideal_closure_examples():
    gen = single_generator_fixture()
    assert skew_ideal_closure([gen], "transpose") == Subspace(2, [gen])
    k1, k2 = split_skew_fixtures()
    for basis in (k1, k2):
        assert skew_ideal_closure(basis, "transpose") == Subspace(4, basis)
        assert skew_ideal_closure(basis, "transpose").dim == 3
    for d in (2, 3, 5):
        assert classify_subspace(skew_ideal_closure([Matrix.identity(d)], "transpose"), "transpose") is N.Z


def _random_seed(rng, d, inv):
    """A random combination of a scalar, a skew and a symmetric trace-zero part."""
    ks = skew_basis(d, inv)
    sks = canonical_subspace(d, inv, N.SK).basis
    out = Matrix.zero(d)
    if rng.random() < 0.5:
        out = out + Matrix.identity(d, rng.randint(-3, 3))
    if rng.random() < 0.5:
        for k in ks:
            out = out + k.scale(rng.randint(-2, 2))
    if rng.random() < 0.5:
        for s in sks:
            out = out + s.scale(rng.randint(-2, 2))
    if rng.random() < 0.2:
        out = random_matrix(rng, d)
    return out


@pytest.mark.parametrize("inv,d", [("transpose", 3), ("transpose", 5), ("symplectic", 2), ("symplectic", 4)])
def test_random_skew_ideal_closures_are_canonical(inv, d):
    rng = rng_for("skew-ideal", inv, d)
    seen = set()
    for _ in range(200):
        space = skew_ideal_closure([_random_seed(rng, d, inv)], inv, d)
        name = classify_subspace(space, inv)
        assert name is not N.OTHER
        seen.add(name)
    # every distinct canonical subspace should turn up
    distinct = {classify_subspace(canonical_subspace(d, inv, n), inv) for n in N if n is not N.OTHER}
    assert seen == distinct


def test_lie_ideal_closure_examples():
    assert lie_ideal_closure([E(3, 1, 2)]).dim == 8
    assert lie_ideal_closure([], 3).dim == 0
    assert lie_ideal_closure([Matrix.identity(3) + E(3, 1, 2)]).dim == 9
    rng = rng_for("lie")
    for _ in range(30):
        d = rng.choice([2, 3])
        space = lie_ideal_closure([random_matrix(rng, d).scale(rng.randint(0, 1))], d)
        assert classify_subspace(space, "none") in (N.ZERO, N.Z, N.COMM, N.FULL)


def test_congruence_closure_examples():
    assert classify_subspace(congruence_closure([E(3, 1, 2) - E(3, 2, 1)]), "transpose") is N.K
    assert congruence_closure([], 2).dim == 0
    assert classify_subspace(congruence_closure([E(2, 1, 1)]), "transpose") in (N.S, N.FULL)


def test_congruence_closures_land_in_four():
    rng = rng_for("congruence")
    for d in (2, 3, 4):
        for _ in range(20):
            m = random_matrix(rng, d)
            seed = rng.choice([m, m + m.transpose(), m - m.transpose(), m.scale(0)])
            name = classify_subspace(congruence_closure([seed], d), "transpose")
            assert name in (N.ZERO, N.K, N.S, N.FULL)


def test_classify_subspace_examples():
    assert classify_subspace(Subspace(2, [E(2, 1, 2) - E(2, 2, 1)]), "transpose") is N.K
    k1, _ = split_skew_fixtures()
    assert classify_subspace(Subspace(4, k1), "transpose") is N.OTHER
    assert classify_subspace(canonical_subspace(3, "none", N.FULL), "none") is N.FULL
    assert classify_subspace(Subspace(3, [E(3, 1, 2)]), "none") is N.OTHER


def test_exceptional_fixtures_closed():
    gen = single_generator_fixture()
    assert check_lie_closure(Subspace(2, [gen]), "transpose")
    assert classify_subspace(Subspace(2, [gen]), "transpose") is N.OTHER
    for basis in split_skew_fixtures():
        assert check_lie_closure(Subspace(4, basis), "transpose")


def test_plumbing():
    rng = rng_for("plumbing")
    for _ in range(30):
        a, b = random_matrix(rng, 3), random_matrix(rng, 3)
        assert commutator(a, b).trace() == 0
    assert exact_span([E(2, 1, 1), E(2, 1, 1).scale(2)]).dim == 1
    tz = []
    for _ in range(20):
        m = random_matrix(rng, 3)
        tz.append(m - E(3, 1, 1, m.trace()))
    assert exact_span(tz).dim <= 8
    with pytest.raises(ValueError):
        E(2, 1, 1) + E(3, 1, 1)


def test_parse_matrix():
    assert parse_matrix("[[1,0],[0,1]]") == Matrix.identity(2)
    with pytest.raises(ValueError):
        parse_matrix("[[1,0]]")
