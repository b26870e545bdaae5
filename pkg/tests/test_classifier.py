from fractions import Fraction

import pytest

from ncspan import classifier, parse_poly
from ncspan.classifier import (
    InconsistencyError,
    classify,
    classify_nostar,
    classify_star_firstkind,
    classify_star_secondkind,
    sampled_span_closed,
    span_sample,
)
from ncspan.corpus import POLYNOMIAL_FIXTURES
from ncspan.freealg import NcPolynomial, cyc_equiv
from ncspan.generic import GenericContext, trace_zero
from ncspan.matrices import CanonicalName, Matrix, Subspace, canonical_subspace, check_lie_closure

from helpers import random_commutator_sum, random_poly, rng_for, s4

P = parse_poly


def test_nostar_examples():
    r = classify_nostar(P("[x1,x2]"), 2)
    assert (r.case, r.verdict, r.span_dim, r.sampled_dim) == ("iii", "SumOfCommutators", 3, 3)
    r = classify_nostar(P("[x1,x2]^2"), 2)
    assert (r.case, r.verdict, r.span_dim, r.sampled_dim) == ("ii", "Central", 1, 1)
    r = classify_nostar(P("x1"), 3)
    assert (r.case, r.verdict, r.span_dim, r.sampled_dim) == ("iv", "Full", 9, 9)
    r = classify_nostar(s4(), 2)
    assert (r.case, r.verdict, r.span_dim, r.sampled_dim) == ("i", "Identity", 0, 0)


def test_firstkind_examples():
    for text, case, dim in [
        ("x1 - x1'", "iii", 3),
        ("x1*x1' - x1'*x1", "v", 5),
        ("1 + x1 - x1'", "iv", 4),
        ("[x1,x2]", "vii", 8),
    ]:
        r = classify_star_firstkind(P(text), 3, "transpose")
        assert (r.case, r.span_dim, r.sampled_dim) == (case, dim, dim), text
        assert str(r.span_name) == str(classifier._FIRST_KIND_SPAN[case])


def test_secondkind_examples():
    r = classify_star_secondkind(P("x1 - x1'"), 2)
    assert (r.case, r.verdict, r.span_dim, r.sampled_dim) == ("iv", "Full", 4, 4)
    r = classify_star_secondkind(P("[x1,x2]"), 2)
    assert (r.case, r.span_dim, r.sampled_dim) == ("iii", 3, 3)
    r = classify_star_secondkind(P("1"), 2)
    assert (r.case, r.span_name) == ("ii", CanonicalName.Z)


def test_span_sample_examples():
    for seed in range(5):
        assert span_sample(P("[x1,x2]"), 2, seed=seed).rank == 3
    s = span_sample(NcPolynomial(), 2)
    assert s.rank == 0 and s.samples_used == 0
    assert span_sample(P("x1"), 3).rank == 9
    assert span_sample(P("x1"), 3, budget=1).samples_used == 1
    with pytest.raises(ValueError):
        span_sample(P("x1"), 2, budget=0)


def test_span_sample_is_deterministic():
    a = span_sample(P("x1*x2 + x2^2"), 3, seed=7)
    b = span_sample(P("x1*x2 + x2^2"), 3, seed=7)
    assert a.space == b.space and a.samples_used == b.samples_used


def test_check_lie_closure_examples():
    r = classify(P("[x1,x2]"), 2)
    assert sampled_span_closed(r)
    assert not check_lie_closure(Subspace(2, [Matrix.unit(2, 1, 2)]), "none")


@pytest.mark.parametrize("text,d,inv,case,dim", POLYNOMIAL_FIXTURES)
def test_fixtures(text, d, inv, case, dim):
    f = s4() if text == "s4" else P(text)
    r = classify(f, d, inv)
    assert (r.case, r.span_dim, r.sampled_dim) == (case, dim, dim)
    assert sampled_span_closed(r)
    # a run reaching the prediction has exactly the canonical row space
    assert r.sample.space == canonical_subspace(d, inv, r.span_name)


def test_one_case_per_run():
    rng = rng_for("exclusive")
    for _ in range(20):
        f = random_poly(rng, nvars=2, max_terms=3, max_degree=2, stars=True)
        r = classify(f, 3, "transpose", sample=False)
        tree = r.certificates[0]["tests"]
        fired = [t for t in tree if t["result"]]
        assert r.case in classifier.VERDICTS
        # the tree stops at the first test that fires, except the joint (v)/(vi)/(vii) tail
        assert len(fired) <= 2


def test_commutator_sums_never_full():
    rng = rng_for("C1")
    for k in range(50):
        d = 2 if k % 2 else 3
        f = random_commutator_sum(rng, nvars=2, max_len=2)
        if d == 2:
            f = f + s4() * rng.randint(-2, 2)
        ctx = GenericContext.for_poly(f, d)
        assert trace_zero(f, ctx).verdict
        assert classify_nostar(f, d, sample=False).verdict != "Full"


def test_cyc_equiv_zero_implies_trace_zero():
    rng = rng_for("C2")
    hits = 0
    for _ in range(30):
        f = random_poly(rng, nvars=2, max_terms=4, max_degree=3)
        if rng.random() < 0.5:
            f = random_commutator_sum(rng, nvars=2, max_len=2)
        if cyc_equiv(f, NcPolynomial()):
            hits += 1
            for d in (2, 3):
                assert trace_zero(f, GenericContext(d, "none", max(1, f.max_index()))).verdict
    assert hits >= 10


def test_scaling_invariance():
    rng = rng_for("scale")
    for _ in range(15):
        f = random_poly(rng, nvars=2, max_terms=3, max_degree=2, stars=True)
        c = Fraction(rng.choice([-3, -1, 2, 5]), rng.randint(1, 4))
        a = classify(f, 3, "transpose", sample=False)
        b = classify(f * c, 3, "transpose", sample=False)
        assert (a.case, a.span_name) == (b.case, b.span_name)


def test_star_invariance():
    rng = rng_for("star-inv")
    for _ in range(20):
        f = random_poly(rng, nvars=2, max_terms=3, max_degree=3, stars=True)
        for inv, d in (("transpose", 3), ("symplectic", 2)):
            a = classify(f, d, inv, sample=False)
            b = classify(f.star(), d, inv, sample=False)
            assert a.case == b.case


def test_random_sampled_spans_are_closed():
    rng = rng_for("closed")
    for _ in range(10):
        f = random_poly(rng, nvars=2, max_terms=3, max_degree=2, stars=True)
        r = classify(f, 3, "transpose")
        assert sampled_span_closed(r)
        assert r.sampled_dim == r.span_dim


def test_exceptional_dimension_warning():
    r = classify(P("x1"), 2, "transpose")
    assert classifier.EXCEPTIONAL_DIM in r.warnings
    assert classifier.EXCEPTIONAL_DIM not in classify(P("x1"), 3, "transpose").warnings
    assert classifier.CENTRAL_READING in classify(P("1 + x1 - x1'"), 3, "transpose").warnings


def test_inconsistency_is_detected(monkeypatch):
    monkeypatch.setattr(classifier, "_decide_four_way", lambda e: "ii")
    with pytest.raises(InconsistencyError):
        classify(P("[x1,x2]"), 2)


def test_shortfall_warns():
    r = classify(P("x1"), 3, budget=2)
    assert r.sampled_dim < r.span_dim and r.warnings


def test_input_errors():
    with pytest.raises(ValueError):
        classify_nostar(P("x1'"), 2)
    with pytest.raises(ValueError):
        classify(P("x1"), 1)
    with pytest.raises(ValueError):
        classify(P("x1"), 3, "symplectic")


def test_report_json():
    j = classify(P("[x1,x2]^2"), 2, seed=3).to_json()
    assert j["verdict"] == "Central" and j["case"] == "ii" and j["seed"] == 3
    assert j["span"]["name"] == "Z" and j["span"]["dimension"] == 1
    assert len(j["span"]["basis"]) == 1
