import os
import subprocess
import sys
from fractions import Fraction

import pytest

from ncspan import _pykernels as py
from ncspan import kernels
from ncspan.scalars import gauss

from helpers import rng_for

ck = pytest.importorskip("ncspan._ckernels", reason="compiled kernels not built")


def random_cpoly(rng, nvars=4, terms=4, deg=3):
    out = {}
    for _ in range(rng.randint(0, terms)):
        mono = tuple(sorted(rng.randint(1, nvars) for _ in range(rng.randint(0, deg))))
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        if rng.random() < 0.2:
            c = gauss(c, rng.randint(1, 2))
        if c != 0:
            out[mono] = c
    return out


def test_poly_ops_agree():
    rng = rng_for("kernels")
    for _ in range(200):
        a, b = random_cpoly(rng), random_cpoly(rng)
        c = Fraction(rng.randint(-4, 4), 3)
        assert ck.poly_add(a, b) == py.poly_add(a, b)
        assert ck.poly_sub(a, b) == py.poly_sub(a, b)
        assert ck.poly_mul(a, b) == py.poly_mul(a, b)
        assert ck.poly_scale(a, c) == py.poly_scale(a, c)
        assert py.poly_sub(a, a) == {}


def test_matmul_agrees():
    rng = rng_for("matmul")
    for d in (1, 2, 3):
        for _ in range(20):
            A = [random_cpoly(rng, terms=2) for _ in range(d * d)]
            B = [random_cpoly(rng, terms=2) for _ in range(d * d)]
            assert ck.matmul(A, B, d) == py.matmul(A, B, d)


def test_rref_agrees():
    rng = rng_for("rref")
    for _ in range(30):
        n = rng.randint(1, 8)
        pa, ra, pb, rb = [], {}, [], {}
        for _ in range(rng.randint(1, 10)):
            v = [rng.randint(-2, 2) for _ in range(n)]
            assert ck.rref_insert(list(v), pa, ra) == py.rref_insert(list(v), pb, rb)
        assert pa == pb and ra == rb
        w = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        assert ck.rref_reduce(list(w), pa, ra) == py.rref_reduce(list(w), pb, rb)


def test_rref_stays_exact():
    pivots, rows = [], {}
    assert py.rref_insert([3, 1], pivots, rows)
    assert all(isinstance(x, (int, Fraction)) for x in rows[pivots[0]])
    assert rows[pivots[0]][0] == 1 and rows[pivots[0]][1] == Fraction(1, 3)


def test_backend_selection():
    forced = os.environ.get("NCSPAN_PURE_PYTHON", "") not in ("", "0")
    assert kernels.BACKEND == ("python" if forced else "cython")
    code = "import ncspan.kernels as k; print(k.BACKEND)"
    res = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env={"NCSPAN_PURE_PYTHON": "1", "PATH": ""}
    )
    assert res.stdout.strip() == "python"
