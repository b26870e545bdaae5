"""Random generators and brute-force oracles shared by the tests.

The oracles here deliberately avoid the package's own linear algebra and
cyclic-word machinery.
"""

import itertools
import random
from fractions import Fraction

from ncspan import Letter, NcPolynomial, standard_polynomial


def random_word(rng, nvars, length, stars=False):
    return tuple(Letter(rng.randint(1, nvars), stars and rng.random() < 0.5) for _ in range(length))


def random_poly(rng, nvars=3, max_terms=6, max_degree=5, stars=False, allow_const=True):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0 if allow_const else 1, max_degree)
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        w = random_word(rng, nvars, length, stars)
        terms[w] = terms.get(w, 0) + c
    return NcPolynomial(terms)


def random_commutator_sum(rng, nvars=3, pairs=3, max_len=3, stars=False):
    """Sum of random commutators [u, v] of words; total degree <= 2*max_len."""
    out = NcPolynomial()
    for _ in range(rng.randint(1, pairs)):
        u = NcPolynomial.word(random_word(rng, nvars, rng.randint(1, max_len), stars), rng.randint(-3, 3) or 1)
        v = NcPolynomial.word(random_word(rng, nvars, rng.randint(1, max_len), stars))
        out = out + (u * v - v * u)
    return out


def rotate_pair_poly(rng, nvars=3, max_degree=5):
    """c*w - c*rot(w) for a few words: always cyclically equivalent to 0."""
    out = NcPolynomial()
    for _ in range(rng.randint(1, 3)):
        n = rng.randint(1, max_degree)
        w = random_word(rng, nvars, n)
        k = rng.randint(0, n - 1)
        c = rng.randint(-3, 3) or 1
        out = out + NcPolynomial.word(w, c) - NcPolynomial.word(w[k:] + w[:k], c)
    return out


class SparseEliminator:
    """Independent exact row reduction on sparse dict vectors."""

    def __init__(self):
        self.rows = {}  # pivot key -> row dict with row[pivot] == 1

    def reduce(self, vec):
        v = {k: Fraction(c) for k, c in vec.items() if c != 0}
        changed = True
        while changed:
            changed = False
            for key in sorted(v, key=repr):
                if key in self.rows and v.get(key, 0) != 0:
                    c = v[key]
                    for k2, c2 in self.rows[key].items():
                        nv = v.get(k2, 0) - c * c2
                        if nv == 0:
                            v.pop(k2, None)
                        else:
                            v[k2] = nv
                    changed = True
                    break
        return v

    def add(self, vec):
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v, key=repr)
        c = v[piv]
        v = {k: x / c for k, x in v.items()}
        for p, row in self.rows.items():
            if piv in row:
                f = row[piv]
                for k, x in v.items():
                    nv = row.get(k, 0) - f * x
                    if nv == 0:
                        row.pop(k, None)
                    else:
                        row[k] = nv
        self.rows[piv] = v
        return True


def brute_force_is_commutator_sum(f):
    """Is ``f`` in the span of {uv - vu} over words u, v of matching degree?

    Enumerates every split of every word of each degree present in ``f``
    over the letters that occur in ``f``.
    """
    letters = sorted({a for w in f.terms for a in w})
    by_degree = {}
    for w, c in f.terms.items():
        by_degree.setdefault(len(w), {})[w] = c
    for n, part in by_degree.items():
        if n == 0:
            return False
        elim = SparseEliminator()
        for word in itertools.product(letters, repeat=n):
            for k in range(1, n):
                u, v = word[:k], word[k:]
                if u + v != v + u:
                    elim.add({u + v: 1, v + u: -1})
        if elim.reduce(part):
            return False
    return True


def rank_of(vectors):
    elim = SparseEliminator()
    return sum(1 for v in vectors if elim.add(dict(enumerate(v))))


def s4():
    return standard_polynomial(4)


def rng_for(*key):
    return random.Random(repr(key))
