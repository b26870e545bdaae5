"""The free algebra F<X> and the free *-algebra F<X, X*>.

A :class:`Word` is a tuple of :class:`Letter` values and the empty tuple is
the unit monomial.  :class:`NcPolynomial` maps words to nonzero exact
scalars.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .scalars import GaussianRational, conj, is_rational, to_scalar


class Letter(NamedTuple):
    index: int
    starred: bool = False

    def star(self) -> "Letter":
        return Letter(self.index, not self.starred)

    def __str__(self) -> str:
        return f"x{self.index}" + ("'" if self.starred else "")


Word = tuple  # tuple[Letter, ...]


def word_star(w: Word) -> Word:
    return tuple(Letter(a.index, not a.starred) for a in reversed(w))


def word_str(w: Word) -> str:
    return "*".join(str(a) for a in w)


def word_key(w: Word):
    """Ordering for printing: by degree, then letterwise."""
    return (len(w), w)


class NcPolynomial:
    """Element of the free *-algebra with exact coefficients.

    Immutable.  Arithmetic accepts other polynomials and exact scalars.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping | None = None) -> None:
        t: dict = {}
        if terms:
            for w, c in terms.items():
                w = tuple(a if isinstance(a, Letter) else Letter(*a) for a in w)
                for a in w:
                    if a.index < 1:
                        raise ValueError(f"variable index must be >= 1, got {a.index}")
                c = to_scalar(c)
                if c != 0:
                    s = t.get(w, 0) + c
                    if s == 0:
                        t.pop(w, None)
                    else:
                        t[w] = s
        self._t = t

    @classmethod
    def _wrap(cls, t: dict) -> "NcPolynomial":
        p = object.__new__(cls)
        p._t = t
        return p

    # constructors

    @classmethod
    def var(cls, i: int, starred: bool = False) -> "NcPolynomial":
        if i < 1:
            raise ValueError(f"variable index must be >= 1, got {i}")
        return cls._wrap({(Letter(i, starred),): 1})

    @classmethod
    def const(cls, c) -> "NcPolynomial":
        c = to_scalar(c)
        return cls._wrap({(): c} if c != 0 else {})

    @classmethod
    def word(cls, w: Sequence, coeff=1) -> "NcPolynomial":
        return cls({tuple(w): coeff})

    # inspection

    @property
    def terms(self) -> dict:
        return self._t

    def items(self):
        return sorted(self._t.items(), key=lambda wc: word_key(wc[0]))

    def is_zero(self) -> bool:
        return not self._t

    def is_star_free(self) -> bool:
        return not any(a.starred for w in self._t for a in w)

    def has_gaussian_coefficients(self) -> bool:
        return any(isinstance(c, GaussianRational) for c in self._t.values())

    def variables(self) -> list[int]:
        return sorted({a.index for w in self._t for a in w})

    def max_index(self) -> int:
        return max((a.index for w in self._t for a in w), default=0)

    def degree(self) -> int:
        return max((len(w) for w in self._t), default=-1)

    def degree_in(self, i: int) -> int:
        """Largest number of occurrences of x_i or x_i' in a single word."""
        return max((sum(1 for a in w if a.index == i) for w in self._t), default=0)

    # arithmetic

    def _coerce(self, other) -> dict | None:
        if isinstance(other, NcPolynomial):
            return other._t
        if isinstance(other, (int, Fraction, GaussianRational)) and not isinstance(other, bool):
            return {(): other} if other != 0 else {}
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self._t)
        for w, c in o.items():
            s = t.get(w, 0) + c
            if s == 0:
                t.pop(w, None)
            else:
                t[w] = s
        return NcPolynomial._wrap(t)

    __radd__ = __add__

    def __neg__(self):
        return NcPolynomial._wrap({w: -c for w, c in self._t.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-NcPolynomial._wrap(dict(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NcPolynomial):
            t: dict = {}
            for w1, c1 in self._t.items():
                for w2, c2 in other._t.items():
                    w = w1 + w2
                    s = t.get(w, 0) + c1 * c2
                    if s == 0:
                        t.pop(w, None)
                    else:
                        t[w] = s
            return NcPolynomial._wrap(t)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.scale(other)

    def scale(self, c) -> "NcPolynomial":
        c = to_scalar(c)
        if c == 0:
            return NcPolynomial()
        return NcPolynomial._wrap({w: v * c for w, v in self._t.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = NcPolynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    def __repr__(self):
        from .parser import format_poly

        return f"NcPolynomial({format_poly(self)!r})"

    def __str__(self):
        from .parser import format_poly

        return format_poly(self)

    # involution

    def star(self) -> "NcPolynomial":
        return NcPolynomial._wrap({word_star(w): conj(c) for w, c in self._t.items()})

    def sym_part(self) -> "NcPolynomial":
        return (self + self.star()).scale(Fraction(1, 2))

    def skew_part(self) -> "NcPolynomial":
        return (self - self.star()).scale(Fraction(1, 2))

    def substitute(self, i: int, h: "NcPolynomial") -> "NcPolynomial":
        """Replace x_i by ``h`` and x_i' by ``h.star()``."""
        hs = h.star()
        out = NcPolynomial()
        for w, c in self._t.items():
            acc = NcPolynomial.const(c)
            for a in w:
                if a.index == i:
                    acc = acc * (hs if a.starred else h)
                else:
                    acc = acc * NcPolynomial._wrap({(a,): 1})
            out = out + acc
        return out


def commutator(f: NcPolynomial, g: NcPolynomial) -> NcPolynomial:
    return f * g - g * f


def star(f: NcPolynomial) -> NcPolynomial:
    return f.star()


def sym_part(f: NcPolynomial) -> NcPolynomial:
    return f.sym_part()


def skew_part(f: NcPolynomial) -> NcPolynomial:
    return f.skew_part()


def degree_in(f: NcPolynomial, i: int) -> int:
    return f.degree_in(i)


def substitute(f: NcPolynomial, i: int, h: NcPolynomial) -> NcPolynomial:
    return f.substitute(i, h)


# ---------------------------------------------------------------------------
# cyclic equivalence


def cyc_normal_form(w: Word) -> Word:
    """Lexicographically least rotation of ``w``."""
    w = tuple(w)
    if len(w) < 2:
        return w
    return min(w[k:] + w[:k] for k in range(len(w)))


def _rotation_offset(w: Word) -> int:
    best = 0
    for k in range(1, len(w)):
        if w[k:] + w[:k] < w[best:] + w[:best]:
            best = k
    return best


def cyclic_sums(f: NcPolynomial) -> dict:
    """Coefficient sum over each cyclic class, zero classes dropped."""
    sums: dict = defaultdict(int)
    for w, c in f.terms.items():
        sums[cyc_normal_form(w)] += c
    return {v: s for v, s in sums.items() if s != 0}


def cyc_equiv(f: NcPolynomial, g: NcPolynomial) -> bool:
    return not cyclic_sums(f - g)


@dataclass(frozen=True)
class CycWitness:
    """Pairs (g_i, h_i) with sum of [g_i, h_i] equal to the target."""

    pairs: tuple

    def expand(self) -> NcPolynomial:
        out = NcPolynomial()
        for g, h in self.pairs:
            out = out + commutator(g, h)
        return out

    def __len__(self) -> int:
        return len(self.pairs)


def commutator_witness(f: NcPolynomial) -> CycWitness | None:
    """Write ``f`` as a sum of commutators, or return None if impossible.

    Each word ``w = u*v`` whose least rotation is ``v*u`` contributes
    ``c*(u*v - v*u) = [v, -c*u]``; what remains is a combination of
    normal-form words with zero class sums, i.e. zero.
    """
    if not cyc_equiv(f, NcPolynomial()):
        return None
    pairs = []
    for w, c in f.items():
        k = _rotation_offset(w)
        if k == 0:
            continue
        u, v = w[:k], w[k:]
        pairs.append((NcPolynomial.word(v), NcPolynomial.word(u, -c)))
    witness = CycWitness(tuple(pairs))
    if witness.expand() != f:
        raise AssertionError("commutator witness failed to re-expand")
    return witness


# ---------------------------------------------------------------------------
# multihomogeneous structure


def degree_vector(w: Word, indices: Sequence[int]) -> tuple:
    return tuple(sum(1 for a in w if a.index == i) for i in indices)


def multihomog_components(f: NcPolynomial) -> list[NcPolynomial]:
    """Split ``f`` by degree vector, stars counted with their variable."""
    idx = f.variables()
    groups: dict = defaultdict(dict)
    for w, c in f.terms.items():
        groups[degree_vector(w, idx)][w] = c
    order = sorted(groups, key=lambda dv: (sum(dv), dv))
    return [NcPolynomial(groups[dv]) for dv in order]


def is_multihomogeneous(f: NcPolynomial) -> bool:
    return len(multihomog_components(f)) <= 1


class UnderdeterminedError(ValueError):
    pass


def extract_components(values: Sequence, n: int) -> list[list]:
    """Recover c_0..c_n from samples ``(lam, v)`` with v = sum lam^i c_i.

    Uses the first n+1 samples with pairwise distinct ``lam``; solving the
    Vandermonde system exactly by elimination.
    """
    chosen = []
    seen = set()
    for lam, v in values:
        lam = to_scalar(lam)
        if lam in seen:
            continue
        seen.add(lam)
        chosen.append((lam, [to_scalar(x) for x in v]))
        if len(chosen) == n + 1:
            break
    if len(chosen) < n + 1:
        raise UnderdeterminedError(f"need {n + 1} distinct scalars, got {len(chosen)}")
    length = len(chosen[0][1])
    if any(len(v) != length for _, v in chosen):
        raise ValueError("vectors must all have the same length")
    # augmented rows [1, lam, lam^2, ..., lam^n | v]
    rows = [[Fraction(lam) ** k if is_rational(lam) else lam**k for k in range(n + 1)] + list(v) for lam, v in chosen]
    m = n + 1
    for col in range(m):
        piv = next(r for r in range(col, m) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [x / p if x != 0 else x for x in rows[col]]
        for r in range(m):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [[_tidy_scalar(x) for x in rows[k][m:]] for k in range(m)]


def _tidy_scalar(x):
    return to_scalar(x) if isinstance(x, Fraction) else x


# ---------------------------------------------------------------------------


def cyclic_reduce_linear(f: NcPolynomial, n: int) -> tuple[NcPolynomial, NcPolynomial]:
    """Return (g, g') with f cyclically equivalent to g*x_n + x_n'*g'.

    Every word of ``f`` must contain exactly one letter x_n or x_n'.
    """
    g: dict = {}
    gs: dict = {}
    for w, c in f.terms.items():
        pos = [k for k, a in enumerate(w) if a.index == n]
        if len(pos) != 1:
            raise ValueError(f"polynomial is not linear in x{n}")
        k = pos[0]
        m, mp = w[:k], w[k + 1:]
        target = gs if w[k].starred else g
        key = mp + m
        s = target.get(key, 0) + c
        if s == 0:
            target.pop(key, None)
        else:
            target[key] = s
    gp, gsp = NcPolynomial(g), NcPolynomial(gs)
    xn = NcPolynomial.var(n)
    xns = NcPolynomial.var(n, True)
    if not cyc_equiv(f, gp * xn + xns * gsp):
        raise AssertionError("cyclic reduction failed verification")
    return gp, gsp


def standard_polynomial(k: int) -> NcPolynomial:
    """s_k: signed sum over permutations of x_1 ... x_k."""
    from itertools import permutations

    terms = {}
    for perm in permutations(range(1, k + 1)):
        inversions = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        terms[tuple(Letter(i) for i in perm)] = -1 if inversions % 2 else 1
    return NcPolynomial(terms)


def poly_sum(polys: Iterable[NcPolynomial]) -> NcPolynomial:
    out = NcPolynomial()
    for p in polys:
        out = out + p
    return out
