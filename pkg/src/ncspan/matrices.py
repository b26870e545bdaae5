"""Exact d x d matrices, the concrete involutions, and Lie (skew-)ideal lab.

Matrices hold either exact scalars or :class:`~ncspan.scalars.CPoly`
entries.  A :class:`Subspace` is an exact row space of flattened matrices,
taken over Q(i) (which agrees with Q ranks for rational matrices).
"""

from __future__ import annotations

import enum
import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels as _k
from .scalars import CPoly, GaussianRational, conj, format_scalar, gauss, to_scalar

INVOLUTION_KINDS = ("none", "transpose", "symplectic", "unitary")


class Matrix:
    """Square matrix, stored row-major and immutable."""

    __slots__ = ("d", "entries")

    def __init__(self, rows: Sequence[Sequence]) -> None:
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("matrix must be square")
        self.d = d
        self.entries = tuple(_entry(x) for r in rows for x in r)

    @classmethod
    def from_flat(cls, d: int, entries: Iterable) -> "Matrix":
        m = object.__new__(cls)
        m.d = d
        m.entries = tuple(entries)
        if len(m.entries) != d * d:
            raise ValueError("wrong number of entries")
        return m

    @classmethod
    def zero(cls, d: int) -> "Matrix":
        return cls.from_flat(d, (0,) * (d * d))

    @classmethod
    def identity(cls, d: int, c=1) -> "Matrix":
        return cls.from_flat(d, (c if i == j else 0 for i in range(d) for j in range(d)))

    @classmethod
    def unit(cls, d: int, i: int, j: int, c=1) -> "Matrix":
        """The matrix unit E_ij (1-based indices) scaled by ``c``."""
        e = [0] * (d * d)
        e[(i - 1) * d + (j - 1)] = c
        return cls.from_flat(d, e)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.d + j]

    def rows(self) -> list[list]:
        d = self.d
        return [list(self.entries[i * d:(i + 1) * d]) for i in range(d)]

    @property
    def is_symbolic(self) -> bool:
        return any(isinstance(x, CPoly) for x in self.entries)

    def _check(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.d != self.d:
            raise ValueError(f"dimension mismatch: {self.d} vs {other.d}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix.from_flat(self.d, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix.from_flat(self.d, (a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return Matrix.from_flat(self.d, (-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        return Matrix.from_flat(self.d, (a * c for a in self.entries))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.d == other.d and all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.d, self.entries))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def trace(self):
        return _sum(self.entries[i * self.d + i] for i in range(self.d))

    def transpose(self) -> "Matrix":
        d = self.d
        return Matrix.from_flat(d, (self.entries[j * d + i] for i in range(d) for j in range(d)))

    def conj(self) -> "Matrix":
        return Matrix.from_flat(self.d, (x.conj() if isinstance(x, CPoly) else conj(x) for x in self.entries))

    def scalar_part(self):
        """Return c when the matrix equals c*I, else None."""
        d = self.d
        c = self.entries[0]
        for i in range(d):
            for j in range(d):
                x = self.entries[i * d + j]
                if i == j:
                    if x != c:
                        return None
                elif x != 0:
                    return None
        return c

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(_fmt(x) for x in r) + "]" for r in self.rows()) + "]"

    def __repr__(self) -> str:
        return f"Matrix({self})"


def _fmt(x) -> str:
    return str(x) if isinstance(x, CPoly) else format_scalar(x)


def _entry(x):
    return x if isinstance(x, CPoly) else to_scalar(x)


def _sum(xs):
    total = 0
    for x in xs:
        total = total + x
    return total


def _as_dict(x) -> dict:
    if isinstance(x, CPoly):
        return x.terms
    return {(): x} if x != 0 else {}


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    a._check(b)
    d = a.d
    if a.is_symbolic or b.is_symbolic:
        out = _k.matmul([_as_dict(x) for x in a.entries], [_as_dict(x) for x in b.entries], d)
        return Matrix.from_flat(d, (CPoly._wrap(t) for t in out))
    ea, eb = a.entries, b.entries
    out = []
    for i in range(d):
        for j in range(d):
            s = 0
            for k in range(d):
                x = ea[i * d + k]
                if x != 0:
                    y = eb[k * d + j]
                    if y != 0:
                        s = s + x * y
            out.append(s)
    return Matrix.from_flat(d, out)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a * b - b * a


def trace(a: Matrix):
    return a.trace()


# ---------------------------------------------------------------------------
# involutions


@dataclass(frozen=True)
class Involution:
    """One of the concrete involutions on M_d.

    ``transpose`` and ``symplectic`` are of the first kind; ``unitary``
    (conjugate transpose over Q(i)) is of the second kind.
    """

    kind: str = "none"

    def __post_init__(self) -> None:
        if self.kind not in INVOLUTION_KINDS:
            raise ValueError(f"unknown involution {self.kind!r}; choose from {INVOLUTION_KINDS}")

    @property
    def is_none(self) -> bool:
        return self.kind == "none"

    @property
    def first_kind(self) -> bool:
        return self.kind in ("transpose", "symplectic")

    @property
    def second_kind(self) -> bool:
        return self.kind == "unitary"

    def validate(self, d: int) -> None:
        if d < 1:
            raise ValueError("dimension must be >= 1")
        if self.kind == "symplectic" and d % 2:
            raise ValueError(f"the symplectic involution needs even d, got d={d}")

    def __call__(self, a: Matrix) -> Matrix:
        return apply_star(a, self)

    def __str__(self) -> str:
        return self.kind


NONE = Involution("none")
TRANSPOSE = Involution("transpose")
SYMPLECTIC = Involution("symplectic")
UNITARY = Involution("unitary")


def as_involution(inv) -> Involution:
    if isinstance(inv, Involution):
        return inv
    if inv is None:
        return NONE
    return Involution(str(inv))


def apply_star(a: Matrix, inv) -> Matrix:
    inv = as_involution(inv)
    d = a.d
    if inv.kind == "none":
        raise ValueError("no involution selected")
    if inv.kind == "transpose":
        return a.transpose()
    if inv.kind == "unitary":
        return a.transpose().conj()
    inv.validate(d)
    h = d // 2
    e = a.entries
    out = [0] * (d * d)
    for i in range(d):
        for j in range(d):
            # entry (i, j) of the result comes from the transposed position
            # in the diagonally opposite block, negated off the diagonal blocks
            bi, bj = i // h, j // h
            ii, jj = i % h, j % h
            src_bi, src_bj = 1 - bj, 1 - bi
            x = e[(src_bi * h + jj) * d + (src_bj * h + ii)]
            out[i * d + j] = x if bi == bj else -x
    return Matrix.from_flat(d, out)


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Exact linear span of d x d matrices."""

    def __init__(self, d: int, matrices: Iterable[Matrix] = ()) -> None:
        self.d = d
        self.basis: list[Matrix] = []
        self._pivots: list[int] = []
        self._rows: dict[int, list] = {}
        for m in matrices:
            self.add(m)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def add(self, m: Matrix) -> bool:
        if m.d != self.d:
            raise ValueError(f"dimension mismatch: {m.d} vs {self.d}")
        if _k.rref_insert(m.entries, self._pivots, self._rows):
            self.basis.append(m)
            return True
        return False

    def contains(self, m: Matrix) -> bool:
        if m.d != self.d:
            raise ValueError(f"dimension mismatch: {m.d} vs {self.d}")
        return all(x == 0 for x in _k.rref_reduce(m.entries, self._pivots, self._rows))

    __contains__ = contains

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.d == other.d and self.dim == other.dim and self.is_subspace_of(other)

    __hash__ = None  # type: ignore[assignment]

    def copy(self) -> "Subspace":
        s = Subspace(self.d)
        s.basis = list(self.basis)
        s._pivots = list(self._pivots)
        s._rows = {p: list(r) for p, r in self._rows.items()}
        return s

    def reduced_basis(self) -> list[Matrix]:
        """The reduced row echelon basis, one matrix per pivot."""
        return [Matrix.from_flat(self.d, (_tidy(x) for x in self._rows[p])) for p in self._pivots]

    def sum(self, other: "Subspace") -> "Subspace":
        s = self.copy()
        for b in other.basis:
            s.add(b)
        return s

    def __repr__(self) -> str:
        return f"Subspace(d={self.d}, dim={self.dim})"

    def to_json(self, reduced: bool = True) -> dict:
        mats = self.reduced_basis() if reduced else self.basis
        return {"d": self.d, "dimension": self.dim, "basis": [str(m) for m in mats]}


def _tidy(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def exact_span(mats: Iterable[Matrix], d: int | None = None) -> Subspace:
    mats = list(mats)
    if d is None:
        if not mats:
            raise ValueError("dimension needed for an empty span")
        d = mats[0].d
    return Subspace(d, mats)


# ---------------------------------------------------------------------------
# canonical subspaces


class CanonicalName(str, enum.Enum):
    ZERO = "Zero"
    Z = "Z"
    K = "K"
    SK = "SK"
    S = "S"
    ZPLUSK = "ZplusK"
    COMM = "Comm"
    FULL = "Full"
    OTHER = "Other"

    def __str__(self) -> str:
        return self.value


CANONICAL_ORDER = [
    CanonicalName.ZERO,
    CanonicalName.Z,
    CanonicalName.K,
    CanonicalName.SK,
    CanonicalName.S,
    CanonicalName.ZPLUSK,
    CanonicalName.COMM,
    CanonicalName.FULL,
]
_INVOLUTION_FREE = [CanonicalName.ZERO, CanonicalName.Z, CanonicalName.COMM, CanonicalName.FULL]


def matrix_units(d: int) -> list[Matrix]:
    return [Matrix.unit(d, i, j) for i in range(1, d + 1) for j in range(1, d + 1)]


def skew_basis(d: int, inv) -> list[Matrix]:
    """A basis over the fixed field of the skew elements K.

    For the unitary involution this is a Q-basis of the skew-hermitian
    matrices; it spans all of M_d over Q(i).
    """
    inv = as_involution(inv)
    inv.validate(d)
    if inv.is_none:
        raise ValueError("skew elements need an involution")
    gens = [u - apply_star(u, inv) for u in matrix_units(d)]
    if inv.second_kind:
        gens += [u.scale(gauss(0, 1)) - apply_star(u.scale(gauss(0, 1)), inv) for u in matrix_units(d)]
        return _independent_over_q(d, gens)
    return Subspace(d, gens).basis


def sym_basis(d: int, inv) -> list[Matrix]:
    inv = as_involution(inv)
    inv.validate(d)
    if inv.is_none:
        raise ValueError("symmetric elements need an involution")
    gens = [u + apply_star(u, inv) for u in matrix_units(d)]
    if inv.second_kind:
        gens += [u.scale(gauss(0, 1)) + apply_star(u.scale(gauss(0, 1)), inv) for u in matrix_units(d)]
        return _independent_over_q(d, gens)
    return Subspace(d, gens).basis


def _independent_over_q(d: int, gens: list[Matrix]) -> list[Matrix]:
    # real coordinates: (re, im) of every entry
    space = _RealSpan(2 * d * d)
    out = []
    for g in gens:
        vec = []
        for x in g.entries:
            if isinstance(x, GaussianRational):
                vec += [x.re, x.im]
            else:
                vec += [x, 0]
        if space.add(vec):
            out.append(g)
    return out


class _RealSpan:
    def __init__(self, n: int) -> None:
        self.pivots: list[int] = []
        self.rows: dict[int, list] = {}

    def add(self, vec) -> bool:
        return _k.rref_insert(vec, self.pivots, self.rows)


def canonical_subspace(d: int, inv, name) -> Subspace:
    inv = as_involution(inv)
    inv.validate(d)
    # cached spaces are shared, so hand out copies
    return _canonical(d, inv.kind, CanonicalName(name)).copy()


@functools.lru_cache(maxsize=256)
def _canonical(d: int, kind: str, name: CanonicalName) -> Subspace:
    inv = Involution(kind)
    if name is CanonicalName.OTHER:
        raise ValueError("Other is not a canonical subspace")
    if name in (CanonicalName.K, CanonicalName.SK, CanonicalName.S, CanonicalName.ZPLUSK) and not inv.first_kind:
        raise ValueError(f"{name} needs an involution of the first kind, got {inv.kind}")
    if name is CanonicalName.ZERO:
        return Subspace(d)
    if name is CanonicalName.Z:
        return Subspace(d, [Matrix.identity(d)])
    if name is CanonicalName.FULL:
        return Subspace(d, matrix_units(d))
    if name is CanonicalName.COMM:
        gens = [Matrix.unit(d, i, j) for i in range(1, d + 1) for j in range(1, d + 1) if i != j]
        gens += [Matrix.unit(d, i, i) - Matrix.unit(d, i + 1, i + 1) for i in range(1, d)]
        return Subspace(d, gens)
    if name is CanonicalName.K:
        return Subspace(d, skew_basis(d, inv))
    if name is CanonicalName.S:
        return Subspace(d, sym_basis(d, inv))
    if name is CanonicalName.ZPLUSK:
        return Subspace(d, [Matrix.identity(d)] + skew_basis(d, inv))
    # [S, K]
    ks = skew_basis(d, inv)
    return Subspace(d, (commutator(s, k) for s in sym_basis(d, inv) for k in ks))


def canonical_names(inv) -> list[CanonicalName]:
    inv = as_involution(inv)
    return list(CANONICAL_ORDER) if inv.first_kind else list(_INVOLUTION_FREE)


def classify_subspace(space: Subspace, inv) -> CanonicalName:
    """Name of the canonical subspace equal to ``space``, or Other."""
    inv = as_involution(inv)
    for name in canonical_names(inv):
        if canonical_subspace(space.d, inv, name) == space:
            return name
    return CanonicalName.OTHER


# ---------------------------------------------------------------------------
# closures


def _closure(seed: Iterable[Matrix], d: int, step) -> Subspace:
    space = Subspace(d)
    queue = []
    for m in seed:
        if space.add(m):
            queue.append(m)
    while queue:
        m = queue.pop(0)
        for img in step(m):
            if space.add(img):
                queue.append(img)
    return space


def _seed_dim(seed: list[Matrix], d: int | None) -> int:
    if d is not None:
        return d
    if not seed:
        raise ValueError("dimension needed for an empty seed")
    return seed[0].d


def skew_ideal_closure(seed: Iterable[Matrix], inv, d: int | None = None) -> Subspace:
    """Smallest subspace containing ``seed`` with [L, K] inside L."""
    seed = list(seed)
    d = _seed_dim(seed, d)
    ks = skew_basis(d, inv)
    return _closure(seed, d, lambda m: (commutator(m, k) for k in ks))


def lie_ideal_closure(seed: Iterable[Matrix], d: int | None = None) -> Subspace:
    seed = list(seed)
    d = _seed_dim(seed, d)
    units = matrix_units(d)
    return _closure(seed, d, lambda m: (commutator(m, u) for u in units))


def congruence_closure(seed: Iterable[Matrix], d: int | None = None) -> Subspace:
    """Smallest subspace closed under M -> M*A^t + A*M."""
    seed = list(seed)
    d = _seed_dim(seed, d)
    units = matrix_units(d)
    return _closure(seed, d, lambda m: (m * u.transpose() + u * m for u in units))


def check_lie_closure(space: Subspace, inv) -> bool:
    """True iff [span, A] inside span (no involution) or [span, K] inside span."""
    inv = as_involution(inv)
    inv.validate(space.d)
    others = matrix_units(space.d) if inv.is_none else skew_basis(space.d, inv)
    return all(space.contains(commutator(b, k)) for b in space.basis for k in others)


def is_closed(space: Subspace, gens: Sequence[Matrix]) -> bool:
    return all(space.contains(commutator(b, k)) for b in space.basis for k in gens)


# ---------------------------------------------------------------------------


def random_matrix(rng: random.Random, d: int, gaussian: bool = False) -> Matrix:
    """Integer entries in [-5, 5]; Gaussian integers with parts in [-3, 3]."""
    if gaussian:
        return Matrix.from_flat(d, [gauss(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(d * d)])
    return Matrix.from_flat(d, [rng.randint(-5, 5) for _ in range(d * d)])


def parse_matrix(text: str) -> Matrix:
    from .parser import parse_matrix_rows

    return Matrix(parse_matrix_rows(text))
