"""Exact coefficients and the commutative polynomial ring F[z].

Scalars are plain ``int`` / ``fractions.Fraction`` values for Q and
:class:`GaussianRational` for Q(i).  Gaussian results with zero imaginary
part collapse back to rationals, so a real value never carries a Q(i) tag.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

from . import kernels as _k

Rational = Union[int, Fraction]


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with ``im != 0``.

    Construct through :func:`gauss`, which returns a rational when the
    imaginary part vanishes.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Rational, im: Rational) -> None:
        self.re = _tidy(re)
        self.im = _tidy(im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def conjugate(self):
        return gauss(self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return gauss(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return gauss(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return gauss(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return gauss(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return gauss(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return gauss(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return gauss(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            n = other.re * other.re + other.im * other.im
            return gauss(
                Fraction(self.re * other.re + self.im * other.im) / n,
                Fraction(self.im * other.re - self.re * other.im) / n,
            )
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return gauss(Fraction(self.re) / other, Fraction(self.im) / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            n = self.re * self.re + self.im * self.im
            return gauss(Fraction(other * self.re) / n, Fraction(-other * self.im) / n)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** (-n))
        out: object = 1
        base: object = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


def _tidy(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def gauss(re: Rational, im: Rational = 0):
    """``re + im*i``; a plain rational when ``im == 0``."""
    if im == 0:
        return _tidy(re)
    return GaussianRational(re, im)


I = GaussianRational(0, 1)


def conj(x):
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


def is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def to_scalar(x):
    """Coerce ints, Fractions, Gaussian rationals and exact strings."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, GaussianRational)):
        return x
    if isinstance(x, Fraction):
        return _tidy(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def _fmt_rational(x) -> str:
    x = _tidy(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x) -> str:
    """Canonical text: ``p/q`` or ``p/q+r/s*i``; integers drop ``/1``."""
    if not isinstance(x, GaussianRational):
        return _fmt_rational(x)
    if x.im == 1:
        im = "i"
    elif x.im == -1:
        im = "-i"
    else:
        im = _fmt_rational(x.im) + "*i"
    if x.re == 0:
        return im
    re_part = _fmt_rational(x.re)
    return re_part + ("" if im.startswith("-") else "+") + im


def parse_scalar(text: str):
    p = CPoly.parse(text)
    if not p.is_constant():
        raise ValueError(f"not a scalar: {text!r}")
    return p.constant_value()


# ---------------------------------------------------------------------------
# Commutative polynomial variables


class Var(NamedTuple):
    """The commuting indeterminate at position (i, j) of generic matrix ``ell``.

    ``block=1`` marks the companion variables of an independent adjoint
    matrix used by the unitary model.
    """

    ell: int
    i: int
    j: int
    block: int = 0

    @property
    def id(self) -> int:
        return var_id(self.ell, self.i, self.j, self.block)

    @property
    def name(self) -> str:
        prefix = "w" if self.block else "z"
        if self.i < 10 and self.j < 10:
            return f"{prefix}{self.ell}_{self.i}{self.j}"
        return f"{prefix}{self.ell}_{self.i}_{self.j}"

    def __str__(self) -> str:
        return self.name


def var_id(ell: int, i: int, j: int, block: int = 0) -> int:
    if not (1 <= ell < 4096 and 1 <= i < 64 and 1 <= j < 64 and block in (0, 1)):
        raise ValueError(f"variable index out of range: ({ell}, {i}, {j}, {block})")
    return (block << 24) | (ell << 12) | (i << 6) | j


def var_from_id(vid: int) -> Var:
    return Var((vid >> 12) & 0xFFF, (vid >> 6) & 0x3F, vid & 0x3F, vid >> 24)


class UnassignedVariableError(KeyError):
    def __init__(self, var: Var) -> None:
        super().__init__(f"no value assigned to {var.name}")
        self.var = var

    def __str__(self) -> str:
        return self.args[0]


# ---------------------------------------------------------------------------


class CPoly:
    """Sparse polynomial in commuting variables with exact coefficients.

    Terms live in a dict from monomial (sorted tuple of variable ids, with
    repetition) to a nonzero scalar.  Instances are immutable.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping | None = None) -> None:
        if terms is None:
            self._t = {}
        else:
            self._t = {tuple(sorted(m)): to_scalar(c) for m, c in terms.items() if c != 0}

    @classmethod
    def _wrap(cls, terms: dict) -> "CPoly":
        p = object.__new__(cls)
        p._t = terms
        return p

    @classmethod
    def constant(cls, c) -> "CPoly":
        c = to_scalar(c)
        return cls._wrap({(): c} if c != 0 else {})

    @classmethod
    def var(cls, v: Var) -> "CPoly":
        return cls._wrap({(v.id,): 1})

    @property
    def terms(self) -> dict:
        return self._t

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and () in self._t)

    def constant_value(self):
        return self._t.get((), 0)

    def degree(self) -> int:
        return max((len(m) for m in self._t), default=-1)

    def variables(self) -> list[Var]:
        ids = sorted({v for m in self._t for v in m})
        return [var_from_id(v) for v in ids]

    def conj(self) -> "CPoly":
        return CPoly._wrap({m: conj(c) for m, c in self._t.items()})

    def _coerce(self, other) -> dict | None:
        if isinstance(other, CPoly):
            return other._t
        if isinstance(other, (int, Fraction, GaussianRational)) and not isinstance(other, bool):
            return {(): other} if other != 0 else {}
        return None

    def __add__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        return CPoly._wrap(_k.poly_add(self._t, t))

    __radd__ = __add__

    def __sub__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        return CPoly._wrap(_k.poly_sub(self._t, t))

    def __rsub__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        return CPoly._wrap(_k.poly_sub(t, self._t))

    def __neg__(self):
        return CPoly._wrap({m: -c for m, c in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, CPoly):
            return CPoly._wrap(_k.poly_mul(self._t, other._t))
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        return CPoly._wrap(_k.poly_scale(self._t, other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = CPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        return self._t == t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    def eval(self, point: Mapping):
        """Substitute scalars for the variables.

        ``point`` maps :class:`Var` (or its text name) to a scalar.
        """
        values: dict[int, object] = {}
        for key, val in point.items():
            if isinstance(key, str):
                key = _parse_var_name(key)
            values[key.id] = to_scalar(val)
        total = 0
        for m, c in self._t.items():
            term = c
            for vid in m:
                try:
                    term = term * values[vid]
                except KeyError:
                    raise UnassignedVariableError(var_from_id(vid)) from None
            total = total + term
        return _tidy(total) if not isinstance(total, GaussianRational) else total

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms in graded lex order, highest degree first."""
        return sorted(self._t.items(), key=lambda mc: (-len(mc[0]), mc[0]))

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts: list[str] = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            body = _fmt_monomial(m)
            if isinstance(c, GaussianRational):
                coef = "(" + format_scalar(c) + ")"
                sign = "+"
            else:
                sign = "-" if c < 0 else "+"
                a = -c if c < 0 else c
                coef = "" if (a == 1 and body) else _fmt_rational(a)
            if body and coef:
                text = coef + "*" + body
            else:
                text = coef or body
            if k == 0:
                parts.append(("-" if sign == "-" else "") + text)
            else:
                parts.append(f" {sign} {text}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"CPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "CPoly":
        return _CParser(text).parse()


def _fmt_monomial(m: tuple) -> str:
    if not m:
        return ""
    out = []
    k = 0
    while k < len(m):
        e = 1
        while k + e < len(m) and m[k + e] == m[k]:
            e += 1
        name = var_from_id(m[k]).name
        out.append(name if e == 1 else f"{name}^{e}")
        k += e
    return "*".join(out)


_VAR_RE = re.compile(r"([zw])(\d+)_(\d+)(?:_(\d+))?")


def _parse_var_name(text: str) -> Var:
    mt = _VAR_RE.fullmatch(text)
    if mt is None:
        raise ValueError(f"bad variable name: {text!r}")
    return _var_from_match(mt, text)


def _var_from_match(mt, text) -> Var:
    block = 1 if mt.group(1) == "w" else 0
    ell = int(mt.group(2))
    if mt.group(4) is not None:
        i, j = int(mt.group(3)), int(mt.group(4))
    else:
        digits = mt.group(3)
        if len(digits) != 2:
            raise ValueError(f"ambiguous variable name {text!r}; use z<l>_<i>_<j>")
        i, j = int(digits[0]), int(digits[1])
    return Var(ell, i, j, block)


_TOKEN_RE = re.compile(r"\s*(?:([zw]\d+_\d+(?:_\d+)?)|(\d+)|(.))")


class _CParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            mt = _TOKEN_RE.match(text, pos)
            if mt is None or mt.end() == pos:
                break
            if mt.group(1):
                self.toks.append(("var", mt.group(1), mt.start(1)))
            elif mt.group(2):
                self.toks.append(("num", mt.group(2), mt.start(2)))
            elif mt.group(3) and not mt.group(3).isspace():
                self.toks.append(("op", mt.group(3), mt.start(3)))
            pos = mt.end()
        self.k = 0

    def _peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else ("end", "", len(self.text))

    def _take(self, value=None):
        tok = self._peek()
        if value is not None and tok[1] != value:
            raise ValueError(f"expected {value!r} at position {tok[2]} in {self.text!r}")
        self.k += 1
        return tok

    def parse(self) -> CPoly:
        out = self._expr()
        tok = self._peek()
        if tok[0] != "end":
            raise ValueError(f"unexpected {tok[1]!r} at position {tok[2]} in {self.text!r}")
        return out

    def _expr(self) -> CPoly:
        sign = 1
        if self._peek()[1] in ("+", "-"):
            sign = -1 if self._take()[1] == "-" else 1
        acc = self._term() * sign
        while self._peek()[1] in ("+", "-"):
            op = self._take()[1]
            t = self._term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def _term(self) -> CPoly:
        acc = self._factor()
        while self._peek()[1] == "*":
            self._take()
            acc = acc * self._factor()
        return acc

    def _factor(self) -> CPoly:
        base = self._atom()
        if self._peek()[1] == "^":
            self._take()
            tok = self._take()
            if tok[0] != "num":
                raise ValueError(f"expected exponent at position {tok[2]} in {self.text!r}")
            base = base ** int(tok[1])
        return base

    def _atom(self) -> CPoly:
        tok = self._take()
        kind, val, pos = tok
        if kind == "num":
            n: Rational = int(val)
            if self._peek()[1] == "/":
                self._take()
                den = self._take()
                if den[0] != "num" or int(den[1]) == 0:
                    raise ValueError(f"bad denominator at position {den[2]} in {self.text!r}")
                n = Fraction(n, int(den[1]))
            return CPoly.constant(n)
        if kind == "var":
            return CPoly.var(_var_from_match(_VAR_RE.fullmatch(val), val))
        if val == "i":
            return CPoly.constant(I)
        if val == "(":
            inner = self._expr()
            self._take(")")
            return inner
        raise ValueError(f"unexpected {val or 'end of input'!r} at position {pos} in {self.text!r}")


def cpoly_is_zero(p: CPoly) -> bool:
    return p.is_zero()


def cpoly_eval(p: CPoly, point: Mapping):
    return p.eval(point)


def gcd_reduced(values: Iterable) -> bool:
    """True when every rational part is stored in lowest terms."""
    from math import gcd

    for x in values:
        parts = (x.re, x.im) if isinstance(x, GaussianRational) else (x,)
        for q in parts:
            if isinstance(q, Fraction):
                if q.denominator <= 0 or gcd(q.numerator, q.denominator) != 1:
                    return False
    return True
