"""Text front end for polynomials and matrices.

Grammar::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ['^' nat]
    atom     := rational | 'i' | var | '[' expr ',' expr ']' | '(' expr ')'
    var      := 'x' nat ["'"]
    rational := int ['/' nat]

A postfix apostrophe is the involution, ``[f,g]`` expands to ``f*g - g*f``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .freealg import Letter, NcPolynomial, word_key
from .scalars import GaussianRational, I, format_scalar, parse_scalar


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int) -> None:
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(x)(\d+)('?)|(\d+)|([-+*^/\[\](),i]))")


def _tokenize(text: str):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if mt is None:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        if mt.group(1):
            idx = int(mt.group(2))
            if idx < 1:
                raise ParseError("variable index must be >= 1", text, mt.start(1))
            toks.append(("var", (idx, bool(mt.group(3))), mt.start(1)))
        elif mt.group(4):
            toks.append(("num", int(mt.group(4)), mt.start(4)))
        else:
            toks.append(("op", mt.group(5), mt.start(5)))
        pos = mt.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self, op: str | None = None):
        tok = self.toks[self.k]
        if op is not None and (tok[0] != "op" or tok[1] != op):
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {op!r}, found {found}", self.text, tok[2])
        self.k += 1
        return tok

    def at(self, *ops: str) -> bool:
        tok = self.peek()
        return tok[0] == "op" and tok[1] in ops

    def parse(self) -> NcPolynomial:
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return f

    def expr(self) -> NcPolynomial:
        neg = False
        if self.at("-"):
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.at("+", "-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> NcPolynomial:
        acc = self.factor()
        while self.at("*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> NcPolynomial:
        base = self.atom()
        if self.at("^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise ParseError("expected a natural exponent", self.text, tok[2])
            base = base ** tok[1]
        return base

    def atom(self) -> NcPolynomial:
        kind, val, pos = self.take()
        if kind == "num":
            q = val
            if self.at("/"):
                self.take()
                den = self.take()
                if den[0] != "num" or den[1] == 0:
                    raise ParseError("expected a positive denominator", self.text, den[2])
                q = Fraction(val, den[1])
            return NcPolynomial.const(q)
        if kind == "var":
            return NcPolynomial.var(val[0], val[1])
        if kind == "op" and val == "i":
            return NcPolynomial.const(I)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "op" and val == "[":
            f = self.expr()
            self.take(",")
            g = self.expr()
            self.take("]")
            return f * g - g * f
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {found}", self.text, pos)


def parse_poly(text: str) -> NcPolynomial:
    return _Parser(text).parse()


def _fmt_word(w) -> str:
    return "*".join(f"x{a.index}" + ("'" if a.starred else "") for a in w)


def format_poly(f: NcPolynomial) -> str:
    if f.is_zero():
        return "0"
    items = sorted(f.terms.items(), key=lambda wc: word_key(wc[0]))
    out = []
    for k, (w, c) in enumerate(items):
        body = _fmt_word(w)
        if isinstance(c, GaussianRational):
            sign, coef = "+", "(" + format_scalar(c) + ")"
        else:
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            coef = "" if (a == 1 and body) else format_scalar(a)
        text = f"{coef}*{body}" if (coef and body) else (coef or body)
        if k == 0:
            out.append(text if sign == "+" else "-" + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


# ---------------------------------------------------------------------------
# matrices: [[a,b],[c,d]]

_ROW = re.compile(r"\[([^\[\]]*)\]")


def parse_matrix_rows(text: str) -> list[list]:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("matrix must look like [[a,b],[c,d]]", text, 0)
    inner = s[1:-1]
    rows = _ROW.findall(inner)
    if not rows or _ROW.sub("", inner).replace(",", "").strip():
        raise ParseError("malformed matrix rows", text, 0)
    out = []
    for r in rows:
        entries = [e.strip() for e in r.split(",")]
        out.append([parse_scalar(e) for e in entries])
    d = len(out)
    if any(len(r) != d for r in out):
        raise ParseError("matrix must be square", text, 0)
    return out


def format_matrix_rows(rows) -> str:
    return "[" + ",".join("[" + ",".join(str(e) if not isinstance(e, (int, Fraction, GaussianRational)) else format_scalar(e) for e in r) + "]" for r in rows) + "]"


__all__ = ["ParseError", "Letter", "parse_poly", "format_poly", "parse_matrix_rows", "format_matrix_rows"]
