"""Sparse multivariate polynomials over the rationals.

Terms are stored as ``{exponent tuple: Fraction}`` with no zero coefficients.
Printing uses graded-lex order (highest degree first) so the text form of a
polynomial is canonical and byte-stable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

MAX_VARIABLES = 8

Exponent = tuple[int, ...]


class PolySyntaxError(ValueError):
    """Raised by :func:`parse_poly`; ``pos`` is the 0-based offset in the input."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class NotHomogeneousError(ValueError):
    pass


def _grlex_key(exp: Exponent):
    return (sum(exp), exp)


class Poly:
    """Immutable polynomial in a fixed, ordered list of variables."""

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, object] | None = None):
        variables = tuple(variables)
        if len(variables) > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} variables are supported")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables) or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for variables {variables}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.variables = variables
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Exponent, Fraction]) -> "Poly":
        # terms must already be clean (no zeros, right lengths)
        p = object.__new__(cls)
        p.variables = variables
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Poly":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, c, variables: Sequence[str]) -> "Poly":
        variables = tuple(variables)
        c = Fraction(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "Poly":
        variables = tuple(variables)
        exp = tuple(int(v == name) for v in variables)
        if sum(exp) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls._raw(variables, {exp: Fraction(1)})

    @classmethod
    def monomial(cls, exp: Exponent, variables: Sequence[str], coeff=1) -> "Poly":
        return cls(variables, {tuple(exp): coeff})

    # basic access

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def items(self):
        """Terms in graded-lex order, leading term first."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coeff(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * self.nvars)

    # arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return Poly.zero(self.variables)
            return Poly._raw(self.variables, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other, self.variables)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # evaluation and substitution

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has the wrong dimension")
        point = [Fraction(v) for v in point]
        total = Fraction(0)
        for exp, c in self._terms.items():
            t = c
            for v, e in zip(point, exp):
                if e:
                    t *= v**e
            total += t
        return total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Replace the i-th variable by ``images[i]`` (all in one common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].variables if images else self.variables
        cache: dict[tuple[int, int], Poly] = {}

        def power(i, e):
            if (i, e) not in cache:
                cache[(i, e)] = images[i] ** e
            return cache[(i, e)]

        out = Poly.zero(target)
        for exp, c in self._terms.items():
            t = Poly.constant(c, target)
            for i, e in enumerate(exp):
                if e:
                    t = t * power(i, e)
            out = out + t
        return out

    def linear_change(self, matrix: Sequence[Sequence]) -> "Poly":
        """Return f(A x) for a square matrix A."""
        n = self.nvars
        xs = [Poly.var(v, self.variables) for v in self.variables]
        images = [sum((xs[j] * Fraction(matrix[i][j]) for j in range(n)), Poly.zero(self.variables))
                  for i in range(n)]
        return self.substitute(images)

    def truncate(self, degree: int) -> "Poly":
        """Drop every term of total degree >= ``degree``."""
        return Poly._raw(self.variables, {e: c for e, c in self._terms.items() if sum(e) < degree})

    # printing

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Poly({to_text(self)!r}, {list(self.variables)})"


def _monomial_text(exp: Exponent, variables: Sequence[str]) -> str:
    parts = []
    for v, e in zip(variables, exp):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_text(f: Poly) -> str:
    """Canonical text form, accepted back by :func:`parse_poly`."""
    if f.is_zero():
        return "0"
    pieces = []
    for i, (exp, c) in enumerate(f.items()):
        mono = _monomial_text(exp, f.variables)
        mag = abs(c)
        if not mono:
            body = _coeff_text(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_text(mag)}*{mono}"
        if i == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


# parsing

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), pos))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise PolySyntaxError(f"unexpected character {ch!r}", pos)
            tokens.append(("op", ch, pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = tuple(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch):
        kind, val, pos = self.take()
        if kind != "op" or val != ch:
            raise PolySyntaxError(f"expected {ch!r}", pos)

    def parse(self) -> Poly:
        f = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolySyntaxError(f"unexpected token {val!r}", pos)
        return f

    def expr(self) -> Poly:
        f = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                g = self.term()
                f = f + g if val == "+" else f - g
            else:
                return f

    def term(self) -> Poly:
        f = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                f = f * self.unary()
            else:
                return f

    def unary(self) -> Poly:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            f = self.unary()
            return -f if val == "-" else f
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise PolySyntaxError("exponent must be a nonnegative integer literal", pos)
            return base**val
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.take()
        if kind == "int":
            num = val
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "/":
                self.take()
                dk, dv, dpos = self.take()
                if dk != "int":
                    raise PolySyntaxError("rational literal needs an integer denominator", dpos)
                if dv == 0:
                    raise PolySyntaxError("zero denominator", dpos)
                return Poly.constant(Fraction(num, dv), self.variables)
            return Poly.constant(num, self.variables)
        if kind == "ident":
            if val not in self.variables:
                raise PolySyntaxError(f"unknown variable {val!r}", pos)
            return Poly.var(val, self.variables)
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        if kind == "end":
            raise PolySyntaxError("unexpected end of input", pos)
        raise PolySyntaxError(f"unexpected token {val!r}", pos)


def parse_poly(text: str, variables: Sequence[str]) -> Poly:
    """Parse ``text`` as a polynomial in ``variables``.

    >>> str(parse_poly("(x+y)^2 - x^2 - 2*x*y", ["x", "y"]))
    'y^2'
    """
    return _Parser(text, variables).parse()


# calculus and charts

def derivative(f: Poly, i: int) -> Poly:
    out: dict[Exponent, Fraction] = {}
    for exp, c in f._terms.items():
        e = exp[i]
        if e:
            new = exp[:i] + (e - 1,) + exp[i + 1:]
            out[new] = c * e
    return Poly._raw(f.variables, out)


def gradient(f: Poly) -> list[Poly]:
    return [derivative(f, i) for i in range(f.nvars)]


def dehomogenize(f: Poly, chart: int | str) -> Poly:
    """Set the chart variable to 1; the result lives in the remaining variables."""
    if isinstance(chart, str):
        chart = f.variables.index(chart)
    if not 0 <= chart < f.nvars:
        raise IndexError(f"chart index {chart} out of range")
    if not f.is_homogeneous():
        raise NotHomogeneousError(f"{f} is not homogeneous")
    rest = f.variables[:chart] + f.variables[chart + 1:]
    out: dict[Exponent, Fraction] = {}
    for exp, c in f._terms.items():
        new = exp[:chart] + exp[chart + 1:]
        out[new] = out.get(new, 0) + c
    return Poly._raw(rest, {e: c for e, c in out.items() if c})


def translate_to_origin(f: Poly, p: Sequence) -> Poly:
    """Return f(x + p), so the point ``p`` moves to the origin."""
    if len(p) != f.nvars:
        raise ValueError("point has the wrong dimension")
    xs = [Poly.var(v, f.variables) for v in f.variables]
    return f.substitute([x + Fraction(c) for x, c in zip(xs, p)])


def monomials_below(nvars: int, degree: int) -> list[Exponent]:
    """All exponent vectors of total degree < ``degree``, graded-lex ascending."""
    out = []
    for d in range(degree):
        out.extend(sorted(monomials_of_degree(nvars, d)))
    return out


def monomials_of_degree(nvars: int, d: int) -> Iterable[Exponent]:
    if nvars == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest
