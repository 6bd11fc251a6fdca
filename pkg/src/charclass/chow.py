"""Exact Chow-ring arithmetic for P^n and for P^n blown up at m points.

A class is a vector over the basis ``{h^k : 0 <= k <= n}`` together with one
block ``{e_i^k : 1 <= k <= n}`` per blown-up point.  The ring relations are
``h * e_i = 0`` and ``e_i * e_j = 0`` for ``i != j``; everything is truncated
above codimension ``n``.  Degrees: ``deg h^n = 1`` and ``deg e_i^n = (-1)^(n-1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence


class AmbientMismatchError(ValueError):
    pass


class NotAUnitError(ValueError):
    pass


class NonIntegralClassError(ArithmeticError):
    """An exported Chern/CSM/Fulton class came out with a non-integer coefficient."""


@dataclass(frozen=True)
class Ambient:
    kind: str  # "P" or "BlPt"
    n: int
    m: int = 0

    def __post_init__(self):
        if self.kind not in ("P", "BlPt"):
            raise ValueError(f"unknown ambient kind {self.kind!r}")
        if self.n < 1 or self.m < 0:
            raise ValueError("need n >= 1 and m >= 0")
        if self.kind == "P" and self.m:
            raise ValueError("projective space has no blown-up points")
        if self.kind == "BlPt" and self.m < 1:
            raise ValueError("a point blowup needs m >= 1")

    @classmethod
    def projective(cls, n: int) -> "Ambient":
        return cls("P", n, 0)

    @classmethod
    def blowup(cls, n: int, m: int = 1) -> "Ambient":
        return cls("BlPt", n, m)

    @property
    def is_blowup(self) -> bool:
        return self.kind == "BlPt"

    @property
    def base(self) -> "Ambient":
        return Ambient.projective(self.n)

    def euler(self) -> int:
        """Topological Euler characteristic, (n+1) + m(n-1)."""
        return self.n + 1 + self.m * (self.n - 1)

    def __str__(self):
        if self.kind == "P":
            return f"P({self.n})"
        return f"BlPt(P({self.n}), {self.m})"


_AMBIENT_P = re.compile(r"^\s*P\s*(?:\(\s*(\d+)\s*\)|(\d+))\s*$")
_AMBIENT_BL = re.compile(
    r"^\s*BlPt\s*\(\s*P\s*(?:\(\s*(\d+)\s*\)|(\d+))\s*,\s*(\d+)\s*\)\s*$")


def parse_ambient(text: str) -> Ambient:
    """Accept ``P3``, ``P(3)``, ``BlPt(P2,1)`` or ``BlPt(P(2), 1)``."""
    m = _AMBIENT_P.match(text)
    if m:
        return Ambient.projective(int(m.group(1) or m.group(2)))
    m = _AMBIENT_BL.match(text)
    if m:
        return Ambient.blowup(int(m.group(1) or m.group(2)), int(m.group(3)))
    raise ValueError(f"cannot parse ambient {text!r}")


def _vec(values, length) -> tuple[Fraction, ...]:
    values = [Fraction(v) for v in values]
    if len(values) > length:
        if any(values[length:]):
            raise ValueError("vector longer than the ambient allows")
        values = values[:length]
    return tuple(values) + (Fraction(0),) * (length - len(values))


class ChowClass:
    """Element of the modeled Chow ring; immutable.

    ``h[k]`` is the coefficient of h^k (k = 0..n); ``e[i][k-1]`` is the
    coefficient of e_i^k (k = 1..n).
    """

    __slots__ = ("ambient", "h", "e")

    def __init__(self, ambient: Ambient, h: Sequence = (), e: Sequence[Sequence] = ()):
        n = ambient.n
        if len(e) > ambient.m:
            raise ValueError(f"{ambient} has only {ambient.m} exceptional divisors")
        self.ambient = ambient
        self.h = _vec(h, n + 1)
        blocks = [_vec(b, n) for b in e]
        blocks += [(Fraction(0),) * n] * (ambient.m - len(blocks))
        self.e = tuple(blocks)

    # constructors

    @classmethod
    def zero(cls, ambient: Ambient) -> "ChowClass":
        return cls(ambient)

    @classmethod
    def one(cls, ambient: Ambient) -> "ChowClass":
        return cls(ambient, [1])

    @classmethod
    def h_power(cls, ambient: Ambient, k: int, coeff=1) -> "ChowClass":
        if k > ambient.n:
            return cls(ambient)
        return cls(ambient, [0] * k + [coeff])

    @classmethod
    def e_power(cls, ambient: Ambient, i: int, k: int, coeff=1) -> "ChowClass":
        """``coeff * e_i^k`` with ``i`` 0-based and ``k >= 1``."""
        if not ambient.is_blowup or not 0 <= i < ambient.m:
            raise AmbientMismatchError(f"{ambient} has no exceptional divisor e{i + 1}")
        if k < 1:
            raise ValueError("use h_power for the unit class")
        if k > ambient.n:
            return cls(ambient)
        block = [0] * ambient.n
        block[k - 1] = coeff
        e = [[]] * ambient.m
        e[i] = block
        return cls(ambient, [], e)

    @classmethod
    def point(cls, ambient: Ambient) -> "ChowClass":
        return cls.h_power(ambient, ambient.n)

    # structure

    def _check(self, other: "ChowClass"):
        if not isinstance(other, ChowClass):
            raise TypeError(f"expected ChowClass, got {type(other).__name__}")
        if other.ambient != self.ambient:
            raise AmbientMismatchError(f"{self.ambient} vs {other.ambient}")

    def component(self, p: int) -> "ChowClass":
        """The codimension-p part."""
        n = self.ambient.n
        h = [0] * (n + 1)
        if 0 <= p <= n:
            h[p] = self.h[p]
        e = []
        for block in self.e:
            b = [0] * n
            if 1 <= p <= n:
                b[p - 1] = block[p - 1]
            e.append(b)
        return ChowClass(self.ambient, h, e)

    def codims(self) -> range:
        return range(self.ambient.n + 1)

    def is_zero(self) -> bool:
        return not any(self.h) and not any(any(b) for b in self.e)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.h) and all(
            c.denominator == 1 for b in self.e for c in b)

    def require_integral(self, what: str = "class") -> "ChowClass":
        if not self.is_integral():
            raise NonIntegralClassError(f"{what} has non-integer coefficients: {self}")
        return self

    @property
    def constant(self) -> Fraction:
        return self.h[0]

    def e_part(self) -> "ChowClass":
        return ChowClass(self.ambient, [], self.e)

    def h_part(self) -> "ChowClass":
        return ChowClass(self.ambient, self.h)

    # arithmetic

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ChowClass.one(self.ambient) * other
        self._check(other)
        return ChowClass(
            self.ambient,
            [a + b for a, b in zip(self.h, other.h)],
            [[a + b for a, b in zip(x, y)] for x, y in zip(self.e, other.e)],
        )

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ChowClass.one(self.ambient) * other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return ChowClass(self.ambient, [c * a for a in self.h],
                             [[c * a for a in b] for b in self.e])
        return chow_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ChowClass.one(self.ambient)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return (self.ambient, self.h, self.e) == (other.ambient, other.h, other.e)

    def __hash__(self):
        return hash((self.ambient, self.h, self.e))

    def __str__(self):
        return render_class(self)

    def __repr__(self):
        return f"ChowClass({self.ambient}: {render_class(self)})"

    def to_json(self) -> dict:
        """Integer-string vectors indexed by codimension, exceptional blocks separate."""
        return {
            "ambient": str(self.ambient),
            "h": [_num_text(c) for c in self.h],
            "e": [[_num_text(c) for c in b] for b in self.e],
        }


def _num_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _mono_text(gen: str, k: int) -> str:
    return gen if k == 1 else f"{gen}^{k}"


def render_class(a: ChowClass) -> str:
    """``c0 + c1*h + ... + d1*e1 + d2*e1^2``; zero coefficients are skipped."""
    terms = []
    for k, c in enumerate(a.h):
        if c:
            terms.append((c, None if k == 0 else _mono_text("h", k)))
    for i, block in enumerate(a.e):
        for k, c in enumerate(block, start=1):
            if c:
                terms.append((c, _mono_text(f"e{i + 1}", k)))
    if not terms:
        return "0"
    out = []
    for j, (c, mono) in enumerate(terms):
        mag = abs(c)
        if mono is None:
            body = _num_text(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_num_text(mag)}*{mono}"
        if j == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def chow_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    a._check(b)
    n = a.ambient.n
    h = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a.h):
        if x:
            for j in range(n + 1 - i):
                h[i + j] += x * b.h[j]
    e = []
    a0, b0 = a.h[0], b.h[0]
    for ea, eb in zip(a.e, b.e):
        block = [a0 * y + b0 * x for x, y in zip(ea, eb)]
        # e^j * e^k = e^(j+k), block index k-1
        for j, x in enumerate(ea, start=1):
            if x:
                for k in range(1, n + 1 - j):
                    block[j + k - 1] += x * eb[k - 1]
        e.append(block)
    return ChowClass(a.ambient, h, e)


def inv_unit(a: ChowClass) -> ChowClass:
    """Inverse of a class with constant term 1 in the truncated ring."""
    if a.constant != 1:
        raise NotAUnitError(f"constant term of {a} is {a.constant}, not 1")
    # a = 1 + x with x nilpotent (x^(n+1) = 0): 1/a = sum (-x)^k
    x = a - 1
    result = ChowClass.one(a.ambient)
    power = ChowClass.one(a.ambient)
    for _ in range(a.ambient.n):
        power = power * (-x)
        result = result + power
    return result


def class_dual(a: ChowClass) -> ChowClass:
    """Multiply the codimension-p part by (-1)^p."""
    return ChowClass(
        a.ambient,
        [c if p % 2 == 0 else -c for p, c in enumerate(a.h)],
        [[c if k % 2 == 0 else -c for k, c in enumerate(b, start=1)] for b in a.e],
    )


@dataclass(frozen=True)
class LineBundleClass:
    divisor: ChowClass

    def __post_init__(self):
        if not isinstance(self.divisor, ChowClass):
            raise TypeError("divisor must be a ChowClass")
        if self.divisor != self.divisor.component(1):
            raise ValueError(f"line bundle divisor must have codimension 1, got {self.divisor}")

    @property
    def ambient(self) -> Ambient:
        return self.divisor.ambient

    def chern(self) -> ChowClass:
        return 1 + self.divisor

    @classmethod
    def O(cls, ambient: Ambient, d: int) -> "LineBundleClass":
        """Pullback of O(d) from P^n."""
        return cls(ChowClass.h_power(ambient, 1, d))


def class_tensor(a: ChowClass, L: LineBundleClass) -> ChowClass:
    """Divide the codimension-p part by c(L)^p."""
    if L.ambient != a.ambient:
        raise AmbientMismatchError(f"{a.ambient} vs {L.ambient}")
    inv = inv_unit(L.chern())
    result = ChowClass.zero(a.ambient)
    scale = ChowClass.one(a.ambient)
    for p in a.codims():
        result = result + a.component(p) * scale
        scale = scale * inv
    return result


def chern_dual(c: ChowClass) -> ChowClass:
    """Total Chern class of the dual sheaf from that of the sheaf."""
    if c.constant != 1:
        raise NotAUnitError(f"a total Chern class has constant term 1, got {c}")
    return class_dual(c)


def degree_int(a: ChowClass) -> Fraction:
    n = a.ambient.n
    sign = -1 if (n - 1) % 2 else 1
    return a.h[n] + sign * sum(b[n - 1] for b in a.e)


def pushforward(a: ChowClass) -> ChowClass:
    """Push a class on BlPt(P^n, m) down to P^n."""
    amb = a.ambient
    if not amb.is_blowup:
        raise AmbientMismatchError(f"pushforward needs a blowup ambient, got {amb}")
    n = amb.n
    h = list(a.h)
    sign = -1 if (n - 1) % 2 else 1
    h[n] += sign * sum(b[n - 1] for b in a.e)
    return ChowClass(amb.base, h)


def pullback(a: ChowClass, target: Ambient) -> ChowClass:
    if a.ambient.is_blowup:
        raise AmbientMismatchError(f"pullback starts from projective space, got {a.ambient}")
    if target.n != a.ambient.n:
        raise AmbientMismatchError(f"{a.ambient} vs {target}")
    return ChowClass(target, a.h)


def exceptional_tangent_correction(n: int) -> tuple[Fraction, ...]:
    """Coefficients of e^1..e^n in c(T Bl_p P^n) - pi^* c(T P^n).

    Obtained from the toric divisor product (1+h)(1+h-e)^n(1+e) under the ring
    relations; the result must be free of h.
    """
    amb = Ambient.blowup(n, 1)
    h = ChowClass.h_power(amb, 1)
    e = ChowClass.e_power(amb, 0, 1)
    toric = (1 + h) * (1 + h - e) ** n * (1 + e)
    delta = toric - (1 + h) ** (n + 1)
    if any(delta.h):
        raise ArithmeticError(f"exceptional correction has h-terms: {delta}")
    return delta.e[0]


def chern_tangent(ambient: Ambient) -> ChowClass:
    n = ambient.n
    h = [comb(n + 1, k) for k in range(n + 1)]
    if not ambient.is_blowup:
        return ChowClass(ambient, h)
    delta = exceptional_tangent_correction(n)
    return ChowClass(ambient, h, [delta] * ambient.m)


# expression calculator over the modeled rings

class ChowExprError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_CTOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


def parse_chow_expr(text: str, ambient: Ambient) -> ChowClass:
    """Evaluate an expression in ``h``, ``e1..em`` (``e`` when m = 1), with
    ``+ - * ^``, integer or ``p/q`` literals and ``inv(...)``."""
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _CTOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), pos))
        elif m.group(3) in "+-*^()/":
            tokens.append(("op", m.group(3), pos))
        else:
            raise ChowExprError(f"unexpected character {m.group(3)!r}", pos)
        pos = m.end()
    tokens.append(("end", None, len(text)))
    state = {"i": 0}

    def peek():
        return tokens[state["i"]]

    def take():
        tok = tokens[state["i"]]
        state["i"] += 1
        return tok

    def generator(name, p):
        if name == "h":
            return ChowClass.h_power(ambient, 1)
        if name == "e" and ambient.m == 1:
            return ChowClass.e_power(ambient, 0, 1)
        g = re.fullmatch(r"e(\d+)", name)
        if g and ambient.is_blowup and 1 <= int(g.group(1)) <= ambient.m:
            return ChowClass.e_power(ambient, int(g.group(1)) - 1, 1)
        raise ChowExprError(f"unknown generator {name!r} for {ambient}", p)

    def expr():
        a = term()
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            b = term()
            a = a + b if op == "+" else a - b
        return a

    def term():
        a = unary()
        while peek()[0] == "op" and peek()[1] == "*":
            take()
            a = a * unary()
        return a

    def unary():
        if peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            a = unary()
            return -a if op == "-" else a
        return power()

    def power():
        a = atom()
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            kind, val, p = take()
            if kind != "int":
                raise ChowExprError("exponent must be a nonnegative integer literal", p)
            a = a**val
        return a

    def atom():
        kind, val, p = take()
        if kind == "int":
            if peek()[0] == "op" and peek()[1] == "/":
                take()
                dk, dv, dp = take()
                if dk != "int" or dv == 0:
                    raise ChowExprError("bad rational literal", dp)
                return ChowClass.one(ambient) * Fraction(val, dv)
            return ChowClass.one(ambient) * val
        if kind == "ident":
            if val == "inv" and peek()[0] == "op" and peek()[1] == "(":
                take()
                inner = expr()
                close = take()
                if close[:2] != ("op", ")"):
                    raise ChowExprError("expected ')'", close[2])
                return inv_unit(inner)
            return generator(val, p)
        if kind == "op" and val == "(":
            inner = expr()
            close = take()
            if close[:2] != ("op", ")"):
                raise ChowExprError("expected ')'", close[2])
            return inner
        raise ChowExprError("unexpected end of input" if kind == "end" else f"unexpected token {val!r}", p)

    result = expr()
    kind, val, p = peek()
    if kind != "end":
        raise ChowExprError(f"unexpected token {val!r}", p)
    return result
