"""Local Milnor numbers by exact linear algebra on truncated local algebras.

For an affine germ f with a critical point at the origin, the truncation at
level D keeps polynomials of degree < D.  The span of the truncated products
x^a * df/dx_i gives mu_D = #monomials - rank.  The level is certified once
every monomial of degree D-1 lies in that span: then m^(D-1) is contained in
the Jacobian ideal of the local ring (Nakayama) and mu_D is exact.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .groebner import GroebnerBudgetExceeded, quotient_dimension
from .poly import Poly, dehomogenize, gradient, monomials_below, monomials_of_degree, translate_to_origin

DEFAULT_MAX_CUTOFF = 32


def default_max_cutoff() -> int:
    """``CHARCLASS_MAX_CUTOFF`` from the environment, else 32."""
    value = os.environ.get("CHARCLASS_MAX_CUTOFF")
    return int(value) if value else DEFAULT_MAX_CUTOFF


class SingularityPreconditionError(ValueError):
    """A mathematical precondition on a claimed singular point failed."""


class NotOnHypersurfaceError(SingularityPreconditionError):
    pass


class NotSingularError(SingularityPreconditionError):
    pass


class NonIsolatedSingularityError(SingularityPreconditionError):
    pass


class UncertifiedMilnorError(SingularityPreconditionError):
    pass


@dataclass(frozen=True)
class MilnorResult:
    mu: int
    cutoff: int
    certified: bool

    def to_json(self) -> dict:
        return {"mu": self.mu, "cutoff": self.cutoff, "certified": self.certified}


def _as_point(p: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in p)


def parse_point(text: str) -> tuple[Fraction, ...]:
    """``"0:0:1"`` or ``"1/2:0:1"`` -> homogeneous rational coordinates."""
    try:
        return tuple(Fraction(c.strip()) for c in text.split(":"))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad point {text!r}: {exc}") from None


def parse_points(text: str) -> list[tuple[Fraction, ...]]:
    """Semicolon-separated list; the empty string means no points."""
    return [parse_point(chunk) for chunk in text.split(";") if chunk.strip()]


def format_point(p: Sequence[Fraction]) -> str:
    return ":".join(str(c) for c in p)


def affine_point(p: Sequence, chart: int) -> tuple[Fraction, ...]:
    p = _as_point(p)
    if p[chart] == 0:
        raise ValueError(f"point {format_point(p)} is not in chart {chart}")
    return tuple(c / p[chart] for k, c in enumerate(p) if k != chart)


def verify_singular_point(f: Poly, p: Sequence, chart: int | None = None) -> int:
    """Check that ``p`` is a singular point of the projective hypersurface f = 0.

    Returns the chart index (first nonzero coordinate unless given).
    """
    p = _as_point(p)
    if len(p) != f.nvars:
        raise ValueError(f"point {format_point(p)} has {len(p)} coordinates, expected {f.nvars}")
    if not any(p):
        raise ValueError("the zero vector is not a projective point")
    if chart is None:
        chart = next(k for k, c in enumerate(p) if c)
    elif p[chart] == 0:
        raise ValueError(f"coordinate {chart} of {format_point(p)} is zero; pick another chart")
    g = dehomogenize(f, chart)
    q = affine_point(p, chart)
    if g.evaluate(q) != 0:
        raise NotOnHypersurfaceError(f"point {format_point(p)} is not on {f}")
    if any(d.evaluate(q) != 0 for d in gradient(g)):
        raise NotSingularError(f"point {format_point(p)} is not singular on {f}")
    return chart


def local_germ(f: Poly, p: Sequence, chart: int) -> Poly:
    """Dehomogenize in ``chart`` and move the point to the origin."""
    return translate_to_origin(dehomogenize(f, chart), affine_point(p, chart))


class _Echelon:
    """Rows over Q kept in semi-echelon form, pivot = smallest column index."""

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def _reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = dict(row)
        done: dict[int, Fraction] = {}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                done.update(row)
                return done
            factor = row[c]
            for k, v in piv.items():
                s = row.get(k, 0) - factor * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
        return done

    def add(self, row: dict[int, Fraction]) -> bool:
        r = self._reduce(row)
        if not r:
            return False
        c = min(r)
        lead = r[c]
        self.pivots[c] = {k: v / lead for k, v in r.items()}
        return True

    def contains(self, row: dict[int, Fraction]) -> bool:
        return not self._reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _level(f: Poly, partials: list[Poly], D: int) -> tuple[int, bool]:
    n = f.nvars
    monos = monomials_below(n, D)
    index = {m: k for k, m in enumerate(monos)}
    ech = _Echelon()
    for g in partials:
        for alpha in monos:
            row = {}
            for exp, c in g._terms.items():
                e = tuple(a + b for a, b in zip(exp, alpha))
                k = index.get(e)
                if k is not None:
                    row[k] = c
            if row:
                ech.add(row)
    mu = len(monos) - ech.rank
    certified = all(ech.contains({index[m]: Fraction(1)}) for m in monomials_of_degree(n, D - 1))
    return mu, certified


def milnor_at(f_affine: Poly, max_cutoff: int | None = None) -> MilnorResult:
    """Milnor number of the germ of ``f_affine`` at the origin."""
    if max_cutoff is None:
        max_cutoff = default_max_cutoff()
    partials = gradient(f_affine)
    origin = (0,) * f_affine.nvars
    if f_affine.evaluate(origin) != 0:
        raise NotOnHypersurfaceError(f"{f_affine} does not vanish at the origin")
    if any(d.evaluate(origin) != 0 for d in partials):
        raise NotSingularError(f"the origin is a smooth point of {f_affine}")
    for D in range(2, max_cutoff + 1):
        mu, certified = _level(f_affine, partials, D)
        if certified:
            return MilnorResult(mu, D, True)
    raise NonIsolatedSingularityError(
        f"possibly non-isolated singularity at this point: no certificate up to cutoff {max_cutoff}")


def total_milnor_affine(f_affine: Poly, max_cutoff: int | None = None) -> int:
    """dim Q[x]/(df/dx_1, ..., df/dx_k): the sum of Milnor numbers over all
    affine critical points of f (including those off the hypersurface)."""
    if max_cutoff is None:
        max_cutoff = default_max_cutoff()
    return _quotient_or_raise(gradient(f_affine), max_cutoff)


def total_milnor_on_hypersurface(f_affine: Poly, power: int, max_cutoff: int | None = None) -> int:
    """dim Q[x]/(J + f^power).

    Critical points off f = 0 drop out because f is a unit there.  At a
    singular point p of f = 0 whose certificate level is D, f^(D-1) already
    lies in the local Jacobian ideal, so ``power >= D-1`` makes the local
    contribution equal to mu_p.  A missed singular point contributes >= 1.
    """
    if max_cutoff is None:
        max_cutoff = default_max_cutoff()
    return _quotient_or_raise(gradient(f_affine) + [f_affine ** max(power, 1)],
                              max_cutoff * max(power, 1))


def _quotient_or_raise(gens: list[Poly], max_degree: int) -> int:
    try:
        dim = quotient_dimension(gens, max_degree=max_degree)
    except GroebnerBudgetExceeded:
        dim = None
    if dim is None:
        raise NonIsolatedSingularityError("non-isolated singular locus in this chart")
    return dim


@dataclass(frozen=True)
class SingularPoint:
    point: tuple[Fraction, ...]
    chart: int
    milnor: MilnorResult

    def to_json(self) -> dict:
        return {"point": format_point(self.point), "chart": self.chart, **self.milnor.to_json()}


@dataclass(frozen=True)
class SingularityData:
    points: tuple[SingularPoint, ...] = field(default_factory=tuple)

    def __post_init__(self):
        seen = set()
        for sp in self.points:
            lead = next(x for x in sp.point if x)
            scaled = tuple(c / lead for c in sp.point)
            if scaled in seen:
                raise ValueError(f"duplicate singular point {format_point(sp.point)}")
            seen.add(scaled)

    @classmethod
    def empty(cls) -> "SingularityData":
        return cls(())

    @classmethod
    def from_milnor_numbers(cls, mus: Sequence[int], nvars: int | None = None) -> "SingularityData":
        """Class-level data only: certified Milnor numbers at placeholder points."""
        nvars = nvars or 2
        pts = []
        for k, mu in enumerate(mus):
            p = tuple(Fraction(k + 1 if j == 0 else int(j == 1)) for j in range(nvars))
            pts.append(SingularPoint(p, 0, MilnorResult(int(mu), 0, True)))
        return cls(tuple(pts))

    @classmethod
    def from_polynomial(cls, f: Poly, points: Sequence[Sequence], charts: Sequence[int | None] | None = None,
                        max_cutoff: int | None = None) -> "SingularityData":
        """Verify each point is singular on f = 0 and compute its Milnor number."""
        charts = list(charts) if charts is not None else [None] * len(points)
        out = []
        for p, ch in zip(points, charts):
            p = _as_point(p)
            chart = verify_singular_point(f, p, ch)
            out.append(SingularPoint(p, chart, milnor_at(local_germ(f, p, chart), max_cutoff)))
        return cls(tuple(out))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def total_mu(self) -> int:
        return sum(sp.milnor.mu for sp in self.points)

    def all_certified(self) -> bool:
        return all(sp.milnor.certified for sp in self.points)

    def to_json(self) -> list:
        return [sp.to_json() for sp in self.points]


def check_complete(f: Poly, sing: SingularityData, max_cutoff: int | None = None) -> dict[int, tuple[int, int]]:
    """Compare supplied Milnor numbers with the chart-wise global count.

    Runs over every coordinate chart (together they cover P^n).  Returns
    ``{chart: (supplied, found)}``; the list is complete iff they agree in
    every chart.
    """
    power = max([sp.milnor.cutoff - 1 for sp in sing] + [1])
    report = {}
    for chart in range(f.nvars):
        g = dehomogenize(f, chart)
        supplied = sum(sp.milnor.mu for sp in sing if sp.point[chart] != 0)
        found = total_milnor_on_hypersurface(g, power, max_cutoff)
        report[chart] = (supplied, found)
    return report
