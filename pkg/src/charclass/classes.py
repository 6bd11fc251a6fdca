"""Characteristic classes of hypersurfaces and small complete intersections.

Every class supported on a subvariety is represented by its image in the Chow
ring of the ambient, so the identities below are plain vector equalities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chow import (
    Ambient,
    ChowClass,
    LineBundleClass,
    chern_dual,
    chern_tangent,
    class_dual,
    class_tensor,
    degree_int,
    inv_unit,
)
from .milnor import SingularityData, UncertifiedMilnorError
from .poly import Poly


class IdentityMismatchError(ArithmeticError):
    """Two independent routes to the same quantity disagreed."""


@dataclass(frozen=True)
class HypersurfaceSpec:
    ambient: Ambient
    divisor_class: ChowClass
    singularities: SingularityData = field(default_factory=SingularityData.empty)
    polynomial: Poly | None = None

    def __post_init__(self):
        if self.divisor_class.ambient != self.ambient:
            raise ValueError(f"divisor lives on {self.divisor_class.ambient}, not {self.ambient}")
        if self.divisor_class != self.divisor_class.component(1):
            raise ValueError(f"divisor class must have codimension 1: {self.divisor_class}")
        self.divisor_class.require_integral("divisor class")

    @classmethod
    def of_degree(cls, ambient: Ambient, d: int, singularities: SingularityData | None = None,
                  polynomial: Poly | None = None) -> "HypersurfaceSpec":
        return cls(ambient, ChowClass.h_power(ambient, 1, d),
                   singularities or SingularityData.empty(), polynomial)

    @classmethod
    def from_polynomial(cls, f: Poly, points: Sequence[Sequence] = (), charts=None,
                        max_cutoff: int | None = None) -> "HypersurfaceSpec":
        """Hypersurface f = 0 in P^(k-1), k = number of variables."""
        if not f.is_homogeneous() or f.is_zero():
            raise ValueError(f"{f} is not a nonzero homogeneous polynomial")
        ambient = Ambient.projective(f.nvars - 1)
        sing = SingularityData.from_polynomial(f, points, charts, max_cutoff)
        return cls.of_degree(ambient, f.degree(), sing, f)

    @property
    def line_bundle(self) -> LineBundleClass:
        return LineBundleClass(self.divisor_class)

    @property
    def dim(self) -> int:
        return self.ambient.n - 1


def fulton_divisor(spec: HypersurfaceSpec) -> ChowClass:
    """c(TM) * [X] / (1 + X), pushed into the ambient."""
    D = spec.divisor_class
    if D.is_zero():
        raise ValueError("the divisor class must be nonzero")
    c = chern_tangent(spec.ambient) * D * inv_unit(1 + D)
    return c.require_integral("Fulton class")


def mu_class_isolated(sing: SingularityData, ambient: Ambient) -> ChowClass:
    """Sum of Milnor number times point class."""
    if not sing.all_certified():
        raise UncertifiedMilnorError("every Milnor number must be certified")
    return ChowClass.point(ambient) * sing.total_mu


def mu_correction(spec: HypersurfaceSpec) -> ChowClass:
    """c(L)^dim X * (mu^dual tensor L), through the general operators."""
    L = spec.line_bundle
    mu = mu_class_isolated(spec.singularities, spec.ambient)
    return L.chern() ** spec.dim * class_tensor(class_dual(mu), L)


def mu_correction_isolated(spec: HypersurfaceSpec) -> ChowClass:
    """The same correction for isolated points: (-1)^dim M * sum m_i [x_i]."""
    mu = mu_class_isolated(spec.singularities, spec.ambient)
    return mu if spec.ambient.n % 2 == 0 else -mu


def csm_hypersurface(spec: HypersurfaceSpec) -> ChowClass:
    if spec.divisor_class.is_zero():
        # empty hypersurface
        if len(spec.singularities):
            raise ValueError("an empty hypersurface has no singular points")
        return ChowClass.zero(spec.ambient)
    general = mu_correction(spec)
    isolated = mu_correction_isolated(spec)
    if general != isolated:
        raise IdentityMismatchError(f"mu-correction routes disagree: {general} vs {isolated}")
    return (fulton_divisor(spec) + general).require_integral("CSM class")


def csm_smooth_ci(ambient: Ambient, degrees: Sequence[int]) -> ChowClass:
    """CSM class of a smooth complete intersection of one or two hypersurfaces."""
    if ambient.is_blowup:
        raise ValueError("complete intersections are modeled in projective space only")
    if not 1 <= len(degrees) <= 2:
        raise ValueError("one or two degrees are supported")
    if any(d <= 0 for d in degrees):
        raise ValueError("degrees must be positive")
    c = chern_tangent(ambient)
    for d in degrees:
        D = ChowClass.h_power(ambient, 1, d)
        c = c * D * inv_unit(1 + D)
    return c.require_integral("CSM class")


def csm_nc_union(ambient: Ambient, degrees: Sequence[int]) -> ChowClass:
    """Inclusion-exclusion: 1_{D1 u D2} = 1_D1 + 1_D2 - 1_{D1 n D2}."""
    d1, d2 = degrees
    return csm_smooth_ci(ambient, [d1]) + csm_smooth_ci(ambient, [d2]) - csm_smooth_ci(ambient, [d1, d2])


def log_chern_dual(spec: HypersurfaceSpec) -> ChowClass:
    """c(Omega^1(log X)^dual) = c(TM) / (1 + X)."""
    return (chern_tangent(spec.ambient) * inv_unit(1 + spec.divisor_class)).require_integral(
        "logarithmic Chern class")


def nc_log_chern_dual(ambient: Ambient, degrees: Sequence[int]) -> ChowClass:
    """Residue-sequence route for a normal crossing union of degree-d_i components."""
    c = chern_tangent(ambient)
    for d in degrees:
        c = c * inv_unit(1 + ChowClass.h_power(ambient, 1, d))
    return c.require_integral("logarithmic Chern class")


def multilog_chern_dual_unchecked(ambient: Ambient, d1: int, d2: int) -> ChowClass:
    """Sum-of-sheaves route: c(Omega(D1)) c(Omega(D2)) / c(Omega), then dualized."""
    omega = chern_dual(chern_tangent(ambient))
    with_poles = []
    for d in (d1, d2):
        c_O_D = inv_unit(1 - ChowClass.h_power(ambient, 1, d))
        with_poles.append(omega * c_O_D)
    c_sum = with_poles[0] * with_poles[1] * inv_unit(omega)
    return chern_dual(c_sum)


def multilog_chern_dual(ambient: Ambient, d1: int, d2: int) -> ChowClass:
    c = multilog_chern_dual_unchecked(ambient, d1, d2)
    residue = nc_log_chern_dual(ambient, [d1, d2])
    if c != residue:
        raise IdentityMismatchError(f"multi-log route {c} differs from residue route {residue}")
    return c.require_integral("multi-logarithmic Chern class")


def euler(c: ChowClass) -> int:
    """Degree of the zero-dimensional part."""
    deg = degree_int(c.component(c.ambient.n))
    if deg.denominator != 1:
        raise ArithmeticError(f"non-integral degree {deg}")
    return int(deg)


def chi_complement_routes(spec: HypersurfaceSpec) -> tuple[int, int]:
    """(log-Chern route, additivity route) for chi(M \\ X)."""
    n = spec.ambient.n
    sign = -1 if n % 2 == 0 else 1  # (-1)^(n+1)
    via_log = euler(log_chern_dual(spec)) + sign * spec.singularities.total_mu
    via_csm = euler(chern_tangent(spec.ambient)) - euler(csm_hypersurface(spec))
    return via_log, via_csm


def chi_complement(spec: HypersurfaceSpec) -> int:
    via_log, via_csm = chi_complement_routes(spec)
    if via_log != via_csm:
        raise IdentityMismatchError(f"chi of complement: {via_log} (log route) vs {via_csm} (CSM route)")
    return via_log


def hypersurface_report(spec: HypersurfaceSpec) -> dict:
    csm = csm_hypersurface(spec)
    return {
        "ambient": str(spec.ambient),
        "divisor": str(spec.divisor_class),
        "polynomial": None if spec.polynomial is None else str(spec.polynomial),
        "singularities": spec.singularities.to_json(),
        "fulton": fulton_divisor(spec).to_json(),
        "mu_class": mu_class_isolated(spec.singularities, spec.ambient).to_json(),
        "csm": csm.to_json(),
        "euler": euler(csm),
        "chi_complement": chi_complement(spec),
    }


def smooth_hypersurface_euler(n: int, d: int) -> int:
    """Closed form: chi = ((1-d)^(n+1) - 1) / d + n + 1.

    Coefficient extraction from d*h*(1+h)^(n+1)/(1+d*h), done in plain integers.
    """
    value = Fraction((1 - d) ** (n + 1) - 1, d) + n + 1
    assert value.denominator == 1
    return int(value)
