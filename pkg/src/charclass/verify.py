"""Executable identity checks: both sides computed, compared as exact vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .chow import Ambient, ChowClass, chern_tangent, pushforward
from .classes import (
    HypersurfaceSpec,
    chi_complement_routes,
    csm_hypersurface,
    csm_nc_union,
    csm_smooth_ci,
    euler,
    log_chern_dual,
    mu_correction,
    multilog_chern_dual,
    nc_log_chern_dual,
)
from .milnor import SingularityData


class HypothesisError(ValueError):
    """Parameters outside the range where the checked theorem applies."""


@dataclass(frozen=True)
class VerificationReport:
    scenario: str
    lhs: ChowClass
    rhs: ChowClass
    steps: dict = field(default_factory=dict)

    @property
    def diff(self) -> ChowClass:
        return self.lhs - self.rhs

    @property
    def equal(self) -> bool:
        return self.diff.is_zero() and all(self.steps.values())

    def to_json(self) -> dict:
        return {
            "scenario": self.scenario,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "equal": self.equal,
            "diff": self.diff.to_json(),
            "steps": dict(self.steps),
        }

    def line(self) -> str:
        status = "ok" if self.equal else "MISMATCH"
        return f"{self.scenario:<40} {str(self.lhs):<28} {str(self.rhs):<28} {status}"


def _h(ambient: Ambient, k: int, c=1) -> ChowClass:
    return ChowClass.h_power(ambient, k, c)


def verify_thm12_point_blowup(n: int) -> VerificationReport:
    """X = a point of P^n, resolved by blowing it up; the exceptional divisor is smooth."""
    if n < 2:
        raise HypothesisError("need n >= 2")
    P = Ambient.projective(n)
    B = Ambient.blowup(n, 1)
    E = HypersurfaceSpec(B, ChowClass.e_power(B, 0, 1))
    lhs = ChowClass.point(P)
    log_part = log_chern_dual(E)
    correction = mu_correction(E)
    rhs = chern_tangent(P) - pushforward(log_part) + pushforward(correction)
    # upstairs identity: log class minus correction is c_*(1 of the complement of E)
    csm_E = csm_hypersurface(E)
    complement_up = chern_tangent(B) - csm_E
    steps = {
        "complement_upstairs": log_part - correction == complement_up,
        # naturality: pi_* c_SM(E) = chi(P^(n-1)) [pt]
        "pushforward_exceptional": pushforward(csm_E) == ChowClass.point(P) * n,
        "complement_downstairs": pushforward(complement_up) == chern_tangent(P) - lhs,
    }
    return VerificationReport(f"thm12-blowup n={n}", lhs, rhs, steps)


def verify_thm12_identity_map(n: int, d: int, sing: SingularityData | None = None) -> VerificationReport:
    """pi = id; isolated singular points need n >= 3 for codim Sing >= 3."""
    sing = sing or SingularityData.empty()
    if n < 2 or (len(sing) and n < 3):
        raise HypothesisError("isolated singularities have codimension >= 3 only for n >= 3")
    P = Ambient.projective(n)
    spec = HypersurfaceSpec.of_degree(P, d, sing)
    lhs = csm_hypersurface(spec)
    log_part = log_chern_dual(spec)
    correction = mu_correction(spec)
    rhs = chern_tangent(P) - log_part + correction
    steps = {"complement_identity": log_part - correction == chern_tangent(P) - lhs}
    mus = "+".join(str(sp.milnor.mu) for sp in sing) or "smooth"
    return VerificationReport(f"thm12-identity n={n} d={d} mu={mus}", lhs, rhs, steps)


def verify_aluffi_nc(n: int, degrees: Sequence[int]) -> VerificationReport:
    P = Ambient.projective(n)
    lhs = csm_nc_union(P, degrees)
    rhs = chern_tangent(P) - nc_log_chern_dual(P, degrees)
    return VerificationReport(f"aluffi-nc n={n} d={list(degrees)}", lhs, rhs)


def verify_multilog(n: int, d1: int, d2: int) -> VerificationReport:
    P = Ambient.projective(n)
    lhs = csm_smooth_ci(P, [d1, d2])
    rhs = (chern_tangent(P) - multilog_chern_dual(P, d1, d2)
           + csm_smooth_ci(P, [d1, d2]) - csm_nc_union(P, [d1, d2]))
    return VerificationReport(f"multilog n={n} d1={d1} d2={d2}", lhs, rhs)


def verify_cor13(n: int, d: int, sing: SingularityData | None = None) -> VerificationReport:
    """Both chi(P^n minus X) routes, reported as multiples of the point class."""
    sing = sing or SingularityData.empty()
    P = Ambient.projective(n)
    spec = HypersurfaceSpec.of_degree(P, d, sing)
    via_log, via_csm = chi_complement_routes(spec)
    steps = {"chi_hypersurface": euler(csm_hypersurface(spec)) == P.euler() - via_csm}
    mus = "+".join(str(sp.milnor.mu) for sp in sing) or "smooth"
    return VerificationReport(f"cor13 n={n} d={d} mu={mus}", ChowClass.point(P) * via_log,
                              ChowClass.point(P) * via_csm, steps)


SCENARIOS = {
    "thm12-blowup": verify_thm12_point_blowup,
    "thm12-identity": verify_thm12_identity_map,
    "aluffi-nc": verify_aluffi_nc,
    "multilog": verify_multilog,
    "cor13": verify_cor13,
}


def default_grid() -> list[VerificationReport]:
    """The fixture grid used by ``verify all``."""
    from .fixtures import FIXTURES

    reports = [verify_thm12_point_blowup(n) for n in range(2, 6)]
    quartic = FIXTURES["nodal_quartic"].spec()
    cubic3 = FIXTURES["nodal_cubic_threefold"].spec()
    reports.append(verify_thm12_identity_map(3, 4, quartic.singularities))
    reports.append(verify_thm12_identity_map(3, 2))
    reports.append(verify_thm12_identity_map(4, 3, cubic3.singularities))
    reports += [verify_aluffi_nc(n, [d1, d2]) for n in (2, 3) for d1 in (1, 2) for d2 in (1, 2)]
    reports += [verify_multilog(n, d1, d2) for n in (2, 3, 4) for d1 in (1, 2, 3) for d2 in (1, 2, 3)]
    reports.append(verify_cor13(3, 4, quartic.singularities))
    reports.append(verify_cor13(2, 3, FIXTURES["nodal_cubic"].spec().singularities))
    reports.append(verify_cor13(3, 2))
    return reports
