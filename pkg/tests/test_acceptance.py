"""Acceptance gate: nine exact checks, one PASS/FAIL line each.

Run alone with ``pytest tests/test_acceptance.py -v -s`` or
``python3 tests/test_acceptance.py``.  Every comparison is between exact
rationals; nothing is rounded.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import comb

import pytest

from charclass.chow import (
    Ambient,
    ChowClass,
    LineBundleClass,
    chern_tangent,
    class_dual,
    class_tensor,
    degree_int,
    pullback,
    pushforward,
)
from charclass.classes import (
    chi_complement_routes,
    csm_hypersurface,
    csm_smooth_ci,
    euler,
    multilog_chern_dual_unchecked,
    nc_log_chern_dual,
    smooth_hypersurface_euler,
)
from charclass.fixtures import FIXTURES
from charclass.milnor import milnor_at
from charclass.poly import parse_poly
from charclass.verify import verify_multilog, verify_thm12_identity_map, verify_thm12_point_blowup

SEED = 20240517
TIME_BUDGET = 10.0


def _point(n):
    return ChowClass.point(Ambient.projective(n))


def check_point_blowup():
    for n in (2, 3, 4, 5):
        r = verify_thm12_point_blowup(n)
        if not (r.equal and r.lhs == r.rhs == _point(n)):
            return False, f"n={n}: {r.lhs} vs {r.rhs}"
    return True, "n=2..5 both sides h^n"


def check_nodal_quartic():
    spec = FIXTURES["nodal_quartic"].spec()
    P3 = spec.ambient
    expected = ChowClass(P3, [0, 4, 0, 23])
    r = verify_thm12_identity_map(3, 4, spec.singularities)
    direct = csm_hypersurface(spec)
    # oracle: smooth quartic surface has chi 24, the node takes away mu = 1
    oracle = smooth_hypersurface_euler(3, 4) - spec.singularities.total_mu
    ok = r.equal and r.lhs == r.rhs == direct == expected and euler(direct) == oracle == 23
    return ok, f"csm={direct}, chi={euler(direct)}"


def check_plane_cubics():
    results = {}
    for name, mu_expected, chi_expected in [("nodal_cubic", 1, 1), ("cuspidal_cubic", 2, 2)]:
        spec = FIXTURES[name].spec()
        mu = spec.singularities.total_mu
        # genus-degree: smooth cubic has chi 0, and (-1)^2 mu is added back
        oracle = 0 + mu
        results[name] = (mu, euler(csm_hypersurface(spec)), oracle)
        if not (mu == mu_expected and results[name][1] == oracle == chi_expected):
            return False, f"{name}: {results[name]}"
    return True, "nodal chi=1, cuspidal chi=2"


def check_complement_two_routes():
    quartic = chi_complement_routes(FIXTURES["nodal_quartic"].spec())
    cubic = chi_complement_routes(FIXTURES["nodal_cubic"].spec())
    ok = quartic == (-19, -19) and cubic == (2, 2)
    return ok, f"P3 minus quartic {quartic}, P2 minus cubic {cubic}"


GRID = [(n, d1, d2) for n in (2, 3, 4) for d1 in (1, 2, 3) for d2 in (1, 2, 3)]


def check_multilog_identity():
    bad = [g for g in GRID if not verify_multilog(*g).equal]
    r = verify_multilog(2, 1, 1)
    hand = r.lhs == r.rhs == _point(2)
    return not bad and hand, f"{len(GRID) - len(bad)}/{len(GRID)} equal, (2,1,1) gives h^2: {hand}"


def check_multilog_vs_residue():
    bad = []
    for n, d1, d2 in GRID:
        P = Ambient.projective(n)
        if multilog_chern_dual_unchecked(P, d1, d2) != nc_log_chern_dual(P, [d1, d2]):
            bad.append((n, d1, d2))
    return not bad, f"{len(GRID) - len(bad)}/{len(GRID)} equal"


def _qh_mu(exponents):
    out = Fraction(1)
    for a in exponents:
        out *= Fraction(a) - 1  # 1/w - 1 with w = 1/a
    return out


def _unimodular(n, rng):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(4 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


def check_milnor_table():
    rng = random.Random(SEED)
    table = [("x^2+y^2", "xy", [2, 2]), ("x^2-y^3", "xy", [2, 3]), ("x^2+y^5", "xy", [2, 5]),
             ("x^3+y^3", "xy", [3, 3]), ("x^2+y^2+z^2", "xyz", [2, 2, 2])]
    table += [(f"x^2+y^{k + 1}", "xy", [2, k + 1]) for k in range(1, 7)]
    for text, names, exps in table:
        f = parse_poly(text, list(names))
        r = milnor_at(f)
        moved = milnor_at(f.linear_change(_unimodular(len(names), rng)))
        if not (r.certified and moved.certified and r.mu == moved.mu == _qh_mu(exps)):
            return False, f"{text}: mu={r.mu} moved={moved.mu} oracle={_qh_mu(exps)}"
    return True, f"{len(table)} germs match and are coordinate-invariant"


def _smooth_euler_series(n, d):
    return sum(comb(n + 1, k) * d * (-d) ** (n - 1 - k) for k in range(n))


def check_smooth_grid():
    for n in (2, 3, 4):
        for d in range(1, 6):
            if euler(csm_smooth_ci(Ambient.projective(n), [d])) != _smooth_euler_series(n, d):
                return False, f"(n,d)=({n},{d})"
    anchors = {(2, 3): 0, (3, 2): 4, (3, 4): 24}
    for (n, d), chi in anchors.items():
        if euler(csm_smooth_ci(Ambient.projective(n), [d])) != chi:
            return False, f"anchor {(n, d)}"
    ci = euler(csm_smooth_ci(Ambient.projective(3), [2, 3]))
    return ci == -6, f"15 grid points, anchors ok, (2,3) curve chi={ci}"


def _random_class(amb, rng):
    def q():
        return Fraction(rng.randint(-6, 6), rng.randint(1, 3))

    return ChowClass(amb, [q() for _ in range(amb.n + 1)], [[q() for _ in range(amb.n)] for _ in range(amb.m)])


def check_structure():
    rng = random.Random(SEED)
    ambients = [Ambient.projective(n) for n in (1, 2, 3, 4)]
    ambients += [Ambient.blowup(n, m) for n in (2, 3, 4) for m in (1, 2)]
    for _ in range(40):
        amb = rng.choice(ambients)
        a, b, c = (_random_class(amb, rng) for _ in range(3))
        one = ChowClass.one(amb)
        ring = (a * b) * c == a * (b * c) and a * b == b * a and a * (b + c) == a * b + a * c and a * one == a
        d1, d2 = rng.randint(-4, 4), rng.randint(-4, 4)
        tensor = class_tensor(class_tensor(a, LineBundleClass.O(amb, d1)), LineBundleClass.O(amb, d2)) \
            == class_tensor(a, LineBundleClass.O(amb, d1 + d2))
        if not (ring and class_dual(class_dual(a)) == a and tensor):
            return False, f"ring/dual/tensor on {amb}"
        if amb.is_blowup:
            base = _random_class(amb.base, rng)
            if pushforward(pullback(base, amb) * b) != base * pushforward(b):
                return False, f"projection formula on {amb}"
            if degree_int(pushforward(b)) != degree_int(b):
                return False, f"degree under pushforward on {amb}"
    for n in range(2, 6):
        B = Ambient.blowup(n, 1)
        h, e = ChowClass.h_power(B, 1), ChowClass.e_power(B, 0, 1)
        delta = (1 + h) * (1 + h - e) ** n * (1 + e) - (1 + h) ** (n + 1)
        if any(delta.h):
            return False, f"correction has h terms for n={n}"
        for m in (1, 2, 3):
            if degree_int(chern_tangent(Ambient.blowup(n, m))) != (n + 1) + m * (n - 1):
                return False, f"top Chern degree n={n} m={m}"
    return True, f"40 random draws (seed {SEED}), blowup Euler grid n=2..5 m=1..3"


CRITERIA = [
    ("1 point blowup identity", check_point_blowup),
    ("2 nodal quartic identity map", check_nodal_quartic),
    ("3 singular plane cubics", check_plane_cubics),
    ("4 complement two routes", check_complement_two_routes),
    ("5 multi-logarithmic identity", check_multilog_identity),
    ("6 multilog route = residue route", check_multilog_vs_residue),
    ("7 Milnor oracle table", check_milnor_table),
    ("8 smooth hypersurface chi grid", check_smooth_grid),
    ("9 structural properties", check_structure),
]

_elapsed: dict[str, float] = {}


def _run(label, check):
    start = time.perf_counter()
    ok, detail = check()
    _elapsed[label] = time.perf_counter() - start
    return ok, f"{'PASS' if ok else 'FAIL'}  {label}: {detail} ({_elapsed[label]:.2f}s)"


@pytest.mark.parametrize("label, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, check, capsys):
    ok, line = _run(label, check)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def test_total_time_within_budget(capsys):
    missing = [label for label, check in CRITERIA if label not in _elapsed]
    for label, check in CRITERIA:
        if label in missing:
            _run(label, check)
    total = sum(_elapsed.values())
    with capsys.disabled():
        print(f"\n{'PASS' if total < TIME_BUDGET else 'FAIL'}  total time {total:.2f}s (budget {TIME_BUDGET:.0f}s)")
    assert total < TIME_BUDGET


if __name__ == "__main__":
    import sys

    failures = 0
    for label, check in CRITERIA:
        ok, line = _run(label, check)
        print(line)
        failures += not ok
    print(f"total {sum(_elapsed.values()):.2f}s")
    sys.exit(1 if failures else 0)
