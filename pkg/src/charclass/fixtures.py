"""Named hypersurfaces with known rational singular points.

Each entry was checked to have exactly the listed singular points (the
completeness test in ``tests/test_fixtures.py`` re-checks this chart by chart).
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import HypersurfaceSpec
from .poly import Poly, parse_poly


@dataclass(frozen=True)
class Fixture:
    name: str
    variables: tuple[str, ...]
    text: str
    points: tuple[str, ...]
    euler: int  # known topological Euler characteristic of the hypersurface

    @property
    def poly(self) -> Poly:
        return parse_poly(self.text, self.variables)

    def spec(self, max_cutoff: int | None = None) -> HypersurfaceSpec:
        from .milnor import parse_point

        return HypersurfaceSpec.from_polynomial(self.poly, [parse_point(p) for p in self.points],
                                                max_cutoff=max_cutoff)


FIXTURES = {
    f.name: f
    for f in [
        # cubic curves: chi = 0 (smooth) + mu
        Fixture("nodal_cubic", ("x", "y", "z"), "y^2*z - x^3 - x^2*z", ("0:0:1",), 1),
        Fixture("cuspidal_cubic", ("x", "y", "z"), "x^2*z - y^3", ("0:0:1",), 2),
        Fixture("smooth_cubic_curve", ("x", "y", "z"), "x^3 + y^3 + z^3", (), 0),
        Fixture("smooth_conic", ("x", "y", "z"), "x^2 + y^2 + z^2", (), 2),
        # surfaces in P^3
        Fixture("nodal_quartic", ("x", "y", "z", "w"), "w^2*(x^2 + y^2 + z^2) + x^4 + y^4 + z^4",
                ("0:0:0:1",), 23),
        Fixture("smooth_quadric", ("x", "y", "z", "w"), "x*y - z*w", (), 4),
        Fixture("quadric_cone", ("x", "y", "z", "w"), "x^2 + y^2 - z^2", ("0:0:0:1",), 3),
        Fixture("nodal_cubic_surface", ("x", "y", "z", "w"), "w*(x^2 + y^2 + z^2) + x^3 + y^3 + z^3",
                ("0:0:0:1",), 8),
        # threefold in P^4
        Fixture("nodal_cubic_threefold", ("x", "y", "z", "w", "v"),
                "v*(x^2 + y^2 + z^2 + w^2) + x^3 + y^3 + z^3 + w^3", ("0:0:0:0:1",), -5),
    ]
}


def standard_nodal(n: int, d: int) -> Poly:
    """x_n^(d-2) * (x_0^2 + ... + x_(n-1)^2) + x_0^d + ... + x_(n-1)^d.

    Singular at (0:...:0:1) with a node.  For d = 3 and d = 4 that is the only
    singular point; other degrees may acquire more (run the completeness check).
    """
    if d < 3:
        raise ValueError("need d >= 3")
    names = [f"x{k}" for k in range(n + 1)]
    last = names[-1]
    quad = " + ".join(f"{v}^2" for v in names[:-1])
    powers = " + ".join(f"{v}^{d}" for v in names[:-1])
    return parse_poly(f"{last}^{d - 2}*({quad}) + {powers}", names)
