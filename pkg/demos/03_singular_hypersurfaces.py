"""CSM classes and Euler characteristics of singular hypersurfaces."""
from charclass import FIXTURES, csm_hypersurface, euler, fulton_divisor, chi_complement, render_class
from charclass.milnor import check_complete

for name, fx in FIXTURES.items():
    spec = fx.spec()
    table = check_complete(fx.poly, spec.singularities)
    complete = all(a == b for a, b in table.values())
    csm = csm_hypersurface(spec)
    print(f"########## {name}: {fx.text}")
    print("  singular points:", ", ".join(fx.points) or "none", " total mu =", spec.singularities.total_mu,
          " list complete:", complete)
    print("  Fulton class   :", render_class(fulton_divisor(spec)))
    print("  CSM class      :", render_class(csm))
    print("  chi(X) =", euler(csm), " known:", fx.euler, " chi(complement) =", chi_complement(spec))
