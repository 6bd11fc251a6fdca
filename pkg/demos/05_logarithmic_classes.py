"""Logarithmic Chern classes of divisors with two smooth components."""
from charclass import Ambient, chern_tangent, csm_nc_union, csm_smooth_ci, euler, render_class
from charclass.classes import multilog_chern_dual, nc_log_chern_dual

########## Two lines in the plane
P2 = Ambient.projective(2)
log = nc_log_chern_dual(P2, [1, 1])
print("dual log class of two lines:", render_class(log))
print("c(T) minus it              :", render_class(chern_tangent(P2) - log))
print("CSM of the union           :", render_class(csm_nc_union(P2, [1, 1])))

########## Two surfaces in P^3 and their intersection curve
P3 = Ambient.projective(3)
for d1, d2 in [(1, 1), (2, 2), (2, 3)]:
    union = csm_nc_union(P3, [d1, d2])
    curve = csm_smooth_ci(P3, [d1, d2])
    ml = multilog_chern_dual(P3, d1, d2)
    print(f"degrees {d1},{d2}: chi(union) = {euler(union)}, chi(curve) = {euler(curve)}, "
          f"multilog class {render_class(ml)}")
