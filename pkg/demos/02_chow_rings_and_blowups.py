"""Arithmetic in the Chow rings of P^n and of P^n blown up at points."""
from charclass import Ambient, ChowClass, chern_tangent, degree_int, parse_chow_expr, pushforward, render_class

P2 = Ambient.projective(2)
B = Ambient.blowup(2, 1)

########## Total Chern classes
print("c(T P^2)          =", render_class(chern_tangent(P2)))
print("c(T Bl_pt P^2)    =", render_class(chern_tangent(B)))
print("Euler number       ", degree_int(chern_tangent(B)), "(P^2 has 3, blowing up a point adds 1)")

########## The exceptional class
e = ChowClass.e_power(B, 0, 1)
print("deg e^2 =", degree_int(e * e))
K = parse_chow_expr("3*h - e", B)
print("anticanonical square:", render_class(K * K), " degree", degree_int(K * K))

########## Pushing classes down
print("push of 3h - 2e :", render_class(pushforward(parse_chow_expr("3*h - 2*e", B))))
print("push of e^2     :", render_class(pushforward(e * e)))

########## Higher dimensions, several points
for n in range(2, 6):
    for m in (1, 2, 3):
        amb = Ambient.blowup(n, m)
        print(f"{str(amb):<16} chi = {degree_int(chern_tangent(amb))}")
