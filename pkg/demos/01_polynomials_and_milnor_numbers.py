"""Exact polynomials and Milnor numbers of plane and space germs."""
from charclass import parse_poly, to_text, gradient, milnor_at, dehomogenize

########## Parsing and canonical text
f = parse_poly("(x + y)^3 - 1/2*x*y", ["x", "y"])
print("f        =", to_text(f))
print("gradient =", [to_text(g) for g in gradient(f)])

########## A few simple singularities
# mu counts the dimension of the local algebra of the Jacobian ideal
for text in ["x^2 + y^2", "x^2 - y^3", "x^3 + y^3", "x^2 + y^5", "x^4 + y^4 + x^2*y^2"]:
    r = milnor_at(parse_poly(text, ["x", "y"]))
    print(f"{text:<22} mu = {r.mu}  (certified at truncation degree {r.cutoff})")

########## Coordinates do not matter
g = parse_poly("x^2 + y^5", ["x", "y"])
moved = g.linear_change([[2, 1], [1, 1]])
print("after a unimodular change:", to_text(moved))
print("mu before/after:", milnor_at(g).mu, milnor_at(moved).mu)

########## From a projective curve to an affine germ
cusp = parse_poly("x^2*z - y^3", ["x", "y", "z"])
print("chart z = 1:", to_text(dehomogenize(cusp, "z")), " mu =", milnor_at(dehomogenize(cusp, "z")).mu)

########## A curve singularity that is not isolated
try:
    milnor_at(parse_poly("x^2*y^2", ["x", "y"]), max_cutoff=8)
except ValueError as exc:
    print("x^2*y^2:", exc)
