from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charclass.poly import (
    NotHomogeneousError,
    Poly,
    PolySyntaxError,
    dehomogenize,
    gradient,
    parse_poly,
    to_text,
    translate_to_origin,
)

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def P(text, variables=XY):
    return parse_poly(text, variables)


def test_parse_reads_terms_directly():
    f = P("x^2*z - y^3", XYZ)
    assert f.terms == {(2, 0, 1): 1, (0, 3, 0): -1}


def test_parse_zero():
    assert P("0").terms == {}
    assert P("0").is_zero()


def test_parse_expands_products():
    # oracle: expand (x+y)^2 as a product of two sums by hand
    assert P("(x+y)^2 - x^2 - 2*x*y").terms == {(0, 2): 1}
    assert P("(x+y)*(x+y)") == P("x^2 + 2*x*y + y^2")


def test_parse_rationals_and_unary_minus():
    f = P("-3/4*x^2 + 1/2")
    assert f.terms == {(2, 0): Fraction(-3, 4), (0, 0): Fraction(1, 2)}
    assert P("-x^2") == -P("x^2")
    assert P("2/4") == P("1/2")


@pytest.mark.parametrize(
    "text, pos",
    [("x + * y", 4), ("x^y", 2), ("x^-1", 2), ("(x + y", 6), ("x $ y", 2), ("3/0", 2), ("2 x", 2)],
)
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        P(text)
    assert info.value.pos == pos


def test_unknown_variable():
    with pytest.raises(PolySyntaxError, match="unknown variable 'w'"):
        P("x + w")


def test_no_implicit_multiplication():
    with pytest.raises(PolySyntaxError):
        P("2(x+y)")


def test_canonical_text_is_graded_lex():
    f = P("y + x^2 - 3 + x*y + y^2")
    assert to_text(f) == "x^2 + x*y + y^2 + y - 3"
    assert to_text(P("0")) == "0"
    assert to_text(P("-x + 1/3*y^2")) == "1/3*y^2 - x"


@pytest.mark.parametrize(
    "text, expected",
    [("x^2 - y^3", ["2*x", "-3*y^2"]), ("5", ["0", "0"]), ("x*y", ["y", "x"])],
)
def test_gradient(text, expected):
    assert gradient(P(text)) == [P(e) for e in expected]


def test_dehomogenize():
    assert dehomogenize(P("x^2*z - y^3", XYZ), 2) == P("x^2 - y^3")
    q = parse_poly("x^4+y^4+z^4+w^4", ["x", "y", "z", "w"])
    assert dehomogenize(q, "w") == parse_poly("x^4+y^4+z^4+1", XYZ)
    assert dehomogenize(P("x*y"), "x") == parse_poly("y", ["y"])


def test_dehomogenize_rejects_inhomogeneous():
    with pytest.raises(NotHomogeneousError):
        dehomogenize(P("x^2 + y"), 0)


def test_translate_to_origin():
    assert translate_to_origin(P("x^2 - y^3"), (0, 0)) == P("x^2 - y^3")
    assert translate_to_origin(P("x^2"), (1, 0)) == P("x^2 + 2*x + 1")
    assert translate_to_origin(P("(x-1)^2 + (y-2)^2"), (1, 2)) == P("x^2 + y^2")


def test_linear_change():
    f = P("x^2 - y^3")
    assert f.linear_change([[1, 1], [0, 1]]) == P("(x+y)^2 - y^3")


def test_too_many_variables():
    with pytest.raises(ValueError):
        Poly([f"v{i}" for i in range(9)])


# property tests

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda t: Poly(XYZ, t))
points = st.tuples(coeffs, coeffs, coeffs)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert (f + g) + h == f + (g + h)
    assert f - f == Poly.zero(XYZ)


@settings(max_examples=60, deadline=None)
@given(polys, points)
def test_multiplication_is_exact_under_evaluation(f, p):
    g = f + 1
    assert (f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p)


@settings(max_examples=80, deadline=None)
@given(polys)
def test_parse_print_roundtrip(f):
    text = to_text(f)
    assert parse_poly(text, XYZ) == f
    assert to_text(parse_poly(text, XYZ)) == text


@settings(max_examples=60, deadline=None)
@given(polys, polys, coeffs, coeffs)
def test_gradient_is_linear(f, g, a, b):
    lhs = gradient(f * a + g * b)
    rhs = [df * a + dg * b for df, dg in zip(gradient(f), gradient(g))]
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(polys, points)
def test_translate_roundtrip(f, p):
    g = translate_to_origin(f, p)
    assert g.evaluate((0, 0, 0)) == f.evaluate(p)
    assert translate_to_origin(g, tuple(-c for c in p)) == f
