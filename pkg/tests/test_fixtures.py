import pytest

from charclass.classes import csm_hypersurface, euler
from charclass.fixtures import FIXTURES, standard_nodal
from charclass.milnor import SingularityData, check_complete, parse_point


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_supplied_points_are_all_the_singular_points(name):
    fx = FIXTURES[name]
    spec = fx.spec()
    table = check_complete(fx.poly, spec.singularities)
    assert all(supplied == found for supplied, found in table.values()), table


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_points_certify(name):
    spec = FIXTURES[name].spec()
    assert spec.singularities.all_certified
    assert len(spec.singularities) == len(FIXTURES[name].points)


def test_dropping_the_node_is_detected():
    fx = FIXTURES["nodal_quartic"]
    table = check_complete(fx.poly, SingularityData.empty())
    assert any(a != b for a, b in table.values())


def test_known_milnor_numbers():
    assert FIXTURES["cuspidal_cubic"].spec().singularities.total_mu == 2
    assert FIXTURES["nodal_cubic"].spec().singularities.total_mu == 1
    assert FIXTURES["quadric_cone"].spec().singularities.total_mu == 1


@pytest.mark.parametrize("n, d", [(2, 3), (3, 3), (3, 4), (4, 3)])
def test_standard_nodal_family(n, d):
    f = standard_nodal(n, d)
    apex = tuple([0] * n + [1])
    sing = SingularityData.from_polynomial(f, [apex])
    assert sing.total_mu == 1
    assert all(a == b for a, b in check_complete(f, sing).values())


def test_standard_nodal_matches_named_fixtures():
    # same monomials once x, y, z, w are read as x0, x1, x2, x3
    assert standard_nodal(3, 4).terms == FIXTURES["nodal_quartic"].poly.terms
    assert standard_nodal(3, 3).terms == FIXTURES["nodal_cubic_surface"].poly.terms


def test_standard_nodal_rejects_low_degree():
    with pytest.raises(ValueError):
        standard_nodal(3, 2)


def test_quadric_cone_euler_by_hand():
    # cone over a conic: P^1 lines joined at the apex, chi = 1 + 2
    spec = FIXTURES["quadric_cone"].spec()
    assert euler(csm_hypersurface(spec)) == 3
