import pytest

from polysym.invariant_ring import (
    coordinates, dim_invariant_component, is_sn_invariant, orbit_basis,
    orbit_representatives, polarized_power_sum, power_sum_product,
)
from polysym.polycore import DomainError, xvar


def test_power_sum_terms():
    p = polarized_power_sum((2, 1), 3)
    assert len(p) == 3
    assert p.multidegree() == (2, 1)


def test_zero_word_rejected():
    with pytest.raises(DomainError):
        polarized_power_sum((0, 0), 3)


def test_burnside_matches_orbit_enumeration():
    for m, alpha in [(2, (1, 1)), (2, (3, 2)), (3, (2, 2, 1)), (4, (2, 1, 1, 1))]:
        assert dim_invariant_component(3, m, alpha) == len(orbit_representatives(3, m, alpha))


def test_dim_R_11_is_two():
    assert dim_invariant_component(3, 2, (1, 1)) == 2


def test_coordinates_of_power_sum_product():
    b = orbit_basis(3, 2, (1, 1))
    p = power_sum_product([(1, 0), (0, 1)], 3)
    vec = coordinates(p, b)
    assert sorted(vec) == [1, 1]


def test_coordinates_reject_non_invariant():
    b = orbit_basis(2, 1, (1,))
    with pytest.raises(DomainError):
        coordinates(xvar(2, 1, 0, 0), b)


def test_invariance_check():
    assert is_sn_invariant(power_sum_product([(1, 1), (2, 0)], 3))
    assert not is_sn_invariant(xvar(3, 2, 0, 0))
