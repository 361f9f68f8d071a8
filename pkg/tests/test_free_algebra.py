import pytest

from polysym.free_algebra import (
    gl_orbit_span, is_highest_weight, phi_eval, raising_action, tmonomials_of_weight,
)
from polysym.notation import tpoly
from polysym.polycore import DomainError, tvar
from polysym.schur import dim_F_component


def test_tmonomial_count_matches_independent_count():
    for alpha in [(3, 2), (2, 2, 1), (2, 1, 1, 1)]:
        assert len(tmonomials_of_weight(alpha, 3)) == dim_F_component(3, len(alpha), alpha)


def test_raising_operator_on_t_variable():
    # e_12 t(y^2) = 2 t(xy)
    assert raising_action(0, 1, tvar((0, 2))) == tvar((1, 1)) * 2


def test_raising_operator_bad_indices():
    with pytest.raises(DomainError):
        raising_action(1, 1, tvar((1, 0)))


def test_power_sum_t_x_is_not_highest_weight_for_y():
    ok, wt = is_highest_weight(tvar((0, 1)))
    assert not ok and wt == (0, 1)
    assert is_highest_weight(tvar((1, 0))) == (True, (1, 0))


def test_zero_is_not_a_highest_weight_vector():
    with pytest.raises(DomainError):
        is_highest_weight(tvar((1, 0)) * 0)


def test_phi_is_multiplicative_on_an_example():
    f = tpoly("t(xy) + 2t(x)t(y)", 2)
    g = tpoly("t(x^2)", 2)
    assert phi_eval(f * g, 3) == phi_eval(f, 3) * phi_eval(g, 3)


def test_orbit_span_of_a_degree_one_variable():
    assert len(gl_orbit_span(tvar((1, 0, 0)))) == 3
