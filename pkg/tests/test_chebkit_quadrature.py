import numpy as np
import pytest

from sosinterp.chebkit import (
    cheb_points_first_kind,
    cheb_points_second_kind,
    chebyshev_t_values,
    clenshaw_curtis_weights,
    general_grid,
)
from sosinterp.errors import GridKindError


def test_cheb2_n2_closed_form():
    # oracle: symbolic integration of the three quadratic Lagrange basis
    # polynomials on {1, 0, -1}: L_0 = t(t+1)/2, L_1 = 1-t^2, L_2 = t(t-1)/2
    w = clenshaw_curtis_weights(cheb_points_second_kind(2)).w
    assert np.allclose(w, [1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0], atol=1e-15)


@pytest.mark.parametrize("make,n", [(cheb_points_second_kind, 5), (cheb_points_second_kind, 64),
                                    (cheb_points_second_kind, 200), (cheb_points_first_kind, 0),
                                    (cheb_points_first_kind, 33), (cheb_points_first_kind, 150)])
def test_weights_sum_to_two(make, n):
    w = clenshaw_curtis_weights(make(n)).w
    assert abs(w.sum() - 2.0) <= 1e-13


def test_t4_moment_on_cheb2_10():
    g = cheb_points_second_kind(10)
    w = clenshaw_curtis_weights(g)
    vals = chebyshev_t_values(4, g.points)[4]
    assert abs(w.integrate(vals) - (-2.0 / 15.0)) <= 1e-13


@pytest.mark.parametrize("make,n", [(cheb_points_second_kind, 7), (cheb_points_second_kind, 90),
                                    (cheb_points_first_kind, 12), (cheb_points_first_kind, 77)])
def test_exact_for_random_polynomials(make, n):
    g = make(n)
    w = clenshaw_curtis_weights(g)
    rng = np.random.default_rng(n)
    c = rng.standard_normal(n + 1)
    vals = np.polynomial.chebyshev.chebval(g.points, c)
    # oracle: exact Chebyshev moments of the series
    i = np.arange(n + 1)
    moments = np.where(i % 2 == 0, 2.0 / (1.0 - i.astype(float) ** 2 + (i == 1)), 0.0)
    moments[1] = 0.0
    exact = c @ moments
    assert abs(w.integrate(vals) - exact) <= 1e-12 * max(1.0, abs(exact))


def test_weights_positive_on_both_kinds():
    # both rules have positive weights; a sanity guard for the transforms
    for g in (cheb_points_second_kind(41), cheb_points_first_kind(50)):
        assert clenshaw_curtis_weights(g).w.min() > 0


def test_general_grid_rejected():
    with pytest.raises(GridKindError):
        clenshaw_curtis_weights(general_grid([-0.5, 0.0, 0.5]))
