import math

import numpy as np
import pytest

from sosinterp.chebkit import adaptive_interpolate, barycentric_eval, error_bound_points
from sosinterp.errors import AdaptiveConvergenceError


def test_exp_t100_grid_size():
    p = adaptive_interpolate(lambda t: math.exp(t**100), 1e-15)
    assert p.grid.size <= 256
    probe = np.linspace(-1, 1, 2001)
    err = np.abs(barycentric_eval(p, probe) - np.exp(probe**100)).max()
    assert err <= 1e-12


def test_degree5_polynomial_converges_at_first_grid():
    calls = []

    def f(t):
        calls.append(t)
        return 2 * t**5 - t**2 + 0.5

    p = adaptive_interpolate(f, 1e-15, trim=False)
    # converged at the first level: no doubling beyond the 16-point grid
    # (plus the offset probe used for the first-level agreement check)
    assert p.grid.size == 16
    probe = np.linspace(-1, 1, 101)
    err = np.abs(barycentric_eval(p, probe) - (2 * probe**5 - probe**2 + 0.5)).max()
    assert err < 1e-14


def test_degree5_polynomial_trims_to_its_degree():
    p = adaptive_interpolate(lambda t: 2 * t**5 - t**2 + 0.5, 1e-15)
    assert p.grid.size == 6


def test_logistic_bell_grid_size_untrimmed():
    g = lambda t: 1.0 / (2.0 + 2.0 * math.cosh(12.0 * t))
    p = adaptive_interpolate(g, 1e-15, trim=False)
    assert 200 <= p.grid.size <= 512
    probe = np.linspace(-1, 1, 2001)
    err = np.abs(barycentric_eval(p, probe) - 1.0 / (2 + 2 * np.cosh(12 * probe))).max()
    assert err <= 1e-14


def test_nonconvergence_raises_with_residual():
    # white-noise "function" can never converge
    rng = np.random.default_rng(0)
    with pytest.raises(AdaptiveConvergenceError) as exc:
        adaptive_interpolate(lambda t: rng.standard_normal(), 1e-15, max_points=64)
    assert exc.value.residual > 0


def test_error_bound_k1_closed_form():
    # 4V/(pi*k*(n-k)) <= tol with V = 4*pi: 16/(n-1) <= 1e-2 -> n = 1601
    assert error_bound_points(1, 4.0 * math.pi, 1e-2) == 1601


def test_error_bound_v_zero():
    assert error_bound_points(3, 0.0, 1e-8) == 4


def test_error_bound_k2_against_scan_oracle():
    k, V, tol = 2, 1.0, 1e-6
    n = error_bound_points(k, V, tol)

    def bound(nn):
        return 4.0 * V / (math.pi * k * (nn - k) ** k)

    # oracle: direct scan of the bound formula
    assert bound(n) <= tol < bound(n - 1)
    assert n == 2 + math.ceil(math.sqrt(2e6 / math.pi))


@pytest.mark.parametrize("k,V,tol", [(1, 2.5, 1e-4), (3, 10.0, 1e-7), (5, 0.1, 1e-3)])
def test_error_bound_minimality(k, V, tol):
    n = error_bound_points(k, V, tol)
    bound = lambda nn: 4.0 * V / (math.pi * k * (nn - k) ** k)
    assert bound(n) <= tol
    assert n == k + 1 or bound(n - 1) > tol
