"""Adaptive sampling of smooth functions into Chebyshev interpolants."""

from __future__ import annotations

import math

import numpy as np

from ..errors import AdaptiveConvergenceError
from .grids import cheb_points_first_kind, cheb_points_second_kind
from .interpolant import (
    Interpolant,
    barycentric_eval,
    coeffs_to_values,
    from_function,
    from_values,
    values_to_coeffs,
)

_FIRST_SIZE = 16
_MAX_SIZE = 2**15
_TAIL_COEFFS = 2


def interpolate_fixed(sampler, num_points: int) -> Interpolant:
    """Interpolant of ``sampler`` on a fixed-size second-kind grid."""
    if num_points < 2:
        raise ValueError("need at least two points")
    return from_function(sampler, cheb_points_second_kind(num_points - 1))


def adaptive_interpolate(sampler, tol: float, *, max_points: int = _MAX_SIZE, trim: bool = True) -> Interpolant:
    """Interpolate ``sampler`` on [-1, 1] to the requested relative accuracy.

    Doubles the grid size (16, 32, 64, ..., up to ``max_points``) until two
    criteria hold simultaneously, both relative to the max sampled value:

    * the fine interpolant reproduces the previous level's samples within
      ``tol`` (at the first level, fresh samples on an offset first-kind
      probe grid are used instead), and
    * the trailing Chebyshev coefficients fall below ``tol``.

    With ``trim`` (the default) the converged interpolant is resampled onto
    the smallest grid whose dropped trailing coefficients all lie below
    ``tol``, mirroring the usual chop of constructive-approximation
    toolkits. With ``trim=False`` the full converged grid is returned.

    Raises
    ------
    AdaptiveConvergenceError
        At the size cap; carries the final residual.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    prev = None
    residual = math.inf
    size = _FIRST_SIZE
    while size <= max_points:
        grid = cheb_points_second_kind(size - 1)
        vals = np.array([sampler(t) for t in grid.points], dtype=float)
        if not np.all(np.isfinite(vals)):
            raise ValueError("sampler returned a non-finite value")
        p = from_values(grid, vals)
        scale = max(np.abs(vals).max(), np.finfo(float).tiny)
        coeffs = values_to_coeffs(p)
        tail = np.abs(coeffs[-_TAIL_COEFFS:]).max()
        if prev is None:
            probe = cheb_points_first_kind(_FIRST_SIZE)
            ref = np.array([sampler(t) for t in probe.points], dtype=float)
            agree = np.abs(barycentric_eval(p, probe.points) - ref).max()
        else:
            agree = np.abs(barycentric_eval(p, prev.grid.points) - prev.values).max()
        residual = max(tail, agree)
        if residual <= tol * scale:
            return _trim(p, coeffs, tol * scale) if trim else p
        prev = p
        size *= 2
    raise AdaptiveConvergenceError(
        f"no convergence within {max_points} points (residual {residual:.3e})", residual
    )


def _trim(p: Interpolant, coeffs: np.ndarray, threshold: float) -> Interpolant:
    keep = np.nonzero(np.abs(coeffs) > threshold)[0]
    n_trim = max(1, int(keep[-1]) if keep.size else 1)
    if n_trim >= p.grid.n:
        return p
    grid = cheb_points_second_kind(n_trim)
    return from_values(grid, coeffs_to_values(coeffs[: n_trim + 1], grid))


def error_bound_points(k: int, V: float, tol: float) -> int:
    """Smallest n with 4 V / (pi k (n-k)^k) <= tol.

    This is the bounded-variation interpolation error bound for a function
    whose k-th derivative has total variation V; it needs n >= k+1.
    A zero variation bound returns the minimal admissible n = k+1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if V < 0:
        raise ValueError("V must be nonnegative")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if V == 0.0:
        return k + 1

    def bound(n: int) -> float:
        return 4.0 * V / (math.pi * k * (n - k) ** k)

    n = k + max(1, math.ceil((4.0 * V / (math.pi * k * tol)) ** (1.0 / k)))
    while n > k + 1 and bound(n - 1) <= tol:
        n -= 1
    while bound(n) > tol:
        n += 1
    return n
