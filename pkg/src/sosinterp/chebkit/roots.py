"""Real roots of interpolants via colleague-matrix eigenvalues."""

from __future__ import annotations

import numpy as np

from ..errors import IdenticallyZeroError
from .grids import GridKind, cheb_points_second_kind
from .interpolant import (
    Interpolant,
    barycentric_eval,
    barycentric_eval_with_derivative,
    from_values,
    values_to_coeffs,
)

_COEFF_TRIM_REL = 1e-13
_IMAG_TOL = 1e-8
_INTERVAL_SLACK = 1e-8
_DEDUP_SPACING = 1e-10


def interpolant_roots(p: Interpolant, interval=(-1.0, 1.0)) -> np.ndarray:
    """All real roots of ``p`` inside ``interval``, ascending.

    Method: convert values to Chebyshev coefficients, trim the trailing
    coefficients below 1e-13 of the coefficient norm, take the eigenvalues
    of the colleague matrix, keep near-real eigenvalues inside the slightly
    inflated interval, and polish each root with a single Newton step on
    the barycentric form. (A single step only: repeated Newton can walk
    out of the interval; colleague eigenvalues are already near-roots.)

    Raises
    ------
    IdenticallyZeroError
        If every value of ``p`` is zero (every point is a root).
    """
    a, b = float(interval[0]), float(interval[1])
    if not (-1.0 <= a < b <= 1.0):
        raise ValueError("interval must be a nondegenerate subinterval of [-1, 1]")
    if np.all(p.values == 0.0):
        raise IdenticallyZeroError("interpolant is identically zero")
    if p.grid.kind is GridKind.GENERAL:
        # no stable transform on general points; resample (exact for deg <= n)
        grid2 = cheb_points_second_kind(max(p.grid.n, 1))
        p = from_values(grid2, barycentric_eval(p, grid2.points))
    c = values_to_coeffs(p)
    scale = np.linalg.norm(c)
    keep = np.nonzero(np.abs(c) > _COEFF_TRIM_REL * scale)[0]
    if keep.size == 0:
        raise IdenticallyZeroError("interpolant is numerically zero after trimming")
    c = c[: keep[-1] + 1]
    if c.size == 1:
        return np.array([])
    if c.size == 2:
        roots = np.array([-c[0] / c[1]], dtype=complex)
    else:
        colleague = np.polynomial.chebyshev.chebcompanion(c)
        roots = np.linalg.eigvals(colleague)
    real = roots[np.abs(roots.imag) <= _IMAG_TOL].real
    real = real[(real >= a - _INTERVAL_SLACK) & (real <= b + _INTERVAL_SLACK)]
    if real.size == 0:
        return np.array([])
    polished = np.empty(real.size)
    for i, r in enumerate(np.sort(real)):
        val, der = barycentric_eval_with_derivative(p, float(np.clip(r, -1.0, 1.0)))
        polished[i] = r - val / der if der != 0.0 else r
    polished = np.clip(polished, a, b)
    polished.sort()
    out = [polished[0]]
    for r in polished[1:]:
        if r - out[-1] > _DEDUP_SPACING:
            out.append(r)
    return np.array(out)
