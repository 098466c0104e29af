"""Polynomial interpolants stored by their values on a grid.

Evaluation uses the second barycentric formula, which passes through the
grid values exactly and is backward stable on Chebyshev-type grids.
Value/coefficient transforms use explicit discrete-orthogonality sums for
small grids and DCTs above; the two paths agree to ~1e-13 and are
cross-tested.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from scipy.fft import dct

from .grids import GridKind, InterpolationGrid, cheb_points_first_kind, cheb_points_second_kind, general_grid

# explicit O(n^2) transforms below this size, DCT above
_DIRECT_TRANSFORM_MAX_N = 64


def barycentric_grid_weights(grid: InterpolationGrid) -> np.ndarray:
    """Barycentric weights for a grid, up to a common scale factor.

    Closed forms for the Chebyshev families; the product formula with
    capacity rescaling (to avoid overflow) for general points.
    """
    n = grid.n
    if grid.kind is GridKind.CHEB2:
        w = np.ones(n + 1)
        w[1::2] = -1.0
        w[0] *= 0.5
        w[-1] *= 0.5
        return w
    if grid.kind is GridKind.CHEB1:
        theta = (np.arange(n + 1) + 0.5) * np.pi / (n + 1)
        return np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0) * np.sin(theta)
    pts = grid.points
    span = pts[0] - pts[-1]
    scale = 4.0 / span if span > 0 else 1.0
    w = np.empty(n + 1)
    for j in range(n + 1):
        d = (pts[j] - np.delete(pts, j)) * scale
        w[j] = 1.0 / np.prod(d)
    return w / np.abs(w).max()


@dataclass(frozen=True)
class Interpolant:
    """The unique degree-<=n polynomial through prescribed grid values."""

    grid: InterpolationGrid
    values: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        w = np.asarray(self.weights, dtype=float)
        if vals.shape != self.grid.points.shape or w.shape != vals.shape:
            raise ValueError("values/weights must match the grid size")
        vals = vals.copy()
        w = w.copy()
        vals.flags.writeable = False
        w.flags.writeable = False
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "weights", w)

    @property
    def degree_bound(self) -> int:
        return self.grid.n

    def __call__(self, t):
        return barycentric_eval(self, t)


def from_values(grid: InterpolationGrid, values) -> Interpolant:
    return Interpolant(grid, np.asarray(values, dtype=float), barycentric_grid_weights(grid))


def from_function(fn, grid: InterpolationGrid) -> Interpolant:
    return from_values(grid, np.array([fn(t) for t in grid.points], dtype=float))


def barycentric_eval(p: Interpolant, t):
    """Evaluate the interpolant at scalar or array ``t``.

    Grid points are reproduced exactly (the removable singularity of the
    barycentric formula is handled by direct pass-through).
    """
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if not np.all(np.isfinite(t_arr)):
        raise ValueError("evaluation points must be finite")
    diff = t_arr[:, None] - p.grid.points[None, :]
    out = np.empty(t_arr.size)
    hit_row, hit_col = np.nonzero(diff == 0.0)
    regular = np.ones(t_arr.size, dtype=bool)
    regular[hit_row] = False
    if np.any(regular):
        s = p.weights[None, :] / diff[regular]
        out[regular] = (s @ p.values) / s.sum(axis=1)
    out[hit_row] = p.values[hit_col]
    return out[0] if np.isscalar(t) or np.ndim(t) == 0 else out.reshape(np.shape(t))


def barycentric_eval_with_derivative(p: Interpolant, t: float):
    """Return (p(t), p'(t)) from the barycentric form.

    Off the grid this differentiates the quotient N/D directly; at a grid
    point it uses the barycentric differentiation-matrix row.
    """
    pts = p.grid.points
    d = float(t) - pts
    hits = np.nonzero(d == 0.0)[0]
    if hits.size:
        k = hits[0]
        off = np.arange(pts.size) != k
        row = (p.weights[off] / p.weights[k]) / (pts[k] - pts[off])
        deriv = row @ (p.values[off] - p.values[k])
        return p.values[k], deriv
    s = p.weights / d
    num = s @ p.values
    den = s.sum()
    ds = -s / d
    dnum = ds @ p.values
    dden = ds.sum()
    val = num / den
    return val, (dnum - val * dden) / den


def _theta(grid: InterpolationGrid) -> np.ndarray:
    n = grid.n
    if grid.kind is GridKind.CHEB2:
        return np.arange(n + 1) * np.pi / n
    return (np.arange(n + 1) + 0.5) * np.pi / (n + 1)


def _v2c_direct(grid: InterpolationGrid, values: np.ndarray) -> np.ndarray:
    n = grid.n
    i = np.arange(n + 1)
    cosmat = np.cos(np.outer(i, _theta(grid)))
    if grid.kind is GridKind.CHEB2:
        k = np.ones(n + 1)
        k[0] = k[-1] = 0.5
        c = (2.0 / n) * cosmat @ (k * values)
        c[0] *= 0.5
        c[-1] *= 0.5
        return c
    c = (2.0 / (n + 1)) * cosmat @ values
    c[0] *= 0.5
    return c


def _v2c_fft(grid: InterpolationGrid, values: np.ndarray) -> np.ndarray:
    n = grid.n
    if grid.kind is GridKind.CHEB2:
        c = dct(values, type=1) / n
        c[0] *= 0.5
        c[-1] *= 0.5
        return c
    c = dct(values, type=2) / (n + 1)
    c[0] *= 0.5
    return c


def values_to_coeffs(p: Interpolant) -> np.ndarray:
    """Chebyshev coefficients c with p(t) = sum_i c_i T_i(t).

    Only defined on Chebyshev grids, where the transform is orthogonal;
    resample general-grid interpolants onto a Chebyshev grid first.
    """
    if p.grid.kind is GridKind.GENERAL:
        raise ValueError("values_to_coeffs needs a Chebyshev grid; resample first")
    vals = np.asarray(p.values, dtype=float)
    if p.grid.n <= _DIRECT_TRANSFORM_MAX_N:
        return _v2c_direct(p.grid, vals)
    return _v2c_fft(p.grid, vals)


def coeffs_to_values(coeffs, grid: InterpolationGrid) -> np.ndarray:
    """Evaluate a Chebyshev series on a grid (inverse of values_to_coeffs)."""
    c = np.asarray(coeffs, dtype=float)
    if grid.kind is GridKind.GENERAL or c.size - 1 != grid.n:
        return np.polynomial.chebyshev.chebval(grid.points, c)
    n = grid.n
    if n <= _DIRECT_TRANSFORM_MAX_N:
        i = np.arange(c.size)
        return np.cos(np.outer(_theta(grid), i)) @ c
    if grid.kind is GridKind.CHEB2:
        y = c.copy()
        y[0] *= 2.0
        y[-1] *= 2.0
        return dct(y, type=1) * 0.5
    y = c * 0.5
    y[0] = c[0]
    return dct(y, type=3)


def transform_adjoint_apply(grid: InterpolationGrid, moments: np.ndarray) -> np.ndarray:
    """Apply the transpose of the values->coefficients map to ``moments``.

    With F the transform matrix this returns F^T m, so that
    m . (F v) = (F^T m) . v for all value vectors v. Used to turn
    Chebyshev moments into quadrature weights.
    """
    if grid.kind is GridKind.GENERAL:
        raise ValueError("transform adjoint needs a Chebyshev grid")
    n = grid.n
    m = np.asarray(moments, dtype=float)
    if m.size != n + 1:
        raise ValueError("moment vector must match the grid size")
    if n <= _DIRECT_TRANSFORM_MAX_N:
        i = np.arange(n + 1)
        cosmat = np.cos(np.outer(i, _theta(grid)))
        if grid.kind is GridKind.CHEB2:
            mm = m.copy()
            mm[0] *= 0.5
            mm[-1] *= 0.5
            k = np.ones(n + 1)
            k[0] = k[-1] = 0.5
            return (2.0 / n) * k * (cosmat.T @ mm)
        mm = m.copy()
        mm[0] *= 0.5
        return (2.0 / (n + 1)) * cosmat.T @ mm
    if grid.kind is GridKind.CHEB2:
        k = np.ones(n + 1)
        k[0] = k[-1] = 0.5
        return (k / n) * dct(m, type=1)
    return dct(m, type=3) / (n + 1)


def derivative(p: Interpolant) -> Interpolant:
    """Derivative interpolant on the same grid (via the coefficient recurrence)."""
    c = values_to_coeffs(p)
    dc = np.polynomial.chebyshev.chebder(c)
    if dc.size == 0:
        dc = np.zeros(1)
    vals = np.polynomial.chebyshev.chebval(p.grid.points, dc)
    return from_values(p.grid, vals)


def definite_integral(p: Interpolant) -> float:
    """Integral of the interpolant over [-1, 1], via Chebyshev moments."""
    c = values_to_coeffs(p)
    return float(c @ chebyshev_moments(c.size - 1))


def chebyshev_moments(max_degree: int) -> np.ndarray:
    """m_i = integral of T_i over [-1,1]: 2/(1-i^2) for even i, 0 for odd."""
    i = np.arange(max_degree + 1)
    with np.errstate(divide="ignore"):
        m = np.where(i % 2 == 0, 2.0 / (1.0 - i.astype(float) ** 2), 0.0)
    return m


def to_json(p: Interpolant) -> str:
    """Serialize to the {kind, n, values[, points]} JSON object."""
    obj = {"kind": p.grid.kind.value, "n": p.grid.n, "values": p.values.tolist()}
    if p.grid.kind is GridKind.GENERAL:
        obj["points"] = p.grid.points.tolist()
    return json.dumps(obj)


def from_json(text: str) -> Interpolant:
    obj = json.loads(text)
    kind = GridKind(obj["kind"])
    n = int(obj["n"])
    if kind is GridKind.CHEB2:
        grid = cheb_points_second_kind(n)
    elif kind is GridKind.CHEB1:
        grid = cheb_points_first_kind(n)
    else:
        grid = general_grid(obj["points"])
    values = np.asarray(obj["values"], dtype=float)
    if values.size != n + 1:
        raise ValueError("values length inconsistent with n")
    return from_values(grid, values)
