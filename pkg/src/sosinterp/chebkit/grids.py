"""Interpolation grids on [-1, 1] and Chebyshev polynomial evaluation."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class GridKind(enum.Enum):
    CHEB2 = "cheb2"  # extrema grid, cos(l*pi/n), includes the endpoints
    CHEB1 = "cheb1"  # roots grid, cos((l+1/2)*pi/(n+1)), interior only
    GENERAL = "general"


@dataclass(frozen=True)
class InterpolationGrid:
    """Ordered distinct interpolation points in [-1, 1].

    Points are stored in descending order, matching the natural index
    order of both Chebyshev families (cos of an increasing angle).
    """

    points: np.ndarray
    kind: GridKind

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 1 or pts.size == 0:
            raise ValueError("grid needs a 1-d nonempty point array")
        if np.any(np.diff(pts) >= 0):
            raise ValueError("grid points must be strictly descending")
        if pts[0] > 1.0 or pts[-1] < -1.0:
            raise ValueError("grid points must lie in [-1, 1]")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        """Polynomial degree supported by the grid (one less than #points)."""
        return self.points.size - 1

    @property
    def size(self) -> int:
        return self.points.size

    def __eq__(self, other):
        return (
            isinstance(other, InterpolationGrid)
            and self.kind is other.kind
            and self.points.shape == other.points.shape
            and bool(np.all(self.points == other.points))
        )

    def __hash__(self):
        return hash((self.kind, self.points.tobytes()))


def cheb_points_second_kind(n: int) -> InterpolationGrid:
    """Chebyshev points of the second kind, t_l = cos(l*pi/n), l = 0..n.

    Parameters
    ----------
    n : int
        Degree; must be >= 1 since the formula divides by n.

    Returns
    -------
    InterpolationGrid
        n+1 points descending from +1 to -1, endpoints exact.
    """
    if n < 1:
        raise ValueError("second-kind grid needs n >= 1")
    pts = np.cos(np.arange(n + 1) * np.pi / n)
    # the formula gives cos(0)=1 and cos(pi)=-1 only up to rounding
    pts[0] = 1.0
    pts[-1] = -1.0
    if n % 2 == 0:
        pts[n // 2] = 0.0
    return InterpolationGrid(pts, GridKind.CHEB2)


def cheb_points_first_kind(n: int) -> InterpolationGrid:
    """Chebyshev points of the first kind, t_l = cos((l+1/2)*pi/(n+1)).

    All n+1 points are interior; valid for every n >= 0.
    """
    if n < 0:
        raise ValueError("first-kind grid needs n >= 0")
    pts = np.cos((np.arange(n + 1) + 0.5) * np.pi / (n + 1))
    if n % 2 == 0:
        pts[n // 2] = 0.0
    return InterpolationGrid(pts, GridKind.CHEB1)


def general_grid(points) -> InterpolationGrid:
    """Wrap arbitrary distinct points in [-1, 1] (sorted descending)."""
    pts = np.sort(np.asarray(points, dtype=float))[::-1].copy()
    if np.unique(pts).size != pts.size:
        raise ValueError("grid points must be distinct")
    return InterpolationGrid(pts, GridKind.GENERAL)


def chebyshev_t_values(max_degree: int, points) -> np.ndarray:
    """Values of T_0..T_max_degree at the given points.

    Uses the three-term recurrence T_i = 2 t T_{i-1} - T_{i-2}.

    Returns
    -------
    ndarray of shape (max_degree+1, len(points)); row i holds T_i.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    t = np.asarray(points, dtype=float)
    out = np.empty((max_degree + 1, t.size))
    out[0] = 1.0
    if max_degree >= 1:
        out[1] = t
    for i in range(2, max_degree + 1):
        out[i] = 2.0 * t * out[i - 1] - out[i - 2]
    return out


def affine_to_unit(x, a: float, b: float):
    """Map x in [a, b] to t in [-1, 1]."""
    if not b > a:
        raise ValueError("need b > a")
    return (2.0 * np.asarray(x, dtype=float) - (a + b)) / (b - a)


def affine_from_unit(t, a: float, b: float):
    """Map t in [-1, 1] to x in [a, b]; inverse of :func:`affine_to_unit`."""
    if not b > a:
        raise ValueError("need b > a")
    return ((b - a) * np.asarray(t, dtype=float) + (a + b)) / 2.0
