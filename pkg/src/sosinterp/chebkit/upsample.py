"""Linear maps lifting low-degree interpolants onto finer grids."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .grids import GridKind, InterpolationGrid
from .interpolant import barycentric_grid_weights


@dataclass(frozen=True)
class UpsampleMatrix:
    """B maps values on ``source`` to values of the same polynomial on ``target``."""

    matrix: np.ndarray
    source: InterpolationGrid
    target: InterpolationGrid

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=float).copy()
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    def apply(self, values) -> np.ndarray:
        return self.matrix @ np.asarray(values, dtype=float)


def upsample_matrix(source: InterpolationGrid, target: InterpolationGrid, *, allow_general: bool = False) -> UpsampleMatrix:
    """Barycentric interpolation matrix from ``source`` to ``target``.

    Row j holds the Lagrange basis values L_l(target_j). Target points that
    coincide exactly with a source point get an exact pass-through row.

    Parameters
    ----------
    source, target : InterpolationGrid
        ``target`` must be at least as fine (N >= n). The source must be a
        Chebyshev-type grid; upsampling from arbitrary points is
        ill-conditioned and is rejected unless ``allow_general`` is set.
    """
    if target.n < source.n:
        raise ValueError("target grid must be at least as fine as the source")
    if source.kind is GridKind.GENERAL:
        if not allow_general:
            raise ValueError(
                "upsampling from a general grid is ill-conditioned; "
                "pass allow_general=True to force it"
            )
        warnings.warn("upsampling from a general grid; conditioning not guaranteed", stacklevel=2)
    w = barycentric_grid_weights(source)
    diff = target.points[:, None] - source.points[None, :]
    B = np.zeros((target.size, source.size))
    hit_row, hit_col = np.nonzero(diff == 0.0)
    regular = np.ones(target.size, dtype=bool)
    regular[hit_row] = False
    if np.any(regular):
        s = w[None, :] / diff[regular]
        B[regular] = s / s.sum(axis=1, keepdims=True)
    B[hit_row, hit_col] = 1.0
    return UpsampleMatrix(B, source, target)
