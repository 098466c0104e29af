"""Interpolatory quadrature weights on Chebyshev grids.

The weight of node l is the integral of its Lagrange basis polynomial, so
integrating an interpolant reduces to a weighted sum of its values. On the
second-kind grid these are the Clenshaw-Curtis weights; on the first-kind
grid, Fejer's first rule. Both are obtained by pushing the Chebyshev
moments through the adjoint of the values->coefficients transform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import GridKindError
from .grids import GridKind, InterpolationGrid
from .interpolant import chebyshev_moments, transform_adjoint_apply


@dataclass(frozen=True)
class QuadratureWeights:
    grid: InterpolationGrid
    w: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.w, dtype=float).copy()
        w.flags.writeable = False
        object.__setattr__(self, "w", w)

    def integrate(self, values) -> float:
        return float(self.w @ np.asarray(values, dtype=float))


def clenshaw_curtis_weights(grid: InterpolationGrid) -> QuadratureWeights:
    """Weights w_l = integral of L_l over [-1, 1] for a Chebyshev grid.

    Exact for every polynomial the grid can represent (degree <= n).
    General grids are rejected: their Lagrange integrals are computable
    but numerically worthless at moderate sizes.
    """
    if grid.kind is GridKind.GENERAL:
        raise GridKindError("quadrature weights require a Cheb1 or Cheb2 grid")
    m = chebyshev_moments(grid.n)
    return QuadratureWeights(grid, transform_adjoint_apply(grid, m))
