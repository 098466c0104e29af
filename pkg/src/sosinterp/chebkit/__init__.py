"""Chebyshev grids, stable interpolation, quadrature, upsampling, rootfinding."""

from .adaptive import adaptive_interpolate, error_bound_points, interpolate_fixed
from .grids import (
    GridKind,
    InterpolationGrid,
    affine_from_unit,
    affine_to_unit,
    cheb_points_first_kind,
    cheb_points_second_kind,
    chebyshev_t_values,
    general_grid,
)
from .interpolant import (
    Interpolant,
    barycentric_eval,
    barycentric_eval_with_derivative,
    barycentric_grid_weights,
    chebyshev_moments,
    coeffs_to_values,
    definite_integral,
    derivative,
    from_function,
    from_json,
    from_values,
    to_json,
    transform_adjoint_apply,
    values_to_coeffs,
)
from .quadrature import QuadratureWeights, clenshaw_curtis_weights
from .roots import interpolant_roots
from .upsample import UpsampleMatrix, upsample_matrix

__all__ = [
    "GridKind",
    "InterpolationGrid",
    "Interpolant",
    "QuadratureWeights",
    "UpsampleMatrix",
    "adaptive_interpolate",
    "affine_from_unit",
    "affine_to_unit",
    "barycentric_eval",
    "barycentric_eval_with_derivative",
    "barycentric_grid_weights",
    "cheb_points_first_kind",
    "cheb_points_second_kind",
    "chebyshev_moments",
    "chebyshev_t_values",
    "clenshaw_curtis_weights",
    "coeffs_to_values",
    "definite_integral",
    "derivative",
    "error_bound_points",
    "from_function",
    "from_json",
    "from_values",
    "general_grid",
    "interpolant_roots",
    "interpolate_fixed",
    "to_json",
    "transform_adjoint_apply",
    "upsample_matrix",
    "values_to_coeffs",
]
