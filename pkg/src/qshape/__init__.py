"""Exact q-binomial coefficients, quasipolynomial regions, and limit shapes."""

from .exactnum import Polynomial, solve_linear_rational
from .qcore import (
    CoefficientReport,
    coefficient_report,
    q_binomial,
    q_binomial_box,
    q_binomial_partition_dp,
    q_binomial_pascal,
    q_factorial,
    q_integer,
)
from .quasi import (
    Quasipolynomial,
    Region,
    RegionDecomposition,
    SignedTerm,
    coefficient_via_recursion,
    fit_quasipolynomial,
    initial_quasipolynomial,
    numerator_expansion,
    reciprocal_series,
    region_decomposition,
)
from .shape import PiecewisePolynomial, cube_slice_volume, irwin_hall_density, limit_shape
from .measure import (
    ConvergenceRow,
    EmpiricalMeasure,
    convergence_table,
    ks_distance,
    measure_from_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientReport",
    "ConvergenceRow",
    "EmpiricalMeasure",
    "PiecewisePolynomial",
    "Polynomial",
    "Quasipolynomial",
    "Region",
    "RegionDecomposition",
    "SignedTerm",
    "coefficient_report",
    "coefficient_via_recursion",
    "convergence_table",
    "cube_slice_volume",
    "fit_quasipolynomial",
    "initial_quasipolynomial",
    "irwin_hall_density",
    "ks_distance",
    "limit_shape",
    "measure_from_polynomial",
    "numerator_expansion",
    "q_binomial",
    "q_binomial_box",
    "q_binomial_partition_dp",
    "q_binomial_pascal",
    "q_factorial",
    "q_integer",
    "reciprocal_series",
    "region_decomposition",
    "solve_linear_rational",
]
