"""Logarithmic capacity of finite unions of closed real intervals.

Exact values by two independent routes (theta-quotient formula for two
intervals, Schwarz-Christoffel / Robin constant for any number) plus a
family of elementary lower and upper bounds that sandwich them.
"""

from ._kernels import BACKEND as kernel_backend
from .bounds import (
    BoundReport,
    all_bounds,
    beurling_arc_capacity,
    classical_bounds,
    gap_division_lower,
    gap_division_lower_max,
    gillis_upper,
    haliste_arcs_capacity,
    partition_lower,
    polarization_upper,
    projection_upper,
    schiefermayr_lower,
    schiefermayr_upper,
    sector_product_lower,
    solynin_lower,
    solynin_lower_max,
    uniform_measure_partition,
)
from .errors import (
    ConvergenceError,
    DomainError,
    LogcapError,
    NarrowGapWarning,
    ParseError,
    SingularMatrixError,
    ValidationError,
)
from .exact import (
    CapacityResult,
    WidomModel,
    akhiezer_capacity,
    akhiezer_params,
    capacity,
    green_value,
    robin_constant,
    widom_capacity,
    widom_polynomial,
)
from .sets import (
    CircleArcSet,
    GapPoints,
    IntervalUnion,
    Partition,
    canonical_set,
    chebyshev_measure,
    circle_preimage,
    intersect,
    make_interval_union,
    normalize_to_unit,
    project_to_real_axis,
)
from .special import (
    EllipticParams,
    QuadratureResult,
    chebyshev_gauss,
    complete_E,
    complete_K,
    incomplete_F,
    solve_dense,
    tail_integral,
    theta3,
    theta4,
)
from .verify import run_verify

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CapacityResult",
    "CircleArcSet",
    "ConvergenceError",
    "DomainError",
    "EllipticParams",
    "GapPoints",
    "IntervalUnion",
    "LogcapError",
    "NarrowGapWarning",
    "ParseError",
    "Partition",
    "QuadratureResult",
    "SingularMatrixError",
    "ValidationError",
    "WidomModel",
    "akhiezer_capacity",
    "akhiezer_params",
    "all_bounds",
    "beurling_arc_capacity",
    "canonical_set",
    "capacity",
    "chebyshev_gauss",
    "chebyshev_measure",
    "circle_preimage",
    "classical_bounds",
    "complete_E",
    "complete_K",
    "gap_division_lower",
    "gap_division_lower_max",
    "gillis_upper",
    "green_value",
    "haliste_arcs_capacity",
    "incomplete_F",
    "intersect",
    "kernel_backend",
    "make_interval_union",
    "normalize_to_unit",
    "partition_lower",
    "polarization_upper",
    "project_to_real_axis",
    "projection_upper",
    "robin_constant",
    "run_verify",
    "schiefermayr_lower",
    "schiefermayr_upper",
    "sector_product_lower",
    "solve_dense",
    "solynin_lower",
    "solynin_lower_max",
    "tail_integral",
    "theta3",
    "theta4",
    "uniform_measure_partition",
    "widom_capacity",
    "widom_polynomial",
]
