"""Two-sided spectral-radius bounds for nonnegative matrices and positive kernels.

The library computes a nondecreasing lower sequence (from geometric
symmetrization of repeated squares) and a nonincreasing upper sequence
(from arithmetic symmetrization) that sandwich the spectral radius, plus
independent Gelfand-formula and Jacobi oracles to cross-check every
interval it reports.  Builtin constructors cover Nystrom discretizations
of kernels on [0,1]^2 and truncated weighted shifts.
"""

from .bounds import (
    DEFAULT_GAP_TOL,
    DEFAULT_KMAX,
    BoundsReport,
    lower_sequence,
    sandwich,
    upper_sequence,
)
from .errors import (
    DimensionTooLargeError,
    EmptyMatrixError,
    InvalidToleranceError,
    NegativeEntryError,
    NoConvergenceError,
    NonFiniteEntryError,
    NonFiniteKernelValueError,
    NoStabilizationError,
    NotSquareError,
    ParseError,
    SpecradError,
    TruncationTooSmallError,
)
from .kernels import (
    KernelSpec,
    ShiftSpec,
    build_shift,
    discretize,
    kernel_bounds,
    min_kernel,
    min_twisted_kernel,
    table_kernel,
)
from .matrices import (
    DEFAULT_EIG_TOL,
    DEFAULT_MAX_ITER,
    NonnegMatrix,
    ScaledMatrix,
    SymmetricNonnegMatrix,
    arithmetic_symmetrization,
    geometric_symmetrization,
    make_matrix,
    numerical_radius_nonneg,
    perron_root,
    scaled_square,
    to_scaled,
)
from .matrixio import parse_matrix_file, write_matrix_csv
from .oracles import (
    JACOBI_MAX_DIM,
    OracleResult,
    gelfand_radius,
    jacobi_eigenvalues,
    jacobi_radius,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "DimensionTooLargeError",
    "EmptyMatrixError",
    "InvalidToleranceError",
    "JACOBI_MAX_DIM",
    "KernelSpec",
    "NegativeEntryError",
    "NoConvergenceError",
    "NonFiniteEntryError",
    "NonFiniteKernelValueError",
    "NonnegMatrix",
    "NoStabilizationError",
    "NotSquareError",
    "OracleResult",
    "ParseError",
    "ScaledMatrix",
    "ShiftSpec",
    "SpecradError",
    "SymmetricNonnegMatrix",
    "TruncationTooSmallError",
    "arithmetic_symmetrization",
    "build_shift",
    "discretize",
    "gelfand_radius",
    "geometric_symmetrization",
    "jacobi_eigenvalues",
    "jacobi_radius",
    "kernel_bounds",
    "lower_sequence",
    "make_matrix",
    "min_kernel",
    "min_twisted_kernel",
    "numerical_radius_nonneg",
    "parse_matrix_file",
    "perron_root",
    "sandwich",
    "scaled_square",
    "table_kernel",
    "to_scaled",
    "upper_sequence",
    "write_matrix_csv",
    "DEFAULT_EIG_TOL",
    "DEFAULT_GAP_TOL",
    "DEFAULT_KMAX",
    "DEFAULT_MAX_ITER",
]
