"""Dense nonnegative matrices, their two symmetrizations, and Perron roots.

The geometric symmetrization replaces each pair of opposite entries by the
geometric mean sqrt(a_ij * a_ji); the arithmetic symmetrization by their
average (A + A^T)/2.  Both produce bit-exactly symmetric matrices and are
positively homogeneous, so huge powers of a matrix can be kept in a
rescaled representation (ScaledMatrix) and symmetrized there without ever
overflowing double precision.

All types are immutable after construction (the backing arrays are marked
read-only) and every operation is a pure function of its inputs, so values
can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyMatrixError,
    InvalidToleranceError,
    NegativeEntryError,
    NoConvergenceError,
    NonFiniteEntryError,
)

DEFAULT_EIG_TOL = 1e-12
DEFAULT_MAX_ITER = 100_000


def _frozen_array(values: np.ndarray) -> np.ndarray:
    out = np.array(values, dtype=np.float64, order="C")
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class NonnegMatrix:
    """Square matrix of finite nonnegative doubles.

    ``make_matrix`` is the validating entry point; code inside the package
    wraps arrays that are nonnegative by construction.  The stored array is
    float64, C-contiguous and read-only.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = self.entries
        if not isinstance(arr, np.ndarray) or arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("entries must be a square 2-d array")
        if arr.dtype != np.float64 or arr.flags.writeable or not arr.flags.c_contiguous:
            object.__setattr__(self, "entries", _frozen_array(arr))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def max_entry(self) -> float:
        return float(self.entries.max())

    def is_zero(self) -> bool:
        return not self.entries.any()

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries.T))


@dataclass(frozen=True, eq=False)
class SymmetricNonnegMatrix:
    """Nonnegative matrix whose symmetry is guaranteed by construction.

    Instances come out of the two symmetrizations (bit-exact symmetry) or
    out of :meth:`from_matrix`, which verifies exact symmetry.
    """

    inner: NonnegMatrix

    @classmethod
    def from_matrix(cls, matrix: NonnegMatrix) -> "SymmetricNonnegMatrix":
        if not matrix.is_symmetric():
            raise ValueError("matrix is not exactly symmetric")
        return cls(matrix)

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def entries(self) -> np.ndarray:
        return self.inner.entries


@dataclass(frozen=True, eq=False)
class ScaledMatrix:
    """A matrix stored as exp(log_scale) * base.

    The largest entry of ``base`` lies in (0, 1], except that the zero
    matrix is stored as itself with log_scale 0.  Repeated squaring in this
    representation reaches powers like A^(2^30) whose raw entries would
    overflow doubles by hundreds of orders of magnitude.
    """

    base: NonnegMatrix
    log_scale: float

    def is_zero(self) -> bool:
        return self.base.is_zero()

    def represented(self) -> np.ndarray:
        """Dense value exp(log_scale) * base; only safe when it fits in doubles."""
        return math.exp(self.log_scale) * self.base.entries


def make_matrix(raw) -> NonnegMatrix:
    """Validate a square array of finite nonnegative reals.

    Raises EmptyMatrixError for 0 rows, NonFiniteEntryError on NaN or
    infinity, NegativeEntryError on a negative entry (first offender in
    row-major order), and ValueError if the input is not square.
    """
    arr = np.asarray(raw, dtype=np.float64)
    if arr.size == 0:
        raise EmptyMatrixError()
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    bad = ~np.isfinite(arr)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise NonFiniteEntryError(int(i), int(j), float(arr[i, j]))
    neg = arr < 0.0
    if neg.any():
        i, j = np.argwhere(neg)[0]
        raise NegativeEntryError(int(i), int(j), float(arr[i, j]))
    return NonnegMatrix(_frozen_array(arr))


def arithmetic_symmetrization(matrix: NonnegMatrix) -> SymmetricNonnegMatrix:
    """(A + A^T)/2, the symmetric matrix sharing A's numerical radius."""
    e = matrix.entries
    return SymmetricNonnegMatrix(NonnegMatrix(_frozen_array((e + e.T) * 0.5)))


def geometric_symmetrization(matrix: NonnegMatrix) -> SymmetricNonnegMatrix:
    """Entrywise sqrt(a_ij * a_ji); never exceeds the arithmetic symmetrization."""
    e = matrix.entries
    return SymmetricNonnegMatrix(NonnegMatrix(_frozen_array(np.sqrt(e * e.T))))


def to_scaled(matrix: NonnegMatrix) -> ScaledMatrix:
    """Normalize by the maximum entry, remembering the scale as a natural log."""
    m = matrix.max_entry()
    if m == 0.0:
        return ScaledMatrix(matrix, 0.0)
    return ScaledMatrix(NonnegMatrix(_frozen_array(matrix.entries / m)), math.log(m))


def scaled_square(scaled: ScaledMatrix) -> ScaledMatrix:
    """Square the represented matrix, renormalizing the base afterwards.

    The represented value of the result equals the square of the input's
    represented value; a square that vanishes exactly is returned as the
    canonical zero ScaledMatrix (log_scale 0).
    """
    e = scaled.base.entries
    sq = e @ e
    m = float(sq.max())
    if m == 0.0:
        return ScaledMatrix(NonnegMatrix(_frozen_array(sq)), 0.0)
    return ScaledMatrix(
        NonnegMatrix(_frozen_array(sq / m)),
        2.0 * scaled.log_scale + math.log(m),
    )


def perron_root(
    sym: SymmetricNonnegMatrix,
    tol: float = DEFAULT_EIG_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> float:
    """Spectral radius of a symmetric nonnegative matrix.

    Power iteration on the shifted matrix S + s*I with s the maximum row
    sum.  The shift pushes every eigenvalue into [0, 2s], so the dominant
    eigenvalue of the shifted matrix is exactly r(S) + s and the iteration
    cannot oscillate on periodic (bipartite-like) structures.  The all-ones
    start vector always has positive overlap with a nonnegative Perron
    vector.  Iteration stops once successive Rayleigh estimates differ by
    at most tol * max(1, estimate); the zero matrix short-circuits to 0.

    Raises NoConvergenceError if the criterion is not met within max_iter.
    """
    if tol <= 0.0:
        raise InvalidToleranceError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    e = sym.entries
    if not e.any():
        return 0.0
    shift = float(e.sum(axis=1).max())
    x = np.full(sym.n, 1.0 / math.sqrt(sym.n))
    estimate = math.inf
    for _ in range(max_iter):
        y = e @ x
        new = float(x @ y)
        if abs(new - estimate) <= tol * max(1.0, new):
            return new
        estimate = new
        z = y + shift * x
        x = z / np.linalg.norm(z)
    raise NoConvergenceError(estimate, max_iter)


def numerical_radius_nonneg(
    matrix: NonnegMatrix,
    tol: float = DEFAULT_EIG_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> float:
    """Numerical radius of a nonnegative matrix.

    For nonnegative A the numerical radius coincides with the spectral
    radius of the arithmetic symmetrization, which is what gets computed.
    """
    return perron_root(arithmetic_symmetrization(matrix), tol, max_iter)
