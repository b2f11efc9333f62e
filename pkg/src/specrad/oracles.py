"""Independent spectral-radius references used to cross-check the bounds.

Two oracles, chosen so that neither shares code with the power iteration
they validate: a norm-root (Gelfand-formula) estimator driven by LAPACK's
SVD, and a cyclic Jacobi eigensolver for small symmetric matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionTooLargeError,
    InvalidToleranceError,
    NoConvergenceError,
    NoStabilizationError,
)
from .matrices import NonnegMatrix, SymmetricNonnegMatrix, scaled_square, to_scaled

DEFAULT_GELFAND_LEVELS = 60
DEFAULT_GELFAND_TOL = 1e-10
JACOBI_MAX_DIM = 64
_JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class OracleResult:
    """Value of a reference computation plus how hard it had to work.

    ``steps`` counts squaring levels for the Gelfand oracle and full sweeps
    for Jacobi; ``residual`` is the last relative change (Gelfand) or the
    final off-diagonal mass relative to the Frobenius norm (Jacobi).
    """

    value: float
    method: str  # "gelfand" | "jacobi"
    steps: int
    residual: float


def gelfand_radius(
    matrix: NonnegMatrix,
    max_levels: int = DEFAULT_GELFAND_LEVELS,
    tol: float = DEFAULT_GELFAND_TOL,
) -> OracleResult:
    """Estimate r(A) from the norm-root limit ||A^m||^(1/m) along m = 2^k.

    Walks the ScaledMatrix squaring ladder, taking the operator 2-norm of
    the scaled base at every level and correcting by the accumulated log
    scale, and returns as soon as two successive estimates agree to
    tol * max(1, estimate).  The norm comes from LAPACK's SVD, so the value
    is independent of the package's own eigenvalue iteration.  A power that
    vanishes exactly yields the estimate 0 (nilpotent input).

    Raises NoStabilizationError when the estimates still disagree at
    max_levels.
    """
    if tol <= 0.0:
        raise InvalidToleranceError("tol must be positive")
    if max_levels < 1:
        raise ValueError("max_levels must be at least 1")
    level = to_scaled(matrix)
    est_prev: float | None = None
    residual = math.inf
    for k in range(max_levels + 1):
        if k > 0:
            level = scaled_square(level)
        base = level.base.entries
        if base.any():
            norm = float(np.linalg.norm(base, 2))
            est = math.exp((math.log(norm) + level.log_scale) / 2.0**k)
        else:
            est = 0.0
        if est_prev is not None:
            residual = abs(est - est_prev) / max(1.0, est)
            if residual <= tol:
                return OracleResult(value=est, method="gelfand", steps=k, residual=residual)
        est_prev = est
    raise NoStabilizationError(est_prev if est_prev is not None else math.nan, max_levels, residual)


def _jacobi_diagonalize(sym: SymmetricNonnegMatrix, tol: float) -> tuple[np.ndarray, int, float]:
    if sym.n > JACOBI_MAX_DIM:
        raise DimensionTooLargeError(sym.n, JACOBI_MAX_DIM)
    if tol <= 0.0:
        raise InvalidToleranceError("tol must be positive")
    a = sym.entries.copy()
    n = sym.n
    norm_f = float(np.linalg.norm(a))
    if norm_f == 0.0:
        return np.diag(a), 0, 0.0

    def off_ratio() -> float:
        off = a - np.diag(np.diag(a))
        return float(np.linalg.norm(off)) / norm_f

    ratio = off_ratio()
    sweeps = 0
    while ratio > tol:
        if sweeps >= _JACOBI_MAX_SWEEPS:
            raise NoConvergenceError(float(np.max(np.diag(a))), sweeps)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                phi = 0.5 * math.atan2(2.0 * apq, a[q, q] - a[p, p])
                c = math.cos(phi)
                s = math.sin(phi)
                # two-sided rotation G^T A G in the (p, q) plane
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        ratio = off_ratio()
    return np.diag(a), sweeps, ratio


def jacobi_eigenvalues(sym: SymmetricNonnegMatrix, tol: float = 1e-12) -> list[float]:
    """All eigenvalues of a small symmetric nonnegative matrix, descending.

    Cyclic Jacobi rotations run until the off-diagonal Frobenius mass drops
    below tol times the Frobenius norm.  Restricted to n <= 64: this is a
    reference implementation for validating other code paths, not a
    production eigensolver.  Raises DimensionTooLargeError beyond the limit.
    """
    diag, _, _ = _jacobi_diagonalize(sym, tol)
    return [float(v) for v in np.sort(diag)[::-1]]


def jacobi_radius(sym: SymmetricNonnegMatrix, tol: float = 1e-12) -> OracleResult:
    """Largest Jacobi eigenvalue packaged with sweep count and residual."""
    diag, sweeps, ratio = _jacobi_diagonalize(sym, tol)
    return OracleResult(value=float(diag.max()), method="jacobi", steps=sweeps, residual=ratio)
