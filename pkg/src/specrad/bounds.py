"""Monotone two-sided bound sequences for the spectral radius.

For a nonnegative matrix A, with S the geometric and M the arithmetic
symmetrization,

    rho_k   = r(S(A^(2^k)))^(2^-k)    nondecreasing lower bounds,
    sigma_k = r(M(A^(2^k)))^(2^-k)    nonincreasing upper bounds,

and sigma_k converges to r(A).  The lower sequence may stagnate strictly
below r(A) (the 3x3 cyclic permutation pins every rho_k at 0 while
r(A) = 1), so an unconverged sandwich is a legitimate outcome, not an
error.

Powers are carried as ScaledMatrix values and the 2^-k-th roots are taken
in the log domain, so inputs whose powers overflow doubles still produce
finite bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidToleranceError, NoConvergenceError
from .matrices import (
    DEFAULT_EIG_TOL,
    DEFAULT_MAX_ITER,
    NonnegMatrix,
    ScaledMatrix,
    SymmetricNonnegMatrix,
    arithmetic_symmetrization,
    geometric_symmetrization,
    perron_root,
    scaled_square,
    to_scaled,
)

DEFAULT_KMAX = 30
DEFAULT_GAP_TOL = 1e-8


@dataclass(frozen=True)
class BoundsReport:
    """Both bound sequences plus the resulting enclosure of r(A).

    ``final_interval`` is (max rho, min sigma); ``converged`` records
    whether the gap closed below the requested tolerance before the ladder
    ran out.  ``per_level_log_scale`` holds the natural-log scale factor of
    A^(2^k) at each computed level, as an overflow diagnostic.
    """

    rho: list[float]
    sigma: list[float]
    k_max: int
    converged: bool
    final_interval: tuple[float, float]
    per_level_log_scale: list[float]


def _scaled_powers(matrix: NonnegMatrix, k_max: int) -> Iterator[tuple[int, ScaledMatrix]]:
    level = to_scaled(matrix)
    for k in range(k_max + 1):
        if k > 0:
            level = scaled_square(level)
        yield k, level


def _root_bound(sym: SymmetricNonnegMatrix, k: int, log_scale: float, eig_tol: float) -> float:
    try:
        value = perron_root(sym, eig_tol, DEFAULT_MAX_ITER)
    except NoConvergenceError as err:
        raise NoConvergenceError(err.last_estimate, err.iterations, level=k) from err
    if value <= 0.0:
        return 0.0
    return math.exp((math.log(value) + log_scale) / 2.0**k)


def _validate(k_max: int, eig_tol: float) -> None:
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    if eig_tol <= 0.0:
        raise InvalidToleranceError("eig_tol must be positive")


def lower_sequence(
    matrix: NonnegMatrix,
    k_max: int = DEFAULT_KMAX,
    eig_tol: float = DEFAULT_EIG_TOL,
) -> list[float]:
    """Lower bounds rho_0 .. rho_k_max for the spectral radius.

    Each rho_k is a valid lower bound on its own; the sequence is
    nondecreasing but need not converge to r(A).  A level whose geometric
    symmetrization vanishes contributes an exact 0 (never a logarithm of
    zero).  NoConvergenceError from the eigenvalue iteration is re-raised
    with the failing level attached.
    """
    _validate(k_max, eig_tol)
    return [
        _root_bound(geometric_symmetrization(level.base), k, level.log_scale, eig_tol)
        for k, level in _scaled_powers(matrix, k_max)
    ]


def upper_sequence(
    matrix: NonnegMatrix,
    k_max: int = DEFAULT_KMAX,
    eig_tol: float = DEFAULT_EIG_TOL,
) -> list[float]:
    """Upper bounds sigma_0 .. sigma_k_max for the spectral radius.

    The sequence is nonincreasing and converges to r(A) as k grows.
    """
    _validate(k_max, eig_tol)
    return [
        _root_bound(arithmetic_symmetrization(level.base), k, level.log_scale, eig_tol)
        for k, level in _scaled_powers(matrix, k_max)
    ]


def sandwich(
    matrix: NonnegMatrix,
    k_max: int = DEFAULT_KMAX,
    gap_tol: float = DEFAULT_GAP_TOL,
    eig_tol: float = DEFAULT_EIG_TOL,
) -> BoundsReport:
    """Compute both bound sequences over one shared squaring ladder.

    The ladder A, A^2, A^4, ... is built once and both symmetrizations are
    taken at every level.  The run stops early with converged=True as soon
    as min(sigma) - max(rho) <= gap_tol * max(1, min(sigma)); the gap
    criterion is deliberate, because rho alone may stagnate below r(A) and
    its stagnation must not be read as convergence.

    If some power A^(2^k) vanishes exactly (a nilpotent input, e.g. a
    truncated shift), the ladder stops at the last nonvanishing level; the
    reported interval still brackets the spectral radius.  An unconverged
    report is a valid outcome and carries the honest interval.
    """
    if gap_tol <= 0.0:
        raise InvalidToleranceError("gap_tol must be positive")
    _validate(k_max, eig_tol)
    rho: list[float] = []
    sigma: list[float] = []
    log_scales: list[float] = []
    converged = False
    for k, level in _scaled_powers(matrix, k_max):
        if k > 0 and level.is_zero():
            break  # nilpotent collapse: keep the bounds from the nonzero powers
        rho.append(_root_bound(geometric_symmetrization(level.base), k, level.log_scale, eig_tol))
        sigma.append(_root_bound(arithmetic_symmetrization(level.base), k, level.log_scale, eig_tol))
        log_scales.append(level.log_scale)
        gap = min(sigma) - max(rho)
        if gap <= gap_tol * max(1.0, min(sigma)):
            converged = True
            break
    return BoundsReport(
        rho=rho,
        sigma=sigma,
        k_max=len(rho) - 1,
        converged=converged,
        final_interval=(max(rho), min(sigma)),
        per_level_log_scale=log_scales,
    )
