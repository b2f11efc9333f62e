"""Builtin kernels on [0,1]^2 and weighted-shift truncations.

Kernels are turned into matrices by the midpoint Nystrom rule on a uniform
grid: K[i][j] = k(x_i, x_j) / n at nodes x_i = (i + 1/2)/n.  Midpoint
weights keep nonnegativity and symmetry exact.  Weighted shifts are
truncated to their n x n leading principal section, so spectral quantities
carry an O(1/n)-scale truncation error that the callers' tolerances must
absorb.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import DEFAULT_GAP_TOL, DEFAULT_KMAX, BoundsReport, sandwich
from .errors import NonFiniteKernelValueError, TruncationTooSmallError
from .matrices import DEFAULT_EIG_TOL, NonnegMatrix, _frozen_array, make_matrix

KIND_MIN = "min"
KIND_MIN_TWISTED = "min-twisted"
KIND_TABLE = "table"

# probe separations stay small so only genuinely degenerate alphas fail the
# g(x,y)g(y,x) = 1 identity check through overflow
_TWIST_PROBE_POINTS = (0.15, 0.3, 0.45)


@dataclass(frozen=True, eq=False)
class KernelSpec:
    """A builtin kernel on [0,1]^2 plus the grid resolution for discretizing it.

    kinds: "min" is k(x,y) = min(x,y); "min-twisted" is min(x,y) multiplied
    by g(x,y) = exp(alpha*(x-y)), which satisfies g(x,y)*g(y,x) = 1; "table"
    takes caller-supplied samples k(x_i, x_j) on the full grid (no
    interpolation).
    """

    kind: str
    grid_size: int
    alpha: float | None = None
    samples: np.ndarray | None = None

    def __post_init__(self) -> None:
        if self.kind not in (KIND_MIN, KIND_MIN_TWISTED, KIND_TABLE):
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        if int(self.grid_size) != self.grid_size or self.grid_size < 2:
            raise ValueError("grid_size must be an integer >= 2")
        if self.kind == KIND_MIN_TWISTED:
            if self.alpha is None or not math.isfinite(self.alpha):
                raise ValueError("min-twisted requires a finite alpha")
            self._check_twist_identity()
        if self.kind == KIND_TABLE:
            if self.samples is None or self.samples.shape != (self.grid_size, self.grid_size):
                raise ValueError("table kernel requires an n x n sample grid")

    def _check_twist_identity(self) -> None:
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            for x in _TWIST_PROBE_POINTS:
                for y in _TWIST_PROBE_POINTS:
                    prod = math.exp(self.alpha * (x - y)) * math.exp(self.alpha * (y - x))
                    if not abs(prod - 1.0) <= 1e-12:
                        raise ValueError(
                            f"g(x,y)*g(y,x) deviates from 1 at ({x}, {y}) for alpha={self.alpha}"
                        )


def min_kernel(grid_size: int) -> KernelSpec:
    """k(x,y) = min(x,y); symmetric, so its discretization is its own symmetrization."""
    return KernelSpec(KIND_MIN, grid_size)


def min_twisted_kernel(alpha: float, grid_size: int) -> KernelSpec:
    """k(x,y) = min(x,y) * exp(alpha*(x-y)); nonsymmetric for alpha != 0."""
    return KernelSpec(KIND_MIN_TWISTED, grid_size, alpha=float(alpha))


def table_kernel(samples) -> KernelSpec:
    """Kernel given by a full grid of sample values; validated like a matrix."""
    validated = make_matrix(samples)
    if validated.n < 2:
        raise ValueError("table kernel needs a grid of at least 2 x 2 samples")
    return KernelSpec(KIND_TABLE, validated.n, samples=validated.entries)


@dataclass(frozen=True, eq=False)
class ShiftSpec:
    """Weighted unilateral shift family, truncated to n x n.

    The weight pattern has period 2^p: (2^p - 1) ones followed by one
    2^(2^p).  At least two full periods are required, so n >= 2^(p+1).
    """

    p: int
    n: int

    def __post_init__(self) -> None:
        if int(self.p) != self.p or self.p < 1:
            raise ValueError("p must be an integer >= 1")
        if math.isinf(2.0 ** (2**self.p)):
            raise ValueError(f"weight 2^(2^{self.p}) overflows double precision")
        if int(self.n) != self.n or self.n < 2 ** (self.p + 1):
            raise TruncationTooSmallError(self.n, 2 ** (self.p + 1))

    @property
    def period(self) -> int:
        return 2**self.p

    @property
    def big_weight(self) -> float:
        return 2.0 ** (2**self.p)


def discretize(spec: KernelSpec) -> NonnegMatrix:
    """Midpoint Nystrom matrix K[i][j] = k(x_i, x_j)/n, x_i = (i + 1/2)/n."""
    n = spec.grid_size
    if spec.kind == KIND_TABLE:
        values = spec.samples
    else:
        x = (np.arange(n) + 0.5) / n
        values = np.minimum.outer(x, x)
        if spec.kind == KIND_MIN_TWISTED:
            with np.errstate(over="ignore", under="ignore"):
                values = values * np.exp(spec.alpha * (x[:, None] - x[None, :]))
    weighted = values / n
    bad = ~np.isfinite(weighted)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise NonFiniteKernelValueError(int(i), int(j))
    return NonnegMatrix(_frozen_array(weighted))


def build_shift(spec: ShiftSpec) -> NonnegMatrix:
    """n x n truncation of the weighted shift: subdiagonal w_1 .. w_(n-1)."""
    weights = np.ones(spec.n - 1)
    weights[spec.period - 1 :: spec.period] = spec.big_weight
    matrix = np.zeros((spec.n, spec.n))
    matrix[np.arange(1, spec.n), np.arange(spec.n - 1)] = weights
    return NonnegMatrix(_frozen_array(matrix))


def kernel_bounds(
    spec: KernelSpec,
    k_max: int = DEFAULT_KMAX,
    gap_tol: float = DEFAULT_GAP_TOL,
) -> BoundsReport:
    """Sandwich bounds for the discretized kernel operator."""
    return sandwich(discretize(spec), k_max, gap_tol, DEFAULT_EIG_TOL)
