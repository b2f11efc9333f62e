"""Exception hierarchy for the specrad package."""

from __future__ import annotations


class SpecradError(Exception):
    """Base class for every error this package raises deliberately."""


class EmptyMatrixError(SpecradError):
    """A 0x0 matrix was supplied."""

    def __init__(self) -> None:
        super().__init__("matrix must have dimension at least 1")


class NegativeEntryError(SpecradError):
    """An entry violates the nonnegativity requirement."""

    def __init__(self, i: int, j: int, value: float) -> None:
        self.i = i
        self.j = j
        self.value = value
        super().__init__(f"entry ({i}, {j}) is negative: {value!r}")


class NonFiniteEntryError(SpecradError):
    """An entry is NaN or infinite."""

    def __init__(self, i: int, j: int, value: float) -> None:
        self.i = i
        self.j = j
        self.value = value
        super().__init__(f"entry ({i}, {j}) is not finite: {value!r}")


class InvalidToleranceError(SpecradError, ValueError):
    """A tolerance argument is zero or negative."""


class NoConvergenceError(SpecradError):
    """An eigenvalue iteration did not meet its stopping criterion."""

    def __init__(self, last_estimate: float, iterations: int, level: int | None = None) -> None:
        self.last_estimate = last_estimate
        self.iterations = iterations
        self.level = level
        where = "" if level is None else f" (squaring level {level})"
        super().__init__(
            f"no convergence after {iterations} iterations{where}; "
            f"last estimate {last_estimate!r}"
        )


class NoStabilizationError(SpecradError):
    """The norm-root estimates kept changing through the last squaring level."""

    def __init__(self, last_estimate: float, levels: int, residual: float) -> None:
        self.last_estimate = last_estimate
        self.levels = levels
        self.residual = residual
        super().__init__(
            f"estimates did not stabilize within {levels} squaring levels; "
            f"last estimate {last_estimate!r}, last relative change {residual!r}"
        )


class DimensionTooLargeError(SpecradError):
    """The matrix exceeds the size limit of a small-instance routine."""

    def __init__(self, n: int, limit: int) -> None:
        self.n = n
        self.limit = limit
        super().__init__(f"dimension {n} exceeds the limit of {limit}")


class NonFiniteKernelValueError(SpecradError):
    """A kernel evaluated to NaN or infinity at a grid point."""

    def __init__(self, i: int, j: int) -> None:
        self.i = i
        self.j = j
        super().__init__(f"kernel value at grid point ({i}, {j}) is not finite")


class TruncationTooSmallError(SpecradError):
    """A shift truncation is shorter than two full weight periods."""

    def __init__(self, n: int, required: int) -> None:
        self.n = n
        self.required = required
        super().__init__(f"truncation dimension {n} is below the minimum of {required}")


class ParseError(SpecradError):
    """A matrix file could not be parsed."""

    def __init__(self, line: int, reason: str) -> None:
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class NotSquareError(SpecradError):
    """A parsed matrix is not square."""

    def __init__(self, rows: int, cols: int) -> None:
        self.rows = rows
        self.cols = cols
        super().__init__(f"matrix is not square: {rows} rows, {cols} columns")
