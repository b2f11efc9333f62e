"""Reading and writing dense matrices: headerless CSV and Matrix Market.

Matrix Market support is deliberately narrow: "matrix array real general"
and "matrix coordinate real general" only, with 1-based coordinate indices
and unspecified coordinates defaulting to 0.  CSV is one row per line,
comma-separated decimal literals, no header; entries are written with 17
significant digits so a write/parse round trip is bit-exact.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import NotSquareError, ParseError
from .matrices import NonnegMatrix, make_matrix

FORMAT_CSV = "csv"
FORMAT_MM = "mm"  # auto-detect array vs coordinate from the header
FORMAT_MM_ARRAY = "mm-array"
FORMAT_MM_COORDINATE = "mm-coordinate"

_FORMATS = (FORMAT_CSV, FORMAT_MM, FORMAT_MM_ARRAY, FORMAT_MM_COORDINATE)


def parse_matrix_file(path: str | Path, fmt: str = FORMAT_CSV) -> NonnegMatrix:
    """Parse and validate a matrix file.

    Raises ParseError (with a 1-based line number), NotSquareError, or the
    validation errors of make_matrix (e.g. NegativeEntryError).
    """
    if fmt not in _FORMATS:
        raise ValueError(f"unknown matrix format {fmt!r}")
    text = Path(path).read_text()
    if fmt == FORMAT_CSV:
        return _parse_csv(text)
    return _parse_matrix_market(text, fmt)


def write_matrix_csv(matrix: NonnegMatrix, path: str | Path) -> None:
    """Write CSV that parses back bit-exactly (17 significant digits)."""
    rows = (",".join(f"{v:.17g}" for v in row) for row in matrix.entries)
    Path(path).write_text("\n".join(rows) + "\n")


def _parse_csv(text: str) -> NonnegMatrix:
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise ParseError(1, "empty file")
    rows: list[list[float]] = []
    width = None
    for lineno, line in enumerate(lines, start=1):
        fields = [f.strip() for f in line.split(",")]
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise ParseError(lineno, f"expected {width} fields, got {len(fields)}")
        try:
            rows.append([float(f) for f in fields])
        except ValueError:
            bad = next(f for f in fields if not _is_number(f))
            raise ParseError(lineno, f"not a number: {bad!r}") from None
    if len(rows) != width:
        raise NotSquareError(len(rows), width)
    return make_matrix(rows)


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def _parse_matrix_market(text: str, fmt: str) -> NonnegMatrix:
    lines = text.split("\n")
    if not lines or not lines[0].startswith("%%MatrixMarket"):
        raise ParseError(1, "missing %%MatrixMarket header")
    header = lines[0].split()
    if len(header) != 5:
        raise ParseError(1, f"malformed header: {lines[0]!r}")
    _, obj, layout, field, symmetry = (tok.lower() for tok in header)
    if obj != "matrix":
        raise ParseError(1, f"unsupported object {obj!r}")
    if layout not in ("array", "coordinate"):
        raise ParseError(1, f"unsupported layout {layout!r}")
    if field != "real":
        raise ParseError(1, f"unsupported field {field!r} (only real)")
    if symmetry != "general":
        raise ParseError(1, f"unsupported symmetry {symmetry!r} (only general)")
    if fmt == FORMAT_MM_ARRAY and layout != "array":
        raise ParseError(1, "expected an array-layout Matrix Market file")
    if fmt == FORMAT_MM_COORDINATE and layout != "coordinate":
        raise ParseError(1, "expected a coordinate-layout Matrix Market file")

    # (line number, token list) for every non-comment, non-blank line
    content: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        content.append((lineno, stripped.split()))
    if not content:
        raise ParseError(len(lines), "missing size line")

    size_line, size_tokens = content[0]
    expected = 2 if layout == "array" else 3
    if len(size_tokens) != expected:
        raise ParseError(size_line, f"size line needs {expected} integers")
    try:
        dims = [int(tok) for tok in size_tokens]
    except ValueError:
        raise ParseError(size_line, "size line must contain integers") from None
    rows, cols = dims[0], dims[1]
    if rows != cols:
        raise NotSquareError(rows, cols)

    if layout == "array":
        return _read_array_body(content[1:], rows, cols)
    return _read_coordinate_body(content[1:], rows, cols, dims[2], size_line)


def _read_array_body(content: list[tuple[int, list[str]]], rows: int, cols: int) -> NonnegMatrix:
    values: list[float] = []
    for lineno, tokens in content:
        for tok in tokens:
            if len(values) == rows * cols:
                raise ParseError(lineno, "more values than rows*cols")
            try:
                values.append(float(tok))
            except ValueError:
                raise ParseError(lineno, f"not a number: {tok!r}") from None
    if len(values) != rows * cols:
        last = content[-1][0] if content else 0
        raise ParseError(last + 1, f"expected {rows * cols} values, got {len(values)}")
    # Matrix Market array data is column-major
    arr = np.array(values).reshape((rows, cols), order="F")
    return make_matrix(arr)


def _read_coordinate_body(
    content: list[tuple[int, list[str]]],
    rows: int,
    cols: int,
    nnz: int,
    size_line: int,
) -> NonnegMatrix:
    if len(content) != nnz:
        raise ParseError(size_line, f"expected {nnz} coordinate lines, got {len(content)}")
    arr = np.zeros((rows, cols))
    seen: set[tuple[int, int]] = set()
    for lineno, tokens in content:
        if len(tokens) != 3:
            raise ParseError(lineno, "coordinate lines need: row col value")
        try:
            i = int(tokens[0])
            j = int(tokens[1])
            value = float(tokens[2])
        except ValueError:
            raise ParseError(lineno, f"malformed coordinate line: {' '.join(tokens)!r}") from None
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise ParseError(lineno, f"index ({i}, {j}) outside 1..{rows}")
        if (i, j) in seen:
            raise ParseError(lineno, f"duplicate entry for ({i}, {j})")
        seen.add((i, j))
        arr[i - 1, j - 1] = value
    return make_matrix(arr)
