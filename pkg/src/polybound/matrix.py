"""Square integer matrices, their file formats, and magnitude statistics.

Two text formats are supported:

* dense: a header line ``n n`` followed by ``n`` lines of ``n``
  whitespace-separated signed decimal integers;
* sms (sparse): a header line ``rows cols M`` followed by 1-based triples
  ``i j value``, terminated by the sentinel line ``0 0 0``.  Entries not
  listed are zero; duplicate ``(i, j)`` triples are resolved last-write-wins.

Matrices are immutable after construction.  The magnitude statistics every
bound consumes (max absolute entry, row/column absolute sums) are computed
lazily and cached; recomputation is idempotent, so sharing one matrix across
concurrent workers is safe.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable


class MatrixFormatError(ValueError):
    """A matrix stream could not be parsed into a square integer matrix."""


class IntegerMatrix:
    """Immutable n-by-n matrix of arbitrary-precision integers."""

    def __init__(self, rows: Iterable[Iterable[int]]):
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(entries)
        if n < 1:
            raise MatrixFormatError("matrix must have dimension n >= 1")
        for row in entries:
            if len(row) != n:
                raise MatrixFormatError(
                    f"matrix is not square: {n} rows but a row of length {len(row)}"
                )
        self._entries = entries
        self._n = n

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Iterable[int]) -> "IntegerMatrix":
        vals = list(values)
        n = len(vals)
        return cls([[vals[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def entries(self) -> tuple[tuple[int, ...], ...]:
        return self._entries

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._entries[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerMatrix) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"IntegerMatrix(n={self._n})"

    # Cached magnitude statistics.  cached_property writes straight into the
    # instance dict: a concurrent recompute lands on the same values.

    @cached_property
    def max_abs(self) -> int:
        """B, the maximum absolute entry (0 for the zero matrix)."""
        return max(abs(x) for row in self._entries for x in row)

    @cached_property
    def row_abs_sums(self) -> tuple[int, ...]:
        return tuple(sum(abs(x) for x in row) for row in self._entries)

    @cached_property
    def col_abs_sums(self) -> tuple[int, ...]:
        sums = [0] * self._n
        for row in self._entries:
            for j, x in enumerate(row):
                sums[j] += abs(x)
        return tuple(sums)

    @cached_property
    def off_diag_row_sums(self) -> tuple[int, ...]:
        return tuple(
            s - abs(self._entries[i][i]) for i, s in enumerate(self.row_abs_sums)
        )

    @cached_property
    def off_diag_col_sums(self) -> tuple[int, ...]:
        return tuple(
            s - abs(self._entries[i][i]) for i, s in enumerate(self.col_abs_sums)
        )


def magnitude_stats(
    a: IntegerMatrix,
) -> tuple[int, tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Recompute (B, rowAbsSums, colAbsSums, offDiagRowSums) from the entries.

    Pure and independent of the cached properties, so it doubles as the
    cache-coherence oracle in the test suite.
    """
    n = a.n
    b = 0
    rows = [0] * n
    cols = [0] * n
    for i, row in enumerate(a.entries):
        for j, x in enumerate(row):
            ax = abs(x)
            if ax > b:
                b = ax
            rows[i] += ax
            cols[j] += ax
    off = [rows[i] - abs(a.entries[i][i]) for i in range(n)]
    return b, tuple(rows), tuple(cols), tuple(off)


def _as_text(source) -> str:
    if isinstance(source, bytes):
        return source.decode("ascii")
    if isinstance(source, str):
        return source
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("ascii")
    return data


def _sniff_format(text: str) -> str:
    for line in text.splitlines():
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) == 2:
            return "dense"
        if len(tokens) == 3:
            return "sms"
        raise MatrixFormatError(
            f"cannot detect format: header has {len(tokens)} fields"
        )
    raise MatrixFormatError("empty matrix stream")


def _parse_int(token: str, context: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MatrixFormatError(f"malformed {context}: {token!r} is not an integer") from None


def _parse_dense(text: str) -> IntegerMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty matrix stream")
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatError(f"malformed dense header: {lines[0]!r}")
    rows = _parse_int(header[0], "dense header")
    cols = _parse_int(header[1], "dense header")
    if rows != cols:
        raise MatrixFormatError(f"non-square matrix: {rows} x {cols}")
    if rows < 1:
        raise MatrixFormatError("matrix must have dimension n >= 1")
    if len(lines) - 1 != rows:
        raise MatrixFormatError(
            f"dimension mismatch: header declares {rows} rows, found {len(lines) - 1}"
        )
    data = []
    for ln in lines[1:]:
        tokens = ln.split()
        if len(tokens) != cols:
            raise MatrixFormatError(
                f"dimension mismatch: expected {cols} entries per row, got {len(tokens)}"
            )
        data.append([_parse_int(t, "dense row") for t in tokens])
    return IntegerMatrix(data)


def _parse_sms(text: str) -> IntegerMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty matrix stream")
    header = lines[0].split()
    if len(header) != 3 or header[2] != "M":
        raise MatrixFormatError(f"malformed sms header: {lines[0]!r}")
    rows = _parse_int(header[0], "sms header")
    cols = _parse_int(header[1], "sms header")
    if rows != cols:
        raise MatrixFormatError(f"non-square matrix: {rows} x {cols}")
    if rows < 1:
        raise MatrixFormatError("matrix must have dimension n >= 1")
    data = [[0] * cols for _ in range(rows)]
    terminated = False
    for ln in lines[1:]:
        tokens = ln.split()
        if len(tokens) != 3:
            raise MatrixFormatError(f"malformed sms triple: {ln!r}")
        i = _parse_int(tokens[0], "sms triple")
        j = _parse_int(tokens[1], "sms triple")
        v = _parse_int(tokens[2], "sms triple")
        if i == 0 and j == 0 and v == 0:
            terminated = True
            break
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise MatrixFormatError(
                f"sms index ({i}, {j}) outside 1..{rows} x 1..{cols}"
            )
        data[i - 1][j - 1] = v  # last write wins on duplicates
    if not terminated:
        raise MatrixFormatError("sms stream missing '0 0 0' terminator")
    return IntegerMatrix(data)


def load_matrix(source, fmt: str = "auto") -> IntegerMatrix:
    """Parse a matrix from a string, bytes, or readable stream.

    ``fmt`` is one of ``"dense"``, ``"sms"``, or ``"auto"`` (detect from the
    header: two fields means dense, three fields means sms).
    """
    text = _as_text(source)
    if fmt == "auto":
        fmt = _sniff_format(text)
    if fmt == "dense":
        return _parse_dense(text)
    if fmt == "sms":
        return _parse_sms(text)
    raise ValueError(f"unknown matrix format {fmt!r}")


def dump_dense(a: IntegerMatrix) -> str:
    lines = [f"{a.n} {a.n}"]
    lines.extend(" ".join(str(x) for x in row) for row in a.entries)
    return "\n".join(lines) + "\n"


def dump_sms(a: IntegerMatrix) -> str:
    lines = [f"{a.n} {a.n} M"]
    for i, row in enumerate(a.entries):
        for j, x in enumerate(row):
            if x:
                lines.append(f"{i + 1} {j + 1} {x}")
    lines.append("0 0 0")
    return "\n".join(lines) + "\n"
