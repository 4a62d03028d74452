"""Dense exact matrices over the Gaussian rationals.

``CMatrix`` is immutable: every operation returns a new matrix, so values
can be shared freely between threads and cached without copying.  Public
row and column indices are 1-based throughout the package, matching the
usual mathematical convention for minors and index sets; internal storage
is an ordinary 0-based tuple of row tuples.

Determinants use fraction-free (Bareiss-style) elimination to keep the
intermediate rationals small; rank uses plain exact Gaussian elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import GaussianRational, ONE, ZERO


class ShapeError(ValueError):
    """Operand dimensions do not fit the requested operation."""


class DimensionLimitError(ValueError):
    """A combinatorial computation was asked for above the configured size cap."""


# Minor-sum costs grow like C(n, r), so the expensive entry points refuse
# matrices beyond this limit unless the caller raises it explicitly
# (set_max_dimension, or the CLI's --max-dimension / DRAZIN_MAX_DIM).
DEFAULT_MAX_DIMENSION = 10
_max_dimension = DEFAULT_MAX_DIMENSION


def max_dimension() -> int:
    return _max_dimension


def set_max_dimension(limit: int) -> None:
    """Raise or lower the size cap applied by the combinatorial entry points."""
    if not isinstance(limit, int) or limit < 1:
        raise ValueError("dimension limit must be a positive integer")
    global _max_dimension
    _max_dimension = limit


def check_dimension_limit(*dims: int) -> None:
    for d in dims:
        if d > _max_dimension:
            raise DimensionLimitError(
                "dimension %d exceeds the configured maximum %d" % (d, _max_dimension)
            )


@dataclass(frozen=True)
class IndexProfile:
    """Smallest k with rank A^(k+1) = rank A^k, together with r = rank A^k."""

    k: int
    r: int


class CMatrix:
    """An immutable rows x cols matrix of GaussianRational entries."""

    __slots__ = ("_data", "_rows", "_cols")

    def __init__(self, rows):
        data = tuple(
            tuple(GaussianRational.parse(v) for v in row) for row in rows
        )
        if not data or not data[0]:
            raise ShapeError("a matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ShapeError("all rows must have the same length")
        self._data = data
        self._rows = len(data)
        self._cols = width

    @classmethod
    def identity(cls, n: int) -> "CMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "CMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def data(self):
        """Entries as a tuple of row tuples (0-based, for internal-style access)."""
        return self._data

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    @property
    def is_zero(self) -> bool:
        return all(not v for row in self._data for v in row)

    def entry(self, i: int, j: int) -> GaussianRational:
        """Entry in row i, column j (1-based)."""
        self._check_row_index(i)
        self._check_col_index(j)
        return self._data[i - 1][j - 1]

    def row(self, i: int):
        """Row i (1-based) as a tuple."""
        self._check_row_index(i)
        return self._data[i - 1]

    def col(self, j: int):
        """Column j (1-based) as a tuple."""
        self._check_col_index(j)
        return tuple(row[j - 1] for row in self._data)

    def _check_row_index(self, i: int) -> None:
        if not 1 <= i <= self._rows:
            raise IndexError("row index %r out of range 1..%d" % (i, self._rows))

    def _check_col_index(self, j: int) -> None:
        if not 1 <= j <= self._cols:
            raise IndexError("column index %r out of range 1..%d" % (j, self._cols))

    def transpose(self) -> "CMatrix":
        return CMatrix(tuple(zip(*self._data)))

    # --- arithmetic ---

    def __add__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        if (self._rows, self._cols) != (other._rows, other._cols):
            raise ShapeError(
                "cannot add %dx%d and %dx%d matrices"
                % (self._rows, self._cols, other._rows, other._cols)
            )
        return CMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self._data, other._data)
            )
        )

    def __sub__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        return self.__add__(-other)

    def __neg__(self):
        return CMatrix(tuple(tuple(-v for v in row) for row in self._data))

    def __mul__(self, other):
        if isinstance(other, CMatrix):
            raise TypeError("use @ for matrix products, * is scalar only")
        scalar = GaussianRational._coerce(other)
        if scalar is None:
            return NotImplemented
        return CMatrix(
            tuple(tuple(v * scalar for v in row) for row in self._data)
        )

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        if self._cols != other._rows:
            raise ShapeError(
                "cannot multiply %dx%d by %dx%d"
                % (self._rows, self._cols, other._rows, other._cols)
            )
        cols = tuple(zip(*other._data))
        return CMatrix(
            tuple(
                tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in cols)
                for row in self._data
            )
        )

    def __pow__(self, power):
        if not self.is_square:
            raise ShapeError("only square matrices have powers")
        if not isinstance(power, int) or power < 0:
            raise ValueError("matrix power must be a nonnegative integer")
        result = CMatrix.identity(self._rows)
        for _ in range(power):
            result = result @ self
        return result

    def __eq__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        return self._data == other._data

    # --- elimination-based quantities ---

    def det(self) -> GaussianRational:
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ShapeError("determinant of a non-square matrix")
        n = self._rows
        a = [list(row) for row in self._data]
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if not a[k][k]:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            pivot = a[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) / prev
                a[i][k] = ZERO
            prev = pivot
        value = a[n - 1][n - 1]
        return value if sign == 1 else -value

    def rank(self) -> int:
        """Rank by exact Gaussian elimination."""
        a = [list(row) for row in self._data]
        rank = 0
        for col in range(self._cols):
            pivot_row = None
            for r in range(rank, self._rows):
                if a[r][col]:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            a[rank], a[pivot_row] = a[pivot_row], a[rank]
            pivot = a[rank][col]
            for r in range(rank + 1, self._rows):
                if a[r][col]:
                    factor = a[r][col] / pivot
                    a[r] = [x - factor * y for x, y in zip(a[r], a[rank])]
            rank += 1
            if rank == self._rows:
                break
        return rank

    # --- row/column surgery ---

    def _coerce_vector(self, values, expected_len, what):
        vec = tuple(GaussianRational.parse(v) for v in values)
        if len(vec) != expected_len:
            raise ShapeError(
                "replacement %s needs %d entries, got %d" % (what, expected_len, len(vec))
            )
        return vec

    def replace_col(self, j: int, values) -> "CMatrix":
        """Copy of the matrix with column j (1-based) replaced."""
        self._check_col_index(j)
        vec = self._coerce_vector(values, self._rows, "column")
        return CMatrix(
            tuple(
                tuple(vec[r] if c == j - 1 else row[c] for c in range(self._cols))
                for r, row in enumerate(self._data)
            )
        )

    def replace_row(self, i: int, values) -> "CMatrix":
        """Copy of the matrix with row i (1-based) replaced."""
        self._check_row_index(i)
        vec = self._coerce_vector(values, self._cols, "row")
        return CMatrix(
            tuple(vec if r == i - 1 else row for r, row in enumerate(self._data))
        )

    def __str__(self):
        body = [[str(v) for v in row] for row in self._data]
        widths = [max(len(body[r][c]) for r in range(self._rows)) for c in range(self._cols)]
        lines = [
            "[" + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + "]"
            for row in body
        ]
        return "\n".join(lines)

    def __repr__(self):
        return "CMatrix(%r)" % ([[str(v) for v in row] for row in self._data],)


def hstack(left: CMatrix, right: CMatrix) -> CMatrix:
    """Augment two matrices side by side."""
    if left.rows != right.rows:
        raise ShapeError("hstack needs matching row counts")
    return CMatrix(tuple(a + b for a, b in zip(left.data, right.data)))


def vstack(top: CMatrix, bottom: CMatrix) -> CMatrix:
    """Stack two matrices vertically."""
    if top.cols != bottom.cols:
        raise ShapeError("vstack needs matching column counts")
    return CMatrix(top.data + bottom.data)


def range_contained(m: CMatrix, n: CMatrix) -> bool:
    """True iff the column space of m lies inside the column space of n.

    Decided exactly: appending m's columns to n cannot raise the rank when
    they are already combinations of n's columns.
    """
    if m.rows != n.rows:
        raise ShapeError("range comparison needs matching row counts")
    return hstack(n, m).rank() == n.rank()

def nullspace_contained(n_of: CMatrix, m: CMatrix) -> bool:
    """True iff the nullspace of m contains the nullspace of n_of.

    Equivalent to every row of m being a combination of n_of's rows, so the
    stacked matrix has the same rank as n_of alone.
    """
    if m.cols != n_of.cols:
        raise ShapeError("nullspace comparison needs matching column counts")
    return vstack(n_of, m).rank() == n_of.rank()
