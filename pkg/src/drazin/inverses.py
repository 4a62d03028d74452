"""Drazin and group inverses by exact determinantal representations.

The Drazin inverse of a square complex matrix A with index k (the smallest
power at which the rank stops dropping) is the unique X satisfying

    A^(k+1) X = A^k,    X A X = X,    A X = X A,

and equivalently X A^(k+1) = A^k.  For k <= 1 it is the group inverse; for
invertible A it is the ordinary inverse.

Writing r = rank A^k, entry (i, j) of X is a ratio of minor sums: the sum
of order-r principal minors of A^(k+1) taken over the index sets through
position i, with column i replaced by column j of A^k, divided by the sum
of all order-r principal minors of A^(k+1).  A row-replacement dual yields
the same matrix and is exposed separately so the two can be cross-checked.
The same representations with A^(k+1) as the replacement source give the
commuting projector A (Drazin inverse of A) = (Drazin inverse of A) A.

``drazin_oracle`` recomputes the inverse along a completely different
route: the exact limit at 0 of (x I + A^(k+1))^-1 A^k, evaluated
symbolically via a polynomial-entry adjugate.  It shares nothing with the
minor-sum path beyond scalar arithmetic, which is what makes it useful as
a reference in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import (
    CMatrix,
    IndexProfile,
    ShapeError,
    check_dimension_limit,
)
from .minors import (
    sum_minors_col_replaced,
    sum_minors_row_replaced,
    sum_principal_minors,
)
from .scalars import (
    GaussianRational,
    ONE,
    POLY_ONE,
    ScalarPolynomial,
    poly_limit_at_zero,
)


class GroupIndexError(ValueError):
    """The group inverse was requested for a matrix of index above 1."""


@dataclass(frozen=True)
class DrazinResult:
    """A computed inverse with its provenance.

    ``denominator`` is the minor sum every entry was divided by; it is
    reported as 1 for rank-zero (nilpotent) input, where the inverse is the
    zero matrix and no division happens.  ``method`` records which
    representation produced the matrix: "column", "row", or "oracle".
    """

    inverse: CMatrix
    profile: IndexProfile
    denominator: GaussianRational
    method: str

    def __post_init__(self):
        if self.profile.r >= 1 and not self.denominator:
            raise ArithmeticError(
                "minor-sum denominator vanished at positive rank; "
                "this contradicts the representation and signals a bug"
            )


def _require_square(a: CMatrix, what: str) -> None:
    if not a.is_square:
        raise ShapeError("%s needs a square matrix" % what)


def index_of(a: CMatrix) -> IndexProfile:
    """IndexProfile(k, r) with k = Ind(A) and r = rank A^k.

    k is located by walking the powers of A until the rank repeats; the
    ranks strictly decrease before that point, so the walk ends after at
    most n steps.  Invertible matrices have k = 0, singular group-invertible
    ones k = 1.
    """
    _require_square(a, "index_of")
    previous = a.rows
    power = CMatrix.identity(a.rows)
    k = 0
    while True:
        power = power @ a
        current = power.rank()
        if current == previous:
            return IndexProfile(k, previous)
        previous = current
        k += 1


def _representation(a: CMatrix, profile: IndexProfile, method: str) -> DrazinResult:
    n = a.rows
    if profile.r == 0:
        return DrazinResult(CMatrix.zeros(n, n), profile, ONE, method)
    power_k = a ** profile.k
    power_k1 = power_k @ a
    den = sum_principal_minors(power_k1, profile.r)
    if method == "column":
        entries = [
            [
                sum_minors_col_replaced(power_k1, i, power_k.col(j), profile.r) / den
                for j in range(1, n + 1)
            ]
            for i in range(1, n + 1)
        ]
    else:
        entries = [
            [
                sum_minors_row_replaced(power_k1, j, power_k.row(i), profile.r) / den
                for j in range(1, n + 1)
            ]
            for i in range(1, n + 1)
        ]
    return DrazinResult(CMatrix(entries), profile, den, method)


def drazin_col(a: CMatrix) -> DrazinResult:
    """Drazin inverse via the column-replacement determinantal form."""
    _require_square(a, "drazin_col")
    check_dimension_limit(a.rows)
    return _representation(a, index_of(a), "column")


def drazin_row(a: CMatrix) -> DrazinResult:
    """Drazin inverse via the row-replacement determinantal form."""
    _require_square(a, "drazin_row")
    check_dimension_limit(a.rows)
    return _representation(a, index_of(a), "row")


def group_inverse(a: CMatrix) -> DrazinResult:
    """Group inverse (the Drazin inverse when Ind(A) <= 1).

    Raises GroupIndexError for matrices of index 2 or more, where no group
    inverse exists.
    """
    _require_square(a, "group_inverse")
    check_dimension_limit(a.rows)
    profile = index_of(a)
    if profile.k > 1:
        raise GroupIndexError("matrix has index > 1")
    return _representation(a, profile, "column")


def _projector(a: CMatrix, method: str) -> CMatrix:
    _require_square(a, "projector")
    check_dimension_limit(a.rows)
    profile = index_of(a)
    n = a.rows
    if profile.r == 0:
        return CMatrix.zeros(n, n)
    power_k1 = a ** (profile.k + 1)
    den = sum_principal_minors(power_k1, profile.r)
    if method == "column":
        entries = [
            [
                sum_minors_col_replaced(power_k1, i, power_k1.col(j), profile.r) / den
                for j in range(1, n + 1)
            ]
            for i in range(1, n + 1)
        ]
    else:
        entries = [
            [
                sum_minors_row_replaced(power_k1, j, power_k1.row(i), profile.r) / den
                for j in range(1, n + 1)
            ]
            for i in range(1, n + 1)
        ]
    return CMatrix(entries)


def projector_col(a: CMatrix) -> CMatrix:
    """(Drazin inverse of A) A, the projector onto the range of A^k along
    its nullspace, via the column determinantal form."""
    return _projector(a, "column")


def projector_row(a: CMatrix) -> CMatrix:
    """A (Drazin inverse of A), the same projector (the two products agree
    by the commutation identity), via the row determinantal form."""
    return _projector(a, "row")


# --- the symbolic-limit oracle ---


def _poly_subset_dets(rows):
    """Memoized determinants over column subsets of a fixed row list.

    rows is a list of polynomial-entry rows; the returned function maps a
    strictly increasing tuple of column positions to the determinant of the
    submatrix on those columns and the first len(columns) rows of the list
    (rows are consumed top-down as the recursion strips columns).
    """
    memo = {(): POLY_ONE}

    def rec(cols):
        value = memo.get(cols)
        if value is not None:
            return value
        depth = len(rows) - len(cols)
        row = rows[depth]
        total = ScalarPolynomial()
        for idx, c in enumerate(cols):
            term = row[c] * rec(cols[:idx] + cols[idx + 1 :])
            total = total + term if idx % 2 == 0 else total - term
        memo[cols] = total
        return total

    return rec


def _poly_adjugate(p):
    """Adjugate and determinant of a square polynomial-entry matrix."""
    n = len(p)
    adj = [[None] * n for _ in range(n)]
    det = None
    for j in range(n):
        rows = [p[t] for t in range(n) if t != j]
        rec = _poly_subset_dets(rows)
        for i in range(n):
            minor = rec(tuple(c for c in range(n) if c != i))
            adj[i][j] = minor if (i + j) % 2 == 0 else -minor
        if j == 0:
            det = ScalarPolynomial()
            for i in range(n):
                term = p[0][i] * rec(tuple(c for c in range(n) if c != i))
                det = det + term if i % 2 == 0 else det - term
    return adj, det


def drazin_oracle(a: CMatrix, power_first: bool = False) -> CMatrix:
    """Drazin inverse as the exact limit of (x I + A^(k+1))^-1 A^k at 0.

    The resolvent-like inverse is expanded symbolically: x I + A^(k+1) is a
    matrix of degree-one polynomials whose adjugate and determinant are
    polynomials again, so each entry of the product with A^k is a ratio of
    polynomials whose limit at 0 is exact.  ``power_first=True`` evaluates
    the reversed product A^k (x I + A^(k+1))^-1 instead; both orderings
    converge to the same matrix.
    """
    _require_square(a, "drazin_oracle")
    check_dimension_limit(a.rows)
    n = a.rows
    profile = index_of(a)
    power_k = a ** profile.k
    s = power_k @ a
    p = [
        [
            ScalarPolynomial((s.data[i][j], 1)) if i == j else ScalarPolynomial((s.data[i][j],))
            for j in range(n)
        ]
        for i in range(n)
    ]
    adj, det = _poly_adjugate(p)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            num = ScalarPolynomial()
            for t in range(n):
                if power_first:
                    num = num + power_k.data[i][t] * adj[t][j]
                else:
                    num = num + power_k.data[t][j] * adj[i][t]
            row.append(poly_limit_at_zero(num, det))
        entries.append(row)
    return CMatrix(entries)


# --- axiom checking ---


@dataclass(frozen=True)
class DrazinAxioms:
    """Exact truth of the four defining identities for a candidate inverse."""

    power_left: bool  # A^(k+1) X = A^k
    outer: bool       # X A X = X
    commute: bool     # A X = X A
    power_right: bool  # X A^(k+1) = A^k

    @property
    def all_hold(self) -> bool:
        return self.power_left and self.outer and self.commute and self.power_right


def verify_drazin(a: CMatrix, x: CMatrix) -> DrazinAxioms:
    """Check the Drazin axioms exactly, with k = Ind(A)."""
    _require_square(a, "verify_drazin")
    if (x.rows, x.cols) != (a.rows, a.cols):
        raise ShapeError("candidate inverse must match the matrix dimensions")
    power_k = a ** index_of(a).k
    power_k1 = power_k @ a
    ax = a @ x
    xa = x @ a
    return DrazinAxioms(
        power_left=power_k1 @ x == power_k,
        outer=x @ ax == x,
        commute=ax == xa,
        power_right=x @ power_k1 == power_k,
    )
