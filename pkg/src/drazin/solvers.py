"""Cramer-style solvers for the restricted equations AX = B, XA = B, AXB = D.

Each solver returns the Drazin-inverse solution (A^D B, B A^D, or
A^D D B^D) with every entry produced directly as an exact ratio of minor
sums; no inverse is formed first.  The reported restriction flag states
whether the right-hand side satisfies the range/nullspace hypotheses under
which that matrix genuinely solves the unrestricted equation:

    AX = B    needs the column space of B inside that of A^k,
    XA = B    needs the nullspace of B to contain that of A^k,
    AXB = D   needs both conditions, against A^k1 and B^k2 respectively.

When a flag is false the returned matrix still solves the power-restricted
version of the system (with A^(k+1) X = A^k B and its analogues), which is
how the formulas are derived.

The two-sided solver evaluates both available representations, one that
reduces along B first (building the intermediate columns reported as
``db_columns``) and one that reduces along A first (``da_rows``), and
checks that they agree exactly before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .inverses import index_of
from .matrices import (
    CMatrix,
    IndexProfile,
    ShapeError,
    check_dimension_limit,
    nullspace_contained,
    range_contained,
)
from .minors import (
    sum_minors_col_replaced,
    sum_minors_row_replaced,
    sum_principal_minors,
)
from .scalars import GaussianRational, ONE, ZERO


@dataclass(frozen=True)
class SolveReport:
    """Solution matrix plus the exact quantities used to build it.

    ``denominator`` is the minor sum dividing every entry (a product of two
    sums for the two-sided equation); rank-zero factors contribute 1.
    ``profile_b``, ``db_columns`` and ``da_rows`` are populated only by the
    two-sided solver.
    """

    x: CMatrix
    restriction_satisfied: bool
    profile_a: IndexProfile
    denominator: GaussianRational
    profile_b: Optional[IndexProfile] = None
    db_columns: Optional[tuple] = None
    da_rows: Optional[tuple] = None


def solve_ax(a: CMatrix, b: CMatrix) -> SolveReport:
    """Solve A X = B for the Drazin solution X = (Drazin inverse of A) B."""
    if not a.is_square:
        raise ShapeError("solve_ax needs a square coefficient matrix")
    if b.rows != a.rows:
        raise ShapeError("right-hand side must have as many rows as A")
    check_dimension_limit(a.rows)
    profile = index_of(a)
    n, m = a.rows, b.cols
    power_k = a ** profile.k
    flag = range_contained(b, power_k)
    if profile.r == 0:
        return SolveReport(CMatrix.zeros(n, m), flag, profile, ONE)
    power_k1 = power_k @ a
    den = sum_principal_minors(power_k1, profile.r)
    reduced = power_k @ b
    entries = [
        [
            sum_minors_col_replaced(power_k1, i, reduced.col(j), profile.r) / den
            for j in range(1, m + 1)
        ]
        for i in range(1, n + 1)
    ]
    return SolveReport(CMatrix(entries), flag, profile, den)


def solve_vector(a: CMatrix, y) -> tuple:
    """Single-column specialization of solve_ax, returning a tuple of scalars."""
    column = CMatrix([[GaussianRational.parse(v)] for v in y])
    return solve_ax(a, column).x.col(1)


def solve_xa(a: CMatrix, b: CMatrix) -> SolveReport:
    """Solve X A = B for the Drazin solution X = B (Drazin inverse of A)."""
    if not a.is_square:
        raise ShapeError("solve_xa needs a square coefficient matrix")
    if b.cols != a.rows:
        raise ShapeError("right-hand side must have as many columns as A")
    check_dimension_limit(a.rows)
    profile = index_of(a)
    n, m = b.rows, a.rows
    power_k = a ** profile.k
    flag = nullspace_contained(power_k, b)
    if profile.r == 0:
        return SolveReport(CMatrix.zeros(n, m), flag, profile, ONE)
    power_k1 = power_k @ a
    den = sum_principal_minors(power_k1, profile.r)
    reduced = b @ power_k
    entries = [
        [
            sum_minors_row_replaced(power_k1, j, reduced.row(i), profile.r) / den
            for j in range(1, m + 1)
        ]
        for i in range(1, n + 1)
    ]
    return SolveReport(CMatrix(entries), flag, profile, den)


def solve_axb(a: CMatrix, b: CMatrix, d: CMatrix) -> SolveReport:
    """Solve A X B = D for X = (Drazin inverse of A) D (Drazin inverse of B).

    Both reduction orders are evaluated and compared; the intermediate
    vectors of each (the columns built through B's minors and the rows built
    through A's minors) are returned in the report.
    """
    if not a.is_square or not b.is_square:
        raise ShapeError("solve_axb needs square outer coefficient matrices")
    if (d.rows, d.cols) != (a.rows, b.rows):
        raise ShapeError(
            "right-hand side must be %dx%d, got %dx%d"
            % (a.rows, b.rows, d.rows, d.cols)
        )
    check_dimension_limit(a.rows, b.rows)
    profile_a = index_of(a)
    profile_b = index_of(b)
    n, m = a.rows, b.rows
    a_pow = a ** profile_a.k
    b_pow = b ** profile_b.k
    a_next = a_pow @ a
    b_next = b_pow @ b
    den_a = sum_principal_minors(a_next, profile_a.r) if profile_a.r else ONE
    den_b = sum_principal_minors(b_next, profile_b.r) if profile_b.r else ONE
    den = den_a * den_b
    reduced = a_pow @ d @ b_pow

    if profile_b.r:
        db_columns = tuple(
            tuple(
                sum_minors_row_replaced(b_next, j, reduced.row(l), profile_b.r)
                for l in range(1, n + 1)
            )
            for j in range(1, m + 1)
        )
    else:
        db_columns = tuple((ZERO,) * n for _ in range(m))
    if profile_a.r:
        da_rows = tuple(
            tuple(
                sum_minors_col_replaced(a_next, i, reduced.col(t), profile_a.r)
                for t in range(1, m + 1)
            )
            for i in range(1, n + 1)
        )
    else:
        da_rows = tuple((ZERO,) * m for _ in range(n))

    if profile_a.r:
        via_b = CMatrix(
            [
                [
                    sum_minors_col_replaced(a_next, i, db_columns[j - 1], profile_a.r) / den
                    for j in range(1, m + 1)
                ]
                for i in range(1, n + 1)
            ]
        )
    else:
        via_b = CMatrix.zeros(n, m)
    if profile_b.r:
        via_a = CMatrix(
            [
                [
                    sum_minors_row_replaced(b_next, j, da_rows[i - 1], profile_b.r) / den
                    for j in range(1, m + 1)
                ]
                for i in range(1, n + 1)
            ]
        )
    else:
        via_a = CMatrix.zeros(n, m)
    if via_b != via_a:
        raise RuntimeError(
            "representation mismatch: the two reduction orders disagree, "
            "which signals a bug in the minor sums"
        )

    flag = range_contained(d, a_pow) and nullspace_contained(b_pow, d)
    return SolveReport(
        via_b,
        flag,
        profile_a,
        den,
        profile_b=profile_b,
        db_columns=db_columns,
        da_rows=da_rows,
    )
