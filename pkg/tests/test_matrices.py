"""Exact matrix arithmetic, elimination, and subspace tests."""

import random

import pytest

from drazin import matrices
from drazin.matrices import (
    CMatrix,
    DimensionLimitError,
    IndexProfile,
    ShapeError,
    hstack,
    nullspace_contained,
    range_contained,
    vstack,
)
from drazin.scalars import GaussianRational as G

from helpers import A_IDX2, B_GRP, D_RHS, rand_matrix, rand_singular
from oracles import apply_to_vector, minor_rank, nullspace_basis, perm_det

A_SQUARED = CMatrix([[4, 0, 0], [2 - 2j, 0, 0], [-2 - 2j, 0, 0]])
A_CUBED = CMatrix([[8, 0, 0], [4 - 4j, 0, 0], [-4 - 4j, 0, 0]])
B_SQUARED = CMatrix([[-1j, 1j, 3 - 1j], [1, -1, 1 + 3j], [-3 + 1j, 3 - 1j, 3 + 1j]])


def test_golden_powers():
    assert A_IDX2 ** 2 == A_SQUARED
    assert A_IDX2 ** 3 == A_CUBED
    assert B_GRP ** 2 == B_SQUARED
    assert A_IDX2 ** 0 == CMatrix.identity(3)
    assert A_IDX2 ** 1 == A_IDX2


def test_golden_product():
    expected = CMatrix([[2 - 1j, 2j, 0], [1 + 2j, -2, 0], [1 + 1j, 1j, 0]])
    assert B_GRP @ D_RHS == expected


def test_shape_errors():
    two_by_three = CMatrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ShapeError):
        two_by_three @ two_by_three
    with pytest.raises(ShapeError):
        two_by_three + CMatrix([[1, 2], [3, 4]])
    with pytest.raises(ShapeError):
        two_by_three.det()
    with pytest.raises(ShapeError):
        two_by_three ** 2
    with pytest.raises(ValueError):
        CMatrix([[1, 2], [3, 4]]) ** -1
    with pytest.raises(ShapeError):
        CMatrix([[1, 2], [3]])
    with pytest.raises(ShapeError):
        CMatrix([])


def test_entry_row_col_are_one_based():
    assert A_IDX2.entry(1, 1) == G(2)
    assert A_IDX2.entry(2, 1) == G(0, -1)
    assert A_IDX2.row(3) == (G(0, -1), G(0, -1), G(0, -1))
    assert A_IDX2.col(1) == (G(2), G(0, -1), G(0, -1))
    with pytest.raises(IndexError):
        A_IDX2.entry(0, 1)
    with pytest.raises(IndexError):
        A_IDX2.col(4)


def test_scalar_multiplication_and_negation():
    m = CMatrix([[1, 1j], [0, 2]])
    assert 2 * m == CMatrix([[2, 2j], [0, 4]])
    assert m * G(0, 1) == CMatrix([[1j, -1], [0, 2j]])
    assert -m == CMatrix([[-1, -1j], [0, -2]])
    with pytest.raises(TypeError):
        m * m  # matrix products go through @


def test_golden_determinants():
    # second-order minors that feed the worked denominator
    assert CMatrix([[-1, 1 + 3j], [3 - 1j, 3 + 1j]]).det() == G(-9, -9)
    assert CMatrix([[-1j, 3 - 1j], [-3 + 1j, 3 + 1j]]).det() == G(9, -9)
    assert CMatrix.identity(3).det() == G(1)
    assert A_IDX2.det() == G(0)


def test_determinant_matches_permutation_expansion():
    rng = random.Random(7)
    for n in (2, 3, 4):
        for _ in range(10):
            m = rand_matrix(rng, n)
            assert m.det() == perm_det(m)


def test_determinant_is_multiplicative():
    rng = random.Random(11)
    for n in (2, 3, 4):
        for _ in range(5):
            a, b = rand_matrix(rng, n), rand_matrix(rng, n)
            assert (a @ b).det() == a.det() * b.det()


def test_golden_ranks():
    # frozen after cross-checking with the exhaustive-minor oracle
    assert minor_rank(A_IDX2) == 2
    assert A_IDX2.rank() == 2
    assert A_SQUARED.rank() == 1
    assert B_GRP.rank() == 2
    assert B_SQUARED.rank() == 2
    assert CMatrix.zeros(3, 3).rank() == 0
    assert CMatrix.identity(4).rank() == 4


def test_rank_matches_minor_oracle():
    rng = random.Random(13)
    for n in (2, 3, 4):
        for _ in range(6):
            m = rand_singular(rng, n)
            assert m.rank() == minor_rank(m)
        wide = rand_matrix(rng, n, n + 1)
        assert wide.rank() == minor_rank(wide)


def test_replace_col_golden():
    replaced = A_CUBED.replace_col(1, [12 - 12j, -12j, -12])
    assert replaced == CMatrix([[12 - 12j, 0, 0], [-12j, 0, 0], [-12, 0, 0]])


def test_replace_self_is_identity_operation():
    rng = random.Random(17)
    m = rand_matrix(rng, 4)
    for j in range(1, 5):
        assert m.replace_col(j, m.col(j)) == m
    for i in range(1, 5):
        assert m.replace_row(i, m.row(i)) == m


def test_replace_errors():
    with pytest.raises(ShapeError):
        A_IDX2.replace_col(1, [1, 2])
    with pytest.raises(IndexError):
        A_IDX2.replace_row(4, [1, 2, 3])


def test_transpose():
    rng = random.Random(19)
    a, b = rand_matrix(rng, 3), rand_matrix(rng, 3)
    assert a.transpose().transpose() == a
    assert (a @ b).transpose() == b.transpose() @ a.transpose()
    assert CMatrix([[1, 2, 3]]).transpose() == CMatrix([[1], [2], [3]])


def test_stacking():
    a = CMatrix([[1, 2], [3, 4]])
    b = CMatrix([[5], [6]])
    assert hstack(a, b) == CMatrix([[1, 2, 5], [3, 4, 6]])
    assert vstack(a, CMatrix([[7, 8]])) == CMatrix([[1, 2], [3, 4], [7, 8]])
    with pytest.raises(ShapeError):
        hstack(a, CMatrix([[1, 2]]))
    with pytest.raises(ShapeError):
        vstack(a, b)


def test_range_contained_trivial_cases():
    rng = random.Random(23)
    power = B_GRP  # any fixed matrix works; its range contains A @ Y columns
    for _ in range(5):
        y = rand_matrix(rng, 3)
        assert range_contained(power @ y, power)
    assert not range_contained(CMatrix.identity(3), CMatrix.zeros(3, 3))
    assert range_contained(CMatrix.zeros(3, 2), CMatrix.zeros(3, 3))


def test_range_contained_worked_fixture():
    # columns of D_RHS @ B_GRP against the one-dimensional range of A_IDX2^2;
    # expected value frozen from the exhaustive-minor rank oracle
    m = D_RHS @ B_GRP
    oracle = minor_rank(hstack(A_SQUARED, m)) == minor_rank(A_SQUARED)
    assert oracle is False
    assert range_contained(m, A_SQUARED) is False
    # and a contained counterpart built inside the range
    assert range_contained(A_SQUARED @ D_RHS, A_SQUARED) is True


def test_nullspace_contained_trivial_cases():
    rng = random.Random(29)
    for _ in range(5):
        y = rand_matrix(rng, 3)
        assert nullspace_contained(B_GRP, y @ B_GRP)
    assert not nullspace_contained(CMatrix.zeros(3, 3), CMatrix.identity(3))
    assert nullspace_contained(B_GRP, CMatrix.zeros(3, 3))


def test_nullspace_contained_matches_basis_oracle():
    rng = random.Random(31)
    for _ in range(10):
        n_of = rand_singular(rng, 3)
        m = rand_matrix(rng, 3)
        expected = all(
            all(not x for x in apply_to_vector(m, v)) for v in nullspace_basis(n_of)
        )
        assert nullspace_contained(n_of, m) is expected


def test_index_profile_is_a_plain_record():
    assert IndexProfile(2, 1) == IndexProfile(2, 1)
    assert IndexProfile(2, 1) != IndexProfile(1, 1)
    assert IndexProfile(2, 1).k == 2


def test_dimension_guard_configuration():
    assert matrices.max_dimension() == matrices.DEFAULT_MAX_DIMENSION == 10
    matrices.check_dimension_limit(10, 3)
    with pytest.raises(DimensionLimitError):
        matrices.check_dimension_limit(11)
    matrices.set_max_dimension(12)
    try:
        matrices.check_dimension_limit(11)
    finally:
        matrices.set_max_dimension(matrices.DEFAULT_MAX_DIMENSION)
    with pytest.raises(ValueError):
        matrices.set_max_dimension(0)


def test_printing_is_readable():
    text = str(CMatrix([[1, -1j], ["1/2", 3]]))
    assert text.splitlines() == ["[  1  -i]", "[1/2   3]"]
