import random

import pytest
from sympy.polys.matrices.normalforms import invariant_factors as sympy_invariant_factors

from cluster import IntMatrix, Lattice, kernel_basis, lattice_contains, lattice_equal, smith_normal_form
from cluster.zlinalg import (
    column_echelon,
    determinant,
    hermite_normal_form,
    invariant_factors,
    is_unimodular,
    lattice_equal_by_containment,
    rank,
)

SMITH_EXAMPLE = [
    [12, 6, 4, 8],
    [3, 9, 6, 12],
    [2, 16, 14, 28],
    [20, 10, 10, 20],
]


def random_matrix(rng, nrows, ncols, density=0.4, bound=3):
    return IntMatrix.from_rows([
        [rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(ncols)]
        for _ in range(nrows)
    ])


def diag_entries(M):
    return [M[i, i] for i in range(min(M.shape))]


def test_matrix_basics():
    M = IntMatrix.from_rows([[1, 0, 2], [0, -3, 0]])
    assert M.shape == (2, 3)
    assert M.nnz() == 3
    assert M.transpose().to_rows() == [[1, 0], [0, -3], [2, 0]]
    assert M.dense_column(2) == [2, 0]
    assert (M @ IntMatrix.identity(3)) == M
    assert M.hstack(IntMatrix.zeros(2, 1)).shape == (2, 4)
    assert IntMatrix.from_columns(2, [[1, 0], {1: -3}, [2, 0]]) == M
    with pytest.raises(ValueError):
        M @ M
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_smith_normal_form_with_witnesses():
    M = IntMatrix.from_rows(SMITH_EXAMPLE)
    snf = smith_normal_form(M)
    assert snf.factors == (1, 10, 30, 0)
    assert snf.rank == 3
    D = snf.U @ M @ snf.V
    assert diag_entries(D) == [1, 10, 30, 0]
    assert D.nnz() == 3
    assert is_unimodular(snf.U) and is_unimodular(snf.V)


def test_smith_random_against_sympy():
    rng = random.Random(5)
    for _ in range(30):
        M = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        snf = smith_normal_form(M)
        expected = tuple(int(f) for f in sympy_invariant_factors(M.to_sympy()) if f)
        assert tuple(d for d in snf.factors if d) == expected
        nonzero = [d for d in snf.factors if d]
        assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
        D = snf.U @ M @ snf.V
        assert diag_entries(D) == list(snf.factors)
        assert D.nnz() == len(nonzero)


def test_sparse_invariant_factors_against_sympy():
    rng = random.Random(17)
    for _ in range(30):
        M = random_matrix(rng, rng.randint(2, 12), rng.randint(2, 12), density=0.25)
        expected = tuple(int(f) for f in sympy_invariant_factors(M.to_sympy()) if f)
        assert invariant_factors(M) == expected
        assert rank(M) == len(expected)


def test_invariant_factors_torsion():
    assert invariant_factors(IntMatrix.from_rows([[2, 0], [0, 4]])) == (2, 4)
    assert invariant_factors(IntMatrix.from_rows([[2, 4], [-2, 4]])) == (2, 8)
    assert invariant_factors(IntMatrix.zeros(3, 2)) == ()


def test_column_echelon():
    rng = random.Random(23)
    for _ in range(20):
        M = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        H, V, r = column_echelon(M)
        assert is_unimodular(V)
        MV = M @ V
        assert MV.select(range(r)) == H
        assert MV.select(range(r, M.ncols)).is_zero()
        pivots = [min(col) for col in H.cols]
        assert pivots == sorted(set(pivots))
        assert r == rank(M)


def test_kernel_basis_is_saturated():
    M = IntMatrix.from_rows([[2, 4, 6], [1, 2, 3]])
    K = kernel_basis(M)
    assert K.shape == (3, 2)
    assert (M @ K).is_zero()
    # (1,1,-1) lies in the kernel and must be an integer combination
    assert lattice_contains(K, [1, 1, -1]) is not None
    assert invariant_factors(K) == (1, 1)


def test_lattice_membership_coefficients():
    B = IntMatrix.from_rows([[2, 0], [0, 3], [0, 0]])
    L = Lattice(B)
    assert L.rank == 2
    assert L.contains([4, -3, 0]) == [2, -1]
    assert L.contains({0: 2, 1: 6}) == [1, 2]
    assert L.contains([1, 0, 0]) is None
    assert L.contains([0, 0, 1]) is None
    assert [0, 0, 0] in L


def test_lattice_with_dependent_generators():
    B = IntMatrix.from_rows([[1, 2, 3], [1, 2, 3]])
    coeffs = lattice_contains(B, [5, 5])
    assert coeffs is not None
    assert sum(c * g for c, g in zip(coeffs, [1, 2, 3])) == 5
    assert lattice_contains(B, [1, 2]) is None


def test_lattice_equality():
    B1 = IntMatrix.from_rows([[1, 0], [0, 1]])
    B2 = IntMatrix.from_rows([[1, 1, 2], [1, 2, 3]])
    B3 = IntMatrix.from_rows([[2, 0], [0, 1]])
    assert lattice_equal(B1, B2)
    assert lattice_equal_by_containment(B1, B2)
    assert not lattice_equal(B1, B3)
    assert not lattice_equal_by_containment(B1, B3)
    assert hermite_normal_form(IntMatrix.zeros(2, 2)) == [[], []]


def test_determinant():
    assert determinant(IntMatrix.from_rows([[2, 1], [7, 4]])) == 1
    assert not is_unimodular(IntMatrix.from_rows([[2, 0], [0, 1]]))
    with pytest.raises(ValueError):
        determinant(IntMatrix.zeros(2, 3))
