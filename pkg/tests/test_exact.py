from fractions import Fraction

import pytest

from weightpoly.exact import (ceil_div, det_bareiss, floor_div, frac, frac_str,
                              hnf_rows, integer_kernel_basis, lattice_index,
                              mat_inverse, nullspace, primitive_vector, rank,
                              solve_integer, solve_linear, vec)


def test_frac_parses_strings_and_numbers():
    assert frac("5/2") == Fraction(5, 2)
    assert frac(3) == Fraction(3)
    assert frac_str(Fraction(5, 2)) == "5/2"
    assert frac_str(Fraction(4, 2)) == "2"
    assert vec([1, "1/2"]) == (Fraction(1), Fraction(1, 2))


def test_solve_linear_unique():
    status, x = solve_linear([vec([2, 0]), vec([0, 3])], vec([4, 9]))
    assert status == "unique"
    assert x == (Fraction(2), Fraction(3))


def test_solve_linear_inconsistent():
    status, x = solve_linear([vec([1, 1]), vec([2, 2])], vec([1, 3]))
    assert status == "no solution"
    assert x is None


def test_solve_linear_underdetermined():
    status, x = solve_linear([vec([1, 1])], vec([1]))
    assert status == "underdetermined"
    assert x is None


def test_rank_counts_independent_rows():
    assert rank([vec([1, 2]), vec([2, 4])]) == 1
    assert rank([vec([1, 0]), vec([0, 1])]) == 2
    assert rank([]) == 0


def test_nullspace_vectors_annihilate_rows():
    rows = [vec([1, 1, 0]), vec([0, 1, 1])]
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    v = basis[0]
    for row in rows:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_mat_inverse_round_trip():
    M = [vec([2, 1]), vec([1, 1])]
    inv = mat_inverse(M)
    prod = [[sum(M[i][k] * inv[k][j] for k in range(2)) for j in range(2)]
            for i in range(2)]
    assert prod == [[1, 0], [0, 1]]


def test_mat_inverse_rejects_singular():
    with pytest.raises(ValueError):
        mat_inverse([vec([1, 2]), vec([2, 4])])


def test_det_bareiss_anchors():
    assert det_bareiss([vec([1, 2]), vec([3, 4])]) == -2
    assert det_bareiss([vec([0, 1]), vec([1, 0])]) == -1
    assert det_bareiss([vec([2, 0, 0]), vec([0, 3, 0]), vec([0, 0, 4])]) == 24


def test_primitive_vector_scales_to_coprime_integers():
    assert primitive_vector(vec([2, 4])) == (1, 2)
    assert primitive_vector(vec(["1/2", "1/3"])) == (3, 2)
    assert primitive_vector(vec([-2, -4])) == (-1, -2)
    with pytest.raises(ValueError):
        primitive_vector(vec([0, 0]))


def test_hnf_rows_triangular_form():
    H = hnf_rows([(2, 4), (1, 1)])
    assert len(H) == 2
    assert H[0][0] > 0 and H[1][0] == 0


def test_integer_kernel_basis_spans_kernel():
    rows = [(1, 2, 3)]
    basis = integer_kernel_basis(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert all(isinstance(c, int) for c in v)
        assert v[0] + 2 * v[1] + 3 * v[2] == 0


def test_solve_integer_paths():
    assert solve_integer([(2, 0), (0, 3)], (4, 9)) == (2, 3)
    assert solve_integer([(2,)], (1,)) is None
    assert solve_integer([(1, 1)], (5,)) is not None


def test_lattice_index_anchors():
    assert lattice_index(((1, 0), (0, 1)), 2) == 1
    assert lattice_index(((1, 0), (1, 2)), 2) == 2
    assert lattice_index(((1, 1, 0), (0, 1, 1), (1, 0, 1)), 3) == 2


def test_floor_ceil_div_on_fractions():
    assert floor_div(Fraction(7, 2), 1) == 3
    assert ceil_div(Fraction(7, 2), 1) == 4
    assert floor_div(Fraction(-7, 2), 1) == -4
    assert ceil_div(Fraction(-7, 2), 1) == -3
    assert floor_div(6, 3) == 2 == ceil_div(6, 3)
