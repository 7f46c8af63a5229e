import random

import pytest

from latpoly.intlinalg import (
    column_hnf,
    det,
    integer_rank,
    kernel_primitive_vector,
    mat_mul,
    mat_vec,
    primitive,
    rational_rank,
    row_hnf,
    saturated_span_basis,
    solve_integer_combination,
    transpose,
)


def random_unimodular(n, rng, steps=8):
    M = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        q = rng.choice([-2, -1, 1, 2])
        for r in range(n):
            M[r][j] += q * M[r][i]
    return M


def test_det_small_cases():
    assert det([]) == 1
    assert det([[5]]) == 5
    assert det([[2, 1], [1, 1]]) == 1
    assert det([[1, 0, 0], [0, 1, 0], [1, 1, 2]]) == 2
    assert det([[1, 2], [2, 4]]) == 0


def test_det_multiplicative():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(1, 4)
        A = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        B = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert det(mat_mul(A, B)) == det(A) * det(B)


def test_primitive():
    assert primitive((2, 4, -6)) == (1, 2, -3)
    assert primitive((0, 0)) == (0, 0)
    assert primitive((3,)) == (1,)


def test_row_hnf_left_invariance():
    rng = random.Random(2)
    for _ in range(60):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        A = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
        U = random_unimodular(m, rng)
        assert row_hnf(mat_mul(U, A)) == row_hnf(A)


def test_column_hnf_right_invariance():
    rng = random.Random(3)
    for _ in range(60):
        m, n = rng.randint(1, 5), rng.randint(1, 4)
        A = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
        U = random_unimodular(n, rng)
        AU = [mat_vec(transpose(U), row) for row in A]
        assert column_hnf(AU) == column_hnf(A)


def test_hnf_is_idempotent():
    rng = random.Random(4)
    for _ in range(30):
        A = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)]
        H = row_hnf(A)
        assert row_hnf(H) == H


def test_ranks_agree():
    rng = random.Random(5)
    for _ in range(120):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        A = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
        assert integer_rank(A) == rational_rank(A)


def test_kernel_vector():
    assert kernel_primitive_vector([(1, 1, 0), (0, 1, 1)], 3) == (1, -1, 1)
    assert kernel_primitive_vector([], 1) == (1,)
    # two-dimensional kernel: not unique, refused
    assert kernel_primitive_vector([(1, 0, 0)], 3) is None


def test_saturation_properties():
    assert saturated_span_basis([(2, 4)], 2) == [(1, 2)]
    rng = random.Random(6)
    for _ in range(60):
        m, n = rng.randint(1, 3), rng.randint(2, 4)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        basis = saturated_span_basis(rows, n)
        assert len(basis) == rational_rank(rows)
        # every original row is an integer combination of the basis
        for row in rows:
            if any(row):
                coeffs = solve_integer_combination(basis, tuple(row))
                rebuilt = [
                    sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(n)
                ]
                assert rebuilt == list(row)


def test_solve_integer_combination_failure():
    with pytest.raises(ValueError):
        solve_integer_combination([(2, 0), (0, 2)], (1, 1))
