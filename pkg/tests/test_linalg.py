import random

import pytest
from hypothesis import given, settings

from perdet.laurent import Q, normalize
from perdet.linalg import (det, det_interpolated, gf2_affine_solve, matmul, nontrivial_factors, pfaffian,
                           pfaffian_interpolated, pivot, pivot_with_sign, smith_normal_form)

from conftest import antisymmetric, int_matrices, laurent_polys


def leibniz(m):
    import itertools
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i, j in enumerate(perm):
            term = term * m[i][j]
        total = total + term
    return normalize(total)


@given(int_matrices(max_n=5))
def test_bareiss_matches_leibniz(m):
    assert det(m) == leibniz(m)


@given(antisymmetric(max_half=5))
@settings(max_examples=200)
def test_pfaffian_squared_is_det(m):
    assert normalize(pfaffian(m) ** 2) == det(m)


@given(antisymmetric(max_half=3, entries=laurent_polys(max_terms=2, coeff=2, exp=2)))
@settings(max_examples=60)
def test_pfaffian_squared_is_det_over_laurent(m):
    assert normalize(pfaffian(m) ** 2) == det(m)


def test_pfaffian_small_cases():
    assert pfaffian([]) == 1
    assert pfaffian([[0, 3], [-3, 0]]) == 3
    m = [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]]
    assert pfaffian(m) == 1 * 6 - 2 * 5 + 3 * 4


def test_pfaffian_rejects_non_antisymmetric():
    with pytest.raises(ValueError):
        pfaffian([[0, 1], [1, 0]])


@given(antisymmetric(max_half=4, entries=laurent_polys(max_terms=2, coeff=3, exp=3)))
@settings(max_examples=40)
def test_interpolated_kernels_agree(m):
    assert pfaffian_interpolated(m) == pfaffian(m)
    assert det_interpolated(m) == det(m)


def _random_unit_pivot_matrix(rng, n):
    m = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
    r, c = rng.randrange(n), rng.randrange(n)
    m[r][c] = rng.choice([1, -1])
    return m, r, c


def test_pivot_preserves_det_and_cokernel():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(2, 6)
        m, r, c = _random_unit_pivot_matrix(rng, n)
        reduced, s = pivot_with_sign(m, r, c)
        assert det(m) == s * det(reduced)
        assert nontrivial_factors(smith_normal_form(m)) == nontrivial_factors(smith_normal_form(reduced))


def test_pivot_with_laurent_unit():
    m = [[Q, 2], [3, 1 + Q]]
    reduced, s = pivot_with_sign(m, 0, 0)
    assert normalize(s * det(reduced)) == det(m)
    assert pivot(m, 0, 0) == reduced


def test_pivot_needs_unit():
    with pytest.raises(ValueError):
        pivot([[2, 1], [1, 1]], 0, 0)


def test_smith_normal_form_divisibility_and_det():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 5)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        d = smith_normal_form(m)
        assert all(b % a == 0 for a, b in zip(d, d[1:]) if a)
        prod = 1
        for x in d:
            prod *= x
        assert prod == abs(det(m))


def test_smith_normal_form_known():
    assert nontrivial_factors(smith_normal_form([[2, 0], [0, 10]])) == [2, 10]
    assert nontrivial_factors(smith_normal_form([[4, 0], [0, 6]])) == [2, 12]
    assert nontrivial_factors(smith_normal_form([[1, 2], [3, 4]])) == [2]


def test_gf2_solver():
    ok, rank, dim, x = gf2_affine_solve([[1, 1, 0], [0, 1, 1]], [1, 0], 3)
    assert ok and rank == 2 and dim == 1
    assert (x[0] + x[1]) % 2 == 1 and (x[1] + x[2]) % 2 == 0
    ok, *_ = gf2_affine_solve([[1, 1], [1, 1]], [0, 1], 2)
    assert not ok


def test_matmul_identity():
    m = [[1, 2], [3, 4]]
    assert matmul(m, [[1, 0], [0, 1]]) == m
