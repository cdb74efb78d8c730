import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semicoclass.linalg import (PrimeField, full_space, has_sqrt_minus_one, inverse, is_invertible,
                                is_prime, rank, rank_batch, rref, solvable_batch, solve_affine, solve_left_kernel,
                                span, sqrt_minus_one, zero_space)

PRIMES = [2, 3, 5, 7, 13]


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(9)
    assert PrimeField(7).inv(3) == 5
    with pytest.raises(ZeroDivisionError):
        PrimeField(7).inv(0)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19, 23])
def test_sqrt_minus_one_matches_brute_force(p):
    roots = [x for x in range(p) if (x * x + 1) % p == 0]
    assert has_sqrt_minus_one(p) == bool(roots)
    assert sqrt_minus_one(p) == (roots[0] if roots else None)


def matrices(max_rows=5, max_cols=5):
    return st.tuples(st.sampled_from(PRIMES), st.integers(1, max_rows), st.integers(1, max_cols),
                     st.randoms(use_true_random=False))


def _random(p, r, c, rnd):
    return np.array([[rnd.randrange(p) for _ in range(c)] for _ in range(r)], dtype=np.int64)


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_rref_is_row_space(args):
    p, r, c, rnd = args
    m = _random(p, r, c, rnd)
    sub = rref(m, p)
    assert sub.dim == rank(m, p) <= min(r, c)
    for row in m:
        assert sub.contains(row)
    # basis is reduced: unit pivot columns
    for i, j in enumerate(sub.pivots):
        col = [b[j] for b in sub.basis]
        assert col == [1 if k == i else 0 for k in range(sub.dim)]


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_left_kernel(args):
    p, r, c, rnd = args
    m = _random(p, r, c, rnd)
    ker = solve_left_kernel(m, p)
    assert ker.dim == r - rank(m, p)
    for v in ker.basis:
        assert not np.any(np.array(v) @ m % p)


def test_span_and_sum_intersection():
    p = 5
    a = span([[1, 0, 0, 0], [0, 1, 0, 0]], p, 4)
    b = span([[0, 1, 0, 0], [0, 0, 1, 0]], p, 4)
    assert (a + b).dim == 3
    assert a.intersect(b).dim == 1 and a.intersect(b).contains([0, 3, 0, 0])
    assert span([], p, 4).dim == 0
    assert span([], p, 0).dim == 0
    assert full_space(p, 3).contains_space(zero_space(p, 3))


@given(matrices(4, 4))
@settings(max_examples=60, deadline=None)
def test_solve_affine_and_batch_agree(args):
    p, r, c, rnd = args
    a = _random(p, r, c, rnd)
    bs = [_random(p, 1, r, rnd)[0] for _ in range(3)] + [a @ _random(p, 1, c, rnd)[0] % p]
    results = [solve_affine(a, b, p) for b in bs]
    batch = solvable_batch(np.stack([a] * len(bs)), np.stack(bs), p)
    for b, res, ok in zip(bs, results, batch):
        assert (res is not None) == bool(ok)
        if res is not None:
            x0, null = res
            assert np.array_equal(a @ x0 % p, b % p)
            assert not np.any(a @ null.T % p)


@pytest.mark.parametrize("p", [2, 3])
def test_invertible_count_gl2(p):
    # |GL_2(p)| = (p^2 - 1)(p^2 - p)
    count = sum(is_invertible(np.array(m).reshape(2, 2), p)
                for m in itertools.product(range(p), repeat=4))
    assert count == (p * p - 1) * (p * p - p)


@given(matrices(4, 4))
@settings(max_examples=60, deadline=None)
def test_inverse(args):
    p, n, _, rnd = args
    m = _random(p, n, n, rnd)
    if is_invertible(m, p):
        assert np.array_equal(inverse(m, p) @ m % p, np.eye(n, dtype=np.int64))
    else:
        assert rank(m, p) < n


@given(st.sampled_from(PRIMES), st.integers(1, 4), st.integers(1, 5), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_rank_batch(p, r, c, rnd):
    stack = np.stack([_random(p, r, c, rnd) for _ in range(6)])
    assert list(rank_batch(stack, p)) == [rank(m, p) for m in stack]
