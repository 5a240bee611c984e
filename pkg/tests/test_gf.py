"""Exact F_p linear algebra: RREF, kernels, and canonical subspaces."""

import numpy as np
import pytest

from subcss import Subspace, kernel, rank, rref, solve
from subcss.gf import is_prime, validate_prime

from conftest import random_subspace


def test_is_prime():
    assert [q for q in range(14) if is_prime(q)] == [2, 3, 5, 7, 11, 13]


def test_validate_prime_rejects_composites():
    with pytest.raises(ValueError):
        validate_prime(4)
    with pytest.raises(ValueError):
        validate_prime(1)
    assert validate_prime(7) == 7


def test_rref_f2():
    m = rref([[1, 1], [1, 0]], 2)
    assert np.array_equal(m, np.eye(2, dtype=np.int64))


def test_rref_f3_rank_deficient():
    # Rows (2,1) and (1,2) are dependent mod 3: det = 3 = 0.
    m = rref([[2, 1], [1, 2]], 3)
    assert np.array_equal(m, [[1, 2], [0, 0]])


def test_rref_is_idempotent(rng):
    for _ in range(30):
        p = int(rng.choice([2, 3, 5]))
        mat = rng.integers(0, p, size=(4, 6))
        once = rref(mat, p)
        assert np.array_equal(rref(once, p), once)


def test_rank():
    assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 0]], 2) == 2
    assert rank(np.eye(3, dtype=np.int64), 5) == 3


def test_kernel_annihilates(rng):
    for _ in range(30):
        p = int(rng.choice([2, 3]))
        mat = rng.integers(0, p, size=(3, 5))
        ker = kernel(mat, p)
        assert ker.dim == 5 - rank(mat, p)
        for v in ker.basis:
            assert not np.any((mat @ v) % p)


def test_solve_consistent():
    mat = [[1, 1, 0], [0, 1, 1]]
    rhs = [1, 1]
    v = solve(mat, rhs, 2)
    assert np.array_equal((np.array(mat) @ v) % 2, rhs)


def test_solve_inconsistent():
    assert solve([[1, 1], [1, 1]], [0, 1], 2) is None


def test_span_canonical_equality():
    a = Subspace.span([[1, 1, 0], [0, 1, 1]], 2, 3)
    b = Subspace.span([[1, 0, 1], [0, 1, 1], [1, 1, 0]], 2, 3)
    assert a == b
    assert hash(a) == hash(b)


def test_zero_and_full():
    z = Subspace.zero(3, 4)
    f = Subspace.full(3, 4)
    assert z.dim == 0 and f.dim == 4
    assert f.contains_space(z)
    assert z.complement() == f


def test_contains_and_reduce():
    s = Subspace.span([[1, 1, 0], [0, 0, 1]], 2, 3)
    assert s.contains([1, 1, 1])
    assert not s.contains([1, 0, 0])
    assert not np.any(s.reduce([1, 1, 1]))
    # The residue is supported on non-pivot columns only.
    residue = s.reduce([1, 0, 0])
    assert np.any(residue)
    pivots = {0, 2}
    assert all(residue[c] == 0 for c in pivots)


def test_modular_dimension_law(rng):
    for _ in range(50):
        p = int(rng.choice([2, 3]))
        a = random_subspace(rng, p, 5)
        b = random_subspace(rng, p, 5)
        assert (a + b).dim + a.intersect(b).dim == a.dim + b.dim


def test_complement_dimension_and_involution(rng):
    for _ in range(50):
        p = int(rng.choice([2, 3, 5]))
        a = random_subspace(rng, p, 4)
        assert a.complement().dim == 4 - a.dim
        assert a.complement().complement() == a


def test_intersection_is_largest_common_subspace(rng):
    for _ in range(30):
        p = int(rng.choice([2, 3]))
        a = random_subspace(rng, p, 5)
        b = random_subspace(rng, p, 5)
        cap = a.intersect(b)
        assert a.contains_space(cap) and b.contains_space(cap)
        assert (a + b).contains_space(a)


def test_quotient_reps(rng):
    big = Subspace.span([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 2, 3)
    small = Subspace.span([[1, 1, 0]], 2, 3)
    reps = big.quotient_reps(small)
    assert len(reps) == big.dim - small.dim
    span = small
    for r in reps:
        assert not span.contains(r)
        span = span + Subspace.span(np.array([r]), 2, 3)
    with pytest.raises(ValueError):
        small.quotient_reps(big)


def test_all_elements():
    s = Subspace.span([[1, 1, 0], [0, 0, 1]], 2, 3)
    elems = s.all_elements()
    assert elems.shape == (4, 3)
    assert len({tuple(e) for e in elems}) == 4
    for e in elems:
        assert s.contains(e)
    assert Subspace.zero(3, 2).all_elements().shape == (1, 2)


def test_mismatched_ambient_raises():
    a = Subspace.zero(2, 3)
    b = Subspace.zero(2, 4)
    with pytest.raises(ValueError):
        a + b
