import itertools
from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from extorb import fp
from extorb.errors import CapExceeded, InputError, SingularMatrix
from extorb.fp import FpMatrix, FpScalar, Subspace, gl_enumerate, gl_order, kernel, mat_inv, mat_mul, rank, solve_affine

PRIMES = [2, 3, 5, 7]


@st.composite
def matrices(draw, p=None, rows=None, cols=None):
    p = p or draw(st.sampled_from(PRIMES))
    rows = rows or draw(st.integers(1, 4))
    cols = cols or draw(st.integers(1, 4))
    entries = draw(st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols))
    return FpMatrix(p, rows, cols, tuple(entries))


@st.composite
def invertible(draw, p=None, m=None):
    p = p or draw(st.sampled_from(PRIMES))
    m = m or draw(st.integers(1, 4))
    a = draw(matrices(p, m, m))
    if not a.is_invertible():
        # nudge to an invertible matrix deterministically: add the identity until it works
        for k in range(1, p + 1):
            b = FpMatrix.from_numpy(a.to_numpy() + k * np.eye(m, dtype=np.int64), p)
            if b.is_invertible():
                return b
        return FpMatrix.identity(m, p)
    return a


def test_scalar_arithmetic():
    a = FpScalar(3, 7)
    assert int(a * 5) == 1
    assert int(a.inverse()) == 5
    assert int(a / 3) == 1
    assert int(-a) == 4
    with pytest.raises(ZeroDivisionError):
        FpScalar(0, 5).inverse()


def test_prime_check():
    assert fp.is_prime(97) and not fp.is_prime(91)
    with pytest.raises(InputError):
        fp.check_prime(4)
    with pytest.raises(InputError):
        fp.check_prime(101)


def test_matrix_examples():
    a = FpMatrix.from_rows([[1, 1], [0, 1]], 2)
    assert a @ a == FpMatrix.identity(2, 2)
    b = FpMatrix.from_rows([[2, 1], [1, 1]], 3)
    assert mat_inv(b) == FpMatrix.from_rows([[1, 2], [2, 2]], 3)
    assert b.det() == 1
    assert rank(FpMatrix.from_rows([[1, 2], [2, 4]], 5)) == 1
    with pytest.raises(SingularMatrix):
        mat_inv(FpMatrix.from_rows([[1, 2], [2, 4]], 5))
    with pytest.raises(InputError):
        mat_mul(a, FpMatrix.identity(2, 3))


def test_kernel_and_affine_examples():
    a = FpMatrix.from_rows([[1, 1, 0], [0, 1, 1]], 2)
    assert kernel(a) == Subspace.span([(1, 1, 1)], 2, 3)
    x, ker = solve_affine(a, (1, 0))
    assert a.apply(x) == (1, 0) and ker.dim == 1
    assert solve_affine(FpMatrix.from_rows([[1, 1], [1, 1]], 2), (0, 1)) is None


def test_json_round_trip():
    a = FpMatrix.from_rows([[1, 2, 0], [4, 0, 3]], 5)
    assert FpMatrix.from_json(a.to_json()) == a


@given(matrices(), st.data())
def test_multiplication_associative(a, data):
    b = data.draw(matrices(a.p, a.cols))
    c = data.draw(matrices(a.p, b.cols))
    assert (a @ b) @ c == a @ (b @ c)
    assert np.array_equal((a @ b).to_numpy(), a.to_numpy() @ b.to_numpy() % a.p)


@given(invertible())
def test_inverse(a):
    ident = FpMatrix.identity(a.rows, a.p)
    assert a @ mat_inv(a) == ident == mat_inv(a) @ a
    assert a.det() == oracles.det(a.to_rows(), a.p)


@given(matrices())
def test_rank_nullity_and_kernel(a):
    ker = kernel(a)
    assert rank(a) + ker.dim == a.cols
    for v in ker.basis:
        assert not any(a.apply(v))


@given(matrices(p=2, rows=3, cols=4), st.lists(st.integers(0, 1), min_size=3, max_size=3))
def test_affine_solutions_exhaustive_f2(a, b):
    sols = [x for x in itertools.product((0, 1), repeat=a.cols) if a.apply(x) == tuple(b)]
    res = solve_affine(a, b)
    if not sols:
        assert res is None
        return
    x0, ker = res
    assert {tuple((u + v) % 2 for u, v in zip(x0, k)) for k in ker.elements()} == set(sols)


@pytest.mark.parametrize("m,p", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (2, 5), (3, 3), (4, 2), (2, 7)])
def test_gl_enumeration_counts(m, p):
    mats = list(gl_enumerate(m, p))
    assert len(mats) == gl_order(m, p) == len(oracles.gl(m, p))
    assert len(set(mats)) == len(mats)
    assert [a.entries for a in mats] == sorted(a.entries for a in mats)


def test_gl_batch_count_large():
    m, p = 3, 5
    assert sum(len(b) for b in fp.gl_batches(m, p, None)) == gl_order(m, p)


@pytest.mark.parametrize("k", [1, 2, 8])
@pytest.mark.parametrize("m,p", [(3, 2), (2, 3), (2, 5)])
def test_partitioned_enumeration(m, p, k):
    full = list(gl_enumerate(m, p))
    parts = [list(gl_enumerate(m, p, chunk=i, chunks=k)) for i in range(k)]
    assert list(itertools.chain.from_iterable(parts)) == full
    assert Counter(itertools.chain.from_iterable(parts)) == Counter(full)


def test_cap():
    with pytest.raises(CapExceeded):
        next(gl_enumerate(3, 5, cap=1000))


def test_subspace_membership():
    s = Subspace.span([(1, 0, 1), (0, 1, 1)], 2, 3)
    assert (1, 1, 0) in s and (1, 0, 0) not in s
    assert len(list(s.elements())) == 4
    assert Subspace.zero(2, 3).issubset(s) and s.issubset(Subspace.full(2, 3))
