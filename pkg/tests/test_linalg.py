from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from modrep.field import make_field
from modrep.linalg import (
    FMat,
    Frozen,
    RowSpace,
    hstack,
    inverse,
    nullspace,
    random_fmat,
    rank,
    rref,
    spin,
    vstack,
)


def naive_product(A: FMat, B: FMat) -> FMat:
    f = A.field
    rows = []
    for i in range(A.shape[0]):
        row = []
        for j in range(B.shape[1]):
            acc = f.zero
            for k in range(A.shape[1]):
                acc = acc + A.entry(i, k) * B.entry(k, j)
            row.append(acc)
        rows.append(row)
    return FMat.from_rows(f, rows)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 7, 11]), st.integers(1, 6), st.integers(1, 6), st.integers(1, 6),
       st.integers(0, 2**32 - 1), st.booleans())
def test_product_matches_scalar_arithmetic(p, m, k, n, seed, real):
    f = make_field(p)
    rng = np.random.default_rng(seed)
    A, B = random_fmat(f, m, k, rng), random_fmat(f, k, n, rng)
    if real:
        A.im[:] = 0
    assert A @ B == naive_product(A, B)
    assert Frozen(B).rmul(A) == A @ B


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 7), st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_rref_nullspace(p, m, n, seed):
    f = make_field(p)
    rng = np.random.default_rng(seed)
    A = random_fmat(f, m, n, rng)
    # force some rank deficiency
    if m > 1:
        A = vstack([A[: m - 1], A[:1].scale(f(2, 1))])
    R, piv = rref(A)
    assert len(piv) == rank(A) <= min(m, n)
    for r, c in enumerate(piv):
        assert R.entry(r, c) == 1
        assert all(R.entry(s, c).is_zero() for s in range(m) if s != r)
    N = nullspace(A)
    assert N.shape == (n, n - len(piv))
    assert (A @ N).is_zero()
    assert rank(N) == N.shape[1]


def test_inverse_roundtrip():
    f = make_field(7)
    rng = np.random.default_rng(1)
    A = random_fmat(f, 6, 6, rng)
    while rank(A) < 6:
        A = random_fmat(f, 6, 6, rng)
    assert A @ inverse(A) == FMat.identity(f, 6)
    with pytest.raises(ZeroDivisionError):
        inverse(FMat.zeros(f, 3))


def test_rowspace_and_spin():
    f = make_field(5)
    # Jordan block acting on columns: e_1 is an eigenvector, e_3 is cyclic
    J = FMat.from_rows(f, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    e1 = FMat.from_rows(f, [[1, 0, 0]])
    e3 = FMat.from_rows(f, [[0, 0, 1]])
    assert spin(e1, [J]).rank == 1
    assert spin(e3, [J]).rank == 3
    space = RowSpace(f, 3)
    space.add(vstack([e1, e1.scale(2)]))
    assert space.rank == 1 and space.contains(e1.scale(3)) and not space.contains(e3)


def test_spin_is_closed():
    f = make_field(7)
    rng = np.random.default_rng(3)
    A = FMat.block_diag(f, [random_fmat(f, 3, 3, rng), random_fmat(f, 4, 4, rng)])
    v = hstack([random_fmat(f, 1, 3, rng), FMat.zeros(f, 1, 4)])
    space = spin(v, [A], stop_at_full=False)
    assert space.rank <= 3
    again = spin(space.basis, [A], stop_at_full=False)
    assert again.rank == space.rank and all(space.contains(again.basis[i]) for i in range(again.rank))


def test_from_rows_and_json():
    f = make_field(7)
    M = FMat.from_rows(f, [[1, [2, 3]], [f(0, 1), -1]])
    assert M.to_json() == [[[1, 0], [2, 3]], [[0, 1], [6, 0]]]
    assert M.T.entry(1, 0) == f(2, 3)
    with pytest.raises(ValueError):
        M @ FMat.zeros(f, 3)
