from __future__ import annotations

from math import comb

import pytest

from modrep.combinatorics import STRAIGHT, Partition, Tableau, count_standard_hook, partitions_enum
from modrep.field import make_field
from modrep.linalg import FMat
from modrep.symrep import build_D, dim_D, jm_sym, radical_dim, rho
from modrep.verify import check_jm, check_relations

from conftest import sym_rep, sym_shapes


def test_rho_examples():
    T = Tableau.from_rows([[1, 2], [3]])
    assert rho(T, 1, 5) == 1
    assert rho(T, 2, 5) == 2
    S = Tableau.from_rows([[1, 3], [2]])
    assert S.swap(2) == T
    assert rho(S, 2, 5) == -rho(T, 2, 5)


def test_rho_residue_clash():
    # 3 at (1,3) and 4 at (2,1) have contents 2 and -1, equal mod 3
    T = Tableau.from_rows([[1, 2, 3], [4]])
    with pytest.raises(ValueError):
        rho(T, 3, 3)


def test_dim_examples():
    assert dim_D(Partition((4, 1)), 5) == 3
    assert dim_D(Partition((3, 2)), 5) == 5
    assert all(dim_D(Partition((n,)), p) == 1 for p in (3, 5, 7) for n in range(1, p + 1))
    with pytest.raises(ValueError):
        dim_D(Partition((1, 1, 1, 1, 1)), 5)
    with pytest.raises(ValueError):
        dim_D(Partition((5, 1)), 5)


def test_radical_examples():
    assert radical_dim(Partition((4, 1)), 5) == 1
    assert radical_dim(Partition((3, 2)), 5) == 0
    assert radical_dim(Partition((2, 1, 1, 1)), 5) == 3 == count_standard_hook(Partition((2, 1, 1, 1))) - 1
    with pytest.raises(ValueError):
        radical_dim(Partition((3, 1)), 5)


def test_sign_rep_p3():
    rep = build_D(Partition((2, 1)), 3)
    f = rep.field
    assert rep.dim == 1
    assert rep.S[0] == FMat.from_rows(f, [[-1]])
    assert rep.S[1] == FMat.from_rows(f, [[-1]])


def test_trivial_rep():
    rep = build_D(Partition((5,)), 7)
    assert all(M == FMat.identity(rep.field, 1) for M in rep.S)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_all_shapes_at_p_satisfy_relations(p):
    for lam in sym_shapes(p):
        rep = sym_rep(lam, p)
        assert rep.dim == dim_D(Partition(lam), p)
        assert check_relations(rep).ok
        assert check_jm(rep).ok


@pytest.mark.parametrize("p", [5, 7])
def test_below_p_matches_hook_formula(p):
    for n in range(1, p):
        for lam in partitions_enum(n):
            rep = build_D(lam, p)
            assert rep.dim == count_standard_hook(lam, STRAIGHT)
            assert check_relations(rep).ok


def test_jm_example_32():
    rep = sym_rep((3, 2), 5)
    L = jm_sym(rep)
    assert L[0].is_zero()
    assert all(M.is_diagonal() for M in L)
    f = rep.field
    assert {x for x in L[1].diagonal()} <= {f(1), f(-1)}
    for t, T in enumerate(rep.basis):
        expected = 1 if T.entry((1, 2)) == 2 else -1
        assert L[1].entry(t, t) == expected


def test_hook_case_basis_is_lambda_minus():
    p = 7
    for k in range(2, p):
        rep = sym_rep(tuple([k] + [1] * (p - k)), p)
        assert rep.hook and rep.dim == comb(p - 2, k - 2)
        assert all(T.shape == Partition([k - 1] + [1] * (p - k)) for T in rep.basis)


def test_build_rejects_n_above_p():
    with pytest.raises(ValueError):
        build_D(Partition((3, 2, 1)), 5)
    assert make_field(5).p == 5
