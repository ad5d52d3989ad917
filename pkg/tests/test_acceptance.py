"""End-to-end acceptance gate; one PASS/FAIL line per criterion in the terminal summary."""

from __future__ import annotations

import subprocess
import sys
import time
from fractions import Fraction
from math import comb, factorial, prod

import pytest

from conftest import ACCEPTANCE, PRIMES, sergeev_rep, sergeev_shapes, sym_rep, sym_shapes
from modrep.combinatorics import (
    SHIFTED,
    STRAIGHT,
    Partition,
    b_count,
    classify,
    count_standard_hook,
    enumerate_standard,
    partitions_enum,
)
from modrep.sergeev import build_V, dim_M, jm_sergeev
from modrep.symrep import build_D, radical_dim
from modrep.verify import (
    check_jm,
    check_relations,
    cross_check_suite,
    direct_sum,
    find_proper_graded_submodule,
    is_invariant,
    super_commutant_dim,
)

pytestmark = pytest.mark.acceptance


def record(k: int, ok: bool, msg: str) -> None:
    ACCEPTANCE[k] = (ok, msg)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {msg}")


# -------------------------------------------------------------- independent oracles


def hook_product_count(lam) -> int:
    conj = [sum(1 for part in lam if part > j) for j in range(lam[0])]
    hooks = [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]
    return factorial(sum(lam)) // prod(hooks)


def schur_shifted_count(xi) -> int:
    value = Fraction(factorial(sum(xi)), prod(factorial(x) for x in xi))
    for i in range(len(xi)):
        for j in range(i + 1, len(xi)):
            value *= Fraction(xi[i] - xi[j], xi[i] + xi[j])
    assert value.denominator == 1
    return int(value)


def oracle_dim_D(lam, p: int) -> int:
    """n = p: a hook (k, 1^(p-k)) loses binom(p-2, k-1) dimensions; other shapes are simple."""
    f = hook_product_count(lam)
    if len(lam) > 1 and lam[1] > 1:
        return f
    k = lam[0]
    return f - comb(p - 2, k - 1)


FROZEN_DIM_D = {
    3: {(3,): 1, (2, 1): 1},
    5: {(5,): 1, (4, 1): 3, (3, 2): 5, (3, 1, 1): 3, (2, 2, 1): 5, (2, 1, 1, 1): 1},
    7: {(7,): 1, (6, 1): 5, (5, 2): 14, (5, 1, 1): 10, (4, 3): 14, (4, 2, 1): 35,
        (4, 1, 1, 1): 10, (3, 3, 1): 21, (3, 2, 2): 21, (3, 2, 1, 1): 35, (3, 1, 1, 1, 1): 5,
        (2, 2, 2, 1): 14, (2, 2, 1, 1, 1): 14, (2, 1, 1, 1, 1, 1): 1},
}

FROZEN_DIM_V = {
    3: {(2, 1): (4, "M")},
    5: {(4, 1): (16, "M"), (3, 2): (32, "M")},
    7: {(6, 1): (64, "M"), (5, 2): (256, "M"), (4, 3): (320, "M"), (4, 2, 1): (448, "Q")},
}


def all_reps():
    for p in PRIMES:
        for lam in sym_shapes(p):
            yield f"D{lam} p={p}", sym_rep(lam, p)
        for xi in sergeev_shapes(p):
            yield f"V{xi} p={p}", sergeev_rep(xi, p)


# ------------------------------------------------------------------------ criteria


def test_criterion_1_sym_dimensions():
    start = time.perf_counter()
    bad = []
    for p in PRIMES:
        for lam in partitions_enum(p):
            if lam == Partition([1] * p):
                with pytest.raises(ValueError):
                    build_D(lam, p)
                continue
            dim = build_D(lam, p).dim
            if not (dim == oracle_dim_D(lam, p) == FROZEN_DIM_D[p][tuple(lam)]):
                bad.append((p, tuple(lam), dim))
        if set(FROZEN_DIM_D[p]) != set(sym_shapes(p)):
            bad.append((p, "shape set"))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    record(1, ok, f"build_D dims exact for p in {PRIMES}, {elapsed:.2f}s (< 10s), mismatches={bad}")
    assert ok


def test_criterion_2_relation_suite():
    reps = list(all_reps())  # built outside the timed region
    start = time.perf_counter()
    failures = []
    for label, rep in reps:
        for report in (check_relations(rep), check_jm(rep)):
            if not report.ok:
                failures.append((label, report.relations()))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    record(2, ok, f"{len(reps)} reps, relation + JM reports empty, {elapsed:.1f}s (< 60s), failures={failures}")
    assert ok


def test_criterion_3_hook_formula():
    start = time.perf_counter()
    bad = []
    checked = 0
    for n in range(1, 9):
        for lam in partitions_enum(n):
            counted = len(enumerate_standard(lam, STRAIGHT))
            if not counted == count_standard_hook(lam, STRAIGHT) == hook_product_count(lam):
                bad.append(("straight", tuple(lam)))
            checked += 1
        for xi in partitions_enum(n, "strict"):
            counted = len(enumerate_standard(xi, SHIFTED))
            if not counted == count_standard_hook(xi, SHIFTED) == schur_shifted_count(xi):
                bad.append(("shifted", tuple(xi)))
            checked += 1
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    record(3, ok, f"{checked} shapes n <= 8, enumeration == hook count, {elapsed:.2f}s (< 30s), bad={bad}")
    assert ok


def test_criterion_4_sergeev_dimensions():
    bad = []
    for p in PRIMES:
        built = {}
        for xi in partitions_enum(p, "strict"):
            try:
                rep = build_V(xi, p)
            except ValueError:
                continue
            built[tuple(xi)] = (rep.dim, rep.module_type)
            if (rep.dim, rep.module_type) != dim_M(xi, p):
                bad.append((p, tuple(xi), "closed form"))
        expected = {tuple(xi) for xi in partitions_enum(p, "strict")
                    if classify(xi, p).in_CPs_p and xi != Partition([p])}
        if set(built) != expected or built != FROZEN_DIM_V[p]:
            bad.append((p, built))
    ok = not bad
    record(4, ok, f"build_V succeeds exactly on SP(p) minus (p), dims {FROZEN_DIM_V}, bad={bad}")
    assert ok


def test_criterion_5_factoring():
    bad = []
    count = 0
    for p in PRIMES:
        for xi in (tuple(x) for n in range(1, p + 1) for x in partitions_enum(n, "strict")):
            if not classify(Partition(xi), p).in_CPs_p or xi == (p,):
                continue
            rep = sergeev_rep(xi, p)
            count += 1
            if not rep.X[0].is_zero():
                bad.append((p, xi, "x1"))
            L = jm_sergeev(rep)
            if any(not (L[k] == rep.X[k]) for k in range(rep.n)):
                bad.append((p, xi, "L_k"))
    ok = not bad
    record(5, ok, f"{count} Sergeev reps: X_1 = 0 and L_k = X_k exactly, bad={bad}")
    assert ok


def test_criterion_6_type_detection():
    start = time.perf_counter()
    rows, bad = [], []
    for p in (5, 7):
        for n in range(1, p + 1):
            for xi in partitions_enum(n, "strict"):
                if not classify(xi, p).in_CPs_p or dim_M(xi, p)[0] > 128:
                    continue
                rep = sergeev_rep(tuple(xi), p)
                got = super_commutant_dim(rep, cap=128, seed=p * 100 + n).as_tuple()
                want = (1, 0) if b_count(xi, p) % 2 == 0 else (1, 1)
                rows.append((p, tuple(xi), got))
                if got != want:
                    bad.append((p, tuple(xi), got, want))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 600 and rows
    record(6, ok, f"{len(rows)} modules, commutant matches b parity, {elapsed:.1f}s (< 600s), bad={bad}")
    assert ok


def test_criterion_7_irreducibility_evidence():
    start = time.perf_counter()
    found = []
    reps = list(all_reps())
    for i, (label, rep) in enumerate(reps):
        if find_proper_graded_submodule(rep, 100, seed=i) is not None:
            found.append(label)
    controls = []
    for a, b, p in (((2, 1), (2, 1), 3), ((3, 2), (4, 1), 5), ((3, 2), (3, 2), 5)):
        for make in (sym_rep, sergeev_rep):
            if make is sym_rep and len(a) > 2:
                continue
            pair = direct_sum(make(a, p), make(b, p))
            w = find_proper_graded_submodule(pair, 5, seed=1)
            controls.append(w is not None and 0 < w.shape[0] < pair.dim
                            and is_invariant(w, list(pair.S) + list(pair.C) + list(pair.X)))
    elapsed = time.perf_counter() - start
    ok = not found and all(controls)
    record(7, ok, f"{len(reps)} reps x 100 trials: no submodule; {sum(controls)}/{len(controls)} "
                  f"direct-sum controls caught within 5 trials; {elapsed:.0f}s; found={found}")
    assert ok


def test_criterion_8_classification_boundary():
    summary = cross_check_suite([3, 5, 7], 12)
    witnesses = {}
    bad = [(r.p, r.n, r.check) for r in summary.rows if not r.passed]
    for r in summary.rows:
        if r.check == "CP_p == P_p" and r.n > r.p:
            if r.data.get("witness") != [r.n - 1, 1]:
                bad.append((r.p, r.n, "hook witness"))
        if r.check == "RP_p == CPs_p" and r.n > r.p:
            w = r.data.get("witness")
            witnesses[(r.p, r.n)] = w
            if w is None or r.p not in w:
                bad.append((r.p, r.n, "part-p witness"))
    ok = summary.ok and not bad
    sample = {k: witnesses[k] for k in sorted(witnesses)[:3]}
    record(8, ok, f"{len(summary.rows)} rows; equalities exactly for n <= p; witnesses e.g. {sample}; bad={bad}")
    assert ok


def test_criterion_9_radical_dimensions():
    bad = []
    for p in PRIMES:
        for k in range(2, p + 1):
            lam = Partition([k] + [1] * (p - k))
            rad = radical_dim(lam, p)
            f = hook_product_count(lam)
            dim = sym_rep(tuple(lam), p).dim
            if not rad == comb(p - 2, k - 1) == f - dim:
                bad.append((p, k, rad, f, dim))
    ok = not bad
    record(9, ok, f"hooks (k,1^(p-k)) for p in {PRIMES}: radical = binom(p-2,k-1) = f - dim D, bad={bad}")
    assert ok


def test_criterion_10_determinism(tmp_path):
    cases = [("sergeev", "5", "3,2"), ("sym", "7", "4,2,1"), ("sergeev", "7", "4,2,1")]
    bad = []
    for algebra, p, shape in cases:
        outputs = []
        for run in range(2):
            path = tmp_path / f"{algebra}-{p}-{shape}-{run}.json"
            subprocess.run([sys.executable, "-m", "modrep", "build", "--algebra", algebra, "--p", p,
                            "--shape", shape, "--out", str(path)], check=True, capture_output=True)
            outputs.append(path.read_bytes())
        if outputs[0] != outputs[1]:
            bad.append((algebra, p, shape))
    ok = not bad
    record(10, ok, f"{len(cases)} build exports byte-identical across two processes, bad={bad}")
    assert ok
