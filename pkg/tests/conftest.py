from __future__ import annotations

from functools import lru_cache

import pytest

from modrep.combinatorics import Partition, partitions_enum
from modrep.sergeev import build_V
from modrep.symrep import build_D

PRIMES = (3, 5, 7)

# criterion number -> (passed, message); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@lru_cache(maxsize=None)
def sym_rep(lam: tuple[int, ...], p: int):
    return build_D(Partition(lam), p)


@lru_cache(maxsize=None)
def sergeev_rep(xi: tuple[int, ...], p: int):
    return build_V(Partition(xi), p)


def sym_shapes(p: int) -> list[tuple[int, ...]]:
    return [tuple(lam) for lam in partitions_enum(p) if lam != Partition([1] * p)]


def sergeev_shapes(p: int) -> list[tuple[int, ...]]:
    return [tuple(xi) for xi in partitions_enum(p, "strict") if xi != (p,)]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {msg}")


@pytest.fixture
def field7():
    from modrep.field import make_field

    return make_field(7)
