"""Irreducible F S_n-modules D^lambda for n <= p in seminormal form."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .combinatorics import (
    STRAIGHT,
    Partition,
    Tableau,
    classify,
    count_standard_hook,
    enumerate_standard,
    residue,
)
from .field import Field, Scalar, make_field, sqrt_base
from .linalg import FMat


def _check_shape(lam: Partition, p: int) -> None:
    n = lam.n
    if n < 1:
        raise ValueError("need n >= 1")
    if n > p:
        raise ValueError(f"n = {n} > p = {p}: only n <= p is constructed")
    if not classify(lam, p).in_CP_p:
        raise ValueError(f"{lam} is not in CP_{p}({n}) (not p-regular)")


def hook_arm(lam: Partition, p: int) -> int | None:
    """k when n = p and lam = (k, 1^(n-k)) with 2 <= k <= n-1."""
    n = lam.n
    if n == p and lam.is_hook() and 2 <= lam[0] <= n - 1:
        return lam[0]
    return None


def _residues(T: Tableau, p: int) -> dict[int, int]:
    return {x: residue(v, p, STRAIGHT) for v, x in T.nodes().items()}


def rho(T: Tableau, a: int, p: int) -> Scalar:
    """1 / (res(T(a+1)) - res(T(a))) in F_p."""
    field = make_field(p)
    res = _residues(T, p)
    gap = (res[a + 1] - res[a]) % p
    if gap == 0:
        raise ValueError(f"residues of {a} and {a + 1} coincide; T is not p-standard")
    return field(field.inv_base(gap))


def dim_D(lam: Partition, p: int) -> int:
    _check_shape(lam, p)
    k = hook_arm(lam, p)
    if k is not None:
        return comb(lam.n - 2, k - 2)
    return count_standard_hook(lam, STRAIGHT)


def radical_dim(lam: Partition, p: int) -> int:
    if lam.n != p:
        raise ValueError(f"radical dimension is given for n = p only (n = {lam.n}, p = {p})")
    _check_shape(lam, p)
    k = hook_arm(lam, p)
    return 0 if k is None else comb(p - 2, k - 1)


@dataclass
class SymRep:
    """Generator matrices S_1..S_{n-1} acting on columns indexed by ``basis``.

    In the hook case the basis holds tableaux of shape lambda^- (the node
    (1, k) holding n deleted); ``residues`` always refers to the full shape.
    """

    field: Field
    lam: Partition
    basis: list[Tableau]
    S: list[FMat]
    residues: list[tuple[int, ...]]
    hook: bool = False

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return self.lam.n

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def C(self) -> list[FMat]:
        return []

    @property
    def X(self) -> list[FMat]:
        return []

    @property
    def parity(self) -> FMat:
        return FMat.identity(self.field, self.dim)

    def generators(self) -> dict[str, FMat]:
        return {f"s{k + 1}": m for k, m in enumerate(self.S)}


def build_D(lam: Partition, p: int) -> SymRep:
    _check_shape(lam, p)
    field = make_field(p)
    n = lam.n
    k = hook_arm(lam, p)
    if k is None:
        basis = enumerate_standard(lam, STRAIGHT, p)
    else:
        lam_minus = Partition([k - 1] + [1] * (n - k))
        basis = enumerate_standard(lam_minus, STRAIGHT)
    index = {T: t for t, T in enumerate(basis)}
    d = len(basis)

    residues = []
    for T in basis:
        res = _residues(T, p)
        if k is not None:
            res[n] = residue((1, k), p)
        residues.append(tuple(res[x] for x in range(1, n + 1)))

    S = []
    for i in range(1, n):
        M = FMat.zeros(field, d)
        for t, T in enumerate(basis):
            if k is not None and i == n - 1:
                # n-1 sits at (1, k-1) or at (n-k+1, 1)
                sign = 1 if T.entry((1, k - 1)) == n - 1 else -1
                M.re[t, t] = sign % p
                continue
            gap = (residues[t][i] - residues[t][i - 1]) % p
            r = field(field.inv_base(gap))
            M.re[t, t], M.im[t, t] = r.a, r.b
            partner = index.get(T.swap(i))
            if partner is None:
                if r != 1 and r != -1:
                    raise ArithmeticError(f"s_{i} leaves the basis from {T.rows} with rho = {r}")
                continue
            # same canonical root at both (T, s_iT) positions
            c = sqrt_base((1 - r * r).a, field)
            M.re[partner, t], M.im[partner, t] = c.a, c.b
        S.append(M)
    return SymRep(field, lam, basis, S, residues, hook=k is not None)


def transposition_matrices(S: list[FMat], n: int, identity: FMat) -> dict[tuple[int, int], FMat]:
    """Matrices of (j k), 1 <= j < k <= n, from (j k) = s_j (j+1 k) s_j."""
    out = {}
    for k in range(2, n + 1):
        cur = S[k - 2]
        out[(k - 1, k)] = cur
        for j in range(k - 2, 0, -1):
            cur = S[j - 1] @ cur @ S[j - 1]
            out[(j, k)] = cur
    return out


def jm_sym(rep: SymRep) -> list[FMat]:
    """L_1 = 0 and L_k = sum_{m<k} (m k), computed from the generator matrices."""
    ident = FMat.identity(rep.field, rep.dim)
    trans = transposition_matrices(rep.S, rep.n, ident)
    L = [FMat.zeros(rep.field, rep.dim)]
    for k in range(2, rep.n + 1):
        acc = FMat.zeros(rep.field, rep.dim)
        for m in range(1, k):
            acc = acc + trans[(m, k)]
        L.append(acc)
    return L
