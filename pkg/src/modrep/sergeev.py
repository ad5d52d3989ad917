"""Clifford modules L(i_1) * ... * L(i_n) and the Sergeev modules V^xi (n <= p)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .combinatorics import (
    SHIFTED,
    act_on_weight,
    admissible,
    Orbit,
    Partition,
    Tableau,
    b_count,
    count_standard_hook,
    in_CPs,
    q_val,
    row_reading_tableau,
    special_u,
    weight_orbit,
)
from .field import Field, Scalar, make_field, sqrt_base, sqrt_minus_one
from .linalg import FMat, hstack, rref


@dataclass
class CliffordModule:
    """Matrices of x_1..x_n and c_1..c_n on an irreducible P^c_n-supermodule.

    ``parity`` is diagonal (+1 on even, -1 on odd basis vectors).  ``theta``
    is an odd involution supercommuting with the action; present iff type Q.
    """

    field: Field
    weight: tuple[int, ...]
    parity: FMat
    X: list[FMat]
    C: list[FMat]
    module_type: str
    theta: FMat | None = None

    @property
    def dim(self) -> int:
        return self.parity.shape[0]

    @property
    def gamma0(self) -> int:
        return sum(1 for x in self.weight if x == 0)


def _base_module(i: int, field: Field) -> CliffordModule:
    r = sqrt_base(q_val(i, field.p), field)
    X = FMat.diag(field, [r, -r])
    C = FMat.from_rows(field, [[0, 1], [1, 0]])
    parity = FMat.diag(field, [1, -1])
    theta = None
    if i == 0:
        w = sqrt_minus_one(field)
        theta = FMat.from_rows(field, [[0, w], [-w, 0]])
    return CliffordModule(field, (i,), parity, [X], [C], "Q" if i == 0 else "M", theta)


def _tensor(V: CliffordModule, W: CliffordModule) -> CliffordModule:
    """V boxtimes W with the sign rule (1 (x) b)(v (x) w) = (-1)^{|b||v|} v (x) bw."""
    field = V.field
    Iv = FMat.identity(field, V.dim)
    Iw = FMat.identity(field, W.dim)
    X = [M.kron(Iw) for M in V.X] + [Iv.kron(M) for M in W.X]
    C = [M.kron(Iw) for M in V.C] + [V.parity.kron(M) for M in W.C]
    parity = V.parity.kron(W.parity)
    weight = V.weight + W.weight
    if V.module_type == "M" and W.module_type == "M":
        return CliffordModule(field, weight, parity, X, C, "M")
    if V.module_type == "Q" and W.module_type == "M":
        return CliffordModule(field, weight, parity, X, C, "Q", V.theta.kron(Iw))
    if V.module_type == "M":
        return CliffordModule(field, weight, parity, X, C, "Q", V.parity.kron(W.theta))
    # Q (x) Q: split off the omega-eigenspace of the even involution-like J, J^2 = -1
    J = (V.theta @ V.parity).kron(W.theta)
    omega = sqrt_minus_one(field)
    proj = (FMat.identity(field, J.shape[0]) - J.scale(omega)).scale(field(field.inv_base(2)))
    return _restrict(field, weight, parity, X, C, proj)


def _restrict(field, weight, parity, X, C, proj) -> CliffordModule:
    even = [t for t in range(parity.shape[0]) if parity.re[t, t] == 1]
    odd = [t for t in range(parity.shape[0]) if parity.re[t, t] != 1]
    rows, pivots, n_even = [], [], 0
    for part in (even, odd):
        R, piv = rref(proj[:, part].T)
        R = R[: len(piv)]
        rows.append(R)
        pivots += piv
        if part is even:
            n_even = len(piv)
    basis = hstack([R.T for R in rows])  # columns span the summand
    new_par = FMat.diag(field, [1] * n_even + [-1] * (len(pivots) - n_even))

    def restrict(G):
        return (G @ basis)[pivots, :]

    return CliffordModule(field, weight, new_par, [restrict(M) for M in X],
                          [restrict(M) for M in C], "M")


def build_L(weight, p_or_field) -> CliffordModule:
    """Left-to-right super tensor product of the 2-dimensional modules L(i_k)."""
    field = p_or_field if isinstance(p_or_field, Field) else make_field(p_or_field)
    top = (field.p - 1) // 2
    weight = tuple(weight)
    if not weight or any(not 0 <= i <= top for i in weight):
        raise ValueError(f"weight entries must lie in 0..{top}: {weight}")
    mod = _base_module(weight[0], field)
    for i in weight[1:]:
        mod = _tensor(mod, _base_module(i, field))
    bad = clifford_violations(mod)
    if bad:
        raise ArithmeticError(f"Clifford module for {weight} fails: {', '.join(bad)}")
    return mod


def clifford_violations(mod: CliffordModule) -> list[str]:
    """Names of the module invariants that fail (empty when all hold)."""
    field, n = mod.field, len(mod.weight)
    I = FMat.identity(field, mod.dim)
    P, X, C = mod.parity, mod.X, mod.C
    bad = []
    if mod.dim != 2 ** (n - mod.gamma0 // 2):
        bad.append("dim")
    if mod.module_type != ("Q" if mod.gamma0 % 2 else "M"):
        bad.append("type")
    for k in range(n):
        if not C[k] @ C[k] == I:
            bad.append(f"c{k + 1}^2")
        if not X[k] @ X[k] == I.scale(q_val(mod.weight[k], field.p)):
            bad.append(f"x{k + 1}^2")
        if not X[k] @ C[k] == -(C[k] @ X[k]):
            bad.append(f"x{k + 1}c{k + 1}")
        if not P @ C[k] == -(C[k] @ P):
            bad.append(f"parity c{k + 1}")
        if not P @ X[k] == X[k] @ P:
            bad.append(f"parity x{k + 1}")
        for l in range(n):
            if l == k:
                continue
            if not C[k] @ C[l] == -(C[l] @ C[k]):
                bad.append(f"c{k + 1}c{l + 1}")
            if not X[k] @ C[l] == C[l] @ X[k]:
                bad.append(f"x{k + 1}c{l + 1}")
            if not X[k] @ X[l] == X[l] @ X[k]:
                bad.append(f"x{k + 1}x{l + 1}")
    th = mod.theta
    if (th is None) != (mod.module_type == "M"):
        bad.append("theta presence")
    elif th is not None:
        if not th @ th == I:
            bad.append("theta^2")
        if not th @ P == -(P @ th):
            bad.append("theta parity")
        if any(not th @ M == M @ th for M in X):
            bad.append("theta x")
        if any(not th @ M == -(M @ th) for M in C):
            bad.append("theta c")
    return bad


def xi_matrix(Xa: FMat, Xb: FMat, Ca: FMat, Cb: FMat, kappa_a: int, kappa_b: int) -> FMat:
    """-[(x_a + x_b) + c_a c_b (x_a - x_b)] / (kappa_a - kappa_b)."""
    field = Xa.field
    gap = (kappa_a - kappa_b) % field.p
    if gap == 0:
        raise ValueError("kappa values coincide")
    num = (Xa + Xb) + Ca @ Cb @ (Xa - Xb)
    return num.scale(field(-field.inv_base(gap)))


def omega_scalar(a: int, b: int, p_or_field) -> Scalar:
    """Canonical root of 1 - 2(q(a)+q(b))/(q(a)-q(b))^2 for I-values a != b."""
    field = p_or_field if isinstance(p_or_field, Field) else make_field(p_or_field)
    p = field.p
    ka, kb = q_val(a, p), q_val(b, p)
    gap = (ka - kb) % p
    if gap == 0:
        raise ValueError(f"q({a}) = q({b}) mod {p}")
    val = (1 - 2 * (ka + kb) * field.inv_base(gap * gap)) % p
    return sqrt_base(val, field)


def dim_M(xi: Partition, p: int) -> tuple[int, str]:
    """Closed-form dimension and type of the irreducible Y_n-module for xi."""
    _check_xi(xi, p)
    n = xi.n
    scale = 2 ** (n - len(xi) // 2)
    u = special_u(xi, p)
    if u is not None and n == p:
        num = scale * (n - 2 * u + 1) * comb(n - 2, u - 1)
        dim, r = divmod(num, n - u)
        if r:
            raise ArithmeticError("inexact dimension formula")
    else:
        dim = scale * count_standard_hook(xi, SHIFTED)
    return dim, ("Q" if b_count(xi, p) % 2 else "M")


def _check_xi(xi: Partition, p: int) -> None:
    n = xi.n
    if n < 1:
        raise ValueError("need n >= 1")
    if n > p:
        raise ValueError(f"n = {n} > p = {p}: only n <= p is constructed")
    if not xi.is_strict():
        raise ValueError(f"{xi} is not a strict partition")
    if not in_CPs(xi, p):
        raise ValueError(f"{xi} is not in CPs_{p}({n})")


@dataclass
class SergeevRep:
    """V^xi realised as copies of one Clifford module U, one copy per tableau.

    Copy t carries U twisted by tau_t: x_m acts as U.X[tau_t^-1(m)], likewise c_m.
    """

    field: Field
    xi: Partition
    blocks: list[Tableau]
    U: CliffordModule
    orbit: Orbit
    order: list[int]
    S: list[FMat]
    C: list[FMat]
    X: list[FMat]
    parity: FMat

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return self.xi.n

    @property
    def block_dim(self) -> int:
        return self.U.dim

    @property
    def dim(self) -> int:
        return self.parity.shape[0]

    @property
    def module_type(self) -> str:
        return self.U.module_type

    def tau_inv(self, t: int) -> tuple[int, ...]:
        return self.orbit.tau_inv[self.order[t]]

    def generators(self) -> dict[str, FMat]:
        gens = {f"c{m + 1}": M for m, M in enumerate(self.C)}
        gens.update({f"s{k + 1}": M for k, M in enumerate(self.S)})
        gens.update({f"x{m + 1}": M for m, M in enumerate(self.X)})
        return gens


def seed_tableau(xi: Partition) -> Tableau:
    return row_reading_tableau(xi, SHIFTED)


def build_V(xi: Partition, p: int) -> SergeevRep:
    _check_xi(xi, p)
    field = make_field(p)
    n = xi.n
    seed = seed_tableau(xi)
    orbit = weight_orbit(seed, p)
    # blocks in reading-word order
    order = sorted(range(len(orbit)), key=lambda t: orbit.tableaux[t].reading_word())
    blocks = [orbit.tableaux[t] for t in order]
    pos = {t: b for b, t in enumerate(order)}
    U = build_L(orbit.seed, field)
    m = U.dim
    nb = len(blocks)
    kappa = [q_val(i, p) for i in orbit.seed]

    C = [FMat.block_diag(field, [U.C[orbit.tau_inv[t][j]] for t in order]) for j in range(n)]
    X = [FMat.block_diag(field, [U.X[orbit.tau_inv[t][j]] for t in order]) for j in range(n)]
    parity = FMat.block_diag(field, [U.parity] * nb)

    S = []
    for k in range(1, n):
        M = FMat.zeros(field, nb * m)
        for b, t in enumerate(order):
            inv = orbit.tau_inv[t]
            a_idx, b_idx = inv[k - 1], inv[k]
            Xi = xi_matrix(U.X[a_idx], U.X[b_idx], U.C[a_idx], U.C[b_idx],
                           kappa[a_idx], kappa[b_idx])
            sl = slice(b * m, (b + 1) * m)
            M.re[sl, sl], M.im[sl, sl] = Xi.re, Xi.im
            w = orbit.weights[t]
            if not admissible(w, k):
                continue
            new_inv = list(inv)
            new_inv[k - 1], new_inv[k] = new_inv[k], new_inv[k - 1]
            other = orbit.index[act_on_weight(new_inv, orbit.seed)]
            om = omega_scalar(w[k - 1], w[k], field)
            sl2 = slice(pos[other] * m, (pos[other] + 1) * m)
            M.re[sl2, sl] = om.a * FMat.identity(field, m).re
            M.im[sl2, sl] = om.b * FMat.identity(field, m).re
        S.append(M)
    return SergeevRep(field, xi, blocks, U, orbit, order, S, C, X, parity)


def jm_sergeev(rep) -> list[FMat]:
    """L_k = sum_{j<k} (1 + c_j c_k)(j k), from the c- and s-matrices."""
    from .symrep import transposition_matrices

    ident = FMat.identity(rep.field, rep.dim)
    trans = transposition_matrices(rep.S, rep.n, ident)
    L = [FMat.zeros(rep.field, rep.dim)]
    for k in range(2, rep.n + 1):
        acc = FMat.zeros(rep.field, rep.dim)
        for j in range(1, k):
            acc = acc + (ident + rep.C[j - 1] @ rep.C[k - 1]) @ trans[(j, k)]
        L.append(acc)
    return L


def xi_radical_form(U: CliffordModule, a: int, b: int, root_a: Scalar, root_b: Scalar) -> FMat:
    """-(1/(r_a - r_b) + c_a c_b/(r_a + r_b)).

    Agrees with xi_matrix on vectors where x_a acts as r_a and x_b as r_b.
    """
    field = U.field
    ident = FMat.identity(field, U.dim)
    return -(ident.scale((root_a - root_b).inverse())
             + (U.C[a] @ U.C[b]).scale((root_a + root_b).inverse()))


def shifted_count_formula(xi: Partition, p: int) -> int:
    """Closed form for the number of shifted p-standard tableaux (n <= p)."""
    n = xi.n
    u = special_u(xi, p)
    if u is not None and n == p:
        num = (n - 2 * u + 1) * comb(n - 2, u - 1)
        q, r = divmod(num, n - u)
        if r:
            raise ArithmeticError("inexact count")
        return q
    return factorial(n) // _hook_product(xi)


def _hook_product(xi: Partition) -> int:
    from .combinatorics import diagram, hook_length
    out = 1
    for v in diagram(xi, SHIFTED):
        out *= hook_length(xi, v, SHIFTED)
    return out
