"""Independent checks on constructed representations.

Everything here works from the generator matrices alone: defining relations,
Jucys-Murphy identities, the super-commutant (type M versus type Q) and a
randomised search for graded submodules.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from .combinatorics import (
    SHIFTED,
    STRAIGHT,
    Partition,
    classify,
    count_standard_hook,
    enumerate_standard,
    partitions_enum,
)
from .field import Scalar
from .linalg import FMat, Frozen, RowSpace, hstack, inverse, nullspace, random_fmat, rref, spin, vstack
from .sergeev import SergeevRep, jm_sergeev, shifted_count_formula
from .symrep import SymRep, dim_D, jm_sym


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class Violation:
    relation: str
    indices: tuple[int, ...]
    witness: tuple[int, int]

    def __str__(self):
        idx = ",".join(map(str, self.indices))
        return f"{self.relation}[{idx}] fails at entry {self.witness}"


@dataclass
class ViolationReport:
    violations: list[Violation] = dc_field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def relations(self) -> set[str]:
        return {v.relation for v in self.violations}

    def _expect(self, relation: str, indices, lhs: FMat, rhs: FMat) -> None:
        self.checked += 1
        diff = lhs - rhs
        where = diff.first_nonzero()
        if where is not None:
            self.violations.append(Violation(relation, tuple(i + 1 for i in indices), where))

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked,
                "violations": [{"relation": v.relation, "indices": list(v.indices),
                                "witness": list(v.witness)} for v in self.violations]}


def _mats(rep):
    return list(rep.S), list(rep.C), list(rep.X)


def check_relations(rep) -> ViolationReport:
    """Evaluate every defining relation as an exact matrix identity.

    For a SymRep only the Coxeter relations apply.  For a SergeevRep the
    affine Sergeev relations are checked together with the parity rules.
    Indices in the report are 1-based generator indices.
    """
    S, C, X = _mats(rep)
    I = FMat.identity(rep.field, rep.dim)
    rep_out = ViolationReport()
    m = len(S)
    for i in range(m):
        rep_out._expect("s^2", (i,), S[i] @ S[i], I)
    for i in range(m - 1):
        rep_out._expect("braid", (i, i + 1), S[i] @ S[i + 1] @ S[i], S[i + 1] @ S[i] @ S[i + 1])
    for i in range(m):
        for j in range(i + 2, m):
            rep_out._expect("s_far", (i, j), S[i] @ S[j], S[j] @ S[i])
    if not C:
        return rep_out

    n = len(C)
    P = rep.parity
    for i in range(n):
        rep_out._expect("c^2", (i,), C[i] @ C[i], I)
        for j in range(i + 1, n):
            rep_out._expect("cc", (i, j), C[i] @ C[j], -(C[j] @ C[i]))
            rep_out._expect("xx", (i, j), X[i] @ X[j], X[j] @ X[i])
        for j in range(n):
            if i == j:
                rep_out._expect("xc", (i,), X[i] @ C[i], -(C[i] @ X[i]))
            else:
                rep_out._expect("xc_far", (i, j), X[i] @ C[j], C[j] @ X[i])
        rep_out._expect("parity_c", (i,), P @ C[i], -(C[i] @ P))
        rep_out._expect("parity_x", (i,), P @ X[i], X[i] @ P)
    for i in range(m):
        rep_out._expect("sx", (i,), S[i] @ X[i], X[i + 1] @ S[i] - (I + C[i] @ C[i + 1]))
        rep_out._expect("sc", (i,), S[i] @ C[i], C[i + 1] @ S[i])
        rep_out._expect("sc'", (i,), S[i] @ C[i + 1], C[i] @ S[i])
        rep_out._expect("parity_s", (i,), P @ S[i], S[i] @ P)
        for j in range(n):
            if j in (i, i + 1):
                continue
            rep_out._expect("sx_far", (i, j), S[i] @ X[j], X[j] @ S[i])
            rep_out._expect("sc_far", (i, j), S[i] @ C[j], C[j] @ S[i])
    return rep_out


def check_jm(rep, X_override: list[FMat] | None = None) -> ViolationReport:
    """Jucys-Murphy identities.

    SymRep: each L_k is diagonal with the residue of k on the diagonal.
    SergeevRep: X_1 = 0 and L_k = X_k.
    """
    out = ViolationReport()
    if isinstance(rep, SymRep):
        for k, L in enumerate(jm_sym(rep)):
            out.checked += 1
            off = L - FMat.diag(rep.field, L.diagonal())
            where = off.first_nonzero()
            if where is not None:
                out.violations.append(Violation("jm_diagonal", (k + 1,), where))
                continue
            target = FMat.diag(rep.field, [r[k] for r in rep.residues])
            out._expect("jm_residue", (k,), L, target)
        return out
    X = rep.X if X_override is None else X_override
    out._expect("x1_zero", (0,), X[0], FMat.zeros(rep.field, rep.dim))
    for k, L in enumerate(jm_sergeev(rep)):
        out._expect("jm", (k,), L, X[k])
    return out


# ---------------------------------------------------------------- commutant


@dataclass(frozen=True)
class CommutantResult:
    even_dim: int
    odd_dim: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.even_dim, self.odd_dim)

    @property
    def module_type(self) -> str | None:
        return {(1, 0): "M", (1, 1): "Q"}.get(self.as_tuple())


def _graded_gens(rep) -> list[tuple[FMat, bool]]:
    """(matrix, is_odd) for every generator; parity counts as odd for the sign rule."""
    gens = [(M, False) for M in rep.S] + [(M, False) for M in rep.X]
    gens += [(M, True) for M in rep.C]
    if rep.C:
        gens.append((rep.parity, True))
    return gens


def _even_mask(rep) -> np.ndarray:
    P = rep.parity
    return P.re.diagonal() == 1


def _random_homogeneous(rep, rng, odd: bool = False) -> FMat:
    mask = _even_mask(rep)
    if odd:
        mask = ~mask
    v = random_fmat(rep.field, 1, rep.dim, rng)
    v.re[:, ~mask] = 0
    v.im[:, ~mask] = 0
    return v


@dataclass
class _CyclicBasis:
    vectors: list[FMat]          # columns w_j
    words: list[FMat]            # W_j with w_j = W_j v_{root(j)}
    odd_letters: list[int]       # number of odd letters in W_j
    root: list[int]


def _cyclic_basis(rep, rng, max_roots: int = 16) -> _CyclicBasis:
    """Basis w_j = W_j v_r built breadth-first from homogeneous seed vectors."""
    d = rep.dim
    gens = _graded_gens(rep)
    space = RowSpace(rep.field, d)
    I = FMat.identity(rep.field, d)
    cb = _CyclicBasis([], [], [], [])
    roots = 0
    while space.rank < d:
        if roots == max_roots:
            raise RuntimeError("could not generate the module from homogeneous vectors")
        v = _random_homogeneous(rep, rng, odd=bool(roots % 2))
        if space.contains(v):
            roots += 1
            continue
        start = len(cb.vectors)
        space.add(v)
        cb.vectors.append(v.T)
        cb.words.append(I)
        cb.odd_letters.append(0)
        cb.root.append(roots)
        j = start
        while j < len(cb.vectors) and space.rank < d:
            for G, odd in gens:
                w = G @ cb.vectors[j]
                if space.add(w.T).shape[0]:
                    cb.vectors.append(w)
                    cb.words.append(G @ cb.words[j])
                    cb.odd_letters.append(cb.odd_letters[j] + int(odd))
                    cb.root.append(roots)
            j += 1
        roots += 1
    return cb


def _commutant_space(rep, cb: _CyclicBasis, odd: bool, rng) -> int:
    d = rep.dim
    field = rep.field
    n_roots = max(cb.root) + 1
    B_inv = inverse(hstack(cb.vectors))
    # E[(r, s)] = matrix of the map sending root r to e_s, other roots to 0
    E = []
    for r in range(n_roots):
        cols = [j for j in range(d) if cb.root[j] == r]
        for s in range(d):
            Phi = FMat.zeros(field, d, d)
            for j in cols:
                col = cb.words[j][:, s]
                if odd and cb.odd_letters[j] % 2:
                    col = -col
                Phi.re[:, j] = col.re[0]
                Phi.im[:, j] = col.im[0]
            E.append(Phi @ B_inv)
    n_unk = len(E)
    gens = _graded_gens(rep)

    def blocks(G, g_odd):
        # columns vec(G E_t - E_t G), or vec(G E_t + E_t G) for an odd pair
        anti = odd and g_odd
        cols = []
        for M in E:
            R = G @ M + M @ G if anti else G @ M - M @ G
            cols.append(FMat._raw(R.re.reshape(-1, 1), R.im.reshape(-1, 1), field))
        return hstack(cols)

    A = [blocks(G, g_odd) for G, g_odd in gens]
    extra = 8
    while True:
        k = min(n_unk + extra, sum(a.shape[0] for a in A))
        comp = FMat.zeros(field, k, n_unk)
        for a in A:
            comp = comp + random_fmat(field, k, a.shape[0], rng) @ a
        N = nullspace(comp)
        exact = all((a @ N).is_zero() for a in A)
        if exact:
            return N.shape[1]
        extra *= 2


def super_commutant_dim(rep, cap: int = 128, seed: int = 0) -> CommutantResult:
    """Dimensions of the even and odd parts of the super-commutant.

    The module is written as a cyclic (or multi-cyclic) span of homogeneous
    vectors, so an endomorphism is fixed by the images of the seeds; the
    super-commutation equations then form a linear system in those images.
    Random row compression keeps the system small and every solution is
    verified against the full system before it is accepted.
    """
    if rep.dim > cap:
        raise ValueError(f"dimension {rep.dim} exceeds the commutant cap {cap}")
    rng = np.random.default_rng(seed)
    cb = _cyclic_basis(rep, rng)
    even = _commutant_space(rep, cb, False, rng)
    odd = 0 if not rep.C else _commutant_space(rep, cb, True, rng)
    return CommutantResult(even, odd)


def intertwiners(source: list[FMat], target: list[FMat], cap: int = 32) -> FMat:
    """Basis of {Phi : Phi A_k = B_k Phi for all k}, one flattened Phi per column.

    Solved directly on the d^2 unknowns, so only meant for small modules.
    """
    d = source[0].shape[0]
    if d > cap:
        raise ValueError(f"dimension {d} exceeds the intertwiner cap {cap}")
    field = source[0].field
    I = FMat.identity(field, d)
    # row-major vec: vec(Phi A) = (I kron A^T) vec(Phi), vec(B Phi) = (B kron I) vec(Phi)
    rows = [I.kron(A.T) - B.kron(I) for A, B in zip(source, target)]
    return nullspace(vstack(rows))


def unflatten(col: FMat, d: int) -> FMat:
    return FMat._raw(col.re.reshape(d, d), col.im.reshape(d, d), col.field)


# ---------------------------------------------------------------- submodules


@dataclass
class DirectSum:
    """Block direct sum of two representations with the same n and field."""

    first: object
    second: object

    def __post_init__(self):
        if self.first.field != self.second.field or self.first.n != self.second.n:
            raise ValueError("summands must share the field and n")
        f = self.first.field
        self.field = f
        self.n = self.first.n
        self.S = [FMat.block_diag(f, [a, b]) for a, b in zip(self.first.S, self.second.S)]
        self.C = [FMat.block_diag(f, [a, b]) for a, b in zip(self.first.C, self.second.C)]
        self.X = [FMat.block_diag(f, [a, b]) for a, b in zip(self.first.X, self.second.X)]
        self.parity = FMat.block_diag(f, [self.first.parity, self.second.parity])

    @property
    def dim(self) -> int:
        return self.parity.shape[0]


def direct_sum(a, b) -> DirectSum:
    return DirectSum(a, b)


def _spin_gens(rep) -> list[FMat]:
    gens = list(rep.S) + list(rep.C) + list(rep.X)
    if rep.C:
        gens.append(rep.parity)
    return gens


def _random_even_element(rep, rng) -> FMat:
    """Random combination of s, x and c_i c_j, times a second such combination."""
    field = rep.field
    p = field.p
    pieces = list(rep.S) + list(rep.X)
    C = rep.C
    pieces += [C[i] @ C[i + 1] for i in range(len(C) - 1)]
    if not pieces:
        return FMat.identity(field, rep.dim)
    re = np.stack([M.re for M in pieces])
    im = np.stack([M.im for M in pieces])

    def combo():
        coef = rng.integers(0, p, len(pieces))
        return FMat._raw(np.tensordot(coef, re, 1) % p, np.tensordot(coef, im, 1) % p, field)

    return combo() + combo() @ combo()


def _poly_roots(coeffs: list[Scalar]) -> list[Scalar]:
    field = coeffs[0].field
    roots = []
    for z in field.elements():
        acc = field.zero
        for c in reversed(coeffs):
            acc = acc * z + c
        if acc.is_zero():
            roots.append(z)
    return roots


def _krylov_eigenvector(rep, a: FMat, v: FMat) -> FMat | None:
    """An eigenvector of a inside the a-cyclic span of v, if a has an eigenvalue there."""
    field = rep.field
    at = Frozen(a.T)
    kry = [v]
    for _ in range(rep.dim):
        kry.append(at.rmul(kry[-1]))
    K = vstack(kry).T
    R, piv = rref(K)
    m = len(piv)
    if piv != list(range(m)):
        raise ArithmeticError("Krylov pivots are not an initial segment")
    # a^m v = sum_i R[i, m] a^i v, so g(t) = t^m - sum_i R[i, m] t^i kills v
    g = [-R.entry(i, m) for i in range(m)] + [field.one]
    roots = _poly_roots(g)
    if not roots:
        return None
    lam = roots[0]
    # h = g / (t - lam) by synthetic division
    h = [field.zero] * m
    carry = field.zero
    for i in range(m, 0, -1):
        carry = g[i] + carry * lam
        h[i - 1] = carry
    coef = FMat.from_rows(field, [[c] for c in h])
    w = (K[:, :m] @ coef).T
    return None if w.is_zero() else w


def _homogeneous_parts(rep, w: FMat) -> list[FMat]:
    mask = _even_mask(rep)
    parts = []
    for keep in (mask, ~mask):
        u = w.copy()
        u.re[:, ~keep] = 0
        u.im[:, ~keep] = 0
        if not u.is_zero():
            parts.append(u)
    return parts


def find_proper_graded_submodule(rep, trials: int, seed: int = 0) -> FMat | None:
    """Randomised search for a proper nonzero graded submodule.

    Each trial spins a random homogeneous vector and a homogeneous component
    of an eigenvector of a random even algebra element.  Returns the row
    basis of the first proper invariant subspace found, or None.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    gens = _spin_gens(rep)
    d = rep.dim
    for t in range(trials):
        candidates = [_random_homogeneous(rep, rng, odd=bool(t % 2) and bool(rep.C))]
        w = _krylov_eigenvector(rep, _random_even_element(rep, rng), candidates[0])
        if w is not None:
            candidates += _homogeneous_parts(rep, w)
        for v in candidates:
            if v.is_zero():
                continue
            space = spin(v, gens)
            if space.rank < d:
                return space.basis
    return None


def is_invariant(basis: FMat, gens: list[FMat]) -> bool:
    space = RowSpace(basis.field, basis.shape[1])
    space.add(basis)
    return all(space.contains(basis @ G.T) for G in gens)


# ---------------------------------------------------------------- classification


@dataclass
class CheckRow:
    p: int
    n: int
    check: str
    passed: bool
    data: dict

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "check": self.check, "pass": self.passed, "data": self.data}


@dataclass
class SuiteSummary:
    rows: list[CheckRow]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_json(self) -> dict:
        return {"ok": self.ok, "rows": [r.to_json() for r in self.rows]}

    def to_text(self) -> str:
        lines = [f"{'p':>2} {'n':>3}  {'check':<24} {'result':<6} data"]
        for r in self.rows:
            data = json.dumps(r.data, sort_keys=True, separators=(",", ":"))
            lines.append(f"{r.p:>2} {r.n:>3}  {r.check:<24} {'pass' if r.passed else 'FAIL':<6} {data}")
        return "\n".join(lines)


def _pp(lam: Partition) -> list[int]:
    return list(lam)


def cross_check_suite(p_list, n_max: int, hook_n_max: int = 8) -> SuiteSummary:
    """Classification boundaries and tableau counts, for each p and n <= n_max.

    A set-equality row passes when equality holds exactly for n <= p and a
    witness of inequality exists for n > p.
    """
    rows: list[CheckRow] = []
    for p in sorted(p_list):
        for n in range(1, n_max + 1):
            parts = partitions_enum(n)
            info = {lam: classify(lam, p) for lam in parts}
            regular = [lam for lam in parts if info[lam].p_regular]
            cp = [lam for lam in parts if info[lam].in_CP_p]
            rp = [lam for lam in parts if info[lam].in_RP_p]
            cps = [lam for lam in parts if info[lam].in_CPs_p]

            extra = [lam for lam in regular if lam not in set(cp)]
            equal = not extra
            data = {"equal": equal, "size": len(regular)}
            if not equal:
                hook = Partition((n - 1, 1))
                data["witness"] = _pp(hook) if hook in extra else _pp(extra[0])
            rows.append(CheckRow(p, n, "CP_p == P_p", equal == (n <= p), data))

            rp_set, cps_set = set(rp), set(cps)
            equal = rp_set == cps_set
            data = {"equal": equal, "size": len(rp)}
            if not equal:
                diff = sorted(rp_set ^ cps_set, reverse=True)
                data["witness"] = _pp(next((x for x in diff if p in x), diff[0]))
            rows.append(CheckRow(p, n, "RP_p == CPs_p", equal == (n <= p), data))

            if n <= p:
                rows.append(_count_row_straight(p, n, cp))
                rows.append(_count_row_shifted(p, n, cps))
    for n in range(1, hook_n_max + 1):
        for kind in (STRAIGHT, SHIFTED):
            shapes = partitions_enum(n, "all" if kind == STRAIGHT else "strict")
            bad = [_pp(lam) for lam in shapes
                   if count_standard_hook(lam, kind) != len(enumerate_standard(lam, kind))]
            rows.append(CheckRow(0, n, f"hook_formula_{kind}", not bad,
                                 {"shapes": len(shapes), "mismatches": bad}))
    return SuiteSummary(rows)


def _count_row_straight(p: int, n: int, cp) -> CheckRow:
    bad = []
    for lam in cp:
        closed = dim_D(lam, p)
        counted = len(enumerate_standard(lam, STRAIGHT, p))
        if closed != counted:
            bad.append({"shape": _pp(lam), "closed": closed, "enumerated": counted})
    return CheckRow(p, n, "count_Std_p", not bad, {"shapes": len(cp), "mismatches": bad})


def _count_row_shifted(p: int, n: int, cps) -> CheckRow:
    bad = []
    for xi in cps:
        closed = shifted_count_formula(xi, p)
        counted = len(enumerate_standard(xi, SHIFTED, p))
        if closed != counted:
            bad.append({"shape": _pp(xi), "closed": closed, "enumerated": counted})
    return CheckRow(p, n, "count_Std^s_p", not bad, {"shapes": len(cps), "mismatches": bad})


def radical_check(p: int) -> list[tuple[Partition, int, int, int]]:
    """(hook, radical_dim, f^lambda, dim D^lambda) for every hook (k, 1^(p-k)), 2 <= k <= p."""
    from .symrep import radical_dim

    out = []
    for k in range(2, p + 1):
        lam = Partition([k] + [1] * (p - k))
        out.append((lam, radical_dim(lam, p), count_standard_hook(lam), dim_D(lam, p)))
    return out

