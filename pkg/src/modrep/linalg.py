"""Dense exact linear algebra over F_{p^2}.

A matrix is stored as two int64 arrays ``re`` and ``im`` with entries in
[0, p), meaning re + im*sqrt(delta).  Products go through float64 BLAS, which
is exact while every partial sum stays below 2**53; the elimination kernels
are compiled with numba.
"""

from __future__ import annotations

import numba
import numpy as np

from .field import Field, Scalar

_EXACT_LIMIT = float(2**52)


def _check_exact(field: Field, inner: int) -> None:
    p = field.p
    if inner * (p - 1) ** 2 * (field.delta + 1) >= _EXACT_LIMIT:
        raise OverflowError("matrix too large for exact float products")


def _fmatmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact integer product reduced mod p, returned as float64."""
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]))
    prod = a.astype(np.float64) @ b.astype(np.float64)
    return prod - p * np.floor(prod / p)


def _to_int(x: np.ndarray, p: int) -> np.ndarray:
    return np.rint(x).astype(np.int64) % p


class FMat:
    """Immutable-by-convention dense matrix over F_{p^2}."""

    __slots__ = ("re", "im", "field")

    def __init__(self, re, im, field: Field):
        self.re = np.asarray(re, dtype=np.int64) % field.p
        self.im = np.asarray(im, dtype=np.int64) % field.p
        if self.re.shape != self.im.shape or self.re.ndim != 2:
            raise ValueError("re/im must be 2-d arrays of equal shape")
        self.field = field

    @classmethod
    def _raw(cls, re, im, field):
        m = object.__new__(cls)
        m.re, m.im, m.field = re, im, field
        return m

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int | None = None) -> FMat:
        cols = rows if cols is None else cols
        z = np.zeros((rows, cols), dtype=np.int64)
        return cls._raw(z, z.copy(), field)

    @classmethod
    def identity(cls, field: Field, n: int) -> FMat:
        return cls._raw(np.eye(n, dtype=np.int64), np.zeros((n, n), dtype=np.int64), field)

    @classmethod
    def diag(cls, field: Field, entries) -> FMat:
        entries = [field(e) if isinstance(e, int) else e for e in entries]
        re = np.diag([e.a for e in entries]).astype(np.int64).reshape(len(entries), len(entries))
        im = np.diag([e.b for e in entries]).astype(np.int64).reshape(len(entries), len(entries))
        return cls._raw(re, im, field)

    @classmethod
    def from_rows(cls, field: Field, rows) -> FMat:
        """Build from nested lists of ints, Scalars or [a, b] pairs."""
        re, im = [], []
        for row in rows:
            rr, ii = [], []
            for x in row:
                if isinstance(x, Scalar):
                    rr.append(x.a), ii.append(x.b)
                elif isinstance(x, (list, tuple)):
                    rr.append(x[0]), ii.append(x[1])
                else:
                    rr.append(x), ii.append(0)
            re.append(rr)
            im.append(ii)
        return cls(np.array(re, dtype=np.int64).reshape(len(rows), -1),
                   np.array(im, dtype=np.int64).reshape(len(rows), -1), field)

    @classmethod
    def block_diag(cls, field: Field, blocks) -> FMat:
        rows = sum(b.shape[0] for b in blocks)
        cols = sum(b.shape[1] for b in blocks)
        out = cls.zeros(field, rows, cols)
        r = c = 0
        for b in blocks:
            out.re[r:r + b.shape[0], c:c + b.shape[1]] = b.re
            out.im[r:r + b.shape[0], c:c + b.shape[1]] = b.im
            r += b.shape[0]
            c += b.shape[1]
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return self.re.shape

    @property
    def p(self) -> int:
        return self.field.p

    def copy(self) -> FMat:
        return FMat._raw(self.re.copy(), self.im.copy(), self.field)

    def __getitem__(self, idx) -> FMat:
        re, im = self.re[idx], self.im[idx]
        if re.ndim == 1:
            re, im = re[None, :], im[None, :]
        return FMat._raw(re, im, self.field)

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(int(self.re[i, j]), int(self.im[i, j]), self.field)

    def __add__(self, other: FMat) -> FMat:
        p = self.p
        return FMat._raw((self.re + other.re) % p, (self.im + other.im) % p, self.field)

    def __sub__(self, other: FMat) -> FMat:
        p = self.p
        return FMat._raw((self.re - other.re) % p, (self.im - other.im) % p, self.field)

    def __neg__(self) -> FMat:
        p = self.p
        return FMat._raw(-self.re % p, -self.im % p, self.field)

    def scale(self, c) -> FMat:
        if isinstance(c, int):
            c = self.field(c)
        p, d = self.p, self.field.delta
        return FMat._raw((c.a * self.re + d * c.b * self.im) % p,
                         (c.a * self.im + c.b * self.re) % p, self.field)

    def __matmul__(self, other: FMat) -> FMat:
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        _check_exact(self.field, self.shape[1])
        p, d = self.p, self.field.delta
        left_im, right_im = self.im.any(), other.im.any()
        rr = _fmatmul(self.re, other.re, p)
        if not (left_im or right_im):
            return FMat._raw(_to_int(rr, p), np.zeros(rr.shape, dtype=np.int64), self.field)
        if left_im and right_im:
            ii = _fmatmul(self.im, other.im, p)
            rr = rr + d * ii
        im = np.zeros(rr.shape)
        if right_im:
            im = im + _fmatmul(self.re, other.im, p)
        if left_im:
            im = im + _fmatmul(self.im, other.re, p)
        return FMat._raw(_to_int(rr, p), _to_int(im, p), self.field)

    @property
    def T(self) -> FMat:
        return FMat._raw(self.re.T.copy(), self.im.T.copy(), self.field)

    def kron(self, other: FMat) -> FMat:
        p, d = self.p, self.field.delta
        re = (np.kron(self.re, other.re) + d * np.kron(self.im, other.im)) % p
        im = (np.kron(self.re, other.im) + np.kron(self.im, other.re)) % p
        return FMat._raw(re, im, self.field)

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def first_nonzero(self) -> tuple[int, int] | None:
        nz = np.argwhere((self.re != 0) | (self.im != 0))
        if nz.size == 0:
            return None
        return int(nz[0, 0]), int(nz[0, 1])

    def is_diagonal(self) -> bool:
        off = (self.re != 0) | (self.im != 0)
        np.fill_diagonal(off, False)
        return not off.any()

    def diagonal(self) -> list[Scalar]:
        return [self.entry(i, i) for i in range(min(self.shape))]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FMat):
            return NotImplemented
        return (self.shape == other.shape and np.array_equal(self.re, other.re)
                and np.array_equal(self.im, other.im))

    __hash__ = None

    def to_json(self) -> list[list[list[int]]]:
        return np.stack([self.re, self.im], axis=-1).tolist()

    def __repr__(self):
        return f"FMat(shape={self.shape}, p={self.p})"


def vstack(mats: list[FMat]) -> FMat:
    field = mats[0].field
    return FMat._raw(np.vstack([m.re for m in mats]), np.vstack([m.im for m in mats]), field)


def hstack(mats: list[FMat]) -> FMat:
    field = mats[0].field
    return FMat._raw(np.hstack([m.re for m in mats]), np.hstack([m.im for m in mats]), field)


def random_fmat(field: Field, rows: int, cols: int, rng: np.random.Generator) -> FMat:
    p = field.p
    return FMat._raw(rng.integers(0, p, (rows, cols)), rng.integers(0, p, (rows, cols)), field)


# ---------------------------------------------------------------- kernels


@numba.njit(cache=True)
def _inv_pair(a, b, p, delta):
    norm = (a * a - delta * ((b * b) % p)) % p
    e = p - 2
    r = 1
    base = norm
    while e > 0:
        if e & 1:
            r = (r * base) % p
        base = (base * base) % p
        e >>= 1
    return (a * r) % p, ((p - b) % p * r) % p


@numba.njit(cache=True)
def _rref_kernel(re, im, p, delta, npiv_cols):
    """In-place reduced row echelon form; returns pivot columns."""
    m, n = re.shape
    pivots = np.empty(min(m, npiv_cols), dtype=np.int64)
    big = p * p * (delta + 1)  # keeps row updates nonnegative before the mod
    r = 0
    for c in range(npiv_cols):
        if r == m:
            break
        k = -1
        for i in range(r, m):
            if re[i, c] != 0 or im[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(n):
                t = re[k, j]
                re[k, j] = re[r, j]
                re[r, j] = t
                t = im[k, j]
                im[k, j] = im[r, j]
                im[r, j] = t
        ia, ib = _inv_pair(re[r, c], im[r, c], p, delta)
        for j in range(c, n):
            a = re[r, j]
            b = im[r, j]
            re[r, j] = (a * ia + delta * b * ib) % p
            im[r, j] = (a * ib + b * ia) % p
        for i in range(m):
            if i == r:
                continue
            fa = re[i, c]
            fb = im[i, c]
            if fa == 0 and fb == 0:
                continue
            for j in range(c, n):
                a = re[r, j]
                b = im[r, j]
                re[i, j] = (re[i, j] + big - fa * a - delta * fb * b) % p
                im[i, j] = (im[i, j] + big - fa * b - fb * a) % p
        pivots[r] = c
        r += 1
    return pivots[:r]


@numba.njit(cache=True)
def _rref_kernel_real(re, p, npiv_cols):
    """Prime-field specialisation of _rref_kernel."""
    m, n = re.shape
    pivots = np.empty(min(m, npiv_cols), dtype=np.int64)
    big = p * p
    r = 0
    for c in range(npiv_cols):
        if r == m:
            break
        k = -1
        for i in range(r, m):
            if re[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(n):
                t = re[k, j]
                re[k, j] = re[r, j]
                re[r, j] = t
        e = p - 2
        inv = 1
        base = re[r, c]
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for j in range(c, n):
            re[r, j] = (re[r, j] * inv) % p
        for i in range(m):
            if i == r:
                continue
            f = re[i, c]
            if f == 0:
                continue
            for j in range(c, n):
                re[i, j] = (re[i, j] + big - f * re[r, j]) % p
        pivots[r] = c
        r += 1
    return pivots[:r]


def rref(M: FMat, pivot_cols: int | None = None) -> tuple[FMat, list[int]]:
    """Reduced row echelon form; pivots searched among the first ``pivot_cols`` columns."""
    re, im = M.re.copy(), M.im.copy()
    n = M.shape[1] if pivot_cols is None else pivot_cols
    if im.any():
        piv = _rref_kernel(re, im, M.p, M.field.delta, n)
    else:
        piv = _rref_kernel_real(re, M.p, n)
    return FMat._raw(re, im, M.field), [int(c) for c in piv]


def rank(M: FMat) -> int:
    return len(rref(M)[1])


def nullspace(M: FMat) -> FMat:
    """Basis of {v : M v = 0} as the columns of the returned matrix."""
    R, piv = rref(M)
    n = M.shape[1]
    free = [j for j in range(n) if j not in set(piv)]
    N = FMat.zeros(M.field, n, len(free))
    for t, f in enumerate(free):
        N.re[f, t] = 1
        for i, c in enumerate(piv):
            N.re[c, t] = -R.re[i, f] % M.p
            N.im[c, t] = -R.im[i, f] % M.p
    return N


def inverse(M: FMat) -> FMat:
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, piv = rref(hstack([M, FMat.identity(M.field, n)]), pivot_cols=n)
    if piv != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


class RowSpace:
    """A subspace kept as RREF rows, with reduction of new vectors."""

    def __init__(self, field: Field, dim: int):
        self.field = field
        self.dim = dim
        self.basis = FMat.zeros(field, 0, dim)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, V: FMat) -> FMat:
        """Rows of V minus their projection onto the span (along pivots)."""
        if not self.pivots:
            return V.copy()
        coeff = V[:, self.pivots]
        return V - coeff @ self.basis

    def add(self, V: FMat) -> FMat:
        """Insert the rows of V; return the newly added (reduced) rows."""
        W = self.reduce(V)
        if W.is_zero():
            return FMat.zeros(self.field, 0, self.dim)
        R, piv = rref(W)
        R = R[: len(piv)]
        if self.pivots:
            self.basis = self.basis - self.basis[:, piv] @ R
            self.basis = vstack([self.basis, R])
        else:
            self.basis = R
        self.pivots = self.pivots + piv
        order = np.argsort(self.pivots, kind="stable")
        self.basis = self.basis[order]
        self.pivots = [self.pivots[i] for i in order]
        return R

    def contains(self, V: FMat) -> bool:
        return self.reduce(V).is_zero()


class Frozen:
    """A matrix held as float64 halves for repeated right-multiplication."""

    def __init__(self, M: FMat):
        self.field = M.field
        self.re = M.re.astype(np.float64)
        self.im = M.im.astype(np.float64) if M.im.any() else None
        _check_exact(M.field, M.shape[0])

    def rmul(self, V: FMat) -> FMat:
        """V @ self."""
        p, d = self.field.p, self.field.delta
        vr = V.re.astype(np.float64)
        rr = vr @ self.re
        if self.im is None and not V.im.any():
            return FMat._raw(_to_int(rr - p * np.floor(rr / p), p),
                             np.zeros(rr.shape, dtype=np.int64), self.field)
        vi = V.im.astype(np.float64)
        im = vi @ self.re
        if self.im is not None:
            rr = rr - p * np.floor(rr / p) + d * _fmod(vi @ self.im, p)
            im = _fmod(im, p) + _fmod(vr @ self.im, p)
        return FMat._raw(_to_int(_fmod(rr, p), p), _to_int(_fmod(im, p), p), self.field)


def _fmod(x: np.ndarray, p: int) -> np.ndarray:
    return x - p * np.floor(x / p)


def spin(start: FMat, gens: list[FMat], stop_at_full: bool = True) -> RowSpace:
    """Smallest subspace containing the rows of ``start`` and stable under ``gens``.

    Vectors are rows; a generator G maps the row v to (G v^T)^T = v G^T.
    Rows are processed breadth-first in rounds; within a round each
    generator's images are absorbed before the next, so a spin that fills
    the space stops early.
    """
    d = start.shape[1]
    gts = [Frozen(G.T) for G in gens]
    space = RowSpace(start.field, d)
    batch = space.add(start)
    while batch.shape[0]:
        fresh = []
        for Gt in gts:
            if stop_at_full and space.rank == d:
                return space
            new = space.add(Gt.rmul(batch))
            if new.shape[0]:
                fresh.append(new)
        batch = vstack(fresh) if fresh else FMat.zeros(start.field, 0, d)
    return space
