"""Partitions, straight and shifted tableaux, hooks, residues and weights."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

STRAIGHT = "straight"
SHIFTED = "shifted"
KINDS = (STRAIGHT, SHIFTED)

Node = tuple[int, int]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def ell(self) -> int:
        return len(self)

    def part(self, r: int) -> int:
        """1-based part, 0 past the end."""
        return self[r - 1] if 1 <= r <= len(self) else 0

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def is_hook(self) -> bool:
        return len(self) < 2 or self[1] == 1

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return Partition(())
    return Partition(sorted((int(x) for x in text.split(",")), reverse=True))


def partitions_enum(n: int, mode: str = "all") -> list[Partition]:
    """All (or all strict) partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if mode not in ("all", "strict"):
        raise ValueError(f"unknown mode {mode!r}")
    strict = mode == "strict"

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, cap), 0, -1):
            for tail in gen(rest - k, k - 1 if strict else k):
                yield (k,) + tail

    return [Partition(t) for t in gen(n, n)]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition(())
    return Partition([sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1)])


def chi(lam: Partition) -> int:
    return lam[0] - lam[-1] + len(lam)


def b_count(lam: Partition, p: int) -> int:
    """Number of nonzero parts not divisible by p."""
    return sum(1 for x in lam if x % p)


def is_p_regular(lam: Partition, p: int) -> bool:
    return all(lam.count(x) < p for x in set(lam))


def is_p_strict(lam: Partition, p: int) -> bool:
    return all(a % p == 0 for a, b in zip(lam, lam[1:]) if a == b)


def is_p_restricted(lam: Partition, p: int) -> bool:
    if not is_p_strict(lam, p):
        return False
    for r in range(1, len(lam) + 1):
        gap = lam.part(r) - lam.part(r + 1)
        if gap > p or (lam.part(r) % p == 0 and gap == p):
            return False
    return True


def special_u(xi: Partition, p: int) -> int | None:
    """u with xi_1 = p - u and xi_2 = u, 1 <= u <= (p-3)/2, else None."""
    u = p - xi.part(1)
    if 1 <= u <= (p - 3) // 2 and xi.part(2) == u:
        return u
    return None


def in_CPs(xi: Partition, p: int) -> bool:
    if not xi or not xi.is_strict():
        return False
    u = p - xi[0]
    if 1 <= u <= (p - 3) // 2 and xi.part(2) <= u:
        return True
    return 1 <= xi[0] <= (p + 1) // 2


@dataclass(frozen=True)
class PartitionClassification:
    p_regular: bool
    strict: bool
    p_strict: bool
    p_restricted: bool
    in_CP_p: bool
    in_CPs_p: bool
    in_RP_p: bool
    chi: int
    b: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def classify(lam: Partition, p: int) -> PartitionClassification:
    if not lam:
        raise ValueError("classify needs a nonempty partition")
    reg = is_p_regular(lam, p)
    c = chi(lam)
    pstrict = is_p_strict(lam, p)
    prestr = is_p_restricted(lam, p)
    return PartitionClassification(
        p_regular=reg,
        strict=lam.is_strict(),
        p_strict=pstrict,
        p_restricted=prestr,
        in_CP_p=reg and c <= p,
        in_CPs_p=in_CPs(lam, p),
        in_RP_p=pstrict and prestr,
        chi=c,
        b=b_count(lam, p),
    )


# ---------------------------------------------------------------- diagrams


def diagram(lam: Partition, kind: str = STRAIGHT) -> list[Node]:
    """Nodes in reading order (row by row, left to right)."""
    if kind == SHIFTED:
        if not lam.is_strict():
            raise ValueError(f"shifted diagram needs a strict partition, got {lam}")
        return [(i, j) for i in range(1, len(lam) + 1) for j in range(i, i + lam[i - 1])]
    if kind != STRAIGHT:
        raise ValueError(f"unknown kind {kind!r}")
    return [(i, j) for i in range(1, len(lam) + 1) for j in range(1, lam[i - 1] + 1)]


def in_diagram(lam: Partition, node: Node, kind: str = STRAIGHT) -> bool:
    i, j = node
    if not 1 <= i <= len(lam):
        return False
    if kind == SHIFTED:
        return i <= j <= i + lam[i - 1] - 1
    return 1 <= j <= lam[i - 1]


def hook_length(lam: Partition, node: Node, kind: str = STRAIGHT) -> int:
    if kind == SHIFTED and not lam.is_strict():
        raise ValueError(f"shifted hooks need a strict partition, got {lam}")
    if not in_diagram(lam, node, kind):
        raise ValueError(f"node {node} is outside the {kind} diagram of {lam}")
    i, j = node
    if kind == STRAIGHT:
        return lam[i - 1] + conjugate(lam).part(j) - i - j + 1
    arm = i + lam[i - 1] - 1 - j
    below = [r for r in range(i + 1, len(lam) + 1) if in_diagram(lam, (r, j), kind)]
    h = 1 + arm + len(below)
    hits_diagonal = j <= len(lam) and (j == i or j in below)
    if hits_diagonal:
        h += lam.part(j + 1)
    return h


def count_standard_hook(lam: Partition, kind: str = STRAIGHT) -> int:
    """n! over the product of (shifted) hook lengths, with exact division."""
    hooks = prod(hook_length(lam, v, kind) for v in diagram(lam, kind))
    q, r = divmod(factorial(lam.n), hooks)
    if r:
        raise ArithmeticError(f"hook product of {lam} does not divide n!")
    return q


# ---------------------------------------------------------------- tableaux


@dataclass(frozen=True, order=True)
class Tableau:
    """A bijective filling of a straight or shifted diagram by 1..n."""

    rows: tuple[tuple[int, ...], ...]
    kind: str = STRAIGHT

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        entries = sorted(x for row in self.rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries must be 1..n exactly once: {self.rows}")
        Partition([len(r) for r in self.rows])

    @classmethod
    def from_rows(cls, rows, kind: str = STRAIGHT) -> Tableau:
        return cls(tuple(tuple(r) for r in rows), kind)

    @property
    def shape(self) -> Partition:
        return Partition([len(r) for r in self.rows])

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def _col(self, i: int, c: int) -> int:
        return c + 1 + (i if self.kind == SHIFTED else 0)

    def nodes(self) -> dict[Node, int]:
        return {(i + 1, self._col(i, c)): x
                for i, row in enumerate(self.rows) for c, x in enumerate(row)}

    def entry(self, node: Node) -> int | None:
        i, j = node
        if not 1 <= i <= len(self.rows):
            return None
        c = j - (i if self.kind == SHIFTED else 1)
        row = self.rows[i - 1]
        return row[c] if 0 <= c < len(row) else None

    def node_of(self, k: int) -> Node:
        for i, row in enumerate(self.rows):
            if k in row:
                return (i + 1, self._col(i, row.index(k)))
        raise KeyError(k)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def is_standard(self) -> bool:
        cells = self.nodes()
        for (i, j), x in cells.items():
            right = cells.get((i, j + 1))
            down = cells.get((i + 1, j))
            if (right is not None and right < x) or (down is not None and down < x):
                return False
        return True

    def permute(self, perm) -> Tableau:
        """Replace every entry e by perm(e); ``perm`` maps ints to ints."""
        return Tableau(tuple(tuple(perm(x) for x in row) for row in self.rows), self.kind)

    def swap(self, k: int) -> Tableau:
        """s_k . T: exchange the entries k and k+1."""
        def s(x):
            return k + 1 if x == k else k if x == k + 1 else x
        return self.permute(s)

    def remove_max(self) -> Tableau:
        n = self.n
        return Tableau(tuple(r for r in (tuple(x for x in row if x != n) for row in self.rows) if r),
                       self.kind)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        pad = "   "
        return "\n".join((pad * i if self.kind == SHIFTED else "") +
                         " ".join(f"{x:2d}" for x in row)
                         for i, row in enumerate(self.rows))


def _standard_fillings(lam: Partition, kind: str) -> Iterator[Tableau]:
    cells = diagram(lam, kind)
    shape_set = set(cells)
    n = lam.n
    filling: dict[Node, int] = {}

    def addable():
        for (i, j) in cells:
            if (i, j) in filling:
                continue
            left, up = (i, j - 1), (i - 1, j)
            if (left in shape_set and left not in filling) or (up in shape_set and up not in filling):
                continue
            yield (i, j)

    def rec(k):
        if k > n:
            rows = [[] for _ in lam]
            for (i, j) in cells:
                rows[i - 1].append(filling[(i, j)])
            yield Tableau(tuple(tuple(r) for r in rows), kind)
            return
        for cell in list(addable()):
            filling[cell] = k
            yield from rec(k + 1)
            del filling[cell]

    yield from rec(1)


def is_p_standard(T: Tableau, p: int) -> bool:
    """p-standardness, literal conditions for straight and shifted shapes."""
    if not T.is_standard():
        return False
    lam = T.shape
    if T.kind == STRAIGHT:
        cells = T.nodes()
        for (i, j), x in cells.items():
            for (i2, j2), y in cells.items():
                if i > i2 and j < j2 and i + j2 + 1 - i2 - j == p and not y > x:
                    return False
        return True
    u = special_u(lam, p)
    if u is None:
        return True
    return T.entry((2, lam[1] + 1)) > T.entry((1, lam[0]))


def enumerate_standard(lam: Partition, kind: str = STRAIGHT, p: int | None = None) -> list[Tableau]:
    """Standard tableaux (p-standard ones when ``p`` is given), sorted by reading word."""
    if p is not None:
        if kind == STRAIGHT and not classify(lam, p).in_CP_p:
            raise ValueError(f"{lam} is not in CP_{p}({lam.n}); p-standard needs it")
        if kind == SHIFTED and not in_CPs(lam, p):
            raise ValueError(f"{lam} is not in CPs_{p}({lam.n}); p-standard needs it")
    out = [T for T in _standard_fillings(lam, kind) if p is None or is_p_standard(T, p)]
    return sorted(out, key=Tableau.reading_word)


def row_reading_tableau(lam: Partition, kind: str = STRAIGHT) -> Tableau:
    it = iter(range(1, lam.n + 1))
    return Tableau(tuple(tuple(next(it) for _ in range(r)) for r in lam), kind)


# ---------------------------------------------------------------- residues


def fold(r: int, p: int) -> int:
    """Fold a class mod p into {0, ..., (p-1)/2} along the pattern 0,1,..,(p-1)/2,..,1,0."""
    r %= p
    return r if r <= (p - 1) // 2 else p - 1 - r


def residue(node: Node, p: int, kind: str = STRAIGHT) -> int:
    i, j = node
    if kind == SHIFTED:
        return fold(j - i, p)
    return (j - i) % p


def residue_sequence(T: Tableau, p: int) -> tuple[int, ...]:
    pos = {x: v for v, x in T.nodes().items()}
    return tuple(residue(pos[k], p, T.kind) for k in range(1, T.n + 1))


def q_val(i: int, p: int) -> int:
    return i * (i + 1) % p


# ---------------------------------------------------------------- weights


def is_cs_weight(i: Sequence[int], p: int) -> bool:
    """Membership of a residue sequence in the completely splittable weight set."""
    n = len(i)
    top = (p - 1) // 2
    if any(x < 0 or x > top for x in i):
        return False
    if any(i[k] == i[k + 1] for k in range(n - 1)):
        return False
    if list(i).count(top) > 1:
        return False
    for k in range(n):
        for l in range(k + 1, n):
            if i[k] != i[l]:
                continue
            between = set(i[k + 1:l])
            if i[k] == 0:
                if 1 not in between:
                    return False
            elif not ({i[k] - 1, i[k] + 1} <= between or _chain_exists(i, k, l, p)):
                return False
    return True


def _chain_exists(i: Sequence[int], k: int, l: int, p: int) -> bool:
    """Search k <= r_0 < .. < r_m < q < t_m < .. < t_0 <= l (0-based positions)."""
    base = i[k]
    m = (p - 3) // 2 - base
    top = (p - 1) // 2

    def level(j: int, lo: int, hi: int) -> bool:
        # choose r_j in [lo, hi) and t_j in (r_j, hi] around the next level
        val = base + j
        for r in range(lo, hi + 1):
            if i[r] != val:
                continue
            for t in range(hi, r, -1):
                if i[t] != val or val in i[r + 1:t]:
                    continue
                if j == m:
                    if any(i[q] == top for q in range(r + 1, t)):
                        return True
                elif level(j + 1, r + 1, t - 1):
                    return True
        return False

    return m >= 0 and level(0, k, l)


def act_on_weight(tau_inv: Sequence[int], weight: Sequence[int]) -> tuple[int, ...]:
    """tau . i = (i_{tau^-1(1)}, ..., i_{tau^-1(n)}), with tau_inv 0-based."""
    return tuple(weight[t] for t in tau_inv)


def admissible(weight: Sequence[int], k: int) -> bool:
    """s_k (1-based) is admissible for the weight."""
    a, b = weight[k - 1], weight[k]
    return a != b + 1 and a != b - 1


@dataclass
class Orbit:
    """Closure of a weight under admissible simple transpositions.

    ``weights[t]`` is tau_t . i, ``words[t]`` the s-indices applied (first to
    last), ``tau_inv[t]`` the 0-based inverse permutation, ``tableaux[t]``
    tau_t . T when the orbit was seeded by a tableau.
    """

    seed: tuple[int, ...]
    weights: list[tuple[int, ...]]
    words: list[tuple[int, ...]]
    tau_inv: list[tuple[int, ...]]
    tableaux: list[Tableau] | None = None
    index: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.weights)

    def to_json(self) -> dict:
        return {"lambda": list(self.seed),
                "weights": [list(w) for w in self.weights],
                "perms": [list(w) for w in self.words]}


def weight_orbit(seed, p: int) -> Orbit:
    """Breadth-first closure under admissible moves from a weight or a tableau."""
    tableau = seed if isinstance(seed, Tableau) else None
    if tableau is not None:
        if tableau.kind != SHIFTED or not in_CPs(tableau.shape, p) or not is_p_standard(tableau, p):
            raise ValueError("seed tableau must be a shifted p-standard tableau")
        weight = residue_sequence(tableau, p)
    else:
        weight = tuple(seed)
        if not is_cs_weight(weight, p):
            raise ValueError(f"{weight} is not a completely splittable weight for p={p}")
    n = len(weight)
    ident = tuple(range(n))
    orbit = Orbit(seed=weight, weights=[weight], words=[()], tau_inv=[ident],
                  tableaux=[tableau] if tableau is not None else None)
    orbit.index[weight] = 0
    queue = deque([0])
    while queue:
        t = queue.popleft()
        w, word, inv = orbit.weights[t], orbit.words[t], orbit.tau_inv[t]
        for k in range(1, n):
            if not admissible(w, k):
                continue
            new_inv = list(inv)
            new_inv[k - 1], new_inv[k] = new_inv[k], new_inv[k - 1]
            new_w = act_on_weight(new_inv, weight)
            if new_w in orbit.index:
                continue
            orbit.index[new_w] = len(orbit.weights)
            orbit.weights.append(new_w)
            orbit.words.append(word + (k,))
            orbit.tau_inv.append(tuple(new_inv))
            if tableau is not None:
                orbit.tableaux.append(orbit.tableaux[t].swap(k))
            queue.append(len(orbit.weights) - 1)
    return orbit


@lru_cache(maxsize=None)
def straight_tableaux_count(lam: Partition) -> int:
    return count_standard_hook(lam, STRAIGHT)
