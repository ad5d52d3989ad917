"""Arithmetic in F_p and in its quadratic extension F_p[sqrt(delta)]."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """F_{p^2} presented as F_p[sqrt(delta)], delta the least nonresidue mod p."""

    p: int
    delta: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p < 3:
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if pow(self.delta, (self.p - 1) // 2, self.p) != self.p - 1:
            raise ValueError(f"{self.delta} is not a nonresidue mod {self.p}")

    def __call__(self, a: int, b: int = 0) -> Scalar:
        return Scalar(a % self.p, b % self.p, self)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def elements(self):
        """All p^2 elements, ordered by (b, a)."""
        for b in range(self.p):
            for a in range(self.p):
                yield Scalar(a, b, self)

    def inv_base(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def is_residue(self, a: int) -> bool:
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def to_json(self) -> dict:
        return {"p": self.p, "delta": self.delta}


@lru_cache(maxsize=None)
def make_field(p: int) -> Field:
    """Return the canonical field context for the prime ``p`` (p >= 3).

    Raises:
        ValueError: if ``p`` is not prime or ``p == 2``.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    if p == 2:
        raise ValueError("p = 2 is not supported")
    delta = next(d for d in range(2, p) if pow(d, (p - 1) // 2, p) == p - 1)
    return Field(p, delta)


@dataclass(frozen=True)
class Scalar:
    """The element a + b*sqrt(delta) of F_{p^2}."""

    a: int
    b: int
    field: Field

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError("scalars from different fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return Scalar((self.a + other.a) % p, (self.b + other.b) % p, self.field)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return Scalar(-self.a % p, -self.b % p, self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, d = self.field.p, self.field.delta
        return Scalar(
            (self.a * other.a + d * self.b * other.b) % p,
            (self.a * other.b + self.b * other.a) % p,
            self.field,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in F_p^2")
        p, d = self.field.p, self.field.delta
        norm = (self.a * self.a - d * self.b * self.b) % p
        n_inv = pow(norm, p - 2, p)
        return Scalar(self.a * n_inv % p, -self.b * n_inv % p, self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> Scalar:
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other % self.field.p
        if isinstance(other, Scalar):
            return (self.a, self.b, self.field) == (other.a, other.b, other.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.field.p))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def in_base(self) -> bool:
        return self.b == 0

    def frobenius(self) -> Scalar:
        return Scalar(self.a, -self.b % self.field.p, self.field)

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    def __repr__(self):
        if self.b == 0:
            return f"{self.a}"
        return f"{self.a}+{self.b}r{self.field.delta}"


def arith(op: str, x: Scalar, y: Scalar | None = None) -> Scalar:
    """Dispatch one of ``add``, ``neg``, ``mul``, ``inv``."""
    if op == "add":
        return x + y
    if op == "neg":
        return -x
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inverse()
    raise ValueError(f"unknown operation {op!r}")


def _base_root(a: int, p: int) -> int | None:
    a %= p
    for r in range(p // 2 + 1):
        if r * r % p == a:
            return r
    return None


def sqrt_base(a: int, field: Field) -> Scalar:
    """Canonical square root of a prime-subfield element.

    A residue with roots {r, p - r} maps to (min(r, p - r), 0); a nonresidue
    maps to (0, s) where s is the canonical root of a / delta.
    """
    p = field.p
    a %= p
    r = _base_root(a, p)
    if r is not None:
        return field(r)
    s = _base_root(a * field.inv_base(field.delta), p)
    return field(0, s)


def sqrt_minus_one(field: Field) -> Scalar:
    return sqrt_base(field.p - 1, field)
