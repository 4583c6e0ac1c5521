"""Arithmetic in the prime field F_p.

Residues are plain Python ints in ``[0, p)``.  Hot loops elsewhere in the
package work on those ints directly; :class:`FieldElem` is the checked,
operator-friendly wrapper for callers who want one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError

__all__ = ["PrimeField", "FieldElem", "is_prime", "ff_add_mul", "ff_inv", "ff_pow"]

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Trial division; inputs here are small."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field context F_p.  Passed around explicitly, never global."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise UsageError(f"p must be prime, got {p}")
        if p >= MAX_MODULUS:
            raise UsageError(f"p must be below 2^31, got {p}")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __call__(self, value: int) -> FieldElem:
        return FieldElem(int(value) % self.p, self.p)

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise UsageError("negative exponent")
        return pow(a % self.p, e, self.p)


@dataclass(frozen=True)
class FieldElem:
    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            raise UsageError(f"residue {self.value} outside [0, {self.p})")

    def _check(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.p != self.p:
                raise UsageError(f"modulus mismatch: {self.p} vs {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElem((self.value + b) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElem((self.value - b) % self.p, self.p)

    def __rsub__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElem((b - self.value) % self.p, self.p)

    def __mul__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.value * b % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(-self.value % self.p, self.p)

    def __truediv__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return self * ff_inv(FieldElem(b, self.p))

    def __pow__(self, e: int):
        return ff_pow(self, e)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def ff_add_mul(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    """Apply ``op`` in {"add", "sub", "mul"} to two elements of one field."""
    if a.p != b.p:
        raise UsageError(f"modulus mismatch: {a.p} vs {b.p}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UsageError(f"unknown operation {op!r}")


def ff_inv(a: FieldElem) -> FieldElem:
    if a.value == 0:
        raise ZeroDivisionError(f"0 has no inverse in F_{a.p}")
    return FieldElem(pow(a.value, a.p - 2, a.p), a.p)


def ff_pow(a: FieldElem, e: int) -> FieldElem:
    """Binary exponentiation; ``0**0 == 1``."""
    if e < 0:
        raise UsageError("negative exponent")
    result, base = 1, a.value
    while e:
        if e & 1:
            result = result * base % a.p
        base = base * base % a.p
        e >>= 1
    return FieldElem(result % a.p, a.p)
