"""Prime field arithmetic with arbitrary-precision residues.

Elements are immutable and always stored as the canonical representative
in ``[0, p)``. Python integers carry the precision, so moduli far beyond
64 bits (e.g. ``10**34 + 1233``) need no special handling.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

import gmpy2

from .errors import DivisionByZero, FieldMismatch, InvalidField, NotASquare

MILLER_RABIN_ROUNDS = 40
_INT_RE = re.compile(r"(-)?(?:0[xX]([0-9a-fA-F]+)|([0-9]+))")


def parse_int(text: Union[str, int]) -> int:
    """Parse a decimal or ``0x``-prefixed hexadecimal integer."""
    if isinstance(text, bool):
        raise ValueError(f"not an integer: {text!r}")
    if isinstance(text, int):
        return text
    m = _INT_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not an integer: {text!r}")
    sign, hexdigits, decdigits = m.groups()
    value = int(hexdigits, 16) if hexdigits is not None else int(decdigits)
    return -value if sign else value


def inverse_mod(a: int, p: int) -> int:
    """Modular inverse by the extended Euclidean algorithm."""
    r0, r1 = a % p, p
    s0, s1 = 1, 0
    if r0 == 0:
        raise DivisionByZero("inverse of zero")
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise DivisionByZero(f"{a} is not invertible mod {p}")
    return s0 % p


def sqrt_mod(a: int, p: int) -> int:
    """Tonelli-Shanks square root of ``a`` mod odd prime ``p``.

    Returns the smaller of the two roots. Raises NotASquare when ``a`` is a
    non-residue.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise NotASquare(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class PrimeField:
    """The field of integers modulo an odd prime."""

    modulus: int

    def __post_init__(self):
        p = self.modulus
        if not isinstance(p, int) or isinstance(p, bool):
            raise InvalidField(f"modulus must be an integer, got {p!r}")
        if p <= 2:
            raise InvalidField(f"modulus must be an odd prime > 2, got {p}")
        if not gmpy2.is_prime(p, MILLER_RABIN_ROUNDS):
            raise InvalidField(f"modulus {p} is not prime")

    @property
    def p(self) -> int:
        return self.modulus

    def __call__(self, value: Union[int, str, "FieldElement"]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, str):
            value = parse_int(value)
        return FieldElement(value % self.modulus, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self):
        for v in range(self.modulus):
            yield FieldElement(v, self)

    def __repr__(self):
        return f"GF({self.modulus})"


@dataclass(frozen=True, slots=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.modulus:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.field.modulus}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.modulus != self.field.modulus:
                raise FieldMismatch(
                    f"GF({self.field.modulus}) and GF({other.field.modulus}) elements mixed"
                )
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return NotImplemented

    def _new(self, v: int) -> "FieldElement":
        return FieldElement(v % self.field.modulus, self.field)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._new(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._new(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * inverse_mod(o, self.field.modulus))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._new(o * self.inv().value)

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        # built-in three-argument pow is square-and-multiply; 0**0 == 1
        return FieldElement(pow(self.value, e, self.field.modulus), self.field)

    def inv(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero("inverse of zero")
        return FieldElement(inverse_mod(self.value, self.field.modulus), self.field)

    def is_square(self) -> bool:
        """Euler's criterion; zero counts as a square."""
        if self.value == 0:
            return True
        return pow(self.value, (self.field.modulus - 1) // 2, self.field.modulus) == 1

    def sqrt(self) -> "FieldElement":
        return FieldElement(sqrt_mod(self.value, self.field.modulus), self.field)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field.modulus == other.field.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.modulus))

    def __repr__(self):
        return f"{self.value} (mod {self.field.modulus})"

    def __str__(self):
        return str(self.value)


# Functional aliases for callers that prefer the named operations.
def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def is_square(a: FieldElement) -> bool:
    return a.is_square()


def sqrt(a: FieldElement) -> FieldElement:
    return a.sqrt()
