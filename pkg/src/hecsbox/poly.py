"""Univariate polynomials over GF(p).

Coefficients are kept as plain integers in ``[0, p)``, lowest degree first,
with no trailing zeros; the zero polynomial has no coefficients and degree -1.
"""

from __future__ import annotations

from typing import Iterable, Union

from .errors import DivisionByZero, FieldMismatch
from .field import FieldElement, PrimeField, inverse_mod

Coeff = Union[int, FieldElement]


def _trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Polynomial:
    """Immutable polynomial over a prime field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable[Coeff] = ()):
        p = field.modulus
        values = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field.modulus != p:
                    raise FieldMismatch("coefficient from a different field")
                values.append(c.value)
            else:
                values.append(int(c) % p)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _trim(values))

    @classmethod
    def _raw(cls, field: PrimeField, coeffs: tuple) -> "Polynomial":
        # coeffs already reduced and trimmed
        obj = cls.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, field: PrimeField) -> "Polynomial":
        return cls._raw(field, ())

    @classmethod
    def one(cls, field: PrimeField) -> "Polynomial":
        return cls._raw(field, (1,))

    @classmethod
    def x(cls, field: PrimeField) -> "Polynomial":
        return cls._raw(field, (0, 1))

    @classmethod
    def from_roots(cls, field: PrimeField, roots: Iterable[Coeff]) -> "Polynomial":
        """Monic polynomial with the given roots (with multiplicity)."""
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, [-int(r), 1])
        return out

    # -- inspection -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def coefficients(self) -> list:
        return [FieldElement(c, self.field) for c in self.coeffs]

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __call__(self, x: Coeff) -> FieldElement:
        p = self.field.modulus
        xv = int(x) % p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * xv + c) % p
        return FieldElement(acc, self.field)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field.modulus == other.field.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.modulus, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field.modulus != self.field.modulus:
                raise FieldMismatch("polynomials over different fields")
            return other
        if isinstance(other, FieldElement):
            if other.field.modulus != self.field.modulus:
                raise FieldMismatch("scalar from a different field")
            return Polynomial._raw(self.field, (other.value,) if other.value else ())
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.modulus
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return Polynomial._raw(self.field, _trim(out))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.modulus
        return Polynomial._raw(self.field, tuple((-c) % p for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(self.field)
        p = self.field.modulus
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial._raw(self.field, _trim([c % p for c in out]))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = Polynomial.one(self.field), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Coeff) -> "Polynomial":
        p = self.field.modulus
        c = int(c) % p
        return Polynomial._raw(self.field, _trim([x * c % p for x in self.coeffs]))

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self.scale(inverse_mod(self.coeffs[-1], self.field.modulus))

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        p = self.field.modulus
        b = other.coeffs
        db = len(b) - 1
        inv_lead = inverse_mod(b[-1], p)
        rem = list(self.coeffs)
        if len(rem) <= db:
            return Polynomial.zero(self.field), self
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] * inv_lead % p
            if c == 0:
                continue
            quot[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] = (rem[k - db + j] - c * b[j]) % p
        return Polynomial._raw(self.field, _trim(quot)), Polynomial._raw(self.field, _trim(rem[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        p = self.field.modulus
        return Polynomial._raw(
            self.field, _trim([i * c % p for i, c in enumerate(self.coeffs)][1:])
        )


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple:
    return divmod(a, b)


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple:
    """Extended Euclid: return ``(d, s, t)`` with ``s*a + t*b == d`` and ``d`` monic.

    ``xgcd(0, 0)`` gives ``(0, 0, 0)``.
    """
    field = a.field
    r0, r1 = a, a._coerce(b)
    s0, s1 = Polynomial.one(field), Polynomial.zero(field)
    t0, t1 = Polynomial.zero(field), Polynomial.one(field)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, Polynomial.zero(field), Polynomial.zero(field)
    k = inverse_mod(r0.leading, field.modulus)
    return r0.scale(k), s0.scale(k), t0.scale(k)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    r0, r1 = a, a._coerce(b)
    while not r1.is_zero():
        r0, r1 = r1, r0 % r1
    return r0.monic()
