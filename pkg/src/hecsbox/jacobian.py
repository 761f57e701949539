"""Jacobian arithmetic in Mumford representation via Cantor's algorithm.

A reduced divisor class is a pair ``(u, v)`` with ``u`` monic,
``deg v < deg u <= g`` and ``u | v^2 + h v - f``. The identity is ``(1, 0)``.
Reduced forms are unique, so equality is plain coefficient equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .curve import CurvePoint, HyperellipticCurve, _y_solutions, enumerate_points
from .errors import FieldMismatch, FieldTooLarge, InvalidDivisor
from .poly import (
    Polynomial,
    poly_add,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_sub,
    poly_xgcd,
)

__all__ = [
    "MumfordDivisor",
    "Polynomial",
    "add",
    "divisor_from_point",
    "divisor_from_points",
    "enumerate_divisors",
    "identity",
    "is_valid",
    "jacobian_order",
    "neg",
    "poly_add",
    "poly_divmod",
    "poly_gcd",
    "poly_mul",
    "poly_sub",
    "poly_xgcd",
    "scalar_mul",
]


@dataclass(frozen=True)
class MumfordDivisor:
    u: Polynomial
    v: Polynomial
    curve: HyperellipticCurve

    def __post_init__(self):
        if not _pair_is_valid(self.curve, self.u, self.v) or self.u.degree > self.curve.genus:
            raise InvalidDivisor(f"not a reduced Mumford pair: u = {self.u}, v = {self.v}")

    @classmethod
    def unchecked(cls, curve: HyperellipticCurve, u: Polynomial, v: Polynomial) -> "MumfordDivisor":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "u", u)
        object.__setattr__(obj, "v", v)
        object.__setattr__(obj, "curve", curve)
        return obj

    @property
    def weight(self) -> int:
        return self.u.degree

    def is_identity(self) -> bool:
        return self.u.degree == 0

    def __eq__(self, other):
        if not isinstance(other, MumfordDivisor):
            return NotImplemented
        return self.u == other.u and self.v == other.v and self.curve == other.curve

    def __hash__(self):
        return hash((self.u, self.v))

    def __add__(self, other):
        if not isinstance(other, MumfordDivisor):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        if not isinstance(other, MumfordDivisor):
            return NotImplemented
        return add(self, neg(other))

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return scalar_mul(k, self)

    def __repr__(self):
        return f"<u = {self.u}, v = {self.v}>"

    def key(self) -> tuple:
        """Sort/hash key independent of the curve object."""
        return (self.u.coeffs, self.v.coeffs)

    def to_json(self) -> dict:
        return {"u": [str(c) for c in self.u.coeffs], "v": [str(c) for c in self.v.coeffs]}

    @classmethod
    def from_json(cls, curve: HyperellipticCurve, data: dict) -> "MumfordDivisor":
        F = curve.field
        return cls(Polynomial(F, [int(c) for c in data["u"]]), Polynomial(F, [int(c) for c in data["v"]]), curve)


def _pair_is_valid(curve: HyperellipticCurve, u: Polynomial, v: Polynomial) -> bool:
    if not u.is_monic():
        return False
    if u.degree == 0:
        return v.is_zero()
    if v.degree >= u.degree:
        return False
    return ((v * v + curve.h * v - curve.f) % u).is_zero()


def is_valid(D: MumfordDivisor) -> bool:
    """Mumford conditions: ``u`` monic, ``deg v < deg u`` (or identity), ``u | v^2 + hv - f``."""
    return _pair_is_valid(D.curve, D.u, D.v)


def identity(curve: HyperellipticCurve) -> MumfordDivisor:
    F = curve.field
    return MumfordDivisor.unchecked(curve, Polynomial.one(F), Polynomial.zero(F))


def divisor_from_point(P: CurvePoint) -> MumfordDivisor:
    F = P.curve.field
    return MumfordDivisor.unchecked(P.curve, Polynomial(F, [-P.x.value, 1]), Polynomial(F, [P.y.value]))


def divisor_from_points(points: Iterable[Tuple[CurvePoint, int]]) -> MumfordDivisor:
    """Reduced class of ``sum m_P * (P - inf)`` for positive multiplicities ``m_P``."""
    items = list(points)
    if not items:
        raise InvalidDivisor("empty point list")
    curve = items[0][0].curve
    total = identity(curve)
    for P, m in items:
        if P.curve != curve:
            raise FieldMismatch("points on different curves")
        if not isinstance(m, int) or m < 1:
            raise InvalidDivisor(f"multiplicity must be a positive integer, got {m!r}")
        total = add(total, scalar_mul(m, divisor_from_point(P)))
    return total


def _compose(curve, u1, v1, u2, v2):
    """Cantor composition; returns a semi-reduced pair."""
    h, f = curve.h, curve.f
    d0, e1, e2 = poly_xgcd(u1, u2)
    if d0.degree == 0:
        # coprime supports: d = 1, s3 = 0
        u = u1 * u2
        v = (e1 * u1 * v2 + e2 * u2 * v1) % u
        return u, v
    d, c1, s3 = poly_xgcd(d0, v1 + v2 + h)
    s1, s2 = c1 * e1, c1 * e2
    dd = d * d
    u = u1 * u2 // dd
    num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)
    v = (num // d) % u
    return u, v


def _reduce(curve, u, v):
    h, f, g = curve.h, curve.f, curve.genus
    while u.degree > g:
        u_next, rem = divmod(f - v * h - v * v, u)
        if not rem.is_zero():
            raise InvalidDivisor("reduction lost divisibility")
        v = (-h - v) % u_next
        u = u_next
    u = u.monic()
    return u, v % u


def add(D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    """Group law: Cantor composition followed by reduction to ``deg u <= g``."""
    if D1.curve != D2.curve:
        raise FieldMismatch("divisors on different curves")
    curve = D1.curve
    if D1.is_identity():
        return D2
    if D2.is_identity():
        return D1
    u, v = _compose(curve, D1.u, D1.v, D2.u, D2.v)
    u, v = _reduce(curve, u, v)
    return MumfordDivisor.unchecked(curve, u, v)


def neg(D: MumfordDivisor) -> MumfordDivisor:
    if D.is_identity():
        return D
    return MumfordDivisor.unchecked(D.curve, D.u, (-D.curve.h - D.v) % D.u)


def scalar_mul(k: int, D: MumfordDivisor) -> MumfordDivisor:
    """Left-to-right double-and-add. Negative ``k`` multiplies ``-D``."""
    if k < 0:
        return scalar_mul(-k, neg(D))
    result = identity(D.curve)
    for bit in bin(k)[2:]:
        result = add(result, result)
        if bit == "1":
            result = add(result, D)
    return result


# -- small-field enumeration ------------------------------------------------

ENUMERATION_BUDGET = 2 * 10**6


def enumerate_divisors(curve: HyperellipticCurve) -> list:
    """Every reduced divisor, by brute force over all ``(u, v)`` with ``deg v < deg u <= g``.

    Cost grows like ``p**(2g)``; refuses when that exceeds ENUMERATION_BUDGET.
    Ordered by ``(deg u, u coefficients, v coefficients)``.
    """
    p, g = curve.p, curve.genus
    if sum(p ** (2 * d) for d in range(g + 1)) > ENUMERATION_BUDGET:
        raise FieldTooLarge(f"Jacobian enumeration over GF({p}) with genus {g} is too costly")
    F = curve.field
    out = [identity(curve)]
    for d in range(1, g + 1):
        for low in itertools.product(range(p), repeat=d):
            u = Polynomial(F, list(reversed(low)) + [1])
            # f - v h - v^2 must vanish mod u
            target = curve.f % u
            hm = curve.h % u
            for vc in itertools.product(range(p), repeat=d):
                v = Polynomial(F, list(reversed(vc)))
                if ((v * v + hm * v - target) % u).is_zero():
                    out.append(MumfordDivisor.unchecked(curve, u, v))
    return out


class _Fp2:
    """Minimal GF(p^2) = GF(p)[w]/(w^2 - n) for point counting."""

    def __init__(self, p: int):
        self.p = p
        n = 2
        while pow(n, (p - 1) // 2, p) == 1:
            n += 1
        self.n = n

    def mul(self, a, b):
        p = self.p
        return ((a[0] * b[0] + self.n * a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)

    def eval(self, coeffs: Sequence[int], z):
        acc = (0, 0)
        for c in reversed(coeffs):
            acc = self.mul(acc, z)
            acc = ((acc[0] + c) % self.p, acc[1])
        return acc

    def is_square(self, z) -> bool:
        # quadratic character of GF(p^2) equals the Legendre symbol of the norm
        p = self.p
        norm = (z[0] * z[0] - self.n * z[1] * z[1]) % p
        return norm == 0 or pow(norm, (p - 1) // 2, p) == 1


ORDER_LIMIT = 500


def jacobian_order(curve: HyperellipticCurve) -> int:
    """Number of F_p-rational divisor classes of a genus-2 curve, for ``p < 500``.

    Counts reduced divisors by support type: the identity, single affine
    points, pairs of rational points (distinct x, or a doubled non-Weierstrass
    point), and conjugate pairs over GF(p^2) whose x-coordinate is irrational.
    """
    if curve.genus != 2:
        raise ValueError("jacobian_order supports genus 2 only")
    p = curve.p
    if p >= ORDER_LIMIT:
        raise FieldTooLarge(f"Jacobian order by enumeration needs p < {ORDER_LIMIT}")
    pts = enumerate_points(curve)
    per_x = [len(_y_solutions(curve, x)) for x in range(p)]
    n_aff = len(pts)
    pairs_distinct_x = (n_aff * n_aff - sum(c * c for c in per_x)) // 2
    non_weierstrass = sum(1 for P in pts if per_x[P.x.value] == 2)
    Fq = _Fp2(p)
    h, f = curve.h.coeffs, curve.f.coeffs
    irrational = 0
    for a in range(p):
        for b in range(1, p):
            z = (a, b)
            hz, fz = Fq.eval(h, z), Fq.eval(f, z)
            hz2 = Fq.mul(hz, hz)
            disc = ((hz2[0] + 4 * fz[0]) % p, (hz2[1] + 4 * fz[1]) % p)
            if disc == (0, 0):
                irrational += 1
            elif Fq.is_square(disc):
                irrational += 2
    return 1 + n_aff + pairs_distinct_x + non_weierstrass + irrational // 2


def divisor_order(D: MumfordDivisor, bound: int = 10**6) -> int:
    """Smallest ``n >= 1`` with ``n * D`` the identity, by repeated addition."""
    acc = D
    for n in range(1, bound + 1):
        if acc.is_identity():
            return n
        acc = add(acc, D)
    raise ValueError(f"order exceeds {bound}")
