"""Imaginary hyperelliptic curves ``y^2 + h(x) y = f(x)`` over GF(p) and their affine points."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence, Union

from .errors import FieldMismatch, FieldTooLarge, InvalidCurve, PointSearchExhausted
from .field import FieldElement, PrimeField, inverse_mod, sqrt_mod
from .poly import Polynomial

# exhaustive singular-point scan below this modulus
NONSINGULARITY_CHECK_LIMIT = 10**4
ENUMERATION_LIMIT = 10**6

PolyLike = Union[Polynomial, Sequence]


def _as_poly(field: PrimeField, value: PolyLike) -> Polynomial:
    if isinstance(value, Polynomial):
        if value.field.modulus != field.modulus:
            raise FieldMismatch("polynomial over a different field")
        return value
    return Polynomial(field, value)


@dataclass(frozen=True, eq=False)
class HyperellipticCurve:
    """Curve ``y^2 + h(x) y = f(x)`` with ``f`` monic of degree ``2g + 1`` and ``deg h <= g``.

    For ``p < 10**4`` construction scans every affine point for a singularity
    and rejects singular curves; for larger ``p`` the scan is skipped and
    ``nonsingularity_verified`` is left False.
    """

    field: PrimeField
    h: Polynomial
    f: Polynomial
    genus: int
    nonsingularity_verified: bool = dc_field(default=False, compare=False)

    def __init__(self, field: PrimeField, h: PolyLike, f: PolyLike, genus: Optional[int] = None):
        h = _as_poly(field, h)
        f = _as_poly(field, f)
        if f.degree < 3 or f.degree % 2 == 0:
            raise InvalidCurve(f"deg f must be odd and at least 3, got {f.degree}")
        if genus is None:
            genus = (f.degree - 1) // 2
        if genus < 1:
            raise InvalidCurve(f"genus must be positive, got {genus}")
        if f.degree != 2 * genus + 1:
            raise InvalidCurve(f"deg f = {f.degree} does not match genus {genus} (need {2 * genus + 1})")
        if not f.is_monic():
            raise InvalidCurve("f must be monic")
        if h.degree > genus:
            raise InvalidCurve(f"deg h = {h.degree} exceeds genus {genus}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "genus", genus)
        verified = False
        if field.modulus < NONSINGULARITY_CHECK_LIMIT:
            bad = self._singular_point()
            if bad is not None:
                raise InvalidCurve(f"curve is singular at {bad}")
            verified = True
        object.__setattr__(self, "nonsingularity_verified", verified)

    def _singular_point(self):
        # odd p: the y-partial 2y + h(x) = 0 pins y for each x
        p = self.field.modulus
        half = inverse_mod(2, p)
        dh, df = self.h.derivative(), self.f.derivative()
        for x in range(p):
            y = (-self.h(x).value * half) % p
            if self.equation(x, y) != 0:
                continue
            if (dh(x).value * y - df(x).value) % p == 0:
                return (x, y)
        return None

    @property
    def p(self) -> int:
        return self.field.modulus

    def equation(self, x, y) -> int:
        """Residue of ``y^2 + h(x) y - f(x)`` as an integer."""
        p = self.field.modulus
        xv, yv = int(x) % p, int(y) % p
        return (yv * yv + self.h(xv).value * yv - self.f(xv).value) % p

    def __eq__(self, other):
        if not isinstance(other, HyperellipticCurve):
            return NotImplemented
        return (self.field.modulus, self.genus, self.h, self.f) == (
            other.field.modulus, other.genus, other.h, other.f)

    def __hash__(self):
        return hash((self.field.modulus, self.genus, self.h, self.f))

    def __repr__(self):
        lhs = "y^2" if self.h.is_zero() else f"y^2 + ({self.h})*y"
        return f"HyperellipticCurve({lhs} = {self.f} over GF({self.p}), genus {self.genus})"

    def describe(self) -> dict:
        """Plain-data description, coefficient lists ascending and as decimal strings."""
        return {
            "prime": str(self.p),
            "genus": self.genus,
            "h": [str(c) for c in self.h.coeffs],
            "f": [str(c) for c in self.f.coeffs],
        }

    def fingerprint(self) -> str:
        blob = json.dumps(self.describe(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def point(self, x, y) -> "CurvePoint":
        return CurvePoint(self.field(x), self.field(y), self)


@dataclass(frozen=True)
class CurvePoint:
    """Affine point on a hyperelliptic curve; the curve equation is checked on construction."""

    x: FieldElement
    y: FieldElement
    curve: HyperellipticCurve = dc_field(repr=False)

    def __post_init__(self):
        m = self.curve.field.modulus
        if self.x.field.modulus != m or self.y.field.modulus != m:
            raise FieldMismatch("point coordinates from a different field")
        if self.curve.equation(self.x, self.y) != 0:
            raise InvalidCurve(f"({self.x}, {self.y}) is not on {self.curve!r}")

    def __iter__(self):
        yield self.x
        yield self.y

    def as_tuple(self) -> tuple:
        return (self.x.value, self.y.value)


def is_on_curve(curve: HyperellipticCurve, x, y) -> bool:
    for c in (x, y):
        if isinstance(c, FieldElement) and c.field.modulus != curve.p:
            raise FieldMismatch("coordinate from a different field")
    return curve.equation(x, y) == 0


def _y_solutions(curve: HyperellipticCurve, x: int) -> list:
    """Sorted y in GF(p) with (x, y) on the curve."""
    p = curve.p
    hx, fx = curve.h(x).value, curve.f(x).value
    # (2y + h)^2 = h^2 + 4f
    disc = (hx * hx + 4 * fx) % p
    if disc and pow(disc, (p - 1) // 2, p) != 1:
        return []
    r = sqrt_mod(disc, p)
    half = inverse_mod(2, p)
    ys = {(r - hx) * half % p, (-r - hx) * half % p}
    return sorted(ys)


def enumerate_points(curve: HyperellipticCurve) -> list:
    """All affine points, sorted by ``(x, y)``. Only for ``p < 10**6``."""
    if curve.p >= ENUMERATION_LIMIT:
        raise FieldTooLarge(f"refusing to enumerate points over GF({curve.p})")
    F = curve.field
    return [CurvePoint(F(x), F(y), curve) for x in range(curve.p) for y in _y_solutions(curve, x)]


def negate_point(P: CurvePoint) -> CurvePoint:
    """Hyperelliptic involution ``(x, y) -> (x, -y - h(x))``."""
    return CurvePoint(P.x, -P.y - P.curve.h(P.x), P.curve)


def find_point(curve: HyperellipticCurve, start_x=0) -> CurvePoint:
    """First point with ``x >= start_x`` (wrapping mod p), taking the smaller y.

    Deterministic; raises PointSearchExhausted after a full pass over the field.
    """
    p = curve.p
    x0 = int(start_x) % p
    for i in range(p):
        x = (x0 + i) % p
        ys = _y_solutions(curve, x)
        if ys:
            return CurvePoint(curve.field(x), curve.field(ys[0]), curve)
    raise PointSearchExhausted(f"no affine point on {curve!r}")


def curve_from_coeffs(prime, h: Iterable, f: Iterable, genus: Optional[int] = None) -> HyperellipticCurve:
    field = prime if isinstance(prime, PrimeField) else PrimeField(int(prime))
    return HyperellipticCurve(field, list(h), list(f), genus)
