"""Key-dependent 4-bit S-box generation from Jacobian arithmetic.

Pipeline: ``D_m = sum m_P (P)``, ``D_sum = D_m + key * D_m``, read a pair
``(x_p, y_p)`` off ``D_sum``, XOR them, take the hex digits of the result
and keep the first occurrence of each value to fill a 16-entry permutation.
Further boxes come from rotating the 64-bit table left by one nibble.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from .curve import CurvePoint, HyperellipticCurve
from .errors import DegenerateResult, IdentityDivisor, InvalidDivisor, NotAPermutation
from .field import FieldElement
from .jacobian import MumfordDivisor, add, divisor_from_points, scalar_mul

FAMILY_MAX = 16


@dataclass(frozen=True)
class SBox4:
    """A 16-entry table of nibbles; ``table[x]`` is the output for input ``x``."""

    table: Tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(v) for v in self.table)
        if len(t) != 16:
            raise ValueError(f"S-box needs exactly 16 entries, got {len(t)}")
        if any(not 0 <= v <= 15 for v in t):
            raise ValueError("S-box entries must lie in [0, 15]")
        object.__setattr__(self, "table", t)

    @classmethod
    def from_hex(cls, text: str) -> "SBox4":
        s = text.strip()
        if len(s) != 16 or any(c not in "0123456789abcdefABCDEF" for c in s):
            raise ValueError(f"expected 16 hex digits, got {text!r}")
        return cls(tuple(int(c, 16) for c in s))

    def hex(self) -> str:
        return "".join(f"{v:X}" for v in self.table)

    def as_int(self) -> int:
        """The 64-bit word, entry 0 in the most significant nibble."""
        return int(self.hex(), 16)

    def is_permutation(self) -> bool:
        return len(set(self.table)) == 16

    def rotate(self, i: int) -> "SBox4":
        """Rotate the 64-bit word left by ``4*i`` bits."""
        i %= 16
        return SBox4(self.table[i:] + self.table[:i])

    def __getitem__(self, x: int) -> int:
        return self.table[x]

    def __len__(self):
        return 16

    def __iter__(self):
        return iter(self.table)

    def __str__(self):
        return self.hex()


IDENTITY_SBOX = SBox4(tuple(range(16)))


class FoldRule(str, enum.Enum):
    WEIGHT1 = "weight1"
    WEIGHT2_COEFF = "weight2-coeff"


@dataclass(frozen=True)
class FoldedPoint:
    x_p: FieldElement
    y_p: FieldElement
    fold_rule_used: FoldRule


@dataclass(frozen=True)
class GenParams:
    curve: HyperellipticCurve
    points: Sequence[Tuple[CurvePoint, int]]
    key: int
    family_size: int = 1

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((P, m) for P, m in self.points))
        if not self.points:
            raise InvalidDivisor("at least one point is required")
        for P, m in self.points:
            if P.curve != self.curve:
                raise InvalidDivisor("point does not lie on the configured curve")
            if not isinstance(m, int) or m < 1:
                raise InvalidDivisor(f"multiplicity must be a positive integer, got {m!r}")
        if not isinstance(self.key, int) or self.key < 0:
            raise ValueError(f"key must be a nonnegative integer, got {self.key!r}")
        if not 1 <= self.family_size <= FAMILY_MAX:
            raise ValueError(f"family size must be in [1, {FAMILY_MAX}], got {self.family_size}")


def fold_divisor(D: MumfordDivisor) -> FoldedPoint:
    """Read a single pair ``(x_p, y_p)`` off a reduced divisor.

    Weight 1 (``u = x + c``): the supporting point ``(-c, v0)``.
    Weight >= 2: the constant coefficients ``(u0, v0)``.
    """
    if D.is_identity():
        raise IdentityDivisor("the identity divisor has no point readout")
    F = D.curve.field
    if D.u.degree == 1:
        return FoldedPoint(F(-D.u[0]), F(D.v[0]), FoldRule.WEIGHT1)
    return FoldedPoint(F(D.u[0]), F(D.v[0]), FoldRule.WEIGHT2_COEFF)


def xor_fold(x_p, y_p) -> int:
    return int(x_p) ^ int(y_p)


def nibble_stream(q: int) -> List[int]:
    """Hex digits of ``q``, most significant first; ``0`` gives ``[0]``."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    return [int(c, 16) for c in format(q, "x")]


def extract_unique(nibbles: Iterable[int], completion: Iterable[int] = range(16)) -> Tuple[SBox4, bool]:
    """First occurrence of each nibble value, in stream order, topped up to 16.

    When the stream has fewer than 16 distinct values the missing ones are
    appended in the order given by ``completion`` (ascending by default).
    Returns the permutation and whether completion was needed.
    """
    seen: List[int] = []
    taken = set()
    for n in nibbles:
        if not 0 <= n <= 15:
            raise ValueError(f"nibble out of range: {n}")
        if n not in taken:
            taken.add(n)
            seen.append(n)
            if len(seen) == 16:
                return SBox4(tuple(seen)), False
    for n in completion:
        if n not in taken:
            taken.add(n)
            seen.append(n)
    if len(seen) != 16:
        raise ValueError("completion order does not cover all 16 nibble values")
    return SBox4(tuple(seen)), True


@dataclass(frozen=True)
class Generation:
    """Full trace of one run, for auditing and serialization."""

    params: GenParams
    d_m: MumfordDivisor
    d_sum: MumfordDivisor
    folded: FoldedPoint
    q: int
    nibbles: Tuple[int, ...]
    sbox: SBox4
    completion_used: bool
    family: Tuple[SBox4, ...] = field(default=())

    def metadata(self) -> dict:
        return {
            "key": self.params.key,
            "fold_rule": self.folded.fold_rule_used.value,
            "completion_used": self.completion_used,
            "distinct_nibbles": len(set(self.nibbles)),
            "x_p": str(self.folded.x_p.value),
            "y_p": str(self.folded.y_p.value),
            "q": format(self.q, "X"),
            "divisor": self.d_sum.to_json(),
            "curve_hash": self.params.curve.fingerprint(),
        }


def generate(params: GenParams) -> Generation:
    d_m = divisor_from_points(params.points)
    if d_m.is_identity():
        raise DegenerateResult("the point divisor D_m is the identity; choose other points")
    d_n = scalar_mul(params.key, d_m)
    d_sum = add(d_m, d_n)
    if d_sum != scalar_mul(params.key + 1, d_m):
        raise RuntimeError("internal inconsistency: D_m + k*D_m != (k+1)*D_m")
    if d_sum.is_identity():
        raise DegenerateResult(
            f"(key + 1) * D_m is the identity for key {params.key}; change the key or the points"
        )
    folded = fold_divisor(d_sum)
    q = xor_fold(folded.x_p, folded.y_p)
    nibbles = tuple(nibble_stream(q))
    sbox, completed = extract_unique(nibbles)
    return Generation(
        params=params,
        d_m=d_m,
        d_sum=d_sum,
        folded=folded,
        q=q,
        nibbles=nibbles,
        sbox=sbox,
        completion_used=completed,
        family=tuple(shift_family(sbox, params.family_size)),
    )


def generate_sbox(params: GenParams) -> SBox4:
    return generate(params).sbox


def shift_family(sb1: SBox4, n: int) -> List[SBox4]:
    """``[Sb_1, ..., Sb_n]`` with ``Sb_{i+1}[x] = Sb_1[(x + i) mod 16]``."""
    if not sb1.is_permutation():
        raise NotAPermutation(f"{sb1.hex()} is not a permutation")
    if not 1 <= n <= FAMILY_MAX:
        raise ValueError(f"family size must be in [1, {FAMILY_MAX}], got {n}")
    return [sb1.rotate(i) for i in range(n)]
