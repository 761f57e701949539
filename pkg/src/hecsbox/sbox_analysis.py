"""Exact cryptographic metrics for 4-bit S-boxes.

Everything is exhaustive over the 16-point domain: Walsh spectra by the fast
Walsh-Hadamard transform, algebraic normal form by the binary Moebius
transform, SAC and difference distribution by direct counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .errors import ZeroMask
from .sbox_gen import SBox4

N = 4
SIZE = 1 << N

BoxLike = Union[SBox4, Sequence[int]]


def _table(S: BoxLike) -> Tuple[int, ...]:
    return S.table if isinstance(S, SBox4) else tuple(S)


def parity(x: int) -> int:
    return bin(x).count("1") & 1


@dataclass(frozen=True)
class BooleanFunction16:
    truth_table: Tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(b) for b in self.truth_table)
        if len(t) != SIZE or any(b not in (0, 1) for b in t):
            raise ValueError("truth table must be 16 bits")
        object.__setattr__(self, "truth_table", t)

    def __getitem__(self, x: int) -> int:
        return self.truth_table[x]

    def __iter__(self):
        return iter(self.truth_table)


def is_bijective(S: BoxLike) -> bool:
    t = _table(S)
    return len(t) == SIZE and sorted(t) == list(range(SIZE))


def component(S: BoxLike, b: int) -> BooleanFunction16:
    """``x -> parity(b & S[x])`` for a nonzero output mask ``b``."""
    if b == 0:
        raise ZeroMask("component mask must be nonzero")
    if not 0 < b < SIZE:
        raise ValueError(f"mask out of range: {b}")
    t = _table(S)
    return BooleanFunction16(tuple(parity(b & t[x]) for x in range(SIZE)))


def walsh_spectrum(f: Union[BooleanFunction16, Sequence[int]]) -> List[int]:
    """``W(a) = sum_x (-1)^(f(x) xor a.x)`` via the in-place butterfly."""
    w = [1 - 2 * b for b in f]
    step = 1
    while step < len(w):
        for i in range(0, len(w), 2 * step):
            for j in range(i, i + step):
                a, b = w[j], w[j + step]
                w[j], w[j + step] = a + b, a - b
        step *= 2
    return w


def nonlinearity(S: BoxLike) -> int:
    peak = max(
        abs(c) for b in range(1, SIZE) for c in walsh_spectrum(component(S, b))
    )
    return SIZE // 2 - peak // 2


def sac_matrix(S: BoxLike) -> List[List[Fraction]]:
    """Entry ``[i][j]``: fraction of inputs where flipping input bit i flips output bit j."""
    t = _table(S)
    out = []
    for i in range(N):
        row = []
        for j in range(N):
            hits = sum(((t[x] ^ t[x ^ (1 << i)]) >> j) & 1 for x in range(SIZE))
            row.append(Fraction(hits, SIZE))
        out.append(row)
    return out


def sac_max_deviation(S: BoxLike) -> Fraction:
    half = Fraction(1, 2)
    return max(abs(e - half) for row in sac_matrix(S) for e in row)


def anf(f: Union[BooleanFunction16, Sequence[int]]) -> List[int]:
    """ANF coefficients by the Moebius transform; index bits select the monomial."""
    c = list(f)
    step = 1
    while step < len(c):
        for i in range(0, len(c), 2 * step):
            for j in range(i, i + step):
                c[j + step] ^= c[j]
        step *= 2
    return c


def boolean_degree(f: Union[BooleanFunction16, Sequence[int]]) -> int:
    coeffs = anf(f)
    return max((bin(m).count("1") for m, a in enumerate(coeffs) if a), default=0)


def algebraic_degree(S: BoxLike) -> int:
    """Highest ANF degree over all nonzero component functions (0 for constant boxes)."""
    return max(boolean_degree(component(S, b)) for b in range(1, SIZE))


def ddt(S: BoxLike) -> List[List[int]]:
    t = _table(S)
    table = [[0] * SIZE for _ in range(SIZE)]
    for a in range(SIZE):
        for x in range(SIZE):
            table[a][t[x ^ a] ^ t[x]] += 1
    return table


def differential_uniformity(S: BoxLike) -> int:
    return max(max(row) for row in ddt(S)[1:])


def _k16(q: Fraction) -> str:
    return f"{int(q * SIZE)}/{SIZE}"


@dataclass(frozen=True)
class AnalysisReport:
    bijective: bool
    nonlinearity: int
    sac_matrix: Tuple[Tuple[Fraction, ...], ...]
    sac_max_deviation: Fraction
    algebraic_degree: int
    differential_uniformity: int

    def to_json(self) -> dict:
        return {
            "bijective": self.bijective,
            "nonlinearity": self.nonlinearity,
            "sac_matrix": [[_k16(e) for e in row] for row in self.sac_matrix],
            "sac_matrix_float": [[float(e) for e in row] for row in self.sac_matrix],
            "sac_max_deviation": _k16(self.sac_max_deviation),
            "sac_max_deviation_float": float(self.sac_max_deviation),
            "algebraic_degree": self.algebraic_degree,
            "differential_uniformity": self.differential_uniformity,
        }

    def scalar_metrics(self) -> dict:
        """Single-valued metrics in display order."""
        return {
            "bijective": self.bijective,
            "nonlinearity": self.nonlinearity,
            "algebraic_degree": self.algebraic_degree,
            "differential_uniformity": self.differential_uniformity,
            "sac_max_deviation": _k16(self.sac_max_deviation),
        }


def analyze(S: BoxLike) -> AnalysisReport:
    m = sac_matrix(S)
    return AnalysisReport(
        bijective=is_bijective(S),
        nonlinearity=nonlinearity(S),
        sac_matrix=tuple(tuple(row) for row in m),
        sac_max_deviation=sac_max_deviation(S),
        algebraic_degree=algebraic_degree(S),
        differential_uniformity=differential_uniformity(S),
    )
