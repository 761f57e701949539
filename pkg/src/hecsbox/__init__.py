"""Dynamic key-dependent 4-bit S-boxes from hyperelliptic curve Jacobians."""

from .curve import CurvePoint, HyperellipticCurve, enumerate_points, find_point, is_on_curve, negate_point
from .field import FieldElement, PrimeField
from .jacobian import MumfordDivisor, divisor_from_point, divisor_from_points, identity, scalar_mul
from .poly import Polynomial
from .sbox_analysis import AnalysisReport, analyze
from .sbox_gen import GenParams, SBox4, generate, generate_sbox, shift_family

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "CurvePoint",
    "FieldElement",
    "GenParams",
    "HyperellipticCurve",
    "MumfordDivisor",
    "Polynomial",
    "PrimeField",
    "SBox4",
    "analyze",
    "divisor_from_point",
    "divisor_from_points",
    "enumerate_points",
    "find_point",
    "generate",
    "generate_sbox",
    "identity",
    "is_on_curve",
    "negate_point",
    "scalar_mul",
    "shift_family",
]
