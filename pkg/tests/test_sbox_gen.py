import pytest

from hecsbox.errors import DegenerateResult, IdentityDivisor, InvalidDivisor, NotAPermutation
from hecsbox.jacobian import MumfordDivisor, add, divisor_from_point, divisor_from_points, identity, scalar_mul
from hecsbox.poly import Polynomial
from hecsbox.sbox_gen import (
    IDENTITY_SBOX,
    FoldRule,
    GenParams,
    SBox4,
    extract_unique,
    fold_divisor,
    generate,
    generate_sbox,
    nibble_stream,
    shift_family,
    xor_fold,
)

from conftest import EXAMPLE_F
from oracles import SympyJacobian

TABLE1 = SBox4.from_hex("C56B90AD3EF84712")

# Example-2 golden values. The divisor was cross-checked against an
# independent sympy implementation of Cantor's algorithm (see
# test_example2_divisor_against_sympy), then the box was read off it.
EX2_SBOX = "170B9E4328CF65AD"
EX2_U = ["385014234137108906823635744999676", "6883015785897075713521975602425896", "1"]
EX2_V = ["7185237193323862089754024542806963", "9642053138439006721127609500556137"]


def test_sbox4_validation():
    with pytest.raises(ValueError):
        SBox4(tuple(range(15)))
    with pytest.raises(ValueError):
        SBox4((16,) + tuple(range(15)))
    assert SBox4((0,) * 16).table == (0,) * 16
    assert TABLE1.hex() == "C56B90AD3EF84712"
    assert list(TABLE1) == [12, 5, 6, 11, 9, 0, 10, 13, 3, 14, 15, 8, 4, 7, 1, 2]
    assert TABLE1.as_int() == 0xC56B90AD3EF84712
    for bad in ("C56B90AD3EF8471", "C56B90AD3EF847123", "C56B90AD3EF8471G"):
        with pytest.raises(ValueError):
            SBox4.from_hex(bad)


def test_fold_divisor(curve1, F11):
    fp = fold_divisor(divisor_from_point(curve1.point(0, 5)))
    assert (fp.x_p, fp.y_p, fp.fold_rule_used) == (F11(0), F11(5), FoldRule.WEIGHT1)
    D = MumfordDivisor.unchecked(curve1, Polynomial(F11, [7, 3, 1]), Polynomial(F11, [9, 2]))
    fp = fold_divisor(D)
    assert (fp.x_p.value, fp.y_p.value, fp.fold_rule_used) == (7, 9, FoldRule.WEIGHT2_COEFF)
    with pytest.raises(IdentityDivisor):
        fold_divisor(identity(curve1))


def test_xor_fold():
    assert xor_fold(0, 5) == 5
    assert xor_fold(1234567, 1234567) == 0
    assert xor_fold(0xC3, 0x5A) == 0x99


def test_nibble_stream():
    assert nibble_stream(0x99) == [9, 9]
    assert nibble_stream(0) == [0]
    assert nibble_stream(0xC56B) == [12, 5, 6, 11]
    with pytest.raises(ValueError):
        nibble_stream(-1)


def test_extract_unique():
    box, completed = extract_unique([12, 5, 6, 11, 9, 0, 10, 13, 3, 14, 15, 8, 4, 7, 1, 2])
    assert box == TABLE1 and not completed
    box, completed = extract_unique([9, 9])
    assert list(box) == [9, 0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15] and completed
    box, completed = extract_unique([])
    assert box == IDENTITY_SBOX and completed
    # a stream that reaches 16 distinct values stops there
    box, completed = extract_unique(list(range(15, -1, -1)) + [3, 3])
    assert list(box) == list(range(15, -1, -1)) and not completed
    box, _ = extract_unique([1], completion=range(15, -1, -1))
    assert list(box) == [1, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 0]


def test_shift_family():
    fam = shift_family(IDENTITY_SBOX, 2)
    assert list(fam[1]) == list(range(1, 16)) + [0]
    assert shift_family(TABLE1, 2)[1].hex() == "56B90AD3EF84712C"
    full = shift_family(TABLE1, 16)
    assert len(full) == 16 and len(set(full)) == 16
    assert full[15].rotate(1) == TABLE1
    assert TABLE1.rotate(16) == TABLE1
    with pytest.raises(NotAPermutation):
        shift_family(SBox4((0,) * 16), 1)
    for n in (0, 17):
        with pytest.raises(ValueError):
            shift_family(TABLE1, n)


def test_params_validation(curve1, curve2, example2_points):
    P = curve1.point(0, 5)
    with pytest.raises(InvalidDivisor):
        GenParams(curve1, [], 1)
    with pytest.raises(InvalidDivisor):
        GenParams(curve2, [(P, 1)], 1)
    with pytest.raises(ValueError):
        GenParams(curve1, [(P, 1)], -1)
    with pytest.raises(ValueError):
        GenParams(curve1, [(P, 1)], 1, family_size=17)


def test_example2_divisor_against_sympy(curve2, example2_points):
    (P1, _), (P2, _) = example2_points
    J = SympyJacobian(curve2.p, [], EXAMPLE_F, 2)
    d_m = J.add(J.point(*P1.as_tuple()), J.point(*P2.as_tuple()))
    acc = d_m
    for _ in range(0xB):
        acc = J.add(acc, d_m)
    assert [str(c) for c in J.coeffs(acc[0])] == EX2_U
    assert [str(c) for c in J.coeffs(acc[1])] == EX2_V
    gen = generate(GenParams(curve2, example2_points, 0xB))
    assert gen.d_sum.to_json() == {"u": EX2_U, "v": EX2_V}
    q = int(EX2_U[0]) ^ int(EX2_V[0])
    assert gen.q == q
    box, _ = extract_unique(int(c, 16) for c in format(q, "x"))
    assert box.hex() == EX2_SBOX


def test_example2_golden(curve2, example2_points):
    gen = generate(GenParams(curve2, example2_points, 0xB))
    assert gen.sbox.hex() == EX2_SBOX
    assert gen.folded.fold_rule_used is FoldRule.WEIGHT2_COEFF
    assert gen.completion_used  # 13 distinct nibbles in q
    assert generate_sbox(GenParams(curve2, example2_points, 0xB)) == gen.sbox


def test_degenerate_key(curve1):
    pts = [(curve1.point(0, 5), 1), (curve1.point(2, 1), 1)]
    d_m = divisor_from_points(pts)
    order, acc = 1, d_m
    while not acc.is_identity():
        acc = add(acc, d_m)
        order += 1
    with pytest.raises(DegenerateResult):
        generate(GenParams(curve1, pts, order - 1))
    generate(GenParams(curve1, pts, order))


def test_identity_point_divisor_is_degenerate(curve1):
    P = curve1.point(0, 5)
    Q = curve1.point(0, 6)
    with pytest.raises(DegenerateResult):
        generate(GenParams(curve1, [(P, 1), (Q, 1)], 3))


def test_internal_consistency_and_determinism(curve1, curve2, example2_points):
    pts = [(curve1.point(3, 5), 2), (curve1.point(10, 6), 1)]
    for key in range(16):
        try:
            g = generate(GenParams(curve1, pts, key))
        except DegenerateResult:
            continue
        d_m = divisor_from_points(pts)
        assert fold_divisor(add(d_m, scalar_mul(key, d_m))) == fold_divisor(scalar_mul(key + 1, d_m))
        assert g.sbox.is_permutation()
    a = generate(GenParams(curve2, example2_points, 7))
    b = generate(GenParams(curve2, example2_points, 7))
    assert a.sbox == b.sbox and a.metadata() == b.metadata()


def test_family_attached(curve2, example2_points):
    gen = generate(GenParams(curve2, example2_points, 0xB, family_size=16))
    assert gen.family[0] == gen.sbox
    for i, box in enumerate(gen.family):
        assert all(box[x] == gen.sbox[(x + i) % 16] for x in range(16))


def test_key_sensitivity(curve2, example2_points):
    tables = {generate_sbox(GenParams(curve2, example2_points, k)) for k in range(16)}
    assert len(tables) >= 2


def test_wide_key(curve2, example2_points):
    box = generate_sbox(GenParams(curve2, example2_points, 2**200 + 17))
    assert box.is_permutation()


def test_metadata(curve2, example2_points):
    meta = generate(GenParams(curve2, example2_points, 0xB)).metadata()
    assert meta["fold_rule"] == "weight2-coeff"
    assert meta["key"] == 11
    assert meta["curve_hash"] == curve2.fingerprint()
    assert meta["divisor"] == {"u": EX2_U, "v": EX2_V}
