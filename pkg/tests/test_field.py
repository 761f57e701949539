import pytest
from hypothesis import given, strategies as st

from hecsbox.errors import DivisionByZero, FieldMismatch, InvalidField, NotASquare
from hecsbox.field import PrimeField, add, inv, is_square, mul, neg, parse_int, sqrt, sub

from oracles import squares_mod

P_BIG = 10**34 + 1233
FIELDS = [PrimeField(11), PrimeField(13), PrimeField(17), PrimeField(P_BIG)]


def test_add_examples(F11, Fbig):
    assert add(F11(7), F11(8)) == F11(4)
    assert F11(0) + F11(9) == F11(9)
    assert Fbig(P_BIG - 1) + Fbig(1) == Fbig(0)


def test_sub_mul_neg_examples(F11):
    assert mul(F11(3), F11(4)) == F11(1)
    assert neg(F11(0)) == F11(0)
    assert sub(F11(2), F11(5)) == F11(8)


def test_inv_examples(F11, Fbig):
    assert inv(F11(3)) == F11(4)
    assert F11(1).inv() == F11(1)
    assert Fbig(2).inv() == Fbig((P_BIG + 1) // 2)
    with pytest.raises(DivisionByZero):
        F11(0).inv()
    with pytest.raises(ZeroDivisionError):
        F11(5) / F11(0)


def test_pow_examples(F11):
    assert F11(2) ** 10 == F11(1)
    assert F11(5) ** 0 == F11(1)
    assert F11(0) ** 0 == F11(1)
    assert F11(3) ** 2 == F11(9)


def test_square_examples_against_table(F11):
    sq = squares_mod(11)
    assert is_square(F11(3)) is True
    assert sqrt(F11(3)) == F11(5)
    assert is_square(F11(2)) is False
    with pytest.raises(NotASquare):
        F11(2).sqrt()
    for v in range(11):
        assert F11(v).is_square() == (v in sq)


@pytest.mark.parametrize("p", [11, 13, 17, 41, 97, 113])
def test_sqrt_exhaustive(p):
    # 13, 17, 41, 97, 113 are 1 mod 4 and take the full Tonelli-Shanks loop
    F = PrimeField(p)
    for x in F.elements():
        r = (x * x).sqrt()
        assert r in (x, -x)
        assert r.value <= p - r.value or r.value == 0


def test_mixing_fields_is_an_error(F11):
    with pytest.raises(FieldMismatch):
        F11(1) + PrimeField(13)(1)
    with pytest.raises(FieldMismatch):
        F11(PrimeField(13)(1))


@pytest.mark.parametrize("bad", [2, 1, 0, -7, 15, 10**34 + 1])
def test_bad_moduli_rejected(bad):
    with pytest.raises(InvalidField):
        PrimeField(bad)


def test_parse_int():
    assert parse_int("1233") == 1233
    assert parse_int("0xB") == 11
    assert parse_int(" 0X1f ") == 31
    assert parse_int("-5") == -5
    for bad in ("12q", "", "0x", "1.5", "ten"):
        with pytest.raises(ValueError):
            parse_int(bad)


def test_elements_are_canonical_and_immutable(F11):
    e = F11(-3)
    assert e.value == 8
    with pytest.raises(Exception):
        e.value = 1
    with pytest.raises(ValueError):
        type(e)(11, F11)


field_and_values = st.sampled_from(FIELDS).flatmap(
    lambda F: st.tuples(st.just(F), *[st.integers(0, F.modulus - 1)] * 3)
)


@given(field_and_values)
def test_ring_axioms(sample):
    F, a, b, c = sample
    a, b, c = F(a), F(b), F(c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    for r in (a + b, a - b, a * b, -a):
        assert 0 <= r.value < F.modulus


@given(field_and_values)
def test_inverse_property(sample):
    F, a, _, _ = sample
    if a:
        assert F(a) * F(a).inv() == F.one()
        assert F(a) ** (F.modulus - 1) == F.one()
