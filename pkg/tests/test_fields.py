from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quadrics.errors import (
    DivisionByZero,
    FieldMismatch,
    InfiniteField,
    NoModulusAvailable,
    NonPrimeCharacteristic,
    UnsupportedSize,
)
from quadrics.fields import Field, is_prime_power

F2 = Field.prime(2)
F3 = Field.prime(3)
F4 = Field.extension(2, 2)
F5 = Field.prime(5)
F8 = Field.extension(2, 3)
F9 = Field.extension(3, 2)
Q = Field.rationals()


def test_create_prime_field():
    assert F5.q == 5 and F5.kind == "prime"


def test_gf4_modulus_is_irreducible():
    # t^2 + t + 1 has no root in F_2: t=0 gives 1, t=1 gives 1+1+1 = 1
    c0, c1, c2 = F4.modulus
    for t in (0, 1):
        assert (c0 + c1 * t + c2 * t * t) % 2 == 1


def test_nonprime_characteristic_rejected():
    with pytest.raises(NonPrimeCharacteristic):
        Field.prime(4)
    with pytest.raises(NonPrimeCharacteristic):
        Field.extension(6, 2)


def test_size_caps():
    with pytest.raises(UnsupportedSize):
        Field.prime(1031)
    with pytest.raises(UnsupportedSize):
        Field.extension(2, 5)
    with pytest.raises(NoModulusAvailable):
        Field.extension(7, 2)


def test_parse_field_spec():
    assert Field.parse("5") == F5
    assert Field.parse("2^2") == F4
    assert Field.parse("Q") == Q


def test_prime_arithmetic():
    two = F5.element(2)
    assert two.inv() == F5.element(3)          # 2 * 3 = 6 = 1 mod 5
    assert two + 4 == F5.element(1)
    assert -two == F5.element(3)
    assert two / F5.element(4) == F5.element(3)


def test_gf4_generator_square():
    g = F4.generator
    assert g * g == g + 1                       # t^2 reduced by t^2 + t + 1


def test_rational_arithmetic():
    half = Q.element(Fraction(1, 2))
    third = Q.element(Fraction(1, 3))
    assert half + third == Q.element(Fraction(5, 6))
    assert (half / third).rep == Fraction(3, 2)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        F5.element(1) / F5.element(0)
    with pytest.raises(DivisionByZero):
        F4.zero.inv()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        F5.element(1) + F3.element(1)
    with pytest.raises(FieldMismatch):
        F5.element(Fraction(1, 2))
    assert F5.element(Fraction(7, 1)) == F5.element(2)


def test_enumeration_order():
    assert [e.rep for e in F2.elements()] == [0, 1]
    assert [e.rep for e in F3.elements()] == [0, 1, 2]
    g = F4.generator
    assert F4.elements() == [F4.zero, F4.one, g, g + 1]
    with pytest.raises(InfiniteField):
        Q.elements()


def test_enumeration_is_closed():
    for f in (F2, F3, F4, F5, F8, F9):
        els = f.elements()
        assert len(set(els)) == f.q
        for a in els:
            for b in els:
                assert a + b in els and a * b in els


def test_sqrt_in_f5():
    assert F5.element(4).sqrt() == F5.element(2)   # 2 precedes 3 in enumeration
    assert F5.element(2).sqrt() is None            # squares mod 5 are {0, 1, 4}
    squares = sorted({(a * a).rep for a in F5.elements()})
    assert squares == [0, 1, 4]


def test_sqrt_in_gf4():
    g = F4.generator
    assert g.sqrt() == g + 1                        # (g+1)^2 = g^2 + 1 = g
    for a in F4.elements():
        root = a.sqrt()
        assert root is not None and root * root == a


def test_sqrt_char2_always_unique():
    for f in (F2, F4, F8):
        for a in f.elements():
            roots = [s for s in f.elements() if s * s == a]
            assert len(roots) == 1


def test_sqrt_infinite_field():
    with pytest.raises(InfiniteField):
        Q.element(4).sqrt()


@pytest.mark.parametrize("f", [F3, F5, F9, Field.prime(7), Field.prime(11),
                               Field.prime(13), Field.extension(5, 2)])
def test_square_classes_odd_characteristic(f):
    # a nonzero element or its non-square multiple has a root, never both
    nonsquare = next(a for a in f.elements() if a and a.sqrt() is None)
    for a in f.elements():
        if not a:
            continue
        assert (a.sqrt() is not None) != ((a * nonsquare).sqrt() is not None)


def test_serialize_round_trip():
    for f in (F2, F3, F4, F5, F8, F9):
        for a in f.elements():
            assert f.parse_element(str(a)) == a
    for value in (Fraction(5, 6), Fraction(-2, 3), Fraction(7), Fraction(0)):
        a = Q.element(value)
        assert Q.parse_element(str(a)) == a


def test_extension_coeffs():
    a = F8.from_coeffs((1, 0, 1))
    assert a.coeffs == (1, 0, 1)
    assert str(a) == "1+0*g+1*g^2"


def test_is_prime_power():
    assert is_prime_power(8) == (2, 3)
    assert is_prime_power(27) == (3, 3)
    assert is_prime_power(12) is None
    assert is_prime_power(1) is None


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_field_axioms_gf9(a, b, c):
    x, y, z = (Field.extension(3, 2).element(0).field.elements()[i] for i in (a, b, c))
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x + y) + z == x + (y + z)
    if y:
        assert y * y.inv() == Field.extension(3, 2).one


@settings(max_examples=200)
@given(st.fractions(), st.fractions())
def test_rational_field_ops(a, b):
    x, y = Q.element(a), Q.element(b)
    assert (x + y).rep == a + b
    assert (x * y).rep == a * b
    if b:
        assert (x / y).rep == a / b
