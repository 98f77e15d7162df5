"""Field arithmetic in Q(c), c^2 = 5/4."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootwald.field import C, ONE, PHI, PHI_INV, ZERO, FieldElement, parse_field

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12)
elements = st.builds(FieldElement, rationals, rationals)
nonzero = elements.filter(lambda x: not x.is_zero())


def test_defining_relation():
    assert C * C == FieldElement(Fraction(5, 4))


def test_golden_ratio_identities():
    assert PHI == C + FieldElement(Fraction(1, 2))
    assert PHI * PHI == PHI + 1
    assert PHI.inverse() == PHI - 1
    assert PHI_INV == PHI.inverse()
    assert PHI * PHI_INV == ONE


def test_inverse_examples():
    assert C.inverse() == FieldElement(0, Fraction(4, 5))
    assert FieldElement(2).inverse() == FieldElement(Fraction(1, 2))
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_canonical_strings():
    assert ZERO.canonical_str() == "0/1+0/1*c"
    assert PHI.canonical_str() == "1/2+1/1*c"
    assert FieldElement(Fraction(-5, 4)).canonical_str() == "-5/4+0/1*c"


def test_parse_rejects_garbage():
    for bad in ("", "1/2", "1/2+3*c", "1/0+0/1*c", "x/1+0/1*c"):
        with pytest.raises(ValueError):
            parse_field(bad)


@given(elements)
def test_parse_roundtrip(x):
    assert parse_field(x.canonical_str()) == x


@given(elements, elements, elements)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x
    assert x * ONE == x
    assert x + (-x) == ZERO


@given(nonzero)
def test_multiplicative_inverse(x):
    assert x * x.inverse() == ONE
    assert 1 / x == x.inverse()


@given(elements, elements)
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(elements)
def test_conjugation(x):
    assert x.conjugate().conjugate() == x
    prod = x * x.conjugate()
    assert prod.is_rational()
    assert prod.a == x.norm()


@given(nonzero, st.integers(min_value=0, max_value=8))
@settings(max_examples=40)
def test_powers(x, n):
    acc = ONE
    for _ in range(n):
        acc = acc * x
    assert x ** n == acc


def test_subtraction_and_coercion():
    assert 3 - PHI == FieldElement(3) - PHI
    assert Fraction(1, 2) * C == FieldElement(0, Fraction(1, 2))
    assert FieldElement(Fraction(1, 3)) + 1 == FieldElement(Fraction(4, 3))


@given(elements)
def test_hash_respects_equality(x):
    y = FieldElement(x.a, x.b)
    assert x == y and hash(x) == hash(y)


def test_bool_and_predicates():
    assert not ZERO
    assert PHI
    assert ZERO.is_zero() and ZERO.is_rational()
    assert not PHI.is_rational()
    assert FieldElement(7).is_rational()
