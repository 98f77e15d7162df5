"""Sparse polynomial arithmetic and the substitution action."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootwald.field import FieldElement
from rootwald.groups import Matrix4, f4_generators
from rootwald.poly import (Polynomial, VariableMismatchError, VARS_S,
                           VARS_XYZW, grlex_sorted, parse_polynomial)

coeffs = st.builds(
    FieldElement,
    st.fractions(min_value=Fraction(-9), max_value=Fraction(9), max_denominator=4),
    st.integers(min_value=-3, max_value=3),
)
monomials = st.tuples(*(st.integers(min_value=0, max_value=4) for _ in range(4)))
polys = st.dictionaries(monomials, coeffs, max_size=6).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())

X, Y, Z, W = (Polynomial.variable(i) for i in range(4))


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero()
    assert p * Polynomial.one() == p


@given(nonzero_polys, nonzero_polys)
def test_degree_of_product(p, q):
    # the coefficient field is a domain, so top terms cannot cancel
    assert (p * q).degree() == p.degree() + q.degree()


@given(polys, st.integers(min_value=0, max_value=4))
@settings(max_examples=40)
def test_pow_matches_repeated_product(p, n):
    acc = Polynomial.one()
    for _ in range(n):
        acc = acc * p
    assert p ** n == acc


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        X ** -1


@given(polys, coeffs)
def test_scalar_operations(p, c):
    assert p * c == Polynomial({m: cf * c for m, cf in p.items()})
    if not c.is_zero():
        assert (p * c) / c == p


def test_construction_merges_and_drops_zeros():
    p = Polynomial([((1, 0, 0, 0), 2), ((1, 0, 0, 0), -2), ((0, 1, 0, 0), 5)])
    assert list(p.monomials()) == [(0, 1, 0, 0)]
    with pytest.raises(ValueError):
        Polynomial({(256, 0, 0, 0): 1})
    with pytest.raises(VariableMismatchError):
        Polynomial({}, vars=("a", "b", "c", "d"))


def test_variable_sets_do_not_mix():
    s = Polynomial.variable(0, vars=VARS_S)
    with pytest.raises(VariableMismatchError):
        X + s


def test_weighted_degree():
    s2, s6, s10, w = (Polynomial.variable(i, vars=VARS_S) for i in range(4))
    assert (s2 * s6 * s10).degree() == 18
    assert (s2 ** 2 * w ** 3).degree() == 7
    assert Polynomial.zero().degree() == -1
    assert (X * Y + Z * W).is_homogeneous()
    assert not (X + Y * Z).is_homogeneous()


def test_items_in_graded_lex_order():
    p = X + Y ** 2 + W + X * Z
    degs = [sum(m) for m, _ in p.items()]
    assert degs == sorted(degs, reverse=True)
    assert grlex_sorted([(0, 0, 0, 1), (2, 0, 0, 0), (0, 1, 0, 0)]) == [
        (2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1)]


@given(polys)
def test_canonical_lines_roundtrip(p):
    assert parse_polynomial(p.canonical_lines()) == p


def test_parse_polynomial_errors():
    good = (X + Y).canonical_lines()
    with pytest.raises(ValueError):
        parse_polynomial(good + [good[0]])  # duplicate monomial
    with pytest.raises(ValueError):
        parse_polynomial(["nonsense"])
    with pytest.raises(ValueError):
        parse_polynomial(good, vars=VARS_S)
    assert parse_polynomial([], vars=VARS_S).vars == VARS_S


def test_laplacian():
    f2 = X * X + Y * Y + Z * Z + W * W
    assert f2.laplacian() == Polynomial.constant(8)
    assert (X ** 3).laplacian() == 6 * X
    p, q = X ** 2 * Y, Z ** 4
    assert (p + q).laplacian() == p.laplacian() + q.laplacian()


def test_dehomogenize_truncate():
    p = X ** 2 * W + X * W ** 2 + Y ** 3
    got = p.dehomogenize_truncate(3)
    assert got == X ** 2 + X
    assert p.dehomogenize_truncate(4) == X ** 2 + X + Y ** 3


def test_substitute_identity_and_swap():
    p = X ** 2 * Y - 3 * Z * W
    assert p.linear_substitute(Matrix4.identity()) == p
    swap = Matrix4([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert p.linear_substitute(swap) == Y ** 2 * X - 3 * Z * W


@given(polys, st.sampled_from(f4_generators()), st.sampled_from(f4_generators()))
@settings(max_examples=60)
def test_substitution_action_law(p, g, h):
    # acting by h then by g composes to acting by the product h*g
    assert g.act(h.act(p)) == (h * g).act(p)


def test_coefficient_lookup():
    p = 5 * X * Y ** 2 + W
    assert p.coefficient((1, 2, 0, 0)) == FieldElement(5)
    assert p.coefficient((4, 0, 0, 0)).is_zero()
    assert len(p) == 2
