"""The invariant chain: fundamentals, derived combinations, leading forms."""

from fractions import Fraction

import pytest

from rootwald.field import FieldElement, ONE
from rootwald.invariants import (GENERATOR_BIDEGREES, express_in_s_basis,
                                 leading_form, s_monomial_exponents,
                                 vanishing_order, verify_table1)
from rootwald.poly import Polynomial, VARS_S

# proportionality scalar between each computed leading form and its
# normalized expression in s2, s6, s10
TABLE1_SCALARS = {
    "f2": Fraction(1), "f12": Fraction(1), "f20": Fraction(1),
    "f24": Fraction(-3), "f30": Fraction(1), "f32": Fraction(-3, 2),
    "f36": Fraction(27, 5), "f42": Fraction(3, 2), "f44": Fraction(-9, 5),
    "f54": Fraction(-9, 10), "f60": Fraction(-27, 20), "f66": Fraction(27, 10),
}


def test_bidegrees_and_normalizations(chain):
    _, inv, der, _ = chain
    named = {**inv.as_dict(), **der.as_dict()}
    for name, (d, m) in zip(
            ("f2", "f12", "f20", "f24", "f30", "f32", "f36", "f42", "f44",
             "f54", "f60", "f66"), GENERATOR_BIDEGREES):
        f = named[name]
        assert f.is_homogeneous() and f.degree() == d
        assert vanishing_order(f) == m
    assert inv.g12.coefficient((12, 0, 0, 0)) == ONE
    assert inv.f12.coefficient((2, 0, 0, 10)) == ONE
    assert inv.f20.coefficient((4, 0, 0, 16)) == ONE


def test_fundamentals_are_invariant(chain):
    group, inv, _, _ = chain
    for f in (inv.f2, inv.f12, inv.f20, inv.f30):
        assert group.is_invariant(f)


def test_stabilizer_invariants_are_leading_forms(chain):
    _, inv, der, stab = chain
    assert leading_form(inv.f12) == (stab.s2, 2)
    assert leading_form(der.f24) == (stab.s6, 6)
    assert leading_form(der.f36) == (stab.s10, 10)
    for s, d in ((stab.s2, 2), (stab.s6, 6), (stab.s10, 10)):
        assert s.is_homogeneous() and s.degree() == d
        # pure forms in x, y, z
        assert all(m[3] == 0 for m in s.monomials())


def test_stabilizer_fixes_s_invariants(chain):
    group, _, _, stab = chain
    from rootwald.groups import BASE_POINT
    fixers = group.stabilizer(BASE_POINT)
    for g in fixers.elements[:10]:
        for s in (stab.s2, stab.s6, stab.s10):
            assert g.act(s) == s


def test_vanishing_order_away_from_base_point(chain):
    _, inv, der, _ = chain
    from rootwald.configs import build_config
    h4 = build_config("H4")
    assert vanishing_order(der.f36, h4.point(1), hint=11) == 10
    assert vanishing_order(inv.f2, h4.point(1)) == 0
    with pytest.raises(ValueError):
        vanishing_order(Polynomial.zero())


def test_table1(chain):
    _, inv, der, stab = chain
    report = verify_table1(inv, der, stab)
    assert report.all_ok and not report.failures()
    assert len(report.rows) == 12
    for row in report.rows:
        assert row.scalar == FieldElement(TABLE1_SCALARS[row.name])
    assert [(r.degree, r.order) for r in report.rows] == list(GENERATOR_BIDEGREES)


def test_s_monomial_exponents():
    assert s_monomial_exponents(0) == [(0, 0, 0)]
    assert s_monomial_exponents(6) == [(3, 0, 0), (0, 1, 0)]
    assert s_monomial_exponents(10) == [(5, 0, 0), (2, 1, 0), (0, 0, 1)]
    assert s_monomial_exponents(7) == []
    assert len(s_monomial_exponents(18)) == 6


def test_express_in_s_basis_roundtrip(chain):
    _, _, _, stab = chain
    target = stab.s2 ** 5 - 2 * stab.s2 ** 2 * stab.s6 + stab.s10 * 5
    got = express_in_s_basis(target, 10, stab)
    assert got.vars == VARS_S
    assert dict(got.items()) == {
        (5, 0, 0, 0): FieldElement(1),
        (2, 1, 0, 0): FieldElement(-2),
        (0, 0, 1, 0): FieldElement(5),
    }
    # a form outside the span is rejected
    with pytest.raises(ValueError):
        express_in_s_basis(Polynomial.variable(0) ** 10, 10, stab)


def test_initial_form_multiplicativity(chain):
    _, inv, der, _ = chain
    pairs = [(inv.f12, inv.f20), (inv.f12, der.f24), (inv.f2, der.f36)]
    for f, g in pairs:
        hf, mf = leading_form(f)
        hg, mg = leading_form(g)
        hp, mp = leading_form(f * g)
        assert mp == mf + mg
        assert hp == hf * hg
