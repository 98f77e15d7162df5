"""Invariants of the order-14,400 reflection group.

The invariant ring is a polynomial ring on generators of degrees 2, 12, 20,
30.  This module constructs those four generators by an explicit chain
(Reynolds average, Laplacians, and normalizing combinations), the eight
derived combinations whose initial forms generate the associated graded ring,
and the three icosahedral invariants s2, s6, s10 of the base-point stabilizer
that the initial forms are written in.

Vanishing orders are always taken at the base point (0:0:0:1) unless another
point is supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .field import FieldElement, ONE
from .kernel import impl as _k
from .poly import Polynomial, VARS_S, VARS_XYZW

X, Y, Z, W = (Polynomial.variable(i) for i in range(4))

_MASK_XYZ = 0xFFFFFF


class InvariantConstructionError(AssertionError):
    """A structural property of a constructed invariant failed to hold."""


def _require(cond: bool, prop: str):
    if not cond:
        raise InvariantConstructionError(prop)


@dataclass(frozen=True)
class FundamentalInvariants:
    f2: Polynomial
    f12: Polynomial
    f20: Polynomial
    f30: Polynomial
    # intermediates, kept for reporting and cache round-trips
    g12: Polynomial
    g20: Polynomial
    g30: Polynomial

    def as_dict(self):
        return {"f2": self.f2, "f12": self.f12, "f20": self.f20, "f30": self.f30,
                "g12": self.g12, "g20": self.g20, "g30": self.g30}


@dataclass(frozen=True)
class DerivedInvariants:
    f24: Polynomial
    f32: Polynomial
    f36: Polynomial
    f42: Polynomial
    f44: Polynomial
    f54: Polynomial
    f60: Polynomial
    f66: Polynomial

    def as_dict(self):
        return {"f24": self.f24, "f32": self.f32, "f36": self.f36, "f42": self.f42,
                "f44": self.f44, "f54": self.f54, "f60": self.f60, "f66": self.f66}


@dataclass(frozen=True)
class StabilizerInvariants:
    s2: Polynomial
    s6: Polynomial
    s10: Polynomial

    def as_dict(self):
        return {"s2": self.s2, "s6": self.s6, "s10": self.s10}


def vanishing_order(f: Polynomial, point=None, hint: Optional[int] = None) -> int:
    """Multiplicity of f at a projective point (default: the base point).

    At the base point the order can be read off the exponents directly.  At a
    general point the point is moved into an affine chart around itself: each
    ring variable is replaced by coordinate + chart parameter, products are
    truncated at a working bound, and the bound doubles until a term survives.
    """
    if f.is_zero():
        raise ValueError("vanishing order of the zero polynomial is undefined")
    if point is None:
        return min(_k.xyzdeg(k) for k in f.terms)

    coords = point.coords
    pivot = next(i for i in range(4) if not coords[i].is_zero())
    # chart parameters occupy the packed x,y,z slots in pivot-skipping order
    slot = {}
    for i in range(4):
        if i != pivot:
            slot[i] = len(slot)
    forms = []
    for i in range(4):
        terms = {}
        if not coords[i].is_zero():
            terms[0] = coords[i].triple
        if i != pivot:
            terms[1 << (8 * slot[i])] = (1, 0, 1)
        forms.append(terms)

    degree = f.degree()
    bound = hint if hint is not None else 2
    while True:
        res = _k.plinsub(f.terms, forms, cap=bound)
        if res:
            return min(_k.xyzdeg(k) for k in res)
        if bound > degree:
            raise ValueError("polynomial vanishes identically on the chart")
        bound = min(2 * bound, degree + 1)


def leading_form(f: Polynomial) -> Tuple[Polynomial, int]:
    """Initial form at the base point: (h, m) with f = h(x,y,z)*w^(d-m) + higher order."""
    if f.is_zero():
        raise ValueError("zero polynomial has no leading form")
    m = min(_k.xyzdeg(k) for k in f.terms)
    data = {k & _MASK_XYZ: c for k, c in f.terms.items() if _k.xyzdeg(k) == m}
    return Polynomial._raw(data, VARS_XYZW), m


def build_fundamentals(group, check: bool = True) -> FundamentalInvariants:
    """Run the construction chain for the degree 2, 12, 20, 30 invariants.

    g12 is the Reynolds average of x^12 rescaled so its x^12 coefficient is 1;
    the remaining steps are explicit polynomial combinations and Laplacians,
    each normalized by the scalar that makes a designated coefficient 1.
    """
    f2 = X * X + Y * Y + Z * Z + W * W

    g12 = group.reynolds(X ** 12)
    c12 = g12.coefficient((12, 0, 0, 0))
    _require(not c12.is_zero(), "average of x^12 has nonzero x^12 coefficient")
    g12 = g12 / c12

    f12 = (f2 ** 6 - g12) * Fraction(19, 4)
    g20 = (f12 * f12).laplacian().laplacian() / 120
    f20 = (-3 * f2 ** 10 - 224 * f2 ** 4 * f12 + 3 * g20) * Fraction(5, 968)
    g30 = (f12 * f20).laplacian() / 42
    f30 = (-15 * f2 ** 5 * f20 - 6 * f2 ** 3 * f12 ** 2 + 21 * g30) / 40

    inv = FundamentalInvariants(f2=f2, f12=f12, f20=f20, f30=f30,
                                g12=g12, g20=g20, g30=g30)
    if check:
        _check_fundamentals(inv, group)
    return inv


def _check_fundamentals(inv: FundamentalInvariants, group):
    _require(inv.g12.coefficient((12, 0, 0, 0)) == ONE,
             "x^12 coefficient of g12 is 1")
    _require(inv.f12.coefficient((2, 0, 0, 10)) == ONE,
             "x^2 w^10 coefficient of f12 is 1")
    _require(inv.f20.coefficient((4, 0, 0, 16)) == ONE,
             "x^4 w^16 coefficient of f20 is 1")
    for name, f, d, m in (("f2", inv.f2, 2, 0), ("f12", inv.f12, 12, 2),
                          ("f20", inv.f20, 20, 4), ("f30", inv.f30, 30, 6)):
        _require(f.is_homogeneous() and f.degree() == d,
                 f"{name} is homogeneous of degree {d}")
        _require(vanishing_order(f) == m, f"{name} vanishes to order {m}")
        _require(group.is_invariant(f), f"{name} is fixed by every generator")


def build_derived(inv: FundamentalInvariants, check: bool = True) -> DerivedInvariants:
    """Products of the fundamentals whose initial forms generate new classes.

    The scalar on each combination normalizes its initial form against the
    icosahedral invariants (verified downstream); polynomial combinations of
    invariants are invariant, so no group action is needed here.
    """
    f2, f12, f20, f30 = inv.f2, inv.f12, inv.f20, inv.f30
    der = DerivedInvariants(
        f24=(f12 ** 2 - f2 ** 2 * f20) / -3,
        f32=(f12 * f20 - f2 * f30) * Fraction(-2, 3),
        f36=(f12 ** 3 - 3 * f2 ** 2 * f12 * f20 + 2 * f2 ** 3 * f30) * Fraction(5, 27),
        f42=(-f2 * f20 ** 2 + f12 * f30) * Fraction(-2, 3),
        f44=(f12 ** 2 * f20 + f2 ** 2 * f20 ** 2 - 2 * f2 * f12 * f30) * Fraction(10, 18),
        f54=(2 * f2 * f12 * f20 ** 2 - f12 ** 2 * f30 - f2 ** 2 * f20 * f30) * Fraction(10, 9),
        f60=(f20 ** 3 - f30 ** 2) * Fraction(20, 27),
        f66=(-3 * f2 * f12 ** 2 * f20 ** 2 + f2 ** 3 * f20 ** 3 + f12 ** 3 * f30
             + 3 * f2 ** 2 * f12 * f20 * f30 - 2 * f2 ** 3 * f30 ** 2) * Fraction(10, 27),
    )
    if check:
        for name, f in der.as_dict().items():
            d = int(name[1:])
            m = _EXPECTED_ORDER[d]
            _require(f.is_homogeneous() and f.degree() == d,
                     f"{name} is homogeneous of degree {d}")
            _require(vanishing_order(f) == m, f"{name} vanishes to order {m}")
    return der


# generator bidegree (d, m) table; the associated graded ring is generated by
# the classes of these twelve invariants
GENERATOR_BIDEGREES = ((2, 0), (12, 2), (20, 4), (24, 6), (30, 6), (32, 8),
                       (36, 10), (42, 10), (44, 12), (54, 14), (60, 16), (66, 18))
_EXPECTED_ORDER = {d: m for d, m in GENERATOR_BIDEGREES}


def _monomial_vectors(polys: Sequence[Polynomial]):
    support = sorted({k for p in polys for k in p.terms})
    index = {k: i for i, k in enumerate(support)}
    rows = []
    for p in polys:
        row = [FieldElement(0)] * len(support)
        for k, c in p.terms.items():
            row[index[k]] = FieldElement.from_triple(c)
        rows.append(row)
    return rows, support


def build_stabilizer_invariants(inv: FundamentalInvariants, der: DerivedInvariants,
                                stab_gens=None, check: bool = True) -> StabilizerInvariants:
    """The degree 2, 6, 10 icosahedral invariants, read off as initial forms.

    stab_gens, if given, are matrices fixing the base point; each s is checked
    to be fixed by all of them.
    """
    s2, m2 = leading_form(inv.f12)
    s6, m6 = leading_form(der.f24)
    s10, m10 = leading_form(der.f36)
    _require((m2, m6, m10) == (2, 6, 10), "initial forms have orders 2, 6, 10")
    stab = StabilizerInvariants(s2=s2, s6=s6, s10=s10)
    if check:
        rows, _ = _monomial_vectors([s2 ** 3, s6])
        _require(linalg.rank(rows) == 2, "s2^3 and s6 are linearly independent")
        rows, _ = _monomial_vectors([s2 ** 5, s2 ** 2 * s6, s10])
        _require(linalg.rank(rows) == 3, "s2^5, s2^2*s6, s10 are linearly independent")
        for g in stab_gens or ():
            for name, s in stab.as_dict().items():
                _require(g.act(s) == s, f"{name} is fixed by the stabilizer generators")
    return stab


def s_monomial_exponents(m: int) -> List[Tuple[int, int, int]]:
    """Exponent triples (a, b, c) with 2a + 6b + 10c = m, ordered by (c, b)."""
    out = []
    for c in range(m // 10 + 1):
        for b in range((m - 10 * c) // 6 + 1):
            rest = m - 10 * c - 6 * b
            if rest % 2 == 0:
                out.append((rest // 2, b, c))
    return out


def express_in_s_basis(h: Polynomial, m: int, stab: StabilizerInvariants) -> Polynomial:
    """Write a stabilizer-invariant form of degree m as a polynomial in s2, s6, s10.

    Raises ValueError if h is outside the span, which would contradict the
    invariant-ring structure of the stabilizer.
    """
    exps = s_monomial_exponents(m)
    basis = [stab.s2 ** a * stab.s6 ** b * stab.s10 ** c for a, b, c in exps]
    rows, support = _monomial_vectors(basis + [h])
    columns = rows[:-1]
    target = rows[-1]
    coeffs = linalg.solve_in_span(
        [[row[j] for j in range(len(support))] for row in columns], target)
    if coeffs is None:
        raise ValueError("form is not a polynomial in s2, s6, s10")
    data = {}
    for (a, b, c), coeff in zip(exps, coeffs):
        if not coeff.is_zero():
            data[a | b << 8 | c << 16] = coeff.triple
    return Polynomial._raw(data, VARS_S)


@dataclass
class Table1Row:
    name: str
    combination: str
    degree: int
    order: int
    s_expression: str
    scalar: FieldElement
    ok: bool


@dataclass
class Table1Report:
    rows: List[Table1Row]

    @property
    def all_ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def failures(self) -> List[Table1Row]:
        return [r for r in self.rows if not r.ok]


def _s_poly(spec: Sequence[Tuple[int, Tuple[int, int, int]]]) -> Polynomial:
    data = {}
    for coeff, (a, b, c) in spec:
        data[a | b << 8 | c << 16] = FieldElement(coeff).triple
    return Polynomial._raw(data, VARS_S)


def verify_table1(inv: FundamentalInvariants, der: DerivedInvariants,
                  stab: StabilizerInvariants) -> Table1Report:
    """Check all twelve generator rows: bidegree, and initial form proportional
    to the published s-expression, reporting the proportionality scalar."""
    f2, f12, f20, f30 = inv.f2, inv.f12, inv.f20, inv.f30
    rows_spec = [
        ("f2", "f2", f2, 2, 0,
         "1", _s_poly([(1, (0, 0, 0))])),
        ("f12", "f12", f12, 12, 2,
         "s2", _s_poly([(1, (1, 0, 0))])),
        ("f20", "f20", f20, 20, 4,
         "s2^2", _s_poly([(1, (2, 0, 0))])),
        ("f24", "f12^2 - f2^2*f20", f12 ** 2 - f2 ** 2 * f20, 24, 6,
         "s6", _s_poly([(1, (0, 1, 0))])),
        ("f30", "f30", f30, 30, 6,
         "s2^3", _s_poly([(1, (3, 0, 0))])),
        ("f32", "f12*f20 - f2*f30", f12 * f20 - f2 * f30, 32, 8,
         "s2*s6", _s_poly([(1, (1, 1, 0))])),
        ("f36", "f12^3 - 3*f2^2*f12*f20 + 2*f2^3*f30",
         f12 ** 3 - 3 * f2 ** 2 * f12 * f20 + 2 * f2 ** 3 * f30, 36, 10,
         "s10", _s_poly([(1, (0, 0, 1))])),
        ("f42", "f2*f20^2 - f12*f30", f2 * f20 ** 2 - f12 * f30, 42, 10,
         "s2^2*s6", _s_poly([(1, (2, 1, 0))])),
        ("f44", "f12^2*f20 + f2^2*f20^2 - 2*f2*f12*f30",
         f12 ** 2 * f20 + f2 ** 2 * f20 ** 2 - 2 * f2 * f12 * f30, 44, 12,
         "3*s2*s10 - 5*s6^2", _s_poly([(3, (1, 0, 1)), (-5, (0, 2, 0))])),
        ("f54", "2*f2*f12*f20^2 - f12^2*f30 - f2^2*f20*f30",
         2 * f2 * f12 * f20 ** 2 - f12 ** 2 * f30 - f2 ** 2 * f20 * f30, 54, 14,
         "6*s2^2*s10 - 5*s2*s6^2", _s_poly([(6, (2, 0, 1)), (-5, (1, 2, 0))])),
        ("f60", "f20^3 - f30^2", f20 ** 3 - f30 ** 2, 60, 16,
         "4*s2^3*s10 - 5*s2^2*s6^2", _s_poly([(4, (3, 0, 1)), (-5, (2, 2, 0))])),
        ("f66", "3*f2*f12^2*f20^2 - f2^3*f20^3 - f12^3*f30 - 3*f2^2*f12*f20*f30 + 2*f2^3*f30^2",
         3 * f2 * f12 ** 2 * f20 ** 2 - f2 ** 3 * f20 ** 3 - f12 ** 3 * f30
         - 3 * f2 ** 2 * f12 * f20 * f30 + 2 * f2 ** 3 * f30 ** 2, 66, 18,
         "9*s2*s6*s10 - 10*s6^3", _s_poly([(9, (1, 1, 1)), (-10, (0, 3, 0))])),
    ]
    report_rows = []
    zero = FieldElement(0)
    for name, combo_str, combo, d, m, s_str, s_expected in rows_spec:
        ok = combo.is_homogeneous() and combo.degree() == d
        scalar = zero
        if ok and not combo.is_zero():
            h, order = leading_form(combo)
            ok = order == m
            if ok:
                s_found = express_in_s_basis(h, m, stab)
                scalar = _proportionality(s_found, s_expected)
                ok = scalar is not None and not scalar.is_zero()
                if scalar is None:
                    scalar = zero
        else:
            ok = False
        report_rows.append(Table1Row(name, combo_str, d, m, s_str, scalar, ok))
    return Table1Report(report_rows)


def _proportionality(p: Polynomial, q: Polynomial) -> Optional[FieldElement]:
    """Scalar c with p = c*q, or None."""
    if q.is_zero():
        return None
    k0 = next(iter(q.terms))
    t = p.terms.get(k0)
    if t is None:
        return None
    c = FieldElement.from_triple(t) / FieldElement.from_triple(q.terms[k0])
    return c if p == q * c else None
