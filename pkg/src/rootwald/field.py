"""Exact arithmetic in the quadratic field Q(c) with c^2 = 5/4.

The golden ratio is phi = c + 1/2, so the field is Q(sqrt 5) presented on
the basis {1, c}.  Elements carry a canonical string form "p/q+r/s*c" with
both fractions reduced and signs on the numerators, e.g. "1/2+1/1*c" for
phi and "-5/4+0/1*c" for -5/4.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from rootwald.kernel import impl as _k

_FIELD_RE = re.compile(r"^(-?\d+)/(\d+)\+(-?\d+)/(\d+)\*c$")

Rationalish = Union[int, Fraction]


class FieldElement:
    """An element a + b*c of Q(c), stored as one reduced integer triple."""

    __slots__ = ("triple",)

    def __init__(self, a: Rationalish = 0, b: Rationalish = 0):
        a = Fraction(a)
        b = Fraction(b)
        d = a.denominator * b.denominator
        self.triple = _k.fnorm(
            a.numerator * b.denominator, b.numerator * a.denominator, d
        )

    @classmethod
    def from_triple(cls, t) -> "FieldElement":
        self = cls.__new__(cls)
        self.triple = t
        return self

    @property
    def a(self) -> Fraction:
        """Rational part."""
        A, _, D = self.triple
        return Fraction(A, D)

    @property
    def b(self) -> Fraction:
        """Coefficient of c."""
        _, B, D = self.triple
        return Fraction(B, D)

    def is_zero(self) -> bool:
        return self.triple[0] == 0 and self.triple[1] == 0

    def is_rational(self) -> bool:
        return self.triple[1] == 0

    def conjugate(self) -> "FieldElement":
        A, B, D = self.triple
        return FieldElement.from_triple((A, -B, D))

    def norm(self) -> Fraction:
        """Product with the conjugate, a rational."""
        A, B, D = self.triple
        return Fraction(4 * A * A - 5 * B * B, 4 * D * D)

    def canonical_str(self) -> str:
        A, B, D = self.triple
        an = Fraction(A, D)
        bn = Fraction(B, D)
        return "%d/%d+%d/%d*c" % (
            an.numerator,
            an.denominator,
            bn.numerator,
            bn.denominator,
        )

    def __add__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement.from_triple(_k.fadd(self.triple, other.triple))

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement.from_triple(_k.fsub(self.triple, other.triple))

    def __rsub__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement.from_triple(_k.fsub(other.triple, self.triple))

    def __mul__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement.from_triple(_k.fmul(self.triple, other.triple))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement.from_triple(_k.fdiv(self.triple, other.triple))

    def __rtruediv__(self, other) -> "FieldElement":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement.from_triple(_k.fdiv(other.triple, self.triple))

    def __neg__(self) -> "FieldElement":
        return FieldElement.from_triple(_k.fneg(self.triple))

    def __pow__(self, n: int) -> "FieldElement":
        return FieldElement.from_triple(_k.fpow(self.triple, n))

    def inverse(self) -> "FieldElement":
        return FieldElement.from_triple(_k.finv(self.triple))

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.triple == other.triple

    def __hash__(self):
        return hash(self.triple)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return "FieldElement(%r)" % self.canonical_str()

    def __str__(self) -> str:
        return self.canonical_str()


def _coerce(x):
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElement(x)
    return NotImplemented


def parse_field(text: str) -> FieldElement:
    """Inverse of canonical_str."""
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise ValueError("not a canonical field element: %r" % text)
    p, q, r, s = (int(g) for g in m.groups())
    if q == 0 or s == 0:
        raise ValueError("zero denominator in %r" % text)
    return FieldElement(Fraction(p, q), Fraction(r, s))


ZERO = FieldElement(0)
ONE = FieldElement(1)
C = FieldElement(0, 1)
PHI = FieldElement(Fraction(1, 2), 1)
PHI_INV = PHI - 1  # 1/phi = phi - 1
