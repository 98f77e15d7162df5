"""Sparse multivariate polynomials over Q(c).

A polynomial is a dict from exponent vectors to nonzero coefficients,
wrapped together with a variable tag.  Two tags are supported:

* VARS_XYZW  ("x", "y", "z", "w"), all weights 1;
* VARS_S     ("s2", "s6", "s10", "w"), weights (2, 6, 10, 1), used for
  the invariants of the point stabilizer.

Terms are reported in graded lexicographic order, higher degree first.
Monomial exponents must stay below 256 so that products fit the packed
keys used by the kernels; degree 150 inputs are comfortably inside that.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Sequence, Tuple

from rootwald.field import FieldElement, parse_field
from rootwald.kernel import impl as _k

Monomial = Tuple[int, int, int, int]

VARS_XYZW = ("x", "y", "z", "w")
VARS_S = ("s2", "s6", "s10", "w")

_WEIGHTS = {VARS_XYZW: (1, 1, 1, 1), VARS_S: (2, 6, 10, 1)}

_TERM_RE = re.compile(
    r"^(?P<coeff>\S+) \* (?P<v0>\w+)\^(?P<e0>\d+) (?P<v1>\w+)\^(?P<e1>\d+) "
    r"(?P<v2>\w+)\^(?P<e2>\d+) (?P<v3>\w+)\^(?P<e3>\d+)$"
)


class VariableMismatchError(ValueError):
    pass


def _grlex_key(packed: int):
    e = _k.unpack(packed)
    return (e[0] + e[1] + e[2] + e[3], e)


class Polynomial:
    """Immutable sparse polynomial over Q(c)."""

    __slots__ = ("terms", "vars")

    def __init__(self, terms=None, vars: Sequence[str] = VARS_XYZW):
        vars = tuple(vars)
        if vars not in _WEIGHTS:
            raise VariableMismatchError("unknown variable set %r" % (vars,))
        self.vars = vars
        data: Dict[int, tuple] = {}
        if terms:
            for mono, coeff in terms.items() if isinstance(terms, dict) else terms:
                if not isinstance(coeff, FieldElement):
                    coeff = FieldElement(coeff)
                if coeff.is_zero():
                    continue
                if isinstance(mono, int):
                    key = mono
                else:
                    if any(e < 0 or e >= 256 for e in mono):
                        raise ValueError("exponent out of range in %r" % (mono,))
                    key = _k.pack(*mono)
                if key in data:
                    s = _k.fadd(data[key], coeff.triple)
                    if s[0] == 0 and s[1] == 0:
                        del data[key]
                    else:
                        data[key] = s
                else:
                    data[key] = coeff.triple
        self.terms = data

    @classmethod
    def _raw(cls, data: Dict[int, tuple], vars=VARS_XYZW) -> "Polynomial":
        self = cls.__new__(cls)
        self.terms = data
        self.vars = tuple(vars)
        return self

    @classmethod
    def zero(cls, vars=VARS_XYZW) -> "Polynomial":
        return cls._raw({}, vars)

    @classmethod
    def one(cls, vars=VARS_XYZW) -> "Polynomial":
        return cls._raw({0: (1, 0, 1)}, vars)

    @classmethod
    def constant(cls, c, vars=VARS_XYZW) -> "Polynomial":
        if not isinstance(c, FieldElement):
            c = FieldElement(c)
        if c.is_zero():
            return cls.zero(vars)
        return cls._raw({0: c.triple}, vars)

    @classmethod
    def variable(cls, i: int, vars=VARS_XYZW) -> "Polynomial":
        return cls._raw({_k.pack(*(1 if j == i else 0 for j in range(4))): (1, 0, 1)}, vars)

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1, vars=VARS_XYZW) -> "Polynomial":
        return cls({mono: coeff}, vars)

    def _check(self, other: "Polynomial"):
        if self.vars != other.vars:
            raise VariableMismatchError(
                "variable sets differ: %r vs %r" % (self.vars, other.vars)
            )

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        self._check(other)
        return Polynomial._raw(_k.padd(self.terms, other.terms), self.vars)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        self._check(other)
        return Polynomial._raw(_k.psub(self.terms, other.terms), self.vars)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        self._check(other)
        return Polynomial._raw(_k.psub(other.terms, self.terms), self.vars)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(_k.pneg(self.terms), self.vars)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, FieldElement)) or hasattr(other, "denominator"):
            c = other if isinstance(other, FieldElement) else FieldElement(other)
            return Polynomial._raw(_k.pscale(self.terms, c.triple), self.vars)
        self._check(other)
        return Polynomial._raw(_k.pmul(self.terms, other.terms), self.vars)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        c = other if isinstance(other, FieldElement) else FieldElement(other)
        return Polynomial._raw(_k.pscale(self.terms, c.inverse().triple), self.vars)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        return Polynomial._raw(_k.ppow(self.terms, n), self.vars)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other, self.vars)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.vars)
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, mono: Monomial) -> FieldElement:
        t = self.terms.get(_k.pack(*mono))
        return FieldElement.from_triple(t) if t else FieldElement(0)

    def monomials(self) -> Iterable[Monomial]:
        for k in sorted(self.terms, key=_grlex_key, reverse=True):
            yield _k.unpack(k)

    def items(self):
        for k in sorted(self.terms, key=_grlex_key, reverse=True):
            yield _k.unpack(k), FieldElement.from_triple(self.terms[k])

    def degree(self) -> int:
        """Weighted total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        w = _WEIGHTS[self.vars]
        return max(
            sum(e * wt for e, wt in zip(_k.unpack(k), w)) for k in self.terms
        )

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        w = _WEIGHTS[self.vars]
        degs = {sum(e * wt for e, wt in zip(_k.unpack(k), w)) for k in self.terms}
        return len(degs) == 1

    def linear_substitute(self, matrix) -> "Polynomial":
        """Replace variable i by the linear form given in row i of matrix.

        matrix: a groups.Matrix4 or a 4x4 grid of FieldElement entries.
        The new variable j carries coefficient matrix[i][j], so the result
        is P evaluated on (matrix applied to the variable column vector).
        """
        rows = getattr(matrix, "rows", matrix)
        forms = []
        for i in range(4):
            form = {}
            for j in range(4):
                ent = rows[i][j]
                t = ent.triple if isinstance(ent, FieldElement) else ent
                if t[0] or t[1]:
                    form[_k.pack(*(1 if jj == j else 0 for jj in range(4)))] = t
            forms.append(form)
        return Polynomial._raw(_k.plinsub(self.terms, tuple(forms)), self.vars)

    def laplacian(self) -> "Polynomial":
        return Polynomial._raw(_k.plap(self.terms), self.vars)

    def dehomogenize_truncate(self, bound: int) -> "Polynomial":
        """Set w = 1 and drop all monomials of x,y,z degree >= bound."""
        return Polynomial._raw(_k.pdehom_trunc(self.terms, bound), self.vars)

    def canonical_lines(self) -> list:
        out = []
        v = self.vars
        for k in sorted(self.terms, key=_grlex_key, reverse=True):
            e = _k.unpack(k)
            c = FieldElement.from_triple(self.terms[k])
            out.append(
                "%s * %s^%d %s^%d %s^%d %s^%d"
                % (c.canonical_str(), v[0], e[0], v[1], e[1], v[2], e[2], v[3], e[3])
            )
        return out

    def __repr__(self) -> str:
        n = len(self.terms)
        if n == 0:
            return "Polynomial(0)"
        lead = next(iter(self.canonical_lines()))
        return "Polynomial(<%d terms, deg %d, %s ...>)" % (n, self.degree(), lead)


def parse_polynomial(lines, vars=None) -> Polynomial:
    """Parse the output of canonical_lines (an iterable of term lines)."""
    terms = {}
    seen_vars = None
    for line in lines:
        line = line.strip()
        if not line:
            continue
        m = _TERM_RE.match(line)
        if not m:
            raise ValueError("bad polynomial term line: %r" % line)
        names = (m.group("v0"), m.group("v1"), m.group("v2"), m.group("v3"))
        if seen_vars is None:
            seen_vars = names
        elif names != seen_vars:
            raise ValueError("inconsistent variables in term lines")
        mono = tuple(int(m.group("e%d" % i)) for i in range(4))
        coeff = parse_field(m.group("coeff"))
        if mono in terms:
            raise ValueError("duplicate monomial %r" % (mono,))
        terms[mono] = coeff
    if seen_vars is None:
        seen_vars = tuple(vars) if vars else VARS_XYZW
    if vars is not None and tuple(vars) != seen_vars:
        raise ValueError("expected variables %r, found %r" % (tuple(vars), seen_vars))
    return Polynomial(terms, seen_vars)


def grlex_sorted(monos: Iterable[Monomial]) -> list:
    """Monomials in graded lexicographic order, higher degree first."""
    return sorted(monos, key=lambda e: (sum(e), e), reverse=True)
