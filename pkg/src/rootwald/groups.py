"""Finite reflection groups acting on exact 4x4 matrices.

Matrices act on polynomials by substitution: variable i is replaced by
row i of the matrix applied to the variable vector, so (g.act(P))(v) =
P(g v).  Under this convention substituting by a product gh equals
substituting by g first and then by h, and the generator sets below close
to groups of order 1152 (type F4) and 14400 (type H4).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from rootwald.field import ONE, PHI, PHI_INV, ZERO, FieldElement, parse_field
from rootwald.kernel import impl as _k
from rootwald.poly import Polynomial

DEFAULT_CAP = 20000


class ClosureCapError(RuntimeError):
    """The closure walk found more elements than the configured cap."""


def _as_triple(e):
    if isinstance(e, FieldElement):
        return e.triple
    if isinstance(e, tuple) and len(e) == 3:
        return e
    return FieldElement(e).triple


class Matrix4:
    """Immutable 4x4 matrix over Q(c)."""

    __slots__ = ("flat",)

    def __init__(self, rows: Sequence[Sequence]):
        flat = []
        for i in range(4):
            for j in range(4):
                e = rows[i][j]
                if not isinstance(e, FieldElement):
                    e = FieldElement(e)
                flat.extend(e.triple)
        self.flat = tuple(flat)

    @classmethod
    def from_flat(cls, flat) -> "Matrix4":
        self = cls.__new__(cls)
        self.flat = tuple(flat)
        return self

    @classmethod
    def identity(cls) -> "Matrix4":
        return cls.from_flat(_k.MAT_IDENTITY)

    @property
    def rows(self) -> Tuple[Tuple[FieldElement, ...], ...]:
        f = self.flat
        return tuple(
            tuple(
                FieldElement.from_triple(f[12 * i + 3 * j : 12 * i + 3 * j + 3])
                for j in range(4)
            )
            for i in range(4)
        )

    def entry(self, i: int, j: int) -> FieldElement:
        o = 12 * i + 3 * j
        return FieldElement.from_triple(self.flat[o : o + 3])

    def __mul__(self, other: "Matrix4") -> "Matrix4":
        return Matrix4.from_flat(_k.mat_mul(self.flat, other.flat))

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix4) and self.flat == other.flat

    def __hash__(self):
        return hash(self.flat)

    def apply(self, vector: Sequence[FieldElement]) -> Tuple[FieldElement, ...]:
        v = tuple(_as_triple(e) for e in vector)
        return tuple(FieldElement.from_triple(t) for t in _k.mat_vec(self.flat, v))

    def act(self, p: Polynomial) -> Polynomial:
        return p.linear_substitute(self)

    def transpose(self) -> "Matrix4":
        f = self.flat
        out = []
        for i in range(4):
            for j in range(4):
                o = 12 * j + 3 * i
                out.extend(f[o : o + 3])
        return Matrix4.from_flat(out)

    def det(self) -> FieldElement:
        r = self.rows

        def d3(m):
            return (
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            )

        total = FieldElement(0)
        sign = 1
        for j in range(4):
            minor = [
                [r[i][k] for k in range(4) if k != j] for i in range(1, 4)
            ]
            total = total + r[0][j] * d3(minor) * sign
            sign = -sign
        return total

    def inverse(self) -> "Matrix4":
        # Gauss-Jordan on [self | I], exact
        aug = [
            list(self.rows[i]) + [ONE if j == i else ZERO for j in range(4)]
            for i in range(4)
        ]
        for col in range(4):
            piv = next(
                (r for r in range(col, 4) if not aug[r][col].is_zero()), None
            )
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [e * inv for e in aug[col]]
            for r in range(4):
                if r != col and not aug[r][col].is_zero():
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return Matrix4([row[4:] for row in aug])

    def canonical_row(self) -> str:
        """Tab separated canonical entries, row major; used by the cache."""
        f = self.flat
        return "\t".join(
            FieldElement.from_triple(f[3 * i : 3 * i + 3]).canonical_str()
            for i in range(16)
        )

    @classmethod
    def from_canonical_row(cls, line: str) -> "Matrix4":
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 16:
            raise ValueError("matrix row needs 16 entries, got %d" % len(parts))
        flat = []
        for p in parts:
            flat.extend(parse_field(p).triple)
        return cls.from_flat(flat)

    def __repr__(self) -> str:
        return "Matrix4(%s)" % "; ".join(
            " ".join(e.canonical_str() for e in row) for row in self.rows
        )


class MatrixGroup:
    """A finite matrix group listed in breadth first closure order."""

    def __init__(self, name: str, generators: Sequence[Matrix4],
                 elements: Optional[Sequence[Matrix4]] = None,
                 cap: int = DEFAULT_CAP):
        self.name = name
        self.generators = tuple(generators)
        if elements is None:
            try:
                flats = _k.closure([g.flat for g in generators], cap)
            except _k.ClosureCapExceeded as exc:
                raise ClosureCapError(str(exc)) from None
            elements = [Matrix4.from_flat(f) for f in flats]
        self.elements = tuple(elements)
        self._index = {m.flat: i for i, m in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m: Matrix4) -> bool:
        return m.flat in self._index

    def stabilizer(self, vector, name: Optional[str] = None) -> "MatrixGroup":
        """Subgroup fixing the given vector exactly (not just projectively)."""
        v = tuple(_as_triple(e) for e in vector)
        fixed = [m for m in self.elements if _k.mat_vec(m.flat, v) == v]
        return MatrixGroup(name or (self.name + "_stab"), (), elements=fixed)

    def orbit(self, vector) -> list:
        """Orbit of a vector under the matrix action, in first seen order."""
        v = tuple(_as_triple(e) for e in vector)
        seen = set()
        out = []
        for m in self.elements:
            w = _k.mat_vec(m.flat, v)
            if w not in seen:
                seen.add(w)
                out.append(tuple(FieldElement.from_triple(t) for t in w))
        return out

    def orbit_projective(self, vector) -> list:
        """Orbit of the line through a vector, each point normalized."""
        v = tuple(_as_triple(e) for e in vector)
        seen = set()
        out = []
        for m in self.elements:
            w = normalize_projective(_k.mat_vec(m.flat, v))
            if w not in seen:
                seen.add(w)
                out.append(tuple(FieldElement.from_triple(t) for t in w))
        return out

    def reynolds(self, p: Polynomial) -> Polynomial:
        """Group average of p under the substitution action.

        Matrices sharing the rows that matter for p give identical
        substitutions, so the sum runs over distinct relevant row blocks
        weighted by how often they occur.
        """
        if p.is_zero():
            return p
        used = [False] * 4
        for k in p.terms:
            for i, sh in enumerate((0, 8, 16, 24)):
                if (k >> sh) & 255:
                    used[i] = True
        idx = [i for i in range(4) if used[i]]
        blocks = {}
        for m in self.elements:
            f = m.flat
            key = tuple(f[12 * i : 12 * i + 12] for i in idx)
            got = blocks.get(key)
            if got is None:
                blocks[key] = [1, f]
            else:
                got[0] += 1
        total = {}
        for key in sorted(blocks):
            count, f = blocks[key]
            forms = []
            for i in range(4):
                form = {}
                for j in range(4):
                    t = f[12 * i + 3 * j : 12 * i + 3 * j + 3]
                    if t[0] or t[1]:
                        form[_k.pack(*(1 if jj == j else 0 for jj in range(4)))] = t
                forms.append(form)
            img = _k.plinsub(p.terms, tuple(forms))
            total = _k.padd(total, _k.pscale(img, (count, 0, 1)))
        total = _k.pscale(total, _k.finv((len(self.elements), 0, 1)))
        return Polynomial._raw(total, p.vars)

    def is_invariant(self, p: Polynomial) -> bool:
        return all(g.act(p) == p for g in self.generators)


def normalize_projective(coords) -> tuple:
    """Scale so the first nonzero coordinate is one; returns field triples."""
    ts = tuple(_as_triple(e) for e in coords)
    for t in ts:
        if t[0] or t[1]:
            inv = _k.finv(t)
            return tuple(_k.fmul(x, inv) for x in ts)
    raise ValueError("projective point needs a nonzero coordinate")


def _diag(*entries) -> Matrix4:
    return Matrix4(
        [[entries[i] if i == j else 0 for j in range(4)] for i in range(4)]
    )


def _swap(i, j) -> Matrix4:
    rows = [[1 if a == b else 0 for b in range(4)] for a in range(4)]
    rows[i], rows[j] = rows[j], rows[i]
    return Matrix4(rows)


def h4_generators() -> Tuple[Matrix4, ...]:
    """Four matrices generating the Coxeter group of type H4.

    The first three are reflections; the last is a rotation chosen so the
    orbit of the base point comes out in the standard coordinates.
    """
    h = Fraction(1, 2)
    m1 = _diag(-1, 1, 1, 1)
    m2 = _diag(1, -1, 1, 1)
    m3 = Matrix4(
        [
            [PHI * h, PHI_INV * h, -h, 0],
            [PHI_INV * h, h, PHI * h, 0],
            [-h, PHI * h, -(PHI_INV * h), 0],
            [0, 0, 0, 1],
        ]
    )
    m4 = Matrix4(
        [
            [0, 0, -1, 0],
            [0, 0, 0, 1],
            [1, 0, 0, 0],
            [0, -1, 0, 0],
        ]
    )
    return (m1, m2, m3, m4)


def f4_generators() -> Tuple[Matrix4, ...]:
    """Four reflections generating the Weyl group of type F4."""
    h = Fraction(1, 2)
    g4 = Matrix4(
        [
            [h, h, h, h],
            [h, h, -h, -h],
            [h, -h, h, -h],
            [h, -h, -h, h],
        ]
    )
    return (_swap(1, 2), _swap(2, 3), _diag(1, 1, 1, -1), g4)


_GROUP_BUILDERS = {
    "H4": (h4_generators, 14400),
    "F4": (f4_generators, 1152),
}


def build_group(name: str, cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Build W(H4) or W(F4) from its generator matrices."""
    if name not in _GROUP_BUILDERS:
        raise ValueError("unknown group %r (have H4, F4)" % name)
    builder, _ = _GROUP_BUILDERS[name]
    return MatrixGroup("W(%s)" % name, builder(), cap=cap)


def expected_order(name: str) -> int:
    return _GROUP_BUILDERS[name][1]


BASE_POINT = (ZERO, ZERO, ZERO, ONE)
