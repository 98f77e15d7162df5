"""Exact linear algebra over the base field.

Two regimes coexist here.  Large rank computations are pushed down to the
kernel's fraction-free elimination, which works on integer pairs a + b*sqrt5;
rows of field elements are scaled to that shape first.  Small solve and kernel
problems (expressing a polynomial in a basis, extracting a nullspace witness)
use straightforward Gauss-Jordan elimination directly over the field, where
clarity beats raw speed.
"""

from __future__ import annotations

from math import gcd
from typing import List, Optional, Sequence

from .field import FieldElement, ONE, ZERO
from .kernel import impl as _k


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def row_to_pairs(row: Sequence[FieldElement]) -> List[int]:
    """Scale a row of field elements to a flat integer list [a0,b0,a1,b1,...].

    Each element (A + B*c)/D with c = sqrt5/2 equals (2A + B*sqrt5)/(2D), so
    multiplying the row by twice the lcm of the denominators clears everything
    to integer pairs.  The common content is stripped; scaling a row never
    changes the rank.
    """
    triples = [e.triple for e in row]
    lead = 1
    for _, _, d in triples:
        lead = _lcm(lead, d)
    flat: List[int] = []
    content = 0
    for a, b, d in triples:
        s = lead // d
        u, v = 2 * a * s, b * s
        flat.append(u)
        flat.append(v)
        content = gcd(content, gcd(u, v))
    if content > 1:
        flat = [x // content for x in flat]
    return flat


def rank_profile(rows: Sequence[Sequence[FieldElement]], ncols: int) -> List[int]:
    """Pivot column indices of the row space, via fraction-free elimination."""
    packed = [row_to_pairs(r) for r in rows]
    return _k.rank_profile(packed, ncols)


def rank(rows: Sequence[Sequence[FieldElement]], ncols: Optional[int] = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(rank_profile(rows, ncols))


def nullity(rows: Sequence[Sequence[FieldElement]], ncols: int) -> int:
    return ncols - rank(rows, ncols)


def rref(rows: Sequence[Sequence[FieldElement]]):
    """Reduced row echelon form over the field.

    Returns (reduced_rows, pivot_columns).  Meant for small dense systems;
    rows are lists of FieldElement and are not mutated.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if not mat[i][col].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [e * inv for e in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][col].is_zero():
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def kernel_basis(rows: Sequence[Sequence[FieldElement]], ncols: int):
    """Basis of the right kernel: vectors v with M v = 0, over the field."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for i, pc in enumerate(pivots):
            vec[pc] = -reduced[i][fc]
        basis.append(vec)
    return basis


def solve_in_span(columns: Sequence[Sequence[FieldElement]], target: Sequence[FieldElement]):
    """Coefficients c with sum c_i * columns[i] = target, or None if outside the span.

    Requires the columns to be linearly independent, so a solution is unique.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = []
    for i in range(nrows):
        row = [col[i] for col in columns]
        row.append(target[i])
        aug.append(row)
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None  # inconsistent system
    if pivots != list(range(ncols)):
        raise ValueError("columns are linearly dependent")
    coeffs = [ZERO] * ncols
    for i, pc in enumerate(pivots):
        coeffs[pc] = reduced[i][ncols]
    return coeffs
