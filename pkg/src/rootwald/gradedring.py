"""Bigraded dimensions of the associated graded ring along the base point.

The ring in question is graded by polynomial degree d and vanishing order m.
Its dimensions are computed three independent ways and cross-checked:

  * a closed-form rational generating function, expanded as a power series;
  * products of the twelve generator classes inside the free polynomial ring
    on s2, s6, s10, w (cheap, covers the whole verified range);
  * exact rank of truncated expansions of monomials in the four fundamental
    invariants (expensive, used on a smaller range as the ground truth).

The d-by-m condition table and the uniqueness of the bidegree (72,20) class
both fall out of the same rank machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .field import FieldElement
from .invariants import (DerivedInvariants, FundamentalInvariants,
                         GENERATOR_BIDEGREES, StabilizerInvariants,
                         express_in_s_basis, leading_form, s_monomial_exponents)
from .kernel import impl as _k
from .poly import Polynomial, VARS_S

T_DEGREES = (2, 12, 20, 30)


def t_monomial_exponents(d: int) -> List[Tuple[int, int, int, int]]:
    """Exponents (a,b,c,e) with 2a + 12b + 20c + 30e = d, deterministic order."""
    out = []
    for e in range(d // 30 + 1):
        for c in range((d - 30 * e) // 20 + 1):
            for b in range((d - 30 * e - 20 * c) // 12 + 1):
                rest = d - 30 * e - 20 * c - 12 * b
                if rest % 2 == 0:
                    out.append((rest // 2, b, c, e))
    return out


def dim_T(d: int) -> int:
    if d < 0:
        return 0
    return len(t_monomial_exponents(d))


def _chart_monomials(cap: int) -> List[int]:
    """Packed x,y,z monomial keys of total degree < cap, degree-ascending."""
    keys = []
    for t in range(cap):
        level = []
        for a in range(t + 1):
            for b in range(t - a + 1):
                level.append(a | b << 8 | (t - a - b) << 16)
        level.sort()
        keys.extend(level)
    return keys


def _rows_to_pairs(rows: Sequence[Dict[int, tuple]], columns: Sequence[int]) -> List[List[int]]:
    """Dense integer-pair rows for the kernel's elimination, one per term dict."""
    out = []
    for terms in rows:
        lead = 1
        for k in columns:
            t = terms.get(k)
            if t is not None:
                lead = lead // gcd(lead, t[2]) * t[2]
        flat = []
        content = 0
        for k in columns:
            t = terms.get(k)
            if t is None:
                flat.append(0)
                flat.append(0)
            else:
                a, b, dd = t
                s = lead // dd
                u, v = 2 * a * s, b * s
                flat.append(u)
                flat.append(v)
                content = gcd(content, gcd(u, v))
        if content > 1:
            flat = [x // content for x in flat]
        out.append(flat)
    return out


class TruncationOracle:
    """Rank oracle over chart-truncated products of the fundamental invariants.

    One elimination per degree d answers every multiplicity question at that
    degree: with columns ordered by ascending chart degree, the number of
    pivot columns of degree < m is the codimension of the order-m subspace.
    """

    def __init__(self, inv: FundamentalInvariants):
        self._fund = {2: inv.f2.terms, 12: inv.f12.terms,
                      20: inv.f20.terms, 30: inv.f30.terms}
        self._base_cache: Dict[Tuple[int, int], dict] = {}
        self._pow_cache: Dict[Tuple[int, int, int], dict] = {}
        self._profile_cache: Dict[int, Tuple[int, List[int]]] = {}

    def _base(self, deg: int, cap: int) -> dict:
        key = (deg, cap)
        got = self._base_cache.get(key)
        if got is None:
            got = _k.pdehom_trunc(self._fund[deg], cap)
            self._base_cache[key] = got
        return got

    def _power(self, deg: int, e: int, cap: int) -> dict:
        if e == 0:
            return {0: (1, 0, 1)}
        key = (deg, e, cap)
        got = self._pow_cache.get(key)
        if got is None:
            got = _k.pmul(self._power(deg, e - 1, cap), self._base(deg, cap), cap=cap)
            self._pow_cache[key] = got
        return got

    def product_terms(self, exps: Tuple[int, int, int, int], cap: int) -> dict:
        a, b, c, e = exps
        acc = self._power(2, a, cap)
        for deg, ee in ((12, b), (20, c), (30, e)):
            if ee:
                acc = _k.pmul(acc, self._power(deg, ee, cap), cap=cap)
        return acc

    def profile(self, d: int, cap: int) -> List[int]:
        """dims[m] = dim of the order->=m subspace of the degree-d span, m = 0..cap."""
        cached = self._profile_cache.get(d)
        if cached is not None and cached[0] >= cap:
            dims = cached[1]
            return dims[: cap + 1]
        exps = t_monomial_exponents(d)
        columns = _chart_monomials(cap)
        rows = [self.product_terms(x, cap) for x in exps]
        pairs = _rows_to_pairs(rows, columns)
        pivots = _k.rank_profile(pairs, len(columns))
        pivot_degs = [_k.xyzdeg(columns[j]) for j in pivots]
        total = len(exps)
        dims = []
        for m in range(cap + 1):
            below = sum(1 for t in pivot_degs if t < m)
            dims.append(total - below)
        self._profile_cache[d] = (cap, dims)
        return dims

    def dim_T_cap_I(self, d: int, m: int) -> int:
        if d < 0:
            return 0
        if d % 2 == 1:
            return 0
        if m <= 0:
            return dim_T(d)
        return self.profile(d, m)[m]

    def dim_R(self, d: int, m: int) -> int:
        if d < 0 or d % 2 == 1:
            return 0
        dims = self.profile(d, m + 1)
        return dims[m] - dims[m + 1]

    def kernel_vectors(self, d: int, m: int):
        """Coefficient vectors (over the t_monomial_exponents(d) basis) spanning
        the degree-d combinations that vanish to order >= m."""
        exps = t_monomial_exponents(d)
        columns = _chart_monomials(m)
        rows = [self.product_terms(x, m) for x in exps]
        # right kernel of the transposed coefficient matrix
        tmat = []
        for k in columns:
            tmat.append([FieldElement.from_triple(r[k]) if k in r else FieldElement(0)
                         for r in rows])
        return exps, linalg.kernel_basis(tmat, len(rows))


@dataclass(frozen=True)
class GeneratorInfo:
    name: str
    d: int
    m: int
    s_image: Polynomial  # in s2, s6, s10, w; includes the w power


@dataclass(frozen=True)
class GeneratorSet:
    generators: Tuple[GeneratorInfo, ...]

    def bidegrees(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((g.d, g.m) for g in self.generators)

    def __iter__(self):
        return iter(self.generators)


def build_generator_set(inv: FundamentalInvariants, der: DerivedInvariants,
                        stab: StabilizerInvariants) -> GeneratorSet:
    """Generator classes with their images in the free ring on s2, s6, s10, w."""
    named = [("f2", inv.f2), ("f12", inv.f12), ("f20", inv.f20),
             ("f24", der.f24), ("f30", inv.f30), ("f32", der.f32),
             ("f36", der.f36), ("f42", der.f42), ("f44", der.f44),
             ("f54", der.f54), ("f60", der.f60), ("f66", der.f66)]
    gens = []
    for name, f in named:
        d = f.degree()
        h, m = leading_form(f)
        s_part = express_in_s_basis(h, m, stab)
        w_power = Polynomial.monomial((0, 0, 0, d - m), 1, vars=VARS_S)
        gens.append(GeneratorInfo(name, d, m, s_part * w_power))
    got = tuple((g.d, g.m) for g in gens)
    if got != GENERATOR_BIDEGREES:
        raise AssertionError(f"generator bidegrees {got} != {GENERATOR_BIDEGREES}")
    return GeneratorSet(tuple(gens))


def _generator_monomials(gens: Sequence[GeneratorInfo], d: int, m: int):
    """Exponent tuples over the generators with total bidegree (d, m)."""
    order = sorted(range(len(gens)), key=lambda i: -gens[i].d)
    out: List[Tuple[int, ...]] = []
    exps = [0] * len(gens)

    def rec(pos: int, dd: int, mm: int):
        if 5 * dd < 18 * mm or dd < 0 or mm < 0:
            return
        if pos == len(order):
            if dd == 0 and mm == 0:
                out.append(tuple(exps))
            return
        i = order[pos]
        gd, gm = gens[i].d, gens[i].m
        top = dd // gd
        if gm:
            top = min(top, mm // gm)
        for e in range(top, -1, -1):
            exps[i] = e
            rec(pos + 1, dd - e * gd, mm - e * gm)
        exps[i] = 0

    rec(0, d, m)
    return out


class GeneratorAlgebraOracle:
    """Dimension oracle for the subalgebra generated by the twelve classes,
    computed inside the free polynomial ring on s2, s6, s10, w."""

    def __init__(self, gens: GeneratorSet):
        self.gens = gens
        self._img_pow: Dict[Tuple[int, int], Polynomial] = {}

    def _image_power(self, i: int, e: int) -> Polynomial:
        if e == 0:
            return Polynomial.one(vars=VARS_S)
        key = (i, e)
        got = self._img_pow.get(key)
        if got is None:
            got = self._image_power(i, e - 1) * self.gens.generators[i].s_image
            self._img_pow[key] = got
        return got

    def monomial_images(self, d: int, m: int) -> List[Polynomial]:
        images = []
        for exps in _generator_monomials(self.gens.generators, d, m):
            acc = Polynomial.one(vars=VARS_S)
            for i, e in enumerate(exps):
                if e:
                    acc = acc * self._image_power(i, e)
            images.append(acc)
        return images

    def dim_Rprime(self, d: int, m: int) -> int:
        if d < 0 or m < 0:
            return 0
        images = self.monomial_images(d, m)
        if not images:
            return 0
        support = sorted({k for p in images for k in p.terms})
        index = {k: i for i, k in enumerate(support)}
        rows = [{index[k]: t for k, t in p.terms.items()} for p in images]
        pairs = _rows_to_pairs(rows, list(range(len(support))))
        return len(_k.rank_profile(pairs, len(support)))


NUMERATOR: Dict[Tuple[int, int], int] = {
    (0, 0): 1, (12, 2): 1, (24, 6): 1, (30, 6): 1, (32, 8): 1, (32, 6): -1,
    (42, 10): 1, (44, 10): -1, (54, 14): 1, (56, 14): -1, (66, 18): 1,
    (66, 16): -1, (68, 18): -1, (74, 18): -1, (86, 22): -1, (98, 24): -1,
}
DENOMINATOR: Tuple[Tuple[int, int], ...] = ((60, 16), (44, 12), (36, 10), (20, 4), (2, 0))


@dataclass(frozen=True)
class HilbertSeries:
    numerator: Dict[Tuple[int, int], int]
    denominator: Tuple[Tuple[int, int], ...]


def hilbert_series() -> HilbertSeries:
    return HilbertSeries(dict(NUMERATOR), DENOMINATOR)


@dataclass
class BidegreeDimensionTable:
    entries: Dict[Tuple[int, int], int]
    d_max: int
    m_max: int
    negative_cells: List[Tuple[int, int]]

    def get(self, d: int, m: int) -> int:
        if not (0 <= d <= self.d_max and 0 <= m <= self.m_max):
            raise KeyError((d, m))
        return self.entries.get((d, m), 0)

    def row_sum(self, d: int) -> int:
        return sum(v for (dd, _), v in self.entries.items() if dd == d)


def expand_hilbert_series(hs: HilbertSeries, d_max: int, m_max: int) -> BidegreeDimensionTable:
    grid = [[0] * (m_max + 1) for _ in range(d_max + 1)]
    for (d, m), c in hs.numerator.items():
        if d <= d_max and m <= m_max:
            grid[d][m] += c
    for a, b in hs.denominator:
        # multiply by the geometric series of u^a v^b, in place
        for d in range(a, d_max + 1):
            row = grid[d]
            src = grid[d - a]
            if b == 0:
                for m in range(m_max + 1):
                    row[m] += src[m]
            else:
                for m in range(b, m_max + 1):
                    row[m] += src[m - b]
    entries = {}
    negative = []
    for d in range(d_max + 1):
        for m in range(m_max + 1):
            v = grid[d][m]
            if v:
                entries[(d, m)] = v
                if v < 0:
                    negative.append((d, m))
    return BidegreeDimensionTable(entries, d_max, m_max, sorted(negative))


@dataclass
class MainTheoremReport:
    d_max: int
    m_max: int
    heavy_d_max: int
    cells_series_vs_generator_algebra: int
    cells_series_vs_rank_oracle: int
    row_sums_checked: int
    dim_T_72: int
    first_mismatch: Optional[dict]
    ok: bool


def verify_main_theorem(inv: FundamentalInvariants, gens: GeneratorSet,
                        d_max: int = 66, m_max: int = 18,
                        heavy_d_max: int = 44,
                        oracle: Optional[TruncationOracle] = None,
                        algebra: Optional[GeneratorAlgebraOracle] = None) -> MainTheoremReport:
    """Three-way agreement of the dimension tables plus the row-sum identity."""
    oracle = oracle or TruncationOracle(inv)
    algebra = algebra or GeneratorAlgebraOracle(gens)
    d_table = max(d_max, heavy_d_max)
    mm_internal = max(m_max, 5 * d_table // 18 + 1)
    table = expand_hilbert_series(hilbert_series(), d_table, mm_internal)
    mismatch = None
    cells_rp = 0
    cells_rank = 0

    if table.negative_cells:
        mismatch = {"kind": "negative series coefficient", "cell": table.negative_cells[0]}

    if mismatch is None:
        for (d, m) in table.entries:
            if d % 2 == 1 or m % 2 == 1:
                mismatch = {"kind": "odd bidegree in series", "cell": (d, m)}
                break

    if mismatch is None:
        for d in range(0, d_max + 1, 2):
            for m in range(0, m_max + 1, 2):
                rp = algebra.dim_Rprime(d, m)
                sv = table.get(d, m)
                cells_rp += 1
                if rp != sv:
                    mismatch = {"kind": "generator algebra vs series",
                                "cell": (d, m), "algebra": rp, "series": sv}
                    break
            if mismatch:
                break

    if mismatch is None:
        for d in range(0, heavy_d_max + 1, 2):
            top = min(m_max, 5 * d // 18 + 1)
            for m in range(0, top + 1, 2):
                rr = oracle.dim_R(d, m)
                sv = table.get(d, m)
                cells_rank += 1
                if rr != sv:
                    mismatch = {"kind": "rank oracle vs series",
                                "cell": (d, m), "rank": rr, "series": sv}
                    break
            if mismatch:
                break

    row_sums = 0
    if mismatch is None:
        for d in range(0, d_max + 1):
            expect = dim_T(d) if d % 2 == 0 else 0
            if table.row_sum(d) != expect:
                mismatch = {"kind": "row sum vs monomial count",
                            "cell": (d, None), "row_sum": table.row_sum(d),
                            "dim_T": expect}
                break
            row_sums += 1

    d72 = dim_T(72)
    if mismatch is None and d72 != 26:
        mismatch = {"kind": "dim T at degree 72", "got": d72, "expected": 26}

    return MainTheoremReport(
        d_max=d_max, m_max=m_max, heavy_d_max=heavy_d_max,
        cells_series_vs_generator_algebra=cells_rp,
        cells_series_vs_rank_oracle=cells_rank,
        row_sums_checked=row_sums,
        dim_T_72=d72,
        first_mismatch=mismatch,
        ok=mismatch is None,
    )


@dataclass
class Table2Row:
    m: int
    degrees: List[int]                 # with multiplicity, ascending
    generator_flags: List[bool]        # parallel to degrees
    target_dim: int                    # dim of degree-m forms in s2, s6, s10
    stopped_at: int


@dataclass
class Table2Report:
    rows: List[Table2Row]
    m_max: int
    cross_checked_cells: int

    def row(self, m: int) -> Table2Row:
        for r in self.rows:
            if r.m == m:
                return r
        raise KeyError(m)


def table2_report(gens: GeneratorSet, m_max: int = 18,
                  algebra: Optional[GeneratorAlgebraOracle] = None,
                  cross_check: bool = True) -> Table2Report:
    """Per-multiplicity lists of degrees where new conditions appear.

    Row m lists each even degree d with multiplicity dim(d,m) - dim(d-2,m),
    stopping once the running dimension reaches the dimension of degree-m
    forms in s2, s6, s10.  Entries at generator bidegrees are flagged (one
    flag per generator).
    """
    d_cap = 6 * m_max + 40
    table = expand_hilbert_series(hilbert_series(), d_cap, m_max + 1)
    algebra = algebra if algebra is not None else (
        GeneratorAlgebraOracle(gens) if cross_check else None)
    gen_bidegrees = set(gens.bidegrees())
    rows = []
    checked = 0
    for m in range(0, m_max + 1, 2):
        target = len(s_monomial_exponents(m))
        degrees: List[int] = []
        flags: List[bool] = []
        prev = 0
        d = 0
        while True:
            cur = table.get(d, m)
            if cross_check:
                rp = algebra.dim_Rprime(d, m)
                if rp != cur:
                    raise AssertionError(
                        f"series and generator algebra disagree at {(d, m)}: {cur} vs {rp}")
                checked += 1
            mult = cur - prev
            if mult < 0:
                raise AssertionError(f"dimension drop at {(d, m)}")
            flagged = False
            for _ in range(mult):
                degrees.append(d)
                is_gen = (d, m) in gen_bidegrees and not flagged
                flags.append(is_gen)
                flagged = flagged or is_gen
            prev = cur
            if cur == target:
                break
            d += 2
            if d > d_cap:
                raise AssertionError(f"row {m} did not stabilize by degree {d_cap}")
        rows.append(Table2Row(m, degrees, flags, target, d))
    return Table2Report(rows, m_max, checked)


def corollary_condition_count(report: Table2Report, d: int, m: int) -> int:
    """Number of table entries <= d in rows 0, 2, ..., m-2: the codimension of
    the order-m subspace in the degree-d span."""
    count = 0
    for row in report.rows:
        if row.m <= m - 2:
            count += sum(1 for deg in row.degrees if deg <= d)
    return count


@dataclass
class UniquenessReport:
    d: int
    m: int
    kernel_dim: int
    witness_matches_square: bool
    conditions: int
    dim_T_d: int
    ok: bool


def verify_unique_72_20(oracle: TruncationOracle,
                        report: Optional[Table2Report] = None) -> UniquenessReport:
    """The degree-72 order-20 class is one dimensional, spanned by the square
    of the degree-36 generator; cross-checked against the condition count."""
    d, m = 72, 20
    exps, kernel = oracle.kernel_vectors(d, m)
    kdim = len(kernel)
    witness_ok = False
    if kdim == 1:
        # the square of the degree-36 combination, expanded symbolically in
        # the free ring on the four fundamentals: (A - 3B + 2C)^2 with
        # A = F12^3, B = F2^2 F12 F20, C = F2^3 F30
        expected = {
            (0, 6, 0, 0): 1, (4, 2, 2, 0): 9, (6, 0, 0, 2): 4,
            (2, 4, 1, 0): -6, (3, 3, 0, 1): 4, (5, 1, 1, 1): -12,
        }
        vec = kernel[0]
        exp_vec = [FieldElement(expected.get(x, 0)) for x in exps]
        scale = None
        witness_ok = True
        for got, want in zip(vec, exp_vec):
            if want.is_zero() != got.is_zero():
                witness_ok = False
                break
            if not want.is_zero():
                ratio = got / want
                if scale is None:
                    scale = ratio
                elif ratio != scale:
                    witness_ok = False
                    break
        witness_ok = witness_ok and scale is not None and not scale.is_zero()
    conditions = corollary_condition_count(report, d, m) if report else -1
    dtd = dim_T(d)
    ok = kdim == 1 and witness_ok and (report is None or dtd - conditions == 1)
    return UniquenessReport(d, m, kdim, witness_ok, conditions, dtd, ok)
