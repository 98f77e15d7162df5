"""Point configurations in P^3 built from root systems, with exact incidence data.

Four configurations are supported: the 12, 16, and 24 point sets obtained by
projectivizing the D4, B4, and F4 root systems, and the 60 point set from H4.
Everything downstream (collinearity, dual plane incidence, the planar section
report) is computed with exact field arithmetic; no coordinates are ever
floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .field import FieldElement, ONE, PHI, PHI_INV, ZERO

CONFIG_NAMES = ("D4", "B4", "F4", "H4")


def _coerce_coords(coords) -> Tuple[FieldElement, ...]:
    return tuple(e if isinstance(e, FieldElement) else FieldElement(e) for e in coords)


class ProjectivePoint:
    """Point of P^3 stored with the first nonzero coordinate scaled to 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        vec = _coerce_coords(coords)
        if len(vec) != 4:
            raise ValueError("expected 4 homogeneous coordinates")
        pivot = None
        for e in vec:
            if not e.is_zero():
                pivot = e
                break
        if pivot is None:
            raise ValueError("zero vector does not define a projective point")
        inv = pivot.inverse()
        self.coords = tuple(e * inv for e in vec)

    def key(self):
        return tuple(e.triple for e in self.coords)

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "(" + ":".join(str(e) for e in self.coords) + ")"


class Plane:
    """Hyperplane a*x + b*y + c*z + d*w = 0, coefficients normalized like a point."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = ProjectivePoint(coeffs).coords

    def contains(self, point: ProjectivePoint) -> bool:
        acc = ZERO
        for a, x in zip(self.coeffs, point.coords):
            acc = acc + a * x
        return acc.is_zero()

    def key(self):
        return tuple(e.triple for e in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Plane) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "[" + ":".join(str(e) for e in self.coeffs) + "]"


def dual_plane(point: ProjectivePoint) -> Plane:
    return Plane(point.coords)


class Configuration:
    """Named ordered point set; indices are 1-based to match the usual labeling."""

    def __init__(self, name: str, points: Sequence[ProjectivePoint]):
        self.name = name
        self.points = tuple(points)
        if len(set(p.key() for p in self.points)) != len(self.points):
            raise ValueError("duplicate points in configuration")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def point(self, index: int) -> ProjectivePoint:
        """1-based accessor."""
        if not 1 <= index <= len(self.points):
            raise IndexError(index)
        return self.points[index - 1]

    def index_of(self, point: ProjectivePoint) -> int:
        for i, p in enumerate(self.points, start=1):
            if p == point:
                return i
        raise KeyError(point)

    def point_set(self):
        return frozenset(p.key() for p in self.points)

    def __repr__(self):
        return f"Configuration({self.name}, {len(self.points)} points)"


# The 24 points of the F4 configuration in their standard labeling.  The first
# twelve form the D4 configuration; 13..16 are the fundamental points added by
# B4; 17..24 are the projectivized half-sum roots.
_F4_COORDS = [
    (1, 1, 0, 0), (1, -1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0),
    (1, 0, 0, 1), (1, 0, 0, -1), (0, 1, 1, 0), (0, 1, -1, 0),
    (0, 1, 0, 1), (0, 1, 0, -1), (0, 0, 1, 1), (0, 0, 1, -1),
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1),
    (-1, 1, 1, 1), (1, -1, 1, 1), (1, 1, -1, 1), (1, 1, 1, -1),
]


def _even_permutations():
    for perm in itertools.permutations(range(4)):
        inversions = sum(
            1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j]
        )
        if inversions % 2 == 0:
            yield perm


def _h4_points() -> List[ProjectivePoint]:
    points: List[ProjectivePoint] = []
    seen = set()

    def push(vec):
        p = ProjectivePoint(vec)
        if p.key() not in seen:
            seen.add(p.key())
            points.append(p)

    # permutations of (+-1, 0, 0, 0)
    for i in range(4):
        vec = [ZERO] * 4
        vec[i] = ONE
        push(vec)
    # (+-1 : +-1 : +-1 : +-1) / 2
    for signs in itertools.product((1, -1), repeat=4):
        push(signs)
    # even permutations of (+-1, +-phi, +-1/phi, 0) / 2; this base ordering
    # (not (phi, 1, 1/phi, 0)) is the one whose even-permutation class closes
    # into the orbit of (0:0:0:1) under the chosen group generators
    base = (ONE, PHI, PHI_INV, ZERO)
    for perm in _even_permutations():
        for signs in itertools.product((1, -1), repeat=4):
            vec = [ZERO] * 4
            for slot, src in enumerate(perm):
                vec[slot] = base[src] * signs[slot]
            push(vec)
    return points


def build_config(name: str) -> Configuration:
    if name not in CONFIG_NAMES:
        raise ValueError(f"unknown configuration {name!r}; expected one of {CONFIG_NAMES}")
    if name == "H4":
        pts = _h4_points()
        assert len(pts) == 60
        return Configuration("H4", pts)
    count = {"D4": 12, "B4": 16, "F4": 24}[name]
    return Configuration(name, [ProjectivePoint(c) for c in _F4_COORDS[:count]])


def _line_key(p: ProjectivePoint, q: ProjectivePoint):
    # Pluecker coordinates of the line through p and q, first nonzero scaled to 1.
    a, b = p.coords, q.coords
    pl = []
    for i in range(4):
        for j in range(i + 1, 4):
            pl.append(a[i] * b[j] - a[j] * b[i])
    pivot = next(e for e in pl if not e.is_zero())
    inv = pivot.inverse()
    return tuple((e * inv).triple for e in pl)


def collinear_sets(config: Configuration) -> List[Tuple[int, ...]]:
    """All maximal collinear subsets of size >= 3, as sorted 1-based index tuples."""
    lines: Dict[tuple, set] = {}
    pts = config.points
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            key = _line_key(pts[i], pts[j])
            lines.setdefault(key, set()).update((i + 1, j + 1))
    out = [tuple(sorted(members)) for members in lines.values() if len(members) >= 3]
    out.sort()
    return out


def collinear_triples(config: Configuration) -> List[Tuple[int, int, int]]:
    """Lines containing exactly 3 configuration points."""
    return [s for s in collinear_sets(config) if len(s) == 3]


@dataclass
class IncidenceReport:
    config_name: str
    point_counts: List[int]          # planes through each point, config order
    plane_counts: List[int]          # points on each plane, plane order
    planes: List[Plane]

    @property
    def total(self) -> int:
        return sum(self.point_counts)

    @property
    def uniform_point_count(self) -> Optional[int]:
        vals = set(self.point_counts)
        return vals.pop() if len(vals) == 1 else None

    def check_consistent(self):
        assert sum(self.point_counts) == sum(self.plane_counts), (
            "incidence matrix row and column sums disagree"
        )


def coordinate_planes() -> List[Plane]:
    out = []
    for i in range(4):
        vec = [ZERO] * 4
        vec[i] = ONE
        out.append(Plane(vec))
    return out


def dual_plane_incidence(config: Configuration, planes: Optional[Sequence[Plane]] = None) -> IncidenceReport:
    """Point/plane incidence counts; default planes are the duals of the config's own points."""
    if planes is None:
        planes = [dual_plane(p) for p in config.points]
    planes = list(planes)
    point_counts = [0] * len(config)
    plane_counts = [0] * len(planes)
    for pi, point in enumerate(config.points):
        for hi, plane in enumerate(planes):
            if plane.contains(point):
                point_counts[pi] += 1
                plane_counts[hi] += 1
    report = IncidenceReport(config.name, point_counts, plane_counts, planes)
    report.check_consistent()
    return report


def _line_points_in_plane(p: ProjectivePoint, q: ProjectivePoint) -> ProjectivePoint:
    """Trace of the line pq on the plane w = 0, assuming the line is not inside it."""
    pw, qw = p.coords[3], q.coords[3]
    if pw.is_zero():
        return p
    if qw.is_zero():
        return q
    # pw*q - qw*p kills the w coordinate
    vec = [pw * qc - qw * pc for pc, qc in zip(p.coords, q.coords)]
    return ProjectivePoint(vec)


@dataclass
class SectionReport:
    """Geometry of the F4 configuration cut by the plane w = 0.

    The nine configuration points in the plane split into the star points X
    (six points, pairwise intersections of the four sigma lines) and the
    triangle points Y (three points, pairwise intersections of the three tau
    lines).  The four 3-point lines through the fourth fundamental point are
    not inside the plane; their traces form the quadrangle points Z, joined
    pairwise by the six phi lines.  nu vectors record (degree; multiplicity at
    each X point, at each Y point, at each Z point) for the three line unions.
    """
    plane: Plane
    in_plane: Tuple[int, ...]
    x_indices: Tuple[int, ...]
    y_indices: Tuple[int, ...]
    z_points: Tuple[ProjectivePoint, ...]
    sigma_lines: Tuple[Tuple[int, ...], ...]
    tau_lines: Tuple[Tuple[int, ...], ...]
    phi_lines: Tuple[Tuple[int, int], ...]   # pairs of z_points indices (0-based)
    residual_traces: Dict[Tuple[int, ...], int]  # off-plane triple -> z_points index
    traced_to_config: Tuple[Tuple[int, ...], ...]  # triples whose trace is a config point
    nu_sigma: Tuple[int, int, int, int]
    nu_tau: Tuple[int, int, int, int]
    nu_phi: Tuple[int, int, int, int]
    sigma_line_class_counts: Tuple[int, int, int]  # X, Y, Z points per sigma line
    tau_line_class_counts: Tuple[int, int, int]
    phi_line_class_counts: Tuple[int, int, int]


def _check(cond: bool, fact: str):
    if not cond:
        raise AssertionError(f"plane section fact failed: {fact}")


def plane_section_geometry() -> SectionReport:
    """Verify every incidence fact of the F4 section by w = 0 and return them."""
    config = build_config("F4")
    h = Plane((0, 0, 0, 1))

    in_plane = tuple(
        i for i in range(1, 25) if h.contains(config.point(i))
    )
    _check(in_plane == (1, 2, 3, 4, 7, 8, 13, 14, 15),
           "w=0 contains exactly the nine points 1,2,3,4,7,8,13,14,15")
    x_indices = tuple(i for i in in_plane if i <= 12)
    y_indices = tuple(i for i in in_plane if i > 12)

    all_lines = collinear_sets(config)
    triples = tuple(s for s in all_lines if len(s) == 3)
    in_plane_set = set(in_plane)

    def line_in_plane(indices) -> bool:
        return all(h.contains(config.point(i)) for i in indices)

    # sigma: the four 3-point lines inside the plane; their points are exactly X
    sigma_lines = tuple(s for s in triples if line_in_plane(s))
    _check(len(sigma_lines) == 4, "exactly four 3-point lines lie inside w=0")
    _check(all(set(s) <= set(x_indices) for s in sigma_lines),
           "sigma lines pass only through star points")
    for xi in x_indices:
        on = sum(1 for s in sigma_lines if xi in s)
        _check(on == 2, f"star point {xi} lies on exactly two sigma lines")

    # tau: the three 4-point coordinate axis lines inside the plane
    quads = tuple(s for s in all_lines if len(s) == 4 and line_in_plane(s))
    _check(len(quads) == 3, "exactly three 4-point lines lie inside w=0")
    for q in quads:
        xs = sum(1 for i in q if i in x_indices)
        ys = sum(1 for i in q if i in y_indices)
        _check((xs, ys) == (2, 2), f"tau line {q} carries two star and two triangle points")
    for yi in y_indices:
        on = sum(1 for q in quads if yi in q)
        _check(on == 2, f"triangle point {yi} is a vertex of exactly two tau lines")
    tau_lines = quads

    # traces of the 28 off-plane 3-point lines
    off_plane = [s for s in triples if not line_in_plane(s)]
    _check(len(off_plane) == 28, "28 of the 32 three-point lines leave the plane")
    z_expected = [
        ProjectivePoint((1, 1, 1, 0)),
        ProjectivePoint((-1, -1, 1, 0)),
        ProjectivePoint((1, -1, 1, 0)),
        ProjectivePoint((-1, 1, 1, 0)),
    ]
    config_keys = config.point_set()
    residual_traces: Dict[Tuple[int, ...], int] = {}
    traced_to_config = []
    for s in off_plane:
        p, q = config.point(s[0]), config.point(s[1])
        trace = _line_points_in_plane(p, q)
        if trace.key() in config_keys:
            _check(config.index_of(trace) in in_plane_set and config.index_of(trace) in s,
                   f"line {s} meets the plane in one of its own points")
            traced_to_config.append(s)
        else:
            hits = [k for k, z in enumerate(z_expected) if z == trace]
            _check(len(hits) == 1, f"line {s} traces to one of the four quadrangle points")
            residual_traces[s] = hits[0]
    _check(len(traced_to_config) == 24, "24 lines trace back to configuration points")
    _check(sorted(residual_traces) == [s for s in triples if 16 in s],
           "the residual lines are exactly the four through the fourth fundamental point")
    _check(sorted(residual_traces.values()) == [0, 1, 2, 3],
           "the four residual traces hit the four quadrangle points bijectively")
    z_points = tuple(z_expected)

    # multiplicity bookkeeping; multiplicity of a union of lines at a point is
    # the number of lines through it
    x_pts = [config.point(i) for i in x_indices]
    y_pts = [config.point(i) for i in y_indices]

    # pt on line(a,b) iff the 3x4 coordinate matrix has rank 2, i.e. all 3x3
    # minors vanish
    def _collinear3(a, b, c) -> bool:
        for cols in itertools.combinations(range(4), 3):
            det = (
                a[cols[0]] * (b[cols[1]] * c[cols[2]] - b[cols[2]] * c[cols[1]])
                - a[cols[1]] * (b[cols[0]] * c[cols[2]] - b[cols[2]] * c[cols[0]])
                + a[cols[2]] * (b[cols[0]] * c[cols[1]] - b[cols[1]] * c[cols[0]])
            )
            if not det.is_zero():
                return False
        return True

    def on_line(indices, pt: ProjectivePoint) -> bool:
        return _collinear3(config.point(indices[0]).coords,
                           config.point(indices[1]).coords, pt.coords)

    phi_lines = tuple(itertools.combinations(range(4), 2))

    def phi_on_line(pair, pt: ProjectivePoint) -> bool:
        return _collinear3(z_points[pair[0]].coords,
                           z_points[pair[1]].coords, pt.coords)

    def mults(lines, on_fn):
        mx = {sum(1 for ln in lines if on_fn(ln, p)) for p in x_pts}
        my = {sum(1 for ln in lines if on_fn(ln, p)) for p in y_pts}
        mz = {sum(1 for ln in lines if on_fn(ln, p)) for p in z_points}
        _check(len(mx) == 1 and len(my) == 1 and len(mz) == 1,
               "line union multiplicity is constant on each point class")
        return mx.pop(), my.pop(), mz.pop()

    sx, sy, sz = mults(sigma_lines, on_line)
    nu_sigma = (len(sigma_lines), sx, sy, sz)
    _check(nu_sigma == (4, 2, 0, 0), "nu(sigma) = (4;2,0,0)")
    tx, ty, tz = mults(tau_lines, on_line)
    nu_tau = (len(tau_lines), tx, ty, tz)
    _check(nu_tau == (3, 1, 2, 0), "nu(tau) = (3;1,2,0)")
    px, py, pz = mults(phi_lines, phi_on_line)
    nu_phi = (len(phi_lines), px, py, pz)
    _check(nu_phi == (6, 1, 2, 3), "nu(phi) = (6;1,2,3)")

    def class_counts(line, on_fn):
        cx = sum(1 for p in x_pts if on_fn(line, p))
        cy = sum(1 for p in y_pts if on_fn(line, p))
        cz = sum(1 for p in z_points if on_fn(line, p))
        return cx, cy, cz

    sigma_counts = {class_counts(ln, on_line) for ln in sigma_lines}
    tau_counts = {class_counts(ln, on_line) for ln in tau_lines}
    phi_counts = {class_counts(ln, phi_on_line) for ln in phi_lines}
    _check(sigma_counts == {(3, 0, 0)}, "each sigma line carries 3 star points")
    _check(tau_counts == {(2, 2, 0)}, "each tau line carries 2 star and 2 triangle points")
    _check(phi_counts == {(1, 1, 2)}, "each phi line carries 1 star, 1 triangle, 2 quadrangle points")

    return SectionReport(
        plane=h,
        in_plane=in_plane,
        x_indices=x_indices,
        y_indices=y_indices,
        z_points=z_points,
        sigma_lines=sigma_lines,
        tau_lines=tau_lines,
        phi_lines=phi_lines,
        residual_traces=residual_traces,
        traced_to_config=tuple(traced_to_config),
        nu_sigma=nu_sigma,
        nu_tau=nu_tau,
        nu_phi=nu_phi,
        sigma_line_class_counts=sigma_counts.pop(),
        tau_line_class_counts=tau_counts.pop(),
        phi_line_class_counts=phi_counts.pop(),
    )
