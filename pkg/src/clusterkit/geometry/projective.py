"""Exact projective geometry: the negative cross-ratio, Y-seeds from polygon
triangulations with points on P^1, and the pentagram map with Glick's
exchange matrix.

All coordinates are exact rationals; projective points and lines in P^2 are
held as integer homogeneous triples (cleared of denominators).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..quivers import Quiver
from ..ypatterns import YSeed
from .triangulations import Triangulation, labeled_quiver_of_triangulation

Vec3 = Tuple[int, int, int]


class ProjectiveError(ValueError):
    pass


def _normalize_triple(v: Sequence[Fraction]) -> Vec3:
    fracs = [Fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        raise ProjectiveError("zero vector is not a projective point")
    denom = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * denom) for f in fracs]
    g = math.gcd(*(abs(i) for i in ints))
    ints = [i // g for i in ints]
    for i in ints:
        if i != 0:
            if i < 0:
                ints = [-x for x in ints]
            break
    return (ints[0], ints[1], ints[2])


def cross3(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def line_through(p: Vec3, q: Vec3) -> Vec3:
    line = cross3(p, q)
    if line == (0, 0, 0):
        raise ProjectiveError("line through equal points")
    return line


def intersect(l1: Vec3, l2: Vec3) -> Vec3:
    p = cross3(l1, l2)
    if p == (0, 0, 0):
        raise ProjectiveError("intersection of equal lines")
    return _normalize_triple([Fraction(x) for x in p])


# -- cross-ratio on a projective line -----------------------------------------


def _pij(a: Tuple[Fraction, Fraction], b: Tuple[Fraction, Fraction]) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def cross_ratio_y(p1, p2, p3, p4) -> Fraction:
    """The negative cross-ratio Y = P14 P23 / (P12 P34) of four distinct
    points (a : b) of the projective line."""
    pts = [tuple(Fraction(c) for c in p) for p in (p1, p2, p3, p4)]
    p12 = _pij(pts[0], pts[1])
    p34 = _pij(pts[2], pts[3])
    p14 = _pij(pts[0], pts[3])
    p23 = _pij(pts[1], pts[2])
    if p12 == 0 or p34 == 0:
        raise ProjectiveError("cross-ratio of coincident points")
    return Fraction(p14 * p23, p12 * p34)


def _rank2_coordinates(vectors: Sequence[Vec3]) -> List[Tuple[Fraction, Fraction]]:
    """Coordinates of vectors spanning a rank-2 subspace, w.r.t. a basis
    chosen among them; used for collinear points and concurrent lines."""
    basis_u = vectors[0]
    basis_v = None
    for v in vectors[1:]:
        if cross3(basis_u, v) != (0, 0, 0):
            basis_v = v
            break
    if basis_v is None:
        raise ProjectiveError("vectors do not span a rank-2 space")
    # solve x = alpha*u + beta*v by Cramer on two independent coordinate rows
    rows = None
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            det = basis_u[r1] * basis_v[r2] - basis_u[r2] * basis_v[r1]
            if det != 0:
                rows = (r1, r2, det)
                break
        if rows:
            break
    assert rows is not None
    r1, r2, det = rows
    coords = []
    for x in vectors:
        alpha = Fraction(x[r1] * basis_v[r2] - x[r2] * basis_v[r1], det)
        beta = Fraction(basis_u[r1] * x[r2] - basis_u[r2] * x[r1], det)
        # consistency: x must lie in the span
        check = [alpha * u + beta * v for u, v in zip(basis_u, basis_v)]
        if any(Fraction(xi) != ci for xi, ci in zip(x, check)):
            raise ProjectiveError("vector outside the rank-2 span")
        coords.append((alpha, beta))
    return coords


def cross_ratio_y_collinear(points: Sequence[Vec3]) -> Fraction:
    """Y of four distinct collinear points of P^2."""
    coords = _rank2_coordinates(list(points))
    return cross_ratio_y(*coords)


def cross_ratio_y_concurrent(lines: Sequence[Vec3]) -> Fraction:
    """Y of four distinct concurrent lines of P^2 (dual cross-ratio)."""
    coords = _rank2_coordinates(list(lines))
    return cross_ratio_y(*coords)


# -- Y-seeds from triangulated point configurations ----------------------------


def triangulation_y_seed(T: Triangulation, points: Sequence) -> Tuple[YSeed, List[Tuple[int, int]]]:
    """Y-seed of a point configuration on P^1 attached to a triangulation.

    Diagonal d spanning the clockwise quadrilateral (i, j, k, l) carries
    Y_d = Y(P_i, P_j, P_k, P_l); the matrix is the mutable part of Q(T).
    Returns the Y-seed and the list of diagonals in variable order.
    """
    if len(points) != T.m:
        raise ProjectiveError("need one point per polygon vertex")
    pts = [tuple(Fraction(c) for c in p) for p in points]
    diagonals = sorted(T.diagonals)
    yvals = []
    for d in diagonals:
        i, j, k, l = T.quadrilateral_of(d)
        yvals.append(cross_ratio_y(pts[i - 1], pts[j - 1], pts[k - 1], pts[l - 1]))
    Q, label = labeled_quiver_of_triangulation(T)
    B = Q.to_matrix().top()
    return YSeed(tuple(yvals), B), diagonals


# -- the pentagram map ----------------------------------------------------------


@dataclass(frozen=True)
class ProjectivePolygon:
    """n points of P^2 with exact coordinates, indexed by Z or Z + 1/2 mod n.

    `half` selects the half-integer indexing used for pentagram images.
    """

    points: Tuple[Vec3, ...]
    half: bool = False

    def __post_init__(self):
        pts = tuple(_normalize_triple([Fraction(c) for c in p]) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 5:
            raise ProjectiveError("pentagram machinery needs n >= 5")
        n = len(pts)
        for t in range(n):
            a, b, c = pts[t], pts[(t + 1) % n], pts[(t + 2) % n]
            if _det3(a, b, c) == 0:
                raise ProjectiveError("three consecutive vertices are collinear")

    @property
    def n(self) -> int:
        return len(self.points)

    def point(self, idx) -> Vec3:
        """Vertex A_idx; idx is an integer (or half-integer when half=True)."""
        n = self.n
        if self.half:
            shifted = idx - Fraction(1, 2)
            if shifted != int(shifted):
                raise ProjectiveError("half-indexed polygon takes half-integer indices")
            return self.points[int(shifted) % n]
        if idx != int(idx):
            raise ProjectiveError("integer-indexed polygon takes integer indices")
        return self.points[int(idx) % n]

    def index_base(self) -> Fraction:
        """Smallest nonnegative representative of the index set."""
        return Fraction(1, 2) if self.half else Fraction(0)


def _det3(a: Vec3, b: Vec3, c: Vec3) -> int:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def pentagram_map(A: ProjectivePolygon) -> ProjectivePolygon:
    """Intersect consecutive shortest diagonals; the image polygon switches
    between integer and half-integer indexing.

    Vertex A'_{k + 1/2} is the point <A_{k-1} A_{k+1}> cap <A_k A_{k+2}>.
    """
    n = A.n
    base = A.index_base()
    half_out = not A.half
    slots: List[Optional[Vec3]] = [None] * n
    for t in range(n):
        k = base + t
        d1 = line_through(A.point(k - 1), A.point(k + 1))
        d2 = line_through(A.point(k), A.point(k + 2))
        new_idx = k + Fraction(1, 2)
        slot = int(new_idx - (Fraction(1, 2) if half_out else 0)) % n
        slots[slot] = intersect(d1, d2)
    assert all(p is not None for p in slots)
    return ProjectivePolygon(tuple(slots), half=half_out)


def pentagram_y_params(A: ProjectivePolygon) -> List[Fraction]:
    """The 2n y-parameters (y_1, ..., y_2n).

    y_{2k} is the inverse Y of the four lines from A_k to its neighbors
    A_{k-1}, A_{k+2}, A_{k+1}, A_{k-2}; y_{2k+1} is the Y of A_k, A_{k+1}
    and the crossings of the far edges with the line A_k A_{k+1}.
    """
    n = A.n
    out: List[Optional[Fraction]] = [None] * (2 * n)
    for j in range(1, 2 * n + 1):
        if Fraction(j, 2) - A.index_base() == int(Fraction(j, 2) - A.index_base()):
            # j = 2k with k in the index set: the concurrent-lines formula
            k = Fraction(j, 2)
            lines = [
                line_through(A.point(k), A.point(k - 1)),
                line_through(A.point(k), A.point(k + 2)),
                line_through(A.point(k), A.point(k + 1)),
                line_through(A.point(k), A.point(k - 2)),
            ]
            out[j - 1] = 1 / cross_ratio_y_concurrent(lines)
        else:
            # j = 2k + 1 with k in the index set: the collinear-points formula
            k = Fraction(j - 1, 2)
            L = line_through(A.point(k), A.point(k + 1))
            p1 = A.point(k)
            p2 = intersect(line_through(A.point(k + 2), A.point(k + 3)), L)
            p3 = A.point(k + 1)
            p4 = intersect(line_through(A.point(k - 2), A.point(k - 1)), L)
            out[j - 1] = cross_ratio_y_collinear([p1, p2, p3, p4])
    return [v for v in out if v is not None]


def pentagram_B(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Glick's 2n x 2n exchange matrix for the pentagram map."""
    if n < 5:
        raise ProjectiveError("need n >= 5")
    size = 2 * n
    rows = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            diff = (i - j) % size
            if diff in (1, size - 1):
                row.append((-1) ** j)
            elif diff in (3, size - 3):
                row.append(-((-1) ** j))
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


def random_rational_polygon(n: int, rng, half: bool = False) -> ProjectivePolygon:
    """A nondegenerate polygon with small random rational coordinates."""
    while True:
        pts = []
        for _ in range(n):
            pts.append(
                (
                    Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                    Fraction(1),
                )
            )
        try:
            poly = ProjectivePolygon(tuple(pts), half=half)
            pentagram_map(poly)  # also requires distinct diagonal lines
        except ProjectiveError:
            continue
        return poly


def apply_projective_map(A: ProjectivePolygon, M: Sequence[Sequence[Fraction]]) -> ProjectivePolygon:
    """Apply an invertible 3x3 rational matrix to every vertex."""
    rows = [[Fraction(v) for v in row] for row in M]
    pts = []
    for p in A.points:
        img = [sum(rows[r][c] * p[c] for c in range(3)) for r in range(3)]
        pts.append(_normalize_triple(img))
    return ProjectivePolygon(tuple(pts), half=A.half)
