"""Polygon triangulations, flips, and their quivers and Plucker seeds.

Polygon vertices are labeled 1..m clockwise.  A chord is a pair (a, b) with
a < b; it is a side when the endpoints are adjacent on the polygon (including
the closing side (1, m)), and a diagonal otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from ..matrices import ExtendedExchangeMatrix
from ..quivers import Quiver
from ..seeds import Seed, initial_seed

Chord = Tuple[int, int]


class TriangulationError(ValueError):
    pass


def chord(a: int, b: int) -> Chord:
    return (a, b) if a < b else (b, a)


def polygon_sides(m: int) -> List[Chord]:
    return [(i, i + 1) for i in range(1, m)] + [(1, m)]


def is_side(c: Chord, m: int) -> bool:
    a, b = c
    return b - a == 1 or (a == 1 and b == m)


def chords_cross(c1: Chord, c2: Chord) -> bool:
    """Strict interior crossing; shared endpoints do not count."""
    a, b = c1
    c, d = c2
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b < d) or (c < a < d < b)


def all_diagonals(m: int) -> List[Chord]:
    return [
        (a, b)
        for a in range(1, m + 1)
        for b in range(a + 1, m + 1)
        if not is_side((a, b), m)
    ]


@dataclass(frozen=True)
class Triangulation:
    m: int
    diagonals: FrozenSet[Chord]

    def __post_init__(self):
        if self.m < 4:
            raise TriangulationError("polygon needs at least 4 vertices")
        diags = frozenset(chord(*d) for d in self.diagonals)
        object.__setattr__(self, "diagonals", diags)
        if len(diags) != self.m - 3:
            raise TriangulationError(
                f"a triangulation of an {self.m}-gon has {self.m - 3} diagonals"
            )
        for d in diags:
            if is_side(d, self.m) or not (1 <= d[0] < d[1] <= self.m):
                raise TriangulationError(f"{d} is not a diagonal")
        for d1, d2 in itertools.combinations(diags, 2):
            if chords_cross(d1, d2):
                raise TriangulationError(f"diagonals {d1} and {d2} cross")

    def chords(self) -> List[Chord]:
        """All m sides followed by the sorted diagonals."""
        return polygon_sides(self.m) + sorted(self.diagonals)

    def triangles(self) -> List[Tuple[int, int, int]]:
        """The m - 2 triangles, each as an increasing vertex triple."""
        present: Set[Chord] = set(polygon_sides(self.m)) | set(self.diagonals)
        out = []
        for tri in itertools.combinations(range(1, self.m + 1), 3):
            a, b, c = tri
            if {chord(a, b), chord(b, c), chord(a, c)} <= present:
                # a triangle of T must not contain another polygon vertex
                # strictly inside one of its chords' spans on both sides;
                # with noncrossing maximal chords, a vertex triple whose
                # three chords are all present is always a face
                out.append(tri)
        return out

    def quadrilateral_of(self, d: Chord) -> Tuple[int, int, int, int]:
        """Vertices (i, j, k, l) in clockwise order of the quadrilateral glued
        from the two triangles adjacent to diagonal d = (i, k)."""
        d = chord(*d)
        if d not in self.diagonals:
            raise TriangulationError(f"{d} is not in the triangulation")
        a, c = d
        apexes = [
            v
            for (x, y, z) in self.triangles()
            if d in {chord(x, y), chord(y, z), chord(x, z)}
            for v in (x, y, z)
            if v not in d
        ]
        if len(apexes) != 2:
            raise TriangulationError("diagonal does not bound two triangles")
        inner = [v for v in apexes if a < v < c]
        outer = [v for v in apexes if not a < v < c]
        if len(inner) != 1 or len(outer) != 1:
            raise TriangulationError("degenerate quadrilateral")
        j, l = inner[0], outer[0]
        i, k = a, c
        # clockwise order with labels increasing clockwise: i < j < k, l outside
        return (i, j, k, l)

    def flip(self, d: Chord) -> "Triangulation":
        """Replace d with the other diagonal of its quadrilateral."""
        i, j, k, l = self.quadrilateral_of(d)
        new = chord(j, l)
        return Triangulation(self.m, (self.diagonals - {chord(i, k)}) | {new})

    def flipped_diagonal(self, d: Chord) -> Chord:
        i, j, k, l = self.quadrilateral_of(d)
        return chord(j, l)


def fan_triangulation(m: int, apex: int = 1) -> Triangulation:
    diags = [chord(apex, v) for v in range(1, m + 1)
             if v != apex and not is_side(chord(apex, v), m)]
    return Triangulation(m, frozenset(diags))


def flip(T: Triangulation, d: Chord) -> Triangulation:
    return T.flip(d)


def enumerate_triangulations(m: int) -> List[Triangulation]:
    """All triangulations of the m-gon (Catalan number C_{m-2} of them)."""

    def fill(lo: int, hi: int) -> List[FrozenSet[Chord]]:
        # triangulations of the sub-polygon on vertices lo..hi
        if hi - lo < 2:
            return [frozenset()]
        out = []
        for mid in range(lo + 1, hi):
            for left in fill(lo, mid):
                for right in fill(mid, hi):
                    extra = set()
                    if not is_side(chord(lo, mid), m) and mid - lo >= 2:
                        extra.add(chord(lo, mid))
                    if not is_side(chord(mid, hi), m) and hi - mid >= 2:
                        extra.add(chord(mid, hi))
                    out.append(left | right | extra)
        return out

    return [Triangulation(m, ds) for ds in fill(1, m)]


# -- quivers -------------------------------------------------------------------


def labeled_quiver_of_triangulation(T: Triangulation) -> Tuple[Quiver, Dict[Chord, int]]:
    """Q(T) together with the chord -> vertex-label map.

    Mutable vertices 1..(m-3) are the sorted diagonals; frozen vertices are the
    m sides.  Within each triangle, arrows run between consecutive sides in
    clockwise order (frozen-to-frozen arrows dropped).
    """
    m = T.m
    diagonals = sorted(T.diagonals)
    sides = polygon_sides(m)
    label: Dict[Chord, int] = {}
    for idx, d in enumerate(diagonals, start=1):
        label[d] = idx
    for idx, s in enumerate(sides, start=len(diagonals) + 1):
        label[s] = idx
    nmut = len(diagonals)
    arrows: Dict[Tuple[int, int], int] = {}
    for (a, b, c) in T.triangles():
        cyc = [chord(a, b), chord(b, c), chord(a, c)]
        for s1, s2 in zip(cyc, cyc[1:] + cyc[:1]):
            u, v = label[s1], label[s2]
            if u > nmut and v > nmut:
                continue
            arrows[(u, v)] = arrows.get((u, v), 0) + 1
    return Quiver(m + nmut, nmut, arrows), label


def quiver_of_triangulation(T: Triangulation) -> Quiver:
    return labeled_quiver_of_triangulation(T)[0]


def q3_of_triangulation(T: Triangulation) -> Quiver:
    """The higher Teichmueller-style quiver Q_3(T): two mutable vertices per
    diagonal, two frozen per side, one mutable per triangle, and a nine-arrow
    pattern per triangle (frozen-to-frozen arrows dropped)."""
    m = T.m
    # vertex bookkeeping: (chord, end) carries the point closer to `end`
    mut: Dict = {}
    frz: Dict = {}
    for d in sorted(T.diagonals):
        for end in d:
            mut[("p", d, end)] = None
    for tri in T.triangles():
        mut[("t", tri)] = None
    for s in polygon_sides(m):
        for end in s:
            frz[("p", s, end)] = None
    label: Dict = {}
    for idx, key in enumerate(mut, start=1):
        label[key] = idx
    for idx, key in enumerate(frz, start=len(mut) + 1):
        label[key] = idx
    nmut = len(mut)

    arrows: Dict[Tuple[int, int], int] = {}

    def add(u, v):
        lu, lv = label[u], label[v]
        if lu > nmut and lv > nmut:
            return
        if (lv, lu) in arrows:  # cancel 2-cycles as they appear
            if arrows[(lv, lu)] == 1:
                del arrows[(lv, lu)]
            else:
                arrows[(lv, lu)] -= 1
            return
        arrows[(lu, lv)] = arrows.get((lu, lv), 0) + 1

    for tri in T.triangles():
        p, q, r = tri  # clockwise traversal visits p -> q -> r
        sides_cw = [chord(p, q), chord(q, r), chord(p, r)]
        ends_cw = [(p, q), (q, r), (r, p)]
        # A1,A2 on side pq; B1,B2 on side qr; C1,C2 on side rp (clockwise)
        pts = []
        for s, (near1, near2) in zip(sides_cw, ends_cw):
            pts.append(("p", s, near1))
            pts.append(("p", s, near2))
        A1, A2, B1, B2, C1, C2 = pts
        K = ("t", tri)
        for u, v in [
            (A1, K), (K, B2), (B2, C1), (C1, K), (K, A2),
            (A2, B1), (B1, K), (K, C2), (C2, A1),
        ]:
            add(u, v)
    return Quiver(len(mut) + len(frz), nmut, arrows)


# -- Plucker seeds --------------------------------------------------------------


@dataclass(frozen=True)
class PluckerCluster:
    """Extended cluster of Plucker coordinates for a triangulation.

    Variable i of the seed corresponds to `chords[i-1]`: the m - 3 diagonals
    first (mutable), then the m sides (frozen).
    """

    triangulation: Triangulation
    chords: Tuple[Chord, ...]
    seed: Seed


def plucker_cluster(T: Triangulation) -> PluckerCluster:
    Q, label = labeled_quiver_of_triangulation(T)
    ordered = sorted(label, key=lambda c: label[c])
    return PluckerCluster(T, tuple(ordered), initial_seed(Q.to_matrix()))


# -- text format ----------------------------------------------------------------


def format_triangulation(T: Triangulation) -> str:
    body = ", ".join(f"{a}-{b}" for a, b in sorted(T.diagonals))
    return f"{T.m}; {body}"


def parse_triangulation(text: str) -> Triangulation:
    head, _, body = text.partition(";")
    m = int(head.strip())
    diags = set()
    body = body.strip()
    if body:
        for part in body.split(","):
            a, _, b = part.strip().partition("-")
            diags.add(chord(int(a), int(b)))
    return Triangulation(m, frozenset(diags))
