"""Quivers with frozen vertices, quiver mutation, isomorphism, and builders.

Vertices are labeled 1..m; labels 1..n are mutable and n+1..m frozen.  Arrows
are stored as a mapping (i, j) -> multiplicity with no loops, no 2-cycles, and
no arrows between two frozen vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .matrices import ExtendedExchangeMatrix, freeze

Arrow = Tuple[int, int]


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    m: int
    n: int
    arrows: Mapping[Arrow, int] = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.n <= self.m:
            raise QuiverError("need 0 <= n <= m")
        clean: Dict[Arrow, int] = {}
        for (i, j), mult in self.arrows.items():
            if mult == 0:
                continue
            if mult < 0:
                raise QuiverError("arrow multiplicities must be positive")
            if i == j:
                raise QuiverError(f"loop at vertex {i}")
            if not (1 <= i <= self.m and 1 <= j <= self.m):
                raise QuiverError(f"arrow ({i},{j}) out of range")
            if i > self.n and j > self.n:
                raise QuiverError(f"arrow between frozen vertices {i} and {j}")
            if (j, i) in clean:
                raise QuiverError(f"2-cycle between {i} and {j}")
            clean[(i, j)] = mult
        object.__setattr__(self, "arrows", clean)

    # -- basic queries -------------------------------------------------------

    def is_mutable(self, v: int) -> bool:
        return 1 <= v <= self.n

    def multiplicity(self, i: int, j: int) -> int:
        return self.arrows.get((i, j), 0)

    def arrows_sorted(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple(sorted((i, j, mult) for (i, j), mult in self.arrows.items()))

    def out_neighbors(self, v: int) -> List[int]:
        return [j for (i, j) in self.arrows if i == v]

    def in_neighbors(self, v: int) -> List[int]:
        return [i for (i, j) in self.arrows if j == v]

    def is_sink(self, v: int) -> bool:
        return not any(i == v for (i, _) in self.arrows)

    def is_source(self, v: int) -> bool:
        return not any(j == v for (_, j) in self.arrows)

    def is_acyclic(self) -> bool:
        adj: Dict[int, List[int]] = {v: [] for v in range(1, self.m + 1)}
        for (i, j) in self.arrows:
            adj[i].append(j)
        state = {v: 0 for v in adj}  # 0 unseen, 1 in progress, 2 done

        def dfs(v: int) -> bool:
            state[v] = 1
            for w in adj[v]:
                if state[w] == 1:
                    return False
                if state[w] == 0 and not dfs(w):
                    return False
            state[v] = 2
            return True

        return all(state[v] != 0 or dfs(v) for v in adj)

    def underlying_edges(self) -> Tuple[Tuple[int, int, int], ...]:
        """Undirected edge list (i < j, multiplicity), for acyclic-class tests."""
        return tuple(sorted((min(i, j), max(i, j), mult) for (i, j), mult in self.arrows.items()))

    # -- mutation ------------------------------------------------------------

    def mutate(self, k: int) -> "Quiver":
        """Quiver mutation at a mutable vertex k: add composite arrows through
        k (skipping frozen-frozen pairs), reverse all arrows at k, cancel
        2-cycles."""
        if not self.is_mutable(k):
            raise QuiverError(f"vertex {k} is not mutable")
        # signed net counts make the three steps a single bookkeeping pass
        net: Dict[Arrow, int] = {}

        def add(i: int, j: int, mult: int) -> None:
            if mult == 0 or i == j:
                return
            if (j, i) in net:
                back = net[(j, i)]
                if back > mult:
                    net[(j, i)] = back - mult
                    return
                del net[(j, i)]
                mult -= back
                if mult == 0:
                    return
            net[(i, j)] = net.get((i, j), 0) + mult

        ins = [(i, mult) for (i, j), mult in self.arrows.items() if j == k]
        outs = [(j, mult) for (i, j), mult in self.arrows.items() if i == k]
        for (i, j), mult in self.arrows.items():
            if i == k or j == k:
                add(j, i, mult)  # step 2: reverse arrows at k
            else:
                add(i, j, mult)
        for i, p in ins:  # step 1: composite arrows i -> k -> j
            for j, q in outs:
                if i > self.n and j > self.n:
                    continue
                add(i, j, p * q)
        return Quiver(self.m, self.n, net)

    def reverse_all(self) -> "Quiver":
        return Quiver(self.m, self.n, {(j, i): mult for (i, j), mult in self.arrows.items()})

    # -- matrix encoding -------------------------------------------------------

    def to_matrix(self) -> ExtendedExchangeMatrix:
        rows = [[0] * self.n for _ in range(self.m)]
        for (i, j), mult in self.arrows.items():
            if j <= self.n:
                rows[i - 1][j - 1] += mult
            if i <= self.n:
                rows[j - 1][i - 1] -= mult
        return ExtendedExchangeMatrix(freeze(rows), self.n)

    @staticmethod
    def from_matrix(Bt: ExtendedExchangeMatrix) -> "Quiver":
        top = Bt.top()
        if any(top[i][j] != -top[j][i] for i in range(Bt.n) for j in range(Bt.n)):
            raise QuiverError("top block must be skew-symmetric for a quiver")
        arrows: Dict[Arrow, int] = {}
        for i in range(Bt.m):
            for j in range(Bt.n):
                v = Bt.rows[i][j]
                if v > 0 and (i >= Bt.n or i > j):
                    arrows[(i + 1, j + 1)] = v
                elif v < 0 and (i >= Bt.n or i > j):
                    arrows[(j + 1, i + 1)] = -v
        return Quiver(Bt.m, Bt.n, arrows)

    # -- isomorphism and canonical form ---------------------------------------

    def _refined_classes(self) -> Dict[int, Tuple]:
        """Stable vertex coloring: degree profiles refined by neighbor colors
        (Weisfeiler-Leman style).  Colors are isomorphism invariants."""
        color: Dict[int, Tuple] = {
            v: (v <= self.n,) for v in range(1, self.m + 1)
        }
        while True:
            nxt: Dict[int, Tuple] = {}
            for v in range(1, self.m + 1):
                outs = sorted(
                    (mult, color[j]) for (i, j), mult in self.arrows.items() if i == v
                )
                ins = sorted(
                    (mult, color[i]) for (i, j), mult in self.arrows.items() if j == v
                )
                nxt[v] = (color[v], tuple(outs), tuple(ins))
            # compress to keep tuples small
            palette = {c: idx for idx, c in enumerate(sorted(set(nxt.values())))}
            compressed = {v: (v <= self.n, palette[nxt[v]]) for v in nxt}
            if len(set(compressed.values())) == len(set(color.values())):
                return color
            color = compressed

    def canonical_form(self) -> Tuple:
        """Canonical key, invariant under relabelings that preserve the
        mutable/frozen partition.

        Exhaustive minimization over vertex permutations, pruned by grouping
        vertices with equal refined color classes; fine at desk scale.
        """
        color = self._refined_classes()
        groups: Dict[Tuple, List[int]] = {}
        for v in range(1, self.m + 1):
            groups.setdefault(color[v], []).append(v)
        keys = sorted(groups)
        pools = [groups[key] for key in keys]
        best: Optional[Tuple] = None
        # vertices are relabeled group by group with consecutive labels; all
        # within-group arrangements are tried and the least arrow list wins
        for perm_parts in itertools.product(*(itertools.permutations(p) for p in pools)):
            label: Dict[int, int] = {}
            idx = 1
            for part in perm_parts:
                for v in part:
                    label[v] = idx
                    idx += 1
            key = tuple(sorted((label[i], label[j], mult) for (i, j), mult in self.arrows.items()))
            if best is None or key < best:
                best = key
        group_sizes = tuple((k, len(groups[k])) for k in keys)
        return (self.m, self.n, group_sizes, best if best is not None else ())

    def is_isomorphic_to(self, other: "Quiver") -> bool:
        if (self.m, self.n, len(self.arrows)) != (other.m, other.n, len(other.arrows)):
            return False
        return self.canonical_form() == other.canonical_form()

    # -- export ----------------------------------------------------------------

    def to_dot(self, names: Optional[Mapping[int, str]] = None) -> str:
        """DOT export: mutable vertices as circles, frozen as squares."""
        lines = ["digraph quiver {"]
        for v in range(1, self.m + 1):
            shape = "circle" if v <= self.n else "square"
            name = names.get(v, str(v)) if names else str(v)
            lines.append(f'  v{v} [label="{name}", shape={shape}];')
        for (i, j), mult in sorted(self.arrows.items()):
            attr = f' [label="{mult}"]' if mult > 1 else ""
            lines.append(f"  v{i} -> v{j}{attr};")
        lines.append("}")
        return "\n".join(lines)

    def __str__(self) -> str:
        body = ", ".join(
            f"{i}->{j}" + (f"x{mult}" if mult > 1 else "")
            for (i, j), mult in sorted(self.arrows.items())
        )
        return f"Quiver(m={self.m}, n={self.n}, {body})"


def mutate_quiver(Q: Quiver, k: int) -> Quiver:
    return Q.mutate(k)


def quiver_to_matrix(Q: Quiver) -> ExtendedExchangeMatrix:
    return Q.to_matrix()


def matrix_to_quiver(Bt: ExtendedExchangeMatrix) -> Quiver:
    return Quiver.from_matrix(Bt)


def canonical_form(Q: Quiver) -> Tuple:
    return Q.canonical_form()


def are_isomorphic(Q1: Quiver, Q2: Quiver) -> bool:
    return Q1.is_isomorphic_to(Q2)


# -- stock of example quivers --------------------------------------------------


def markov_quiver() -> Quiver:
    """Three mutable vertices, double arrows 1->2->3->1."""
    return Quiver(3, 3, {(1, 2): 2, (2, 3): 2, (3, 1): 2})


def grid_quiver(a: int, b: int) -> Quiver:
    """The a x b grid quiver: each unit square oriented alternately.

    Vertices are (row, col) in row-major order with rows 1..a (bottom to top)
    and columns 1..b; a horizontal edge in row r from column c to c+1 points
    right iff r+c is even, and a vertical edge in column c from row r to r+1
    points up iff r+c is odd.
    """
    if a < 1 or b < 1:
        raise QuiverError("grid sizes must be positive")
    def vid(r: int, c: int) -> int:
        return (r - 1) * b + c
    arrows: Dict[Arrow, int] = {}
    for r in range(1, a + 1):
        for c in range(1, b):
            u, v = vid(r, c), vid(r, c + 1)
            arrows[(u, v) if (r + c) % 2 == 0 else (v, u)] = 1
    for c in range(1, b + 1):
        for r in range(1, a):
            u, v = vid(r, c), vid(r + 1, c)
            arrows[(u, v) if (r + c) % 2 == 1 else (v, u)] = 1
    return Quiver(a * b, a * b, arrows)


def triangulated_grid_quiver(a: int, b: int) -> Quiver:
    """The grid quiver with every square cut by a back-diagonal.

    Rows point right, columns point up, and each square's diagonal runs from
    its top-right corner to its bottom-left corner, making all small triangles
    oriented 3-cycles.
    """
    if a < 1 or b < 1:
        raise QuiverError("grid sizes must be positive")
    def vid(r: int, c: int) -> int:
        return (r - 1) * b + c
    arrows: Dict[Arrow, int] = {}
    for r in range(1, a + 1):
        for c in range(1, b):
            arrows[(vid(r, c), vid(r, c + 1))] = 1
    for c in range(1, b + 1):
        for r in range(1, a):
            arrows[(vid(r, c), vid(r + 1, c))] = 1
    for r in range(1, a):
        for c in range(1, b):
            arrows[(vid(r + 1, c + 1), vid(r, c))] = 1
    return Quiver(a * b, a * b, arrows)


def triangular_grid_quiver(k: int) -> Quiver:
    """Triangular grid with k vertices on each side: binom(k+1,2) vertices,
    3*binom(k,2) arrows, every small triangle an oriented 3-cycle."""
    if k < 1:
        raise QuiverError("side length must be positive")
    ids: Dict[Tuple[int, int], int] = {}
    nxt = 1
    for r in range(k):            # row r (bottom row r=0) has k-r vertices
        for c in range(k - r):
            ids[(r, c)] = nxt
            nxt += 1
    arrows: Dict[Arrow, int] = {}
    for (r, c), v in ids.items():
        if (r, c + 1) in ids:
            arrows[(v, ids[(r, c + 1)])] = 1       # along the row
        if (r + 1, c) in ids:
            arrows[(ids[(r + 1, c)], v)] = 1       # down-left
        if (r + 1, c) in ids and (r, c + 1) in ids:
            arrows[(ids[(r, c + 1)], ids[(r + 1, c)])] = 1  # up-left
    return Quiver(len(ids), len(ids), arrows)


def cycle_quiver(n: int, orientation: Sequence[int] | str = "cyclic") -> Quiver:
    """Orientation of an n-cycle on vertices 1..n.

    `orientation` is either "cyclic" or a length-n sequence over {+1,-1}: entry
    t gives the direction of the edge between t and t+1 (+1 means t -> t+1).
    """
    if n < 3:
        raise QuiverError("a cycle needs at least 3 vertices")
    if orientation == "cyclic":
        orientation = [1] * n
    if len(orientation) != n:
        raise QuiverError("orientation must have one sign per edge")
    arrows: Dict[Arrow, int] = {}
    for t in range(1, n + 1):
        u, v = t, t % n + 1
        s = orientation[t - 1]
        arrows[(u, v) if s > 0 else (v, u)] = 1
    return Quiver(n, n, arrows)


def tree_quiver(edges: Sequence[Tuple[int, int]], orientation: Optional[Sequence[int]] = None) -> Quiver:
    """Orientation of a tree given by its edge list.

    With no orientation given, each edge (u, v) is oriented u -> v; otherwise
    orientation[t] = +1 keeps edge t as given and -1 flips it.
    """
    verts = sorted({v for e in edges for v in e})
    if verts != list(range(1, len(verts) + 1)):
        raise QuiverError("tree vertices must be labeled 1..m")
    if len(edges) != len(verts) - 1:
        raise QuiverError("a tree on m vertices has m-1 edges")
    if orientation is None:
        orientation = [1] * len(edges)
    arrows: Dict[Arrow, int] = {}
    for (u, v), s in zip(edges, orientation):
        arrows[(u, v) if s > 0 else (v, u)] = 1
    return Quiver(len(verts), len(verts), arrows)


DYNKIN_EDGES = {
    "A": lambda r: [(i, i + 1) for i in range(1, r)],
    "D": lambda r: [(i, i + 1) for i in range(1, r - 1)] + [(r - 2, r)],
    "E": lambda r: [(i, i + 1) for i in range(1, r - 1)] + [(3, r)],
}


def dynkin_quiver(type_name: str, orientation: Optional[Sequence[int]] = None) -> Quiver:
    """An orientation of a Dynkin diagram: A_r (r>=1), D_r (r>=4), E_6/7/8."""
    letter, rank = type_name[0].upper(), int(type_name[1:])
    if letter not in DYNKIN_EDGES:
        raise QuiverError(f"unknown Dynkin type {type_name!r}")
    if (letter == "A" and rank < 1) or (letter == "D" and rank < 4) or (
        letter == "E" and rank not in (6, 7, 8)
    ):
        raise QuiverError(f"invalid rank for type {letter}: {rank}")
    if letter == "A" and rank == 1:
        return Quiver(1, 1, {})
    return tree_quiver(DYNKIN_EDGES[letter](rank), orientation)


def somos4_quiver() -> Quiver:
    """The four-vertex quiver driving the Somos-4 recurrence; mutation at
    vertex 1 reproduces it up to a clockwise rotation of the labels."""
    return Quiver(4, 4, {(2, 1): 1, (4, 1): 1, (1, 3): 2, (3, 2): 3, (2, 4): 2, (4, 3): 1})
