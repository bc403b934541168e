"""Disk-embedded bipartite graphs, their face quivers, urban renewal, and
degree-2 contraction.

The embedding is carried combinatorially: every face (boundary regions
included) is given as its vertex cycle, oriented counterclockwise, i.e. with
the face's interior on the left of each directed boundary edge.  Boundary
faces are open walks whose closing segment runs along the disk boundary.
Graphs stay simple at this desk scale; operations that would create parallel
edges raise instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Set, Tuple

from ..quivers import Quiver

BLACK = "b"
WHITE = "w"


class BipartiteError(ValueError):
    pass


@dataclass
class DiskBipartiteGraph:
    colors: Dict[int, str]
    boundary_vertices: Set[int]
    edges: Set[Tuple[int, int]]  # sorted pairs
    faces: Dict[int, Tuple[int, ...]]  # face id -> ccw vertex cycle
    boundary_faces: Set[int]

    def __post_init__(self):
        self.edges = {tuple(sorted(e)) for e in self.edges}
        self.faces = {f: tuple(cyc) for f, cyc in self.faces.items()}
        self.validate()

    # -- structure checks ---------------------------------------------------

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def validate(self) -> None:
        for (u, v) in self.edges:
            if self.colors[u] == self.colors[v]:
                raise BipartiteError(f"edge {u}-{v} joins same-colored vertices")
        for v in self.colors:
            deg = self.degree(v)
            if v in self.boundary_vertices:
                if deg != 1:
                    raise BipartiteError(f"boundary vertex {v} has degree {deg}")
            elif deg < 2:
                raise BipartiteError(f"interior vertex {v} has degree {deg}")
        for f, cyc in self.faces.items():
            pairs = list(zip(cyc, cyc[1:]))
            if f not in self.boundary_faces:
                pairs.append((cyc[-1], cyc[0]))
            for (u, v) in pairs:
                if tuple(sorted((u, v))) not in self.edges:
                    raise BipartiteError(f"face {f} uses the missing edge {u}-{v}")
        # every edge is traversed once in each direction across all faces
        seen: Dict[Tuple[int, int], int] = {}
        for f, cyc in self.faces.items():
            for (u, v) in self._directed(f):
                seen[(u, v)] = seen.get((u, v), 0) + 1
        for (u, v) in self.edges:
            if seen.get((u, v), 0) != 1 or seen.get((v, u), 0) != 1:
                raise BipartiteError(f"edge {u}-{v} is not traversed consistently")

    def _directed(self, f: int) -> List[Tuple[int, int]]:
        cyc = self.faces[f]
        pairs = list(zip(cyc, cyc[1:]))
        if f not in self.boundary_faces:
            pairs.append((cyc[-1], cyc[0]))
        return pairs

    # -- the face quiver -----------------------------------------------------

    def labeled_quiver(self) -> Tuple[Quiver, Dict[int, int]]:
        """Q(G) plus the map quiver-vertex -> face id.

        Faces are quiver vertices; faces incident to the disk boundary are
        frozen.  For an edge traversed u -> v by face f, the arrow crossing it
        leaves f exactly when v is white; 2-cycles cancel.
        """
        mutable = sorted(f for f in self.faces if f not in self.boundary_faces)
        frozen = sorted(self.boundary_faces)
        label = {f: i + 1 for i, f in enumerate(mutable + frozen)}
        nmut = len(mutable)
        net: Dict[Tuple[int, int], int] = {}
        side: Dict[Tuple[int, int], int] = {}
        for f in self.faces:
            for (u, v) in self._directed(f):
                side[(u, v)] = f
        for (u, v) in self.edges:
            f_uv = side.get((u, v))
            f_vu = side.get((v, u))
            if f_uv is None or f_vu is None or f_uv == f_vu:
                raise BipartiteError(f"edge {u}-{v} does not separate two faces")
            src, dst = (f_uv, f_vu) if self.colors[v] == WHITE else (f_vu, f_uv)
            a, b = label[src], label[dst]
            if a > nmut and b > nmut:
                continue
            net[(a, b)] = net.get((a, b), 0) + 1
        arrows: Dict[Tuple[int, int], int] = {}
        for (a, b), mult in net.items():
            back = net.get((b, a), 0)
            if mult > back:
                arrows[(a, b)] = mult - back
        q = Quiver(len(self.faces), nmut, arrows)
        return q, {i + 1: f for i, f in enumerate(mutable + frozen)}

    def quiver(self) -> Quiver:
        return self.labeled_quiver()[0]

    # -- moves -----------------------------------------------------------------

    def urban_renewal(self, face_id: int) -> "DiskBipartiteGraph":
        """Shrink a quadrilateral face: remove its four boundary edges, add an
        inner square of four new opposite-colored vertices joined by spokes to
        the old corners.  Requires all four corners to have degree >= 3."""
        if face_id in self.boundary_faces:
            raise BipartiteError("urban renewal needs an interior face")
        cyc = self.faces[face_id]
        if len(cyc) != 4:
            raise BipartiteError("urban renewal needs a quadrilateral face")
        if any(self.degree(v) < 3 for v in cyc):
            raise BipartiteError("all four corners must have degree >= 3")
        nxt = max(self.colors) + 1
        inner = {c: nxt + i for i, c in enumerate(cyc)}
        colors = dict(self.colors)
        for c in cyc:
            colors[inner[c]] = WHITE if self.colors[c] == BLACK else BLACK
        old_edges = {tuple(sorted((cyc[i], cyc[(i + 1) % 4]))) for i in range(4)}
        edges = (self.edges - old_edges) | {
            tuple(sorted((c, inner[c]))) for c in cyc
        } | {
            tuple(sorted((inner[cyc[i]], inner[cyc[(i + 1) % 4]]))) for i in range(4)
        }
        faces: Dict[int, Tuple[int, ...]] = {}
        for f, walk in self.faces.items():
            if f == face_id:
                faces[f] = tuple(inner[c] for c in cyc)
                continue
            out: List[int] = []
            L = len(walk)
            closed = f not in self.boundary_faces
            for idx, v in enumerate(walk):
                out.append(v)
                w = walk[(idx + 1) % L]
                if (not closed) and idx == L - 1:
                    break
                if tuple(sorted((v, w))) in old_edges:
                    # reroute through the inner square: v, inner[v], inner[w], w
                    out.extend([inner[v], inner[w]])
            faces[f] = tuple(out)
        return DiskBipartiteGraph(colors, set(self.boundary_vertices), edges, faces, set(self.boundary_faces))

    def contract_degree2(self, v: int) -> "DiskBipartiteGraph":
        """Delete a degree-2 interior vertex and contract its two edges,
        merging its neighbors (same color) into one vertex."""
        if v in self.boundary_vertices or self.degree(v) != 2:
            raise BipartiteError("contraction needs an interior degree-2 vertex")
        nbrs = sorted({u for e in self.edges if v in e for u in e if u != v})
        if len(nbrs) != 2:
            raise BipartiteError("parallel edges at the contracted vertex")
        a, b = nbrs
        if self.colors[a] != self.colors[b]:
            raise BipartiteError("neighbors of a degree-2 vertex must share a color")
        colors = {u: c for u, c in self.colors.items() if u not in (v, b)}
        boundary = {u for u in self.boundary_vertices if u != b} | (
            {a} if b in self.boundary_vertices else set()
        )
        edges: Set[Tuple[int, int]] = set()
        for (x, y) in self.edges:
            if v in (x, y):
                continue
            x2 = a if x == b else x
            y2 = a if y == b else y
            e = tuple(sorted((x2, y2)))
            if e in edges:
                raise BipartiteError("contraction would create a parallel edge")
            edges.add(e)
        faces: Dict[int, Tuple[int, ...]] = {}
        for f, walk in self.faces.items():
            renamed = [a if u == b else u for u in walk if u != v]
            out: List[int] = []
            for u in renamed:
                if out and out[-1] == u:
                    continue
                out.append(u)
            if len(out) > 1 and out[0] == out[-1] and f not in self.boundary_faces:
                out.pop()
            faces[f] = tuple(out)
        return DiskBipartiteGraph(colors, boundary, edges, faces, set(self.boundary_faces))

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": [
                    {"id": v, "color": c, "boundary": v in self.boundary_vertices}
                    for v, c in sorted(self.colors.items())
                ],
                "edges": sorted([list(e) for e in self.edges]),
                "faces": [
                    {
                        "id": f,
                        "cycle": list(cyc),
                        "boundary": f in self.boundary_faces,
                    }
                    for f, cyc in sorted(self.faces.items())
                ],
            }
        )

    @staticmethod
    def from_json(text: str) -> "DiskBipartiteGraph":
        doc = json.loads(text)
        colors = {int(v["id"]): v["color"] for v in doc["vertices"]}
        boundary = {int(v["id"]) for v in doc["vertices"] if v["boundary"]}
        edges = {tuple(sorted((int(a), int(b)))) for a, b in doc["edges"]}
        faces = {int(f["id"]): tuple(int(x) for x in f["cycle"]) for f in doc["faces"]}
        bfaces = {int(f["id"]) for f in doc["faces"] if f["boundary"]}
        return DiskBipartiteGraph(colors, boundary, edges, faces, bfaces)


def urban_renewal(G: DiskBipartiteGraph, face_id: int) -> DiskBipartiteGraph:
    return G.urban_renewal(face_id)


def quiver_of_bipartite(G: DiskBipartiteGraph) -> Quiver:
    return G.quiver()


def contract_degree2(G: DiskBipartiteGraph, v: int) -> DiskBipartiteGraph:
    return G.contract_degree2(v)


def grid_disk_graph(rows: int, cols: int) -> DiskBipartiteGraph:
    """A (rows x cols)-face grid properly embedded in a disk, every perimeter
    vertex attached to the boundary by a leg.

    Vertex (i, j) sits at coordinates x = j, y = i and is white when i + j is
    even.  Interior faces are the unit squares (counterclockwise); boundary
    regions run between consecutive legs, ordered clockwise around the grid.
    """
    if rows < 1 or cols < 1:
        raise BipartiteError("grid needs positive dimensions")

    def vid(i: int, j: int) -> int:
        return i * (cols + 1) + j + 1

    colors: Dict[int, str] = {}
    for i in range(rows + 1):
        for j in range(cols + 1):
            colors[vid(i, j)] = WHITE if (i + j) % 2 == 0 else BLACK
    edges: Set[Tuple[int, int]] = set()
    for i in range(rows + 1):
        for j in range(cols):
            edges.add(tuple(sorted((vid(i, j), vid(i, j + 1)))))
    for i in range(rows):
        for j in range(cols + 1):
            edges.add(tuple(sorted((vid(i, j), vid(i + 1, j)))))
    faces: Dict[int, Tuple[int, ...]] = {}
    fid = 1
    for i in range(rows):
        for j in range(cols):
            faces[fid] = (vid(i, j), vid(i, j + 1), vid(i + 1, j + 1), vid(i + 1, j))
            fid += 1
    # perimeter in clockwise order starting at the top-left corner
    perim: List[int] = []
    for j in range(cols + 1):
        perim.append(vid(rows, j))
    for i in range(rows - 1, -1, -1):
        perim.append(vid(i, cols))
    for j in range(cols - 1, -1, -1):
        perim.append(vid(0, j))
    for i in range(1, rows):
        perim.append(vid(i, 0))
    base = (rows + 1) * (cols + 1)
    legs = {q: base + t + 1 for t, q in enumerate(perim)}
    for q, bv in legs.items():
        colors[bv] = WHITE if colors[q] == BLACK else BLACK
        edges.add(tuple(sorted((q, bv))))
    boundary_vertices = set(legs.values())
    boundary_faces: Set[int] = set()
    P = len(perim)
    for t in range(P):
        q1, q2 = perim[t], perim[(t + 1) % P]
        faces[fid] = (legs[q1], q1, q2, legs[q2])
        boundary_faces.add(fid)
        fid += 1
    return DiskBipartiteGraph(colors, boundary_vertices, edges, faces, boundary_faces)
