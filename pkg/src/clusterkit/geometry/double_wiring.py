"""Double wiring diagrams: shuffles of a thin and a thick reduced word,
chamber minors, chamber quivers, and the three kinds of local moves.

Thick wires are numbered 1..n with 1 entering at the bottom left; thin wires
are numbered with 1 entering at the top left.  A chamber at gap g is labeled
by the pair (thin wires below, thick wires below); the region above all wires
is the chamber of the full pair and is included (its minor is the
determinant), for a total of n^2 chamber minors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from ..quivers import Quiver
from .wiring import is_reduced_w0

THIN = "t"
THICK = "T"

Letter = Tuple[str, int]
DWord = Tuple[Letter, ...]


class DoubleWiringError(ValueError):
    pass


def _commutes(a: Letter, b: Letter) -> bool:
    (c1, i), (c2, j) = a, b
    if c1 == c2:
        return abs(i - j) >= 2
    return i != j


def commutation_class_double(word: DWord) -> Set[DWord]:
    seen = {tuple(word)}
    queue = deque([tuple(word)])
    while queue:
        w = queue.popleft()
        for t in range(len(w) - 1):
            if _commutes(w[t], w[t + 1]):
                v = w[:t] + (w[t + 1], w[t]) + w[t + 2 :]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen


@dataclass(frozen=True)
class DoubleChamber:
    gap: int
    index: int
    thin_below: FrozenSet[int]
    thick_below: FrozenSet[int]
    left_end: Optional[Tuple[int, str]]   # (word position, color)
    right_end: Optional[Tuple[int, str]]

    @property
    def bounded(self) -> bool:
        return self.left_end is not None and self.right_end is not None

    def label(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (tuple(sorted(self.thin_below)), tuple(sorted(self.thick_below)))


@dataclass(frozen=True)
class DoubleWiringDiagram:
    n: int
    word: DWord

    def __post_init__(self):
        thin = [i for (c, i) in self.word if c == THIN]
        thick = [i for (c, i) in self.word if c == THICK]
        if not is_reduced_w0(thin, self.n):
            raise DoubleWiringError("thin subword is not reduced for w0")
        if not is_reduced_w0(thick, self.n):
            raise DoubleWiringError("thick subword is not reduced for w0")

    def canonical_word(self) -> DWord:
        return min(commutation_class_double(self.word))

    def __eq__(self, other):
        if not isinstance(other, DoubleWiringDiagram):
            return NotImplemented
        return self.n == other.n and self.canonical_word() == other.canonical_word()

    def __hash__(self):
        return hash((self.n, self.canonical_word()))

    def chambers(self) -> List[DoubleChamber]:
        """All n^2 chamber minors, including the top (determinant) chamber."""
        n = self.n
        thin_levels = list(range(n, 0, -1))     # thin wire 1 starts on top
        thick_levels = list(range(1, n + 1))    # thick wire 1 starts at bottom
        start: Dict[int, Optional[Tuple[int, str]]] = {g: None for g in range(1, n)}
        counters = {g: 0 for g in range(1, n)}
        out: List[DoubleChamber] = []

        def below(g: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
            return frozenset(thin_levels[:g]), frozenset(thick_levels[:g])

        state = {g: below(g) for g in range(1, n)}
        for t, (color, g) in enumerate(self.word):
            thin_b, thick_b = state[g]
            out.append(
                DoubleChamber(g, counters[g], thin_b, thick_b, start[g], (t, color))
            )
            counters[g] += 1
            start[g] = (t, color)
            levels = thin_levels if color == THIN else thick_levels
            levels[g - 1], levels[g] = levels[g], levels[g - 1]
            state[g] = below(g)
        for g in range(1, n):
            thin_b, thick_b = state[g]
            out.append(DoubleChamber(g, counters[g], thin_b, thick_b, start[g], None))
        full = frozenset(range(1, n + 1))
        out.append(DoubleChamber(n, 0, full, full, None, None))
        out.sort(key=lambda c: (c.gap, c.index))
        return out

    def labeled_quiver(self) -> Tuple[Quiver, Dict[int, DoubleChamber]]:
        chambers = self.chambers()
        total = len(self.word) + 2

        def span(c: DoubleChamber) -> Tuple[float, float]:
            lo = -1.0 if c.left_end is None else float(c.left_end[0])
            hi = float(total) if c.right_end is None else float(c.right_end[0])
            return lo, hi

        def inside(end: Optional[Tuple[int, str]], c: DoubleChamber, color: str) -> bool:
            if end is None or end[1] != color:
                return False
            lo, hi = span(c)
            return lo < end[0] < hi

        def contained(c: DoubleChamber, d: DoubleChamber) -> bool:
            lo_c, hi_c = span(c)
            lo_d, hi_d = span(d)
            return lo_d <= lo_c and hi_c <= hi_d

        def color_of(end: Optional[Tuple[int, str]]) -> Optional[str]:
            return None if end is None else end[1]

        pairs: List[Tuple[DoubleChamber, DoubleChamber]] = []
        for c in chambers:
            for d in chambers:
                if c is d or not (c.bounded or d.bounded):
                    continue
                # (i) right end of c is thick and is the left end of d, or
                #     left end of c is thin and is the right end of d
                if (
                    c.right_end is not None
                    and c.right_end[1] == THICK
                    and c.right_end == d.left_end
                ) or (
                    c.left_end is not None
                    and c.left_end[1] == THIN
                    and c.left_end == d.right_end
                ):
                    pairs.append((c, d))
                    continue
                # (ii) d has thin left end and thick right end and lies
                #      entirely directly above or below c
                if (
                    color_of(d.left_end) == THIN
                    and color_of(d.right_end) == THICK
                    and abs(c.gap - d.gap) == 1
                    and contained(d, c)
                ):
                    pairs.append((c, d))
                    continue
                # (iii) c has thick left end and thin right end and lies
                #       entirely directly above or below d
                if (
                    color_of(c.left_end) == THICK
                    and color_of(c.right_end) == THIN
                    and abs(c.gap - d.gap) == 1
                    and contained(c, d)
                ):
                    pairs.append((c, d))
                    continue
                # (iv) both thin: left end of d above c and right end of c
                #      below d; or both thick: right end of d above c and
                #      left end of c below d
                if d.gap == c.gap + 1 and (
                    (
                        inside(d.left_end, c, THIN)
                        and inside(c.right_end, d, THIN)
                    )
                    or (
                        inside(d.right_end, c, THICK)
                        and inside(c.left_end, d, THICK)
                    )
                ):
                    pairs.append((c, d))
                    continue
                # (v) both thick: left end of c above d and right end of d
                #     below c; or both thin: right end of c above d and left
                #     end of d below c
                if c.gap == d.gap + 1 and (
                    (
                        inside(c.left_end, d, THICK)
                        and inside(d.right_end, c, THICK)
                    )
                    or (
                        inside(c.right_end, d, THIN)
                        and inside(d.left_end, c, THIN)
                    )
                ):
                    pairs.append((c, d))
        bounded = [c for c in chambers if c.bounded]
        unbounded = [c for c in chambers if not c.bounded]
        label: Dict[DoubleChamber, int] = {}
        for idx, c in enumerate(bounded, start=1):
            label[c] = idx
        for idx, c in enumerate(unbounded, start=len(bounded) + 1):
            label[c] = idx
        arrows: Dict[Tuple[int, int], int] = {}
        for c, d in pairs:
            u, v = label[c], label[d]
            if u > len(bounded) and v > len(bounded):
                continue
            arrows[(u, v)] = arrows.get((u, v), 0) + 1
        q = Quiver(len(chambers), len(bounded), arrows)
        return q, {v: c for c, v in label.items()}

    def quiver(self) -> Quiver:
        return self.labeled_quiver()[0]

    def local_moves(self) -> List[Tuple[str, "DoubleWiringDiagram"]]:
        """All local moves modulo isotopy: thin braid, thick braid, and the
        mixed same-gap color swap.  Returns (kind, new diagram) pairs."""
        found: Dict[DWord, Tuple[str, DoubleWiringDiagram]] = {}
        for w in sorted(commutation_class_double(self.word)):
            for t in range(len(w) - 1):
                (c1, i), (c2, j) = w[t], w[t + 1]
                if c1 != c2 and i == j:
                    v = w[:t] + (w[t + 1], w[t]) + w[t + 2 :]
                    nd = DoubleWiringDiagram(self.n, v)
                    found.setdefault(nd.canonical_word(), ("mixed", nd))
            for t in range(len(w) - 2):
                (c1, a), (c2, b), (c3, c) = w[t], w[t + 1], w[t + 2]
                if c1 == c2 == c3 and a == c and abs(a - b) == 1:
                    v = w[:t] + ((c1, b), (c1, a), (c1, b)) + w[t + 3 :]
                    nd = DoubleWiringDiagram(self.n, v)
                    kind = "thin-braid" if c1 == THIN else "thick-braid"
                    found.setdefault(nd.canonical_word(), (kind, nd))
        return list(found.values())


def chambers_of_double_wiring(D: DoubleWiringDiagram) -> List[DoubleChamber]:
    return D.chambers()


def quiver_of_double_wiring(D: DoubleWiringDiagram) -> Quiver:
    return D.quiver()


def local_moves(D: DoubleWiringDiagram) -> List[Tuple[str, DoubleWiringDiagram]]:
    return D.local_moves()


def format_double_word(word: DWord) -> str:
    return ",".join(f"{i}{c}" for (c, i) in word)


def parse_double_word(text: str) -> DWord:
    out: List[Letter] = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        pos, color = part[:-1], part[-1]
        if color not in (THIN, THICK):
            raise DoubleWiringError(f"letter {part!r} must end in t or T")
        out.append((color, int(pos)))
    return tuple(out)


def standard_double_word(n: int) -> DWord:
    """A convenient shuffle: the thin reduced word followed by the thick one."""
    thin: List[Letter] = []
    thick: List[Letter] = []
    for k in range(n - 1, 0, -1):
        for i in range(1, k + 1):
            thin.append((THIN, i))
            thick.append((THICK, i))
    return tuple(thin + thick)


def sl3_demo_word() -> DWord:
    """The standard n = 3 demo diagram: thin 2,1,2 shuffled with thick 1,2,1.

    Its nine chamber minors give the classic 3 x 3 total-positivity test with
    four mutable minors; the SL3 presets and tests start here.
    """
    return (
        (THIN, 2),
        (THICK, 1),
        (THICK, 2),
        (THIN, 1),
        (THIN, 2),
        (THICK, 1),
    )
