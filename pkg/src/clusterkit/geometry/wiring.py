"""Wiring diagrams: reduced words for the longest permutation, chambers,
chamber quivers, and braid moves.

A wiring diagram on n wires is a reduced word for w_0 in the adjacent
transpositions s_1..s_{n-1}; wires are labeled by their left endpoints,
bottom = 1.  Words are considered modulo commutation of distant letters
(|i - j| >= 2), which is an isotopy of the picture.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from ..quivers import Quiver

Word = Tuple[int, ...]


class WiringError(ValueError):
    pass


def apply_word(word: Sequence[int], n: int) -> Tuple[int, ...]:
    """Wire at each level after all crossings; start = identity (level i holds
    wire i)."""
    levels = list(range(1, n + 1))
    for i in word:
        if not 1 <= i <= n - 1:
            raise WiringError(f"letter {i} not in 1..{n - 1}")
        levels[i - 1], levels[i] = levels[i], levels[i - 1]
    return tuple(levels)


def is_reduced_w0(word: Sequence[int], n: int) -> bool:
    if len(word) != n * (n - 1) // 2:
        return False
    return apply_word(word, n) == tuple(range(n, 0, -1))


def commutation_class(word: Word) -> Set[Word]:
    """All words reachable by swapping adjacent distant letters."""
    seen = {tuple(word)}
    queue = deque([tuple(word)])
    while queue:
        w = queue.popleft()
        for t in range(len(w) - 1):
            if abs(w[t] - w[t + 1]) >= 2:
                v = w[:t] + (w[t + 1], w[t]) + w[t + 2 :]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen


def reduced_words_w0(n: int) -> List[Word]:
    """All reduced words for the longest permutation in S_n (n <= 5 sane)."""
    target = tuple(range(n, 0, -1))
    length = n * (n - 1) // 2
    out: List[Word] = []

    def extend(word: List[int], levels: Tuple[int, ...], inversions: int):
        if inversions == length:
            out.append(tuple(word))
            return
        for i in range(1, n):
            # only crossings that create a new inversion keep the word reduced
            if levels[i - 1] < levels[i]:
                nxt = list(levels)
                nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
                word.append(i)
                extend(word, tuple(nxt), inversions + 1)
                word.pop()

    extend([], tuple(range(1, n + 1)), 0)
    return out


@dataclass(frozen=True)
class Chamber:
    gap: int                 # between wire levels gap and gap+1
    index: int               # position along the gap, 0-based
    lines_below: FrozenSet[int]
    left_end: Optional[int]  # crossing number in the word, or None
    right_end: Optional[int]

    @property
    def bounded(self) -> bool:
        return self.left_end is not None and self.right_end is not None

    def label(self) -> Tuple[int, ...]:
        return tuple(sorted(self.lines_below))


@dataclass(frozen=True)
class WiringDiagram:
    n: int
    word: Word

    def __post_init__(self):
        if not is_reduced_w0(self.word, self.n):
            raise WiringError(f"{self.word} is not a reduced word for w0 in S_{self.n}")

    def canonical_word(self) -> Word:
        return min(commutation_class(self.word))

    def __eq__(self, other):
        if not isinstance(other, WiringDiagram):
            return NotImplemented
        return self.n == other.n and self.canonical_word() == other.canonical_word()

    def __hash__(self):
        return hash((self.n, self.canonical_word()))

    def chambers(self) -> List[Chamber]:
        """All chamber minors: every chamber except the empty bottom region and
        the full top region; count (n-1)(n+2)/2."""
        n = self.n
        levels = list(range(1, n + 1))
        # current chamber start (crossing index) per gap
        start: Dict[int, Optional[int]] = {g: None for g in range(1, n)}
        below: Dict[int, FrozenSet[int]] = {
            g: frozenset(levels[:g]) for g in range(1, n)
        }
        counters = {g: 0 for g in range(1, n)}
        out: List[Chamber] = []
        for t, i in enumerate(self.word):
            out.append(Chamber(i, counters[i], below[i], start[i], t))
            counters[i] += 1
            start[i] = t
            levels[i - 1], levels[i] = levels[i], levels[i - 1]
            below[i] = frozenset(levels[:i])
        for g in range(1, n):
            out.append(Chamber(g, counters[g], below[g], start[g], None))
        out.sort(key=lambda c: (c.gap, c.index))
        return out

    def chamber_sets(self) -> List[Tuple[int, ...]]:
        return [c.label() for c in self.chambers()]

    def labeled_quiver(self) -> Tuple[Quiver, Dict[int, Chamber]]:
        """The chamber quiver Q(D) plus vertex-label -> chamber map."""
        chambers = self.chambers()
        arrows = _chamber_arrows(chambers)
        return _build_quiver(chambers, arrows)

    def quiver(self) -> Quiver:
        return self.labeled_quiver()[0]

    def braid_moves(self) -> List[Tuple[Word, "WiringDiagram"]]:
        """All braid moves available on the commutation class.

        Returns (representative word with the move applied at a visible
        position, resulting diagram); one entry per resulting diagram per
        exchanged chamber.
        """
        found: Dict[Tuple, Tuple[Word, WiringDiagram]] = {}
        for w in sorted(commutation_class(self.word)):
            for t in range(len(w) - 2):
                a, b, c = w[t : t + 3]
                if a == c and abs(a - b) == 1:
                    v = w[:t] + (b, a, b) + w[t + 3 :]
                    nd = WiringDiagram(self.n, v)
                    key = (nd.canonical_word(),)
                    if key not in found:
                        found[key] = (v, nd)
        return list(found.values())


def _chamber_arrows(chambers):
    """Arrows between chambers per the local end conditions (single color).

    Conditions: (i) right end of c = left end of c'; (ii) left end of c lies
    directly above c' and right end of c' directly below c; (iii) left end of
    c directly below c' and right end of c' directly above c.
    """
    total = max((c.right_end or 0) for c in chambers) + 2 if chambers else 1

    def span(c: Chamber) -> Tuple[float, float]:
        lo = -1.0 if c.left_end is None else float(c.left_end)
        hi = float(total) if c.right_end is None else float(c.right_end)
        return lo, hi

    def inside(x: Optional[int], c: Chamber) -> bool:
        if x is None:
            return False
        lo, hi = span(c)
        return lo < x < hi

    arrows = []
    for c in chambers:
        for d in chambers:
            if c is d or not (c.bounded or d.bounded):
                continue
            # (i)
            if c.right_end is not None and c.right_end == d.left_end and c.gap == d.gap:
                arrows.append((c, d))
                continue
            # (ii): left end of c directly above d, right end of d directly below c
            if (
                c.gap == d.gap + 1
                and inside(c.left_end, d)
                and inside(d.right_end, c)
            ):
                arrows.append((c, d))
                continue
            # (iii): left end of c directly below d, right end of d directly above c
            if (
                c.gap + 1 == d.gap
                and inside(c.left_end, d)
                and inside(d.right_end, c)
            ):
                arrows.append((c, d))
    return arrows


def _build_quiver(chambers, arrow_pairs):
    bounded = [c for c in chambers if c.bounded]
    unbounded = [c for c in chambers if not c.bounded]
    label: Dict[Chamber, int] = {}
    for idx, c in enumerate(bounded, start=1):
        label[c] = idx
    for idx, c in enumerate(unbounded, start=len(bounded) + 1):
        label[c] = idx
    arrows: Dict[Tuple[int, int], int] = {}
    for c, d in arrow_pairs:
        u, v = label[c], label[d]
        if u > len(bounded) and v > len(bounded):
            continue
        arrows[(u, v)] = arrows.get((u, v), 0) + 1
    q = Quiver(len(chambers), len(bounded), arrows)
    return q, {v: c for c, v in label.items()}


def chambers_of_wiring(D: WiringDiagram) -> List[Chamber]:
    return D.chambers()


def quiver_of_wiring(D: WiringDiagram) -> Quiver:
    return D.quiver()


def braid_moves(D: WiringDiagram) -> List[Tuple[Word, WiringDiagram]]:
    return D.braid_moves()


def parse_word(text: str) -> Word:
    return tuple(int(v) for v in text.replace(" ", "").split(",") if v)
