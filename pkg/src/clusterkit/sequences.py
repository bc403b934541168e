"""Number-theoretic showcases: Somos sequences, Fordy-Marsh recurrences,
Markov triples, and the Fermat factorization demonstration.

Numeric sequences run on exact rationals with an integrality assertion; a
failed assertion would expose an engine bug, since the Laurent phenomenon
guarantees integer values here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .laurent import LaurentPolynomial
from .matrices import ExtendedExchangeMatrix, freeze
from .quivers import somos4_quiver
from .seeds import Seed, initial_seed, mutate_seed


class SequenceError(ValueError):
    pass


def _assert_integers(values: Sequence[Fraction], label: str) -> List[int]:
    out = []
    for v in values:
        if v.denominator != 1:
            raise SequenceError(f"{label} produced a non-integer term {v}")
        out.append(int(v))
    return out


def somos4_terms(count: int) -> List[int]:
    """z_0, ..., z_{count-1} with z_{m+2} z_{m-2} = z_{m+1} z_{m-1} + z_m^2."""
    vals: List[Fraction] = [Fraction(1)] * min(4, count)
    while len(vals) < count:
        m = len(vals)
        vals.append((vals[m - 1] * vals[m - 3] + vals[m - 2] ** 2) / vals[m - 4])
    return _assert_integers(vals, "Somos-4")


def somos5_terms(count: int) -> List[int]:
    """z_1, ..., z_count with z_m z_{m+5} = z_{m+1} z_{m+4} + z_{m+2} z_{m+3}."""
    vals: List[Fraction] = [Fraction(1)] * min(5, count)
    while len(vals) < count:
        m = len(vals)
        vals.append((vals[m - 1] * vals[m - 4] + vals[m - 2] * vals[m - 3]) / vals[m - 5])
    return _assert_integers(vals, "Somos-5")


SOMOS4_COEFF_ROWS = ((1, 1, -1, -1), (-1, 0, 0, 1))


def somos4_matrix(with_coeffs: bool = False) -> ExtendedExchangeMatrix:
    """Exchange matrix of the Somos-4 quiver, optionally extended by the two
    frozen rows that put coefficients a, b on the recurrence."""
    rows = list(somos4_quiver().to_matrix().rows)
    if with_coeffs:
        rows.extend(SOMOS4_COEFF_ROWS)
    return ExtendedExchangeMatrix(freeze(rows), 4)


def somos4_symbolic(k: int, with_coeffs: bool = False) -> LaurentPolynomial:
    """Term z_k expanded over the initial cluster (z_0..z_3 = x1..x4), with
    frozen a = x5, b = x6 when with_coeffs is set.

    Runs the seed pattern of the Somos-4 quiver under the cyclic mutation word
    1, 2, 3, 4, 1, ...; each mutation performs one step of the recurrence.
    """
    if k < 0:
        raise SequenceError("term index must be nonnegative")
    Bt = somos4_matrix(with_coeffs)
    if k < 4:
        return LaurentPolynomial.variable(k + 1, Bt.m)
    s = initial_seed(Bt)
    for step in range(k - 3):
        s = mutate_seed(s, step % 4 + 1)
    return s.cluster[(k - 4) % 4]


def fordy_marsh_matrix(a: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """The skew-symmetric matrix whose mutation at 1 is its cyclic shift.

    `a` is a palindromic integer vector of length n-1; the first column is
    b_{i1} = a_{i-1} and the rest follows the closed form.
    """
    a = [int(v) for v in a]
    n = len(a) + 1
    if any(a[i] != a[n - 2 - i] for i in range(len(a))):
        raise SequenceError("coefficient vector must be palindromic")

    def pos(v: int) -> int:
        return v if v > 0 else 0

    rows = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, i):
            val = a[i - j - 1]
            for k in range(1, j):
                val += pos(-a[i - k - 1]) * pos(a[j - k - 1]) - pos(a[i - k - 1]) * pos(
                    -a[j - k - 1]
                )
            rows[i - 1][j - 1] = val
            rows[j - 1][i - 1] = -val
    return freeze(rows)


SOMOS5_MATRIX = freeze(
    [
        [0, -1, 1, 1, -1],
        [1, 0, -2, 0, 1],
        [-1, 2, 0, -2, 1],
        [-1, 0, 2, 0, -1],
        [1, -1, -1, 1, 0],
    ]
)


def somos5_symbolic(k: int) -> LaurentPolynomial:
    """Term z_k (1-based, z_1..z_5 initial) expanded over the initial cluster."""
    if k < 1:
        raise SequenceError("Somos-5 terms are 1-based")
    Bt = ExtendedExchangeMatrix(SOMOS5_MATRIX, 5)
    if k <= 5:
        return LaurentPolynomial.variable(k, 5)
    s = initial_seed(Bt)
    for step in range(k - 5):
        s = mutate_seed(s, step % 5 + 1)
    return s.cluster[(k - 6) % 5]


def gale_robinson_terms(count: int) -> List[int]:
    """z_{m+3} z_m = z_{m+2} z_{m+1} + 1 with z_0 = z_1 = z_2 = 1."""
    vals: List[Fraction] = [Fraction(1)] * min(3, count)
    while len(vals) < count:
        m = len(vals)
        vals.append((vals[m - 1] * vals[m - 2] + 1) / vals[m - 3])
    return _assert_integers(vals, "three-term recurrence")


# -- Markov triples ----------------------------------------------------------------


@dataclass(frozen=True)
class MarkovTriple:
    x1: int
    x2: int
    x3: int

    def __post_init__(self):
        if min(self.x1, self.x2, self.x3) < 1:
            raise SequenceError("Markov triples are positive")
        if self.x1 ** 2 + self.x2 ** 2 + self.x3 ** 2 != 3 * self.x1 * self.x2 * self.x3:
            raise SequenceError(f"{(self.x1, self.x2, self.x3)} fails the Markov equation")

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.x1, self.x2, self.x3)

    def sorted_tuple(self) -> Tuple[int, int, int]:
        return tuple(sorted(self.as_tuple()))

    def mutate(self, k: int) -> "MarkovTriple":
        """Vieta exchange at position k (1-based)."""
        vals = list(self.as_tuple())
        others = [v for i, v in enumerate(vals) if i != k - 1]
        new = (others[0] ** 2 + others[1] ** 2) // vals[k - 1]
        if new * vals[k - 1] != others[0] ** 2 + others[1] ** 2:
            raise SequenceError("Vieta exchange failed to stay integral")
        vals[k - 1] = new
        return MarkovTriple(*vals)


def markov_invariant(triple: Sequence[int]) -> Fraction:
    x1, x2, x3 = (Fraction(v) for v in triple)
    return (x1 ** 2 + x2 ** 2 + x3 ** 2) / (x1 * x2 * x3)


@dataclass
class MarkovTree:
    """Levels of distinct Markov triples grown from (1, 1, 1).

    levels[0] = [(1,1,1)]; each next level holds the previously unseen triples
    reachable by one Vieta exchange.  markov_tree(d) generates d + 1 levels
    beyond the root, which matches the usual picture of the tree: the frontier
    of markov_tree(3) is the third branching column.
    """

    levels: List[List[MarkovTriple]]
    duplicate_maxima: List[Tuple[int, int, int]]

    def all_triples(self) -> List[MarkovTriple]:
        return [t for level in self.levels for t in level]

    def frontier(self) -> List[MarkovTriple]:
        return self.levels[-1]


def markov_tree(depth: int) -> MarkovTree:
    if depth < 0:
        raise SequenceError("depth must be nonnegative")
    root = MarkovTriple(1, 1, 1)
    seen = {root.sorted_tuple()}
    levels = [[root]]
    maxima_seen: Dict[int, Tuple[int, int, int]] = {1: root.sorted_tuple()}
    duplicates: List[Tuple[int, int, int]] = []
    for _ in range(depth + 1):
        nxt: List[MarkovTriple] = []
        for t in levels[-1]:
            for k in (1, 2, 3):
                child = t.mutate(k)
                key = child.sorted_tuple()
                if key in seen:
                    continue
                seen.add(key)
                top = key[2]
                if top in maxima_seen and maxima_seen[top] != key:
                    duplicates.append(key)
                maxima_seen.setdefault(top, key)
                nxt.append(child)
        levels.append(nxt)
    return MarkovTree(levels, duplicates)


# -- the Fermat number demonstration --------------------------------------------------


FERMAT_MATRIX = freeze([[0, 4], [-1, 0], [1, -3]])
FERMAT_POINT = (Fraction(3), Fraction(-1), Fraction(16))


@dataclass(frozen=True)
class FermatReport:
    specialized: Tuple[int, ...]
    f5: int
    factor: int
    cofactor: int

    def holds(self) -> bool:
        return (
            self.f5 == self.factor * self.cofactor
            and self.specialized[-1] == -self.cofactor
        )


def fermat_demo(steps: int = 4) -> FermatReport:
    """Alternate mu_1, mu_2 on the seed with extended matrix [[0,4],[-1,0],[1,-3]]
    and specialize at (3, -1, 16); the last value exhibits 2^32 + 1 = 641 * 6700417."""
    Bt = ExtendedExchangeMatrix(FERMAT_MATRIX, 2)
    s = initial_seed(Bt)
    values: List[int] = []
    for step in range(steps):
        k = step % 2 + 1
        s = mutate_seed(s, k)
        v = s.cluster[k - 1].eval_rational(FERMAT_POINT)
        if v.denominator != 1:
            raise SequenceError("Fermat demo specialization must be integral")
        values.append(int(v))
    f5 = 2 ** 32 + 1
    return FermatReport(tuple(values), f5, 641, 6700417)
