"""Extended skew-symmetrizable integer matrices and their mutation dynamics.

Matrices are immutable tuples of row tuples.  An extended exchange matrix is
m x n with a skew-symmetrizable top n x n block; mutation in a direction
k (1-based, k <= n) follows the standard rule: negate row and column k, and
correct the remaining entries by b_ik*b_kj when both factors have the same
strict sign through k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

IntMatrix = Tuple[Tuple[int, ...], ...]


class MatrixError(ValueError):
    pass


def freeze(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def check_skew_symmetrizable(B: Sequence[Sequence[int]]) -> Optional[Tuple[int, ...]]:
    """Return a normalized skew-symmetrizing vector d, or None.

    d is a vector of positive integers with d_i b_ij = -d_j b_ji; it is
    normalized to have gcd 1 on every connected component of the diagram of B
    and is found by propagating d_j = d_i * |b_ij| / |b_ji| along edges, then
    consistency-checking every edge.
    """
    B = freeze(B)
    n = len(B)
    if any(len(row) != n for row in B):
        return None
    for i in range(n):
        if B[i][i] != 0:
            return None
        for j in range(n):
            if (B[i][j] == 0) != (B[j][i] == 0):
                return None
            if B[i][j] != 0 and B[i][j] * B[j][i] > 0:
                return None
    d: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if B[i][j] == 0:
                    continue
                dj = d[i] * abs(B[i][j]) / abs(B[j][i])
                if d[j] is None:
                    d[j] = dj
                    component.append(j)
                    stack.append(j)
        # scale the component to coprime positive integers
        denom = math.lcm(*(d[i].denominator for i in component))
        scaled = [d[i] * denom for i in component]
        g = math.gcd(*(int(v) for v in scaled))
        for i, v in zip(component, scaled):
            d[i] = Fraction(int(v) // g)
    # verify every edge with the integer vector
    dv = tuple(int(x) for x in d)
    for i in range(n):
        for j in range(n):
            if dv[i] * B[i][j] != -dv[j] * B[j][i]:
                return None
    return dv


@dataclass(frozen=True)
class ExtendedExchangeMatrix:
    """m x n integer matrix whose top n x n block is skew-symmetrizable."""

    rows: IntMatrix
    n: int

    def __post_init__(self):
        object.__setattr__(self, "rows", freeze(self.rows))
        if self.n < 1 or self.m < self.n:
            raise MatrixError("need m >= n >= 1")
        if any(len(row) != self.n for row in self.rows):
            raise MatrixError("all rows must have length n")
        if check_skew_symmetrizable(self.top()) is None:
            raise MatrixError("top block is not skew-symmetrizable")

    @property
    def m(self) -> int:
        return len(self.rows)

    def top(self) -> IntMatrix:
        return self.rows[: self.n]

    def entry(self, i: int, j: int) -> int:
        """b_ij with 1-based indices (i <= m, j <= n)."""
        return self.rows[i - 1][j - 1]

    def skew_symmetrizing_vector(self) -> Tuple[int, ...]:
        d = check_skew_symmetrizable(self.top())
        assert d is not None
        return d

    def is_skew_symmetric(self) -> bool:
        B = self.top()
        return all(B[i][j] == -B[j][i] for i in range(self.n) for j in range(self.n))

    def mutate(self, k: int) -> "ExtendedExchangeMatrix":
        if not 1 <= k <= self.n:
            raise MatrixError(f"mutation direction {k} not in 1..{self.n}")
        return ExtendedExchangeMatrix(mutate_int_matrix(self.rows, k), self.n)

    def permuted(self, perm: Sequence[int]) -> "ExtendedExchangeMatrix":
        """Relabel mutable indices: perm maps old 1-based index -> new index.

        Frozen rows keep their order; only their columns are permuted.
        """
        n, m = self.n, self.m
        if sorted(perm) != list(range(1, n + 1)):
            raise MatrixError("perm must be a permutation of 1..n")
        new = [[0] * n for _ in range(m)]
        for i in range(m):
            for j in range(n):
                ni = perm[i] - 1 if i < n else i
                nj = perm[j] - 1
                new[ni][nj] = self.rows[i][j]
        return ExtendedExchangeMatrix(freeze(new), n)

    def __str__(self) -> str:
        return format_matrix(self.rows)


def mutate_int_matrix(rows: Sequence[Sequence[int]], k: int) -> IntMatrix:
    """Matrix mutation at direction k (1-based) on a plain integer matrix."""
    B = freeze(rows)
    m = len(B)
    n = len(B[0]) if m else 0
    kk = k - 1
    out = [list(row) for row in B]
    for i in range(m):
        for j in range(n):
            if i == kk or j == kk:
                out[i][j] = -B[i][j]
            elif B[i][kk] > 0 and B[kk][j] > 0:
                out[i][j] = B[i][j] + B[i][kk] * B[kk][j]
            elif B[i][kk] < 0 and B[kk][j] < 0:
                out[i][j] = B[i][j] - B[i][kk] * B[kk][j]
    return freeze(out)


def mutate_matrix(Bt: ExtendedExchangeMatrix, k: int) -> ExtendedExchangeMatrix:
    return Bt.mutate(k)


@dataclass(frozen=True)
class WeightedDiagram:
    """Weighted directed graph Gamma(B): edge i->j of weight |b_ij b_ji|."""

    n: int
    edges: Tuple[Tuple[int, int, int], ...]  # (i, j, weight), 1-based, sorted

    def __str__(self) -> str:
        body = ", ".join(f"{i}->{j}[{w}]" for i, j, w in self.edges)
        return f"Diagram(n={self.n}, {body})"


def diagram_of(B: Sequence[Sequence[int]]) -> WeightedDiagram:
    B = freeze(B)
    if check_skew_symmetrizable(B) is None:
        raise MatrixError("matrix is not skew-symmetrizable")
    n = len(B)
    edges = []
    for i in range(n):
        for j in range(n):
            if B[i][j] > 0:
                edges.append((i + 1, j + 1, abs(B[i][j] * B[j][i])))
    return WeightedDiagram(n, tuple(sorted(edges)))


@dataclass(frozen=True)
class SignedRadical:
    """Exact value sgn * sqrt(radicand) with integer radicand >= 0."""

    sign: int
    radicand: int

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise MatrixError("sign must be -1, 0 or 1")
        if self.radicand < 0:
            raise MatrixError("radicand must be nonnegative")
        if (self.sign == 0) != (self.radicand == 0):
            raise MatrixError("sign is zero exactly when the radicand is zero")

    @staticmethod
    def zero() -> "SignedRadical":
        return SignedRadical(0, 0)

    @staticmethod
    def of_int(v: int) -> "SignedRadical":
        if v == 0:
            return SignedRadical.zero()
        return SignedRadical(1 if v > 0 else -1, v * v)

    def __neg__(self) -> "SignedRadical":
        return SignedRadical(-self.sign, self.radicand)

    def __mul__(self, other: "SignedRadical") -> "SignedRadical":
        s = self.sign * other.sign
        return SignedRadical(s, self.radicand * other.radicand if s else 0)

    def plus(self, other: "SignedRadical") -> "SignedRadical":
        """Addition restricted to the cases arising in mutation.

        b_ij + b_ik*b_kj stays inside the signed-radical world whenever the
        radicals are commensurable; mutation of a skew-symmetrization only ever
        adds commensurable values, so anything else is an error.
        """
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        # commensurable: radicand ratio is a perfect square of a rational
        a, b = self.radicand, other.radicand
        g = math.gcd(a, b)
        ra, rb = a // g, b // g
        sa, sb = math.isqrt(ra), math.isqrt(rb)
        if sa * sa != ra or sb * sb != rb:
            raise MatrixError("adding incommensurable radicals")
        # write both as multiples of sqrt(g * ra * rb / (ra*rb)) ... use
        # sqrt(a) = sa * sqrt(g*rb') trick: common base is g*ra*rb over square
        base = g  # a = ra*g, sqrt(a) = sa*sqrt(g) only if ra=sa^2: yes
        coeff = self.sign * sa + other.sign * sb
        if coeff == 0:
            return SignedRadical.zero()
        sign = 1 if coeff > 0 else -1
        return SignedRadical(sign, coeff * coeff * base)

    def is_int(self) -> bool:
        r = math.isqrt(self.radicand)
        return r * r == self.radicand

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        r = math.isqrt(self.radicand)
        body = str(r) if r * r == self.radicand else f"sqrt({self.radicand})"
        return body if self.sign > 0 else f"-{body}"


RadicalMatrix = Tuple[Tuple[SignedRadical, ...], ...]


def skew_symmetrization(B: Sequence[Sequence[int]]) -> RadicalMatrix:
    """S(B): s_ij = sgn(b_ij) * sqrt(|b_ij b_ji|), exactly."""
    B = freeze(B)
    if check_skew_symmetrizable(B) is None:
        raise MatrixError("matrix is not skew-symmetrizable")
    n = len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = B[i][j]
            if v == 0:
                row.append(SignedRadical.zero())
            else:
                row.append(SignedRadical(1 if v > 0 else -1, abs(B[i][j] * B[j][i])))
        out.append(tuple(row))
    return tuple(out)


def mutate_radical_matrix(S: RadicalMatrix, k: int) -> RadicalMatrix:
    """The mutation rule extended verbatim to signed-radical entries."""
    n = len(S)
    kk = k - 1
    out: List[List[SignedRadical]] = [list(row) for row in S]
    for i in range(n):
        for j in range(n):
            if i == kk or j == kk:
                out[i][j] = -S[i][j]
            elif S[i][kk].sign > 0 and S[kk][j].sign > 0:
                out[i][j] = S[i][j].plus(S[i][kk] * S[kk][j])
            elif S[i][kk].sign < 0 and S[kk][j].sign < 0:
                out[i][j] = S[i][j].plus(-(S[i][kk] * S[kk][j]))
    return tuple(tuple(row) for row in out)


# -- exact linear-algebra invariants ----------------------------------------


def matrix_rank(M: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals, via fraction-free (Bareiss-style) elimination."""
    A = [list(row) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    rank = 0
    prev = 1
    for col in range(cols):
        pivot = None
        for r in range(rank, rows):
            if A[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][col]
        for r in range(rank + 1, rows):
            for c in range(col + 1, cols):
                A[r][c] = (A[r][c] * p - A[r][col] * A[rank][c]) // prev
            A[r][col] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def matrix_det(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix by Bareiss elimination."""
    A = [list(row) for row in M]
    n = len(A)
    if any(len(row) != n for row in A):
        raise MatrixError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def entries_gcd(M: Sequence[Sequence[int]]) -> int:
    """gcd of all entries (0 for the zero matrix)."""
    g = 0
    for row in M:
        for v in row:
            g = math.gcd(g, abs(v))
    return g


# -- text format -------------------------------------------------------------


def format_matrix(rows: Sequence[Sequence[int]], n: Optional[int] = None) -> str:
    """Text format: first line `m n`, then one space-separated row per line."""
    m = len(rows)
    width = len(rows[0]) if m else 0
    header = f"{m} {n if n is not None else width}"
    body = "\n".join(" ".join(str(v) for v in row) for row in rows)
    return header + ("\n" + body if body else "")


def parse_matrix(text: str) -> Tuple[IntMatrix, int]:
    """Parse the text format; returns (rows, n)."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise MatrixError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise MatrixError("first line must be `m n`")
    m, n = int(head[0]), int(head[1])
    if len(lines) != m + 1:
        raise MatrixError(f"expected {m} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = [int(v) for v in ln.split()]
        if len(row) != n:
            raise MatrixError(f"row {ln!r} does not have {n} entries")
        rows.append(row)
    return freeze(rows), n


def parse_extended_matrix(text: str) -> ExtendedExchangeMatrix:
    rows, n = parse_matrix(text)
    return ExtendedExchangeMatrix(rows, n)
