"""Total positivity: exact minors, Chevalley-generated TP matrices, cluster
tests, the solid-minor test, and determinantal identities with Muir extension.

Matrices here have exact rational entries; identity verification runs over a
generic matrix of independent indeterminates via the exact-algebra layer, not
by sampling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .laurent import LaurentPolynomial, RationalFunction
from .geometry.triangulations import Triangulation
from .geometry.wiring import WiringDiagram
from .geometry.double_wiring import DoubleWiringDiagram

RationalMatrix = Tuple[Tuple[Fraction, ...], ...]


class TPError(ValueError):
    pass


def rational_matrix(rows: Sequence[Sequence]) -> RationalMatrix:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def _det_fraction(rows: List[List[Fraction]]) -> Fraction:
    n = len(rows)
    A = [row[:] for row in rows]
    det = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if A[r][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            A[k], A[pivot] = A[pivot], A[k]
            det = -det
        det *= A[k][k]
        inv = 1 / A[k][k]
        for r in range(k + 1, n):
            factor = A[r][k] * inv
            if factor:
                for c in range(k, n):
                    A[r][c] -= factor * A[k][c]
    return det


def minor(z: Sequence[Sequence], I: Sequence[int], J: Sequence[int]) -> Fraction:
    """Delta_{I,J}(z): determinant on row set I and column set J (1-based)."""
    z = rational_matrix(z)
    I, J = sorted(I), sorted(J)
    if len(I) != len(J) or not I:
        raise TPError("minor needs equal-size nonempty index sets")
    if I[0] < 1 or J[0] < 1 or I[-1] > len(z) or J[-1] > len(z[0]):
        raise TPError("minor index out of range")
    sub = [[z[i - 1][j - 1] for j in J] for i in I]
    return _det_fraction(sub)


def flag_minor(z: Sequence[Sequence], J: Sequence[int]) -> Fraction:
    """P_J(z): rows 1..|J|, columns J."""
    J = sorted(J)
    if not J:
        raise TPError("flag minor needs a nonempty column set")
    return minor(z, list(range(1, len(J) + 1)), J)


def plucker(z: Sequence[Sequence], i: int, j: int) -> Fraction:
    """P_ij of a 2 x m matrix."""
    z = rational_matrix(z)
    if len(z) != 2:
        raise TPError("Plucker coordinates live on 2 x m matrices")
    return z[0][i - 1] * z[1][j - 1] - z[0][j - 1] * z[1][i - 1]


# -- Chevalley generator factory -------------------------------------------------


def _identity(n: int) -> List[List[Fraction]]:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def chevalley_generator(n: int, kind: str, i: int, t: Fraction) -> RationalMatrix:
    """x_i(t): upper bidiagonal; y_i(t): its transpose; z_i(t): diagonal with
    t, 1/t in slots i, i+1."""
    if not 1 <= i <= n - 1:
        raise TPError(f"generator index {i} not in 1..{n - 1}")
    t = Fraction(t)
    if t <= 0:
        raise TPError("parameters must be positive")
    M = _identity(n)
    if kind == "x":
        M[i - 1][i] = t
    elif kind == "y":
        M[i][i - 1] = t
    elif kind == "z":
        M[i - 1][i - 1] = t
        M[i][i] = 1 / t
    else:
        raise TPError(f"unknown generator kind {kind!r}")
    return rational_matrix(M)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> RationalMatrix:
    a = rational_matrix(a)
    b = rational_matrix(b)
    n, k, m = len(a), len(a[0]), len(b[0])
    return tuple(
        tuple(sum(a[r][x] * b[x][c] for x in range(k)) for c in range(m))
        for r in range(n)
    )


def chevalley_tp_matrix(
    n: int, params: Sequence[Fraction], word: Sequence[Tuple[str, int]]
) -> RationalMatrix:
    """Product of elementary Jacobi matrices named by `word` with positive
    parameters; a full word yields a totally positive matrix."""
    if len(params) != len(word):
        raise TPError("need one parameter per letter")
    M = rational_matrix(_identity(n))
    for (kind, i), t in zip(word, params):
        M = mat_mul(M, chevalley_generator(n, kind, i, t))
    return M


def full_tp_word(n: int) -> List[Tuple[str, int]]:
    """y-letters along a reduced word for w0, the torus letters, then the
    x-letters: with positive parameters the product is TP."""
    reduced: List[int] = []
    for k in range(n - 1, 0, -1):
        reduced.extend(range(1, k + 1))
    word = [("y", i) for i in reduced]
    word += [("z", i) for i in range(1, n)]
    word += [("x", i) for i in reduced]
    return word


def random_tp_matrix(n: int, rng) -> RationalMatrix:
    word = full_tp_word(n)
    params = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in word]
    return chevalley_tp_matrix(n, params, word)


# -- positivity tests --------------------------------------------------------------


def all_minors_positive(z: Sequence[Sequence]) -> bool:
    """The exhaustive oracle: every minor of the square matrix is positive."""
    z = rational_matrix(z)
    n = len(z)
    for k in range(1, n + 1):
        for I in itertools.combinations(range(1, n + 1), k):
            for J in itertools.combinations(range(1, n + 1), k):
                if minor(z, I, J) <= 0:
                    return False
    return True


def all_flag_minors_positive(z: Sequence[Sequence]) -> bool:
    z = rational_matrix(z)
    n = len(z)
    for k in range(1, n):
        for J in itertools.combinations(range(1, n + 1), k):
            if flag_minor(z, J) <= 0:
                return False
    # the full column set as well (the determinant-like flag minor)
    return flag_minor(z, list(range(1, n + 1))) > 0


def tp_test_triangulation(z: Sequence[Sequence], T: Triangulation) -> bool:
    """Positivity of the 2m-3 Plucker coordinates on the chords of T."""
    z = rational_matrix(z)
    if len(z) != 2 or len(z[0]) != T.m:
        raise TPError("test needs a 2 x m matrix matching the polygon")
    return all(plucker(z, a, b) > 0 for (a, b) in T.chords())


def tp_test_wiring(z: Sequence[Sequence], D: WiringDiagram) -> bool:
    """Positivity of the (n-1)(n+2)/2 chamber flag minors of D."""
    z = rational_matrix(z)
    if len(z) != D.n or len(z[0]) != D.n:
        raise TPError("matrix size must match the wiring diagram")
    return all(flag_minor(z, c.label()) > 0 for c in D.chambers())


def tp_test_double_wiring(z: Sequence[Sequence], D: DoubleWiringDiagram) -> bool:
    """Positivity of the n^2 chamber minors of the double wiring diagram."""
    z = rational_matrix(z)
    if len(z) != D.n or len(z[0]) != D.n:
        raise TPError("matrix size must match the diagram")
    for c in D.chambers():
        rows, cols = c.label()
        if minor(z, rows, cols) <= 0:
            return False
    return True


def solid_minors_with_one(n: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """The n^2 solid minors whose row or column set contains 1."""
    out = []
    for k in range(1, n + 1):
        I = tuple(range(1, k + 1))
        for b in range(1, n - k + 2):
            J = tuple(range(b, b + k))
            out.append((I, J))
            if b > 1:
                out.append((J, I))
    return out


def tp_test_solid(z: Sequence[Sequence]) -> bool:
    z = rational_matrix(z)
    n = len(z)
    if any(len(row) != n for row in z):
        raise TPError("solid-minor test needs a square matrix")
    return all(minor(z, I, J) > 0 for I, J in solid_minors_with_one(n))


# -- symbolic minors and Muir's law ---------------------------------------------


def generic_matrix_vars(size: int) -> Dict[Tuple[int, int], LaurentPolynomial]:
    nv = size * size
    return {
        (i, j): LaurentPolynomial.variable((i - 1) * size + j, nv)
        for i in range(1, size + 1)
        for j in range(1, size + 1)
    }


def symbolic_minor(size: int, rows: Sequence[int], cols: Sequence[int]) -> LaurentPolynomial:
    """Delta_{rows,cols} of the generic size x size matrix, by Leibniz."""
    rows, cols = sorted(rows), sorted(cols)
    nv = size * size
    if len(rows) != len(cols):
        raise TPError("minor needs equal-size index sets")
    if not rows:
        return LaurentPolynomial.one(nv)
    if rows[-1] > size or cols[-1] > size:
        raise TPError("minor exceeds the generic matrix")
    k = len(rows)
    out = LaurentPolynomial.zero(nv)
    for perm in itertools.permutations(range(k)):
        sign = 1
        for a in range(k):
            for b in range(a + 1, k):
                if perm[a] > perm[b]:
                    sign = -sign
        term = LaurentPolynomial.one(nv)
        for a in range(k):
            v = (rows[a] - 1) * size + cols[perm[a]]
            term = term * LaurentPolynomial.variable(v, nv)
        out = out + term * sign
    return out


MinorSymbol = Tuple[Tuple[int, ...], Tuple[int, ...]]  # (rows, cols); rows=() means flag


@dataclass(frozen=True)
class MinorIdentity:
    """A formal identity: sum of coeff * products of minor symbols equals 0.

    A symbol is (rows, cols); an empty rows tuple denotes the flag minor P_cols
    (rows 1..|cols|).  An empty symbol ((), ()) is the constant 1.  Every term
    must carry the same number of determinant factors (Muir's precondition).
    """

    terms: Tuple[Tuple[int, Tuple[MinorSymbol, ...]], ...]

    def __post_init__(self):
        counts = {len(factors) for _, factors in self.terms}
        if len(counts) > 1:
            raise TPError("all terms must have the same number of determinants")

    def symbols(self) -> List[MinorSymbol]:
        return [s for _, factors in self.terms for s in factors]


def _resolve(symbol: MinorSymbol) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    rows, cols = symbol
    if not rows and cols:
        rows = tuple(range(1, len(cols) + 1))
    return rows, cols


def verify_identity(identity: MinorIdentity, size: Optional[int] = None) -> bool:
    """Exact check on a generic matrix of indeterminates.

    `size` defaults to the largest index mentioned; it only sizes the generic
    matrix, the verification itself is a polynomial identity, not sampling.
    """
    max_idx = 1
    for symbol in identity.symbols():
        rows, cols = _resolve(symbol)
        for v in rows + cols:
            max_idx = max(max_idx, v)
    size = size or max_idx
    nv = size * size
    total = LaurentPolynomial.zero(nv)
    for coeff, factors in identity.terms:
        prod = LaurentPolynomial.constant(coeff, nv)
        for symbol in factors:
            rows, cols = _resolve(symbol)
            prod = prod * symbolic_minor(size, rows, cols)
        total = total + prod
    return total.is_zero()


def muir_extend(identity: MinorIdentity, R: Sequence[int], C: Sequence[int]) -> MinorIdentity:
    """Muir's law of extensible minors: rewrite Delta_{A,B} -> Delta_{A+R,B+C}.

    R must avoid every row set and C every column set of the identity.
    """
    R, C = tuple(sorted(R)), tuple(sorted(C))
    if len(R) != len(C):
        raise TPError("row and column extensions must have equal size")
    terms = []
    for coeff, factors in identity.terms:
        new_factors = []
        for symbol in factors:
            rows, cols = _resolve(symbol)
            if set(rows) & set(R) or set(cols) & set(C):
                raise TPError("extension sets must be disjoint from the identity")
            new_factors.append((tuple(sorted(rows + R)), tuple(sorted(cols + C))))
        terms.append((coeff, tuple(new_factors)))
    return MinorIdentity(tuple(terms))


def muir_flag_extend(identity: MinorIdentity, C: Sequence[int]) -> MinorIdentity:
    """The flag-minor version: P_B -> P_{B + C} throughout."""
    C = tuple(sorted(C))
    terms = []
    for coeff, factors in identity.terms:
        new_factors = []
        for symbol in factors:
            rows, cols = symbol
            if rows:
                raise TPError("flag extension applies to flag-minor identities")
            if set(cols) & set(C):
                raise TPError("extension columns must avoid the identity")
            new_factors.append(((), tuple(sorted(cols + C))))
        terms.append((coeff, tuple(new_factors)))
    return MinorIdentity(tuple(terms))


def base_2x2_identity() -> MinorIdentity:
    """ad = Delta + bc on a 2 x 2 matrix, padded with empty minors so that all
    terms carry two determinant factors."""
    a = ((1,), (1,))
    d = ((2,), (2,))
    b = ((1,), (2,))
    c = ((2,), (1,))
    delta = ((1, 2), (1, 2))
    one = ((), ())
    return MinorIdentity(
        (
            (1, (a, d)),
            (-1, (delta, one)),
            (-1, (b, c)),
        )
    )


def three_term_plucker_identity(i: int, j: int, k: int, l: int) -> MinorIdentity:
    """P_ik P_jl = P_ij P_kl + P_il P_jk on rows {1, 2} (i < j < k < l)."""
    if not i < j < k < l:
        raise TPError("need i < j < k < l")
    P = lambda a, b: ((1, 2), (a, b))
    return MinorIdentity(
        (
            (1, (P(i, k), P(j, l))),
            (-1, (P(i, j), P(k, l))),
            (-1, (P(i, l), P(j, k))),
        )
    )


def braid_base_identity(a: int, b: int, c: int) -> MinorIdentity:
    """P_b P_ac = P_a P_bc + P_c P_ab for wires a < b < c, as flag minors."""
    if not a < b < c:
        raise TPError("need a < b < c")
    F = lambda *cols: ((), tuple(cols))
    return MinorIdentity(
        (
            (1, (F(b), F(a, c))),
            (-1, (F(a), F(b, c))),
            (-1, (F(c), F(a, b))),
        )
    )


# -- the K/L cluster variables beyond minors (3 x 3) ------------------------------


def kl_functions() -> Tuple[LaurentPolynomial, LaurentPolynomial]:
    """K = z33 * Delta_{12,12} - det and L = z11 * Delta_{23,23} - det as
    polynomials in the nine generic entries."""
    K = symbolic_minor(3, (3,), (3,)) * symbolic_minor(3, (1, 2), (1, 2)) - symbolic_minor(
        3, (1, 2, 3), (1, 2, 3)
    )
    L = symbolic_minor(3, (1,), (1,)) * symbolic_minor(3, (2, 3), (2, 3)) - symbolic_minor(
        3, (1, 2, 3), (1, 2, 3)
    )
    return K, L


def verify_new_exchange() -> bool:
    """Delta_{23,23} K = Delta_{12,23} Delta_{23,12} z33 + det * z23 * z32,
    identically in the nine indeterminates."""
    K, _ = kl_functions()
    lhs = symbolic_minor(3, (2, 3), (2, 3)) * K
    rhs = (
        symbolic_minor(3, (1, 2), (2, 3))
        * symbolic_minor(3, (2, 3), (1, 2))
        * symbolic_minor(3, (3,), (3,))
        + symbolic_minor(3, (1, 2, 3), (1, 2, 3))
        * symbolic_minor(3, (2,), (3,))
        * symbolic_minor(3, (3,), (2,))
    )
    return lhs == rhs
