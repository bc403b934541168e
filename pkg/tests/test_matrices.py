import math
import random

import pytest

from clusterkit.matrices import (
    ExtendedExchangeMatrix,
    MatrixError,
    SignedRadical,
    check_skew_symmetrizable,
    diagram_of,
    entries_gcd,
    format_matrix,
    freeze,
    matrix_det,
    matrix_rank,
    mutate_int_matrix,
    mutate_matrix,
    mutate_radical_matrix,
    parse_extended_matrix,
    skew_symmetrization,
)

MARKOV = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))
SOMOS5 = (
    (0, -1, 1, 1, -1),
    (1, 0, -2, 0, 1),
    (-1, 2, 0, -2, 1),
    (-1, 0, 2, 0, -1),
    (1, -1, -1, 1, 0),
)


def random_skew_symmetrizable(rng, n, maxval=2, extra=0):
    d = [rng.randint(1, 3) for _ in range(n)]
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-maxval, maxval)
            S[i][j] = v
            S[j][i] = -v
    # B = D^{-1} S D' trick: scale rows to break symmetry while keeping
    # skew-symmetrizability: b_ij = s_ij * d_j / gcd-ish; simplest exact route:
    # b_ij = s_ij * d_j, which satisfies (d_i') b_ij = -(d_j') b_ji for d_i' = 1/d_i
    # after clearing denominators; verify through the checker instead.
    B = [[S[i][j] * d[j] for j in range(n)] for i in range(n)]
    rows = B + [[rng.randint(-2, 2) for _ in range(n)] for _ in range(extra)]
    return freeze(rows)


def test_check_skew_symmetrizable_examples():
    assert check_skew_symmetrizable([[0, 2], [-1, 0]]) == (1, 2)
    assert check_skew_symmetrizable(MARKOV) == (1, 1, 1)
    assert check_skew_symmetrizable([[0, 1], [1, 0]]) is None
    assert check_skew_symmetrizable([[1, 1], [-1, 0]]) is None


def test_random_skew_symmetrizable_accepted():
    rng = random.Random(0)
    for _ in range(50):
        B = random_skew_symmetrizable(rng, rng.randint(2, 5))
        d = check_skew_symmetrizable(B)
        assert d is not None
        n = len(B)
        for i in range(n):
            for j in range(n):
                assert d[i] * B[i][j] == -d[j] * B[j][i]


def test_mutation_negates_rank2():
    B = ExtendedExchangeMatrix(((0, 3), (-2, 0)), 2)
    assert B.mutate(1).rows == ((0, -3), (2, 0))
    assert B.mutate(2).rows == ((0, -3), (2, 0))


def test_mutation_involution_and_equivariances():
    rng = random.Random(1)
    for _ in range(80):
        n = rng.randint(2, 5)
        rows = random_skew_symmetrizable(rng, n, extra=rng.randint(0, 2))
        Bt = ExtendedExchangeMatrix(rows, n)
        k = rng.randint(1, n)
        assert Bt.mutate(k).mutate(k).rows == Bt.rows
        # sign equivariance
        neg = ExtendedExchangeMatrix(freeze([[-v for v in row] for row in rows]), n)
        assert neg.mutate(k).rows == freeze(
            [[-v for v in row] for row in Bt.mutate(k).rows]
        )
        # transpose equivariance on the square part
        B = Bt.top()
        Bq = ExtendedExchangeMatrix(B, n)
        BT = ExtendedExchangeMatrix(freeze([[B[j][i] for j in range(n)] for i in range(n)]), n)
        lhs = BT.mutate(k).rows
        rhs = Bq.mutate(k).rows
        assert lhs == freeze([[rhs[j][i] for j in range(n)] for i in range(n)])
        # mutation preserves the skew-symmetrizing vector
        assert check_skew_symmetrizable(Bt.mutate(k).top()) == check_skew_symmetrizable(B)


def test_commutation_when_disconnected():
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(3, 5)
        rows = random_skew_symmetrizable(rng, n)
        pairs = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rows[i - 1][j - 1] == 0 and rows[j - 1][i - 1] == 0
        ]
        if not pairs:
            continue
        i, j = pairs[0]
        Bt = ExtendedExchangeMatrix(rows, n)
        assert Bt.mutate(i).mutate(j).rows == Bt.mutate(j).mutate(i).rows


def test_somos5_mutation_is_cyclic_shift():
    mu = mutate_int_matrix(SOMOS5, 1)
    shifted = freeze(
        [[mu[(i + 1) % 5][(j + 1) % 5] for j in range(5)] for i in range(5)]
    )
    assert shifted == SOMOS5


def test_diagram_examples():
    d = diagram_of([[0, 2, -2], [-1, 0, 2], [1, -2, 0]])
    assert d.edges == ((1, 2, 2), (2, 3, 4), (3, 1, 2))
    assert diagram_of([[0, 1], [-4, 0]]) == diagram_of([[0, 2], [-2, 0]])
    assert diagram_of([[0, 0], [0, 0]]).edges == ()


def test_diagram_mutation_depends_only_on_diagram():
    A = ((0, 2, -2), (-1, 0, 2), (1, -2, 0))
    B = ((0, 1, -1), (-2, 0, 2), (2, -2, 0))
    assert diagram_of(A) == diagram_of(B)
    for k in (1, 2, 3):
        assert diagram_of(mutate_int_matrix(A, k)) == diagram_of(mutate_int_matrix(B, k))


def test_skew_symmetrization():
    S = skew_symmetrization([[0, 1], [-4, 0]])
    assert S[0][1] == SignedRadical(1, 4) and str(S[0][1]) == "2"
    assert S[1][0] == SignedRadical(-1, 4)
    # skew-symmetric matrices are fixed points
    S2 = skew_symmetrization(MARKOV)
    for i in range(3):
        for j in range(3):
            assert S2[i][j] == SignedRadical.of_int(MARKOV[i][j])


def test_skew_symmetrization_commutes_with_mutation():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 4)
        B = random_skew_symmetrizable(rng, n)
        k = rng.randint(1, n)
        lhs = skew_symmetrization(mutate_int_matrix(B, k))
        rhs = mutate_radical_matrix(skew_symmetrization(B), k)
        assert lhs == rhs


def test_rank_det_gcd_examples():
    assert matrix_det(MARKOV) == 0
    assert matrix_rank(MARKOV) == 2
    assert entries_gcd(MARKOV) == 2
    zero = [[0, 0], [0, 0]]
    assert matrix_rank(zero) == 0
    assert entries_gcd(zero) == 0
    assert matrix_det([[2]]) == 2
    assert matrix_det([[1, 2], [3, 4]]) == -2


def test_invariants_under_mutation():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(2, 5)
        rows = random_skew_symmetrizable(rng, n, extra=rng.randint(0, 2))
        Bt = ExtendedExchangeMatrix(rows, n)
        r0 = matrix_rank(Bt.rows)
        d0 = matrix_det(Bt.top())
        g0 = entries_gcd(Bt.rows)
        for _ in range(12):
            Bt = Bt.mutate(rng.randint(1, n))
        assert matrix_rank(Bt.rows) == r0
        assert matrix_det(Bt.top()) == d0
        assert entries_gcd(Bt.rows) == g0


def test_text_format_roundtrip():
    Bt = ExtendedExchangeMatrix(((0, 1), (-1, 0), (2, -3)), 2)
    text = format_matrix(Bt.rows, Bt.n)
    assert text.splitlines()[0] == "3 2"
    again = parse_extended_matrix(text)
    assert again.rows == Bt.rows and again.n == 2
    with pytest.raises(MatrixError):
        parse_extended_matrix("bogus")


def test_invalid_matrices_rejected():
    with pytest.raises(MatrixError):
        ExtendedExchangeMatrix(((0, 1), (1, 0)), 2)
    with pytest.raises(MatrixError):
        ExtendedExchangeMatrix(((1, 1), (-1, 0)), 2)


def test_signed_radical_incommensurable_addition_rejected():
    import pytest as _pytest

    a = SignedRadical(1, 2)   # sqrt(2)
    b = SignedRadical(1, 3)   # sqrt(3)
    with _pytest.raises(MatrixError):
        a.plus(b)
    # commensurable values combine exactly: sqrt(2) + sqrt(8) = 3 sqrt(2)
    assert SignedRadical(1, 2).plus(SignedRadical(1, 8)) == SignedRadical(1, 18)
    assert SignedRadical(1, 2).plus(SignedRadical(-1, 2)) == SignedRadical.zero()
