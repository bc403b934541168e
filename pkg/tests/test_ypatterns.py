import random
from fractions import Fraction

import pytest

from clusterkit.laurent import LaurentPolynomial as LP, RationalFunction as RF
from clusterkit.matrices import ExtendedExchangeMatrix, freeze
from clusterkit.seeds import initial_seed, mutate_seed, seed_at, to_triple
from clusterkit.ypatterns import (
    YSeed,
    ZeroDenominator,
    coefficient_tuple_of_hat,
    hat_y,
    mutate_y,
    y_pattern_orbit,
    yseed_from_json,
    yseed_to_json,
)

B_A2 = ((0, 1), (-1, 0))


def symbolic_a2():
    return YSeed((RF.variable(1, 2), RF.variable(2, 2)), B_A2)


def a2_expected_rows():
    y1, y2 = RF.variable(1, 2), RF.variable(2, 2)
    return {
        0: (y1, y2),
        1: (y1 ** -1, y1 * y2 * (y1 + 1) ** -1),
        2: (y2 * (y1 * y2 + y1 + 1) ** -1, (y1 + 1) * y1 ** -1 * y2 ** -1),
        3: ((y1 * y2 + y1 + 1) * y2 ** -1, y1 ** -1 * (y2 + 1) ** -1),
        4: (y2 ** -1, y1 * (y2 + 1)),
        5: (y2, y1),
        6: (y1 * y2 * (y1 + 1) ** -1, y1 ** -1),
        7: ((y1 + 1) * y1 ** -1 * y2 ** -1, y2 * (y1 * y2 + y1 + 1) ** -1),
        8: (y1 ** -1 * (y2 + 1) ** -1, (y1 * y2 + y1 + 1) * y2 ** -1),
        9: (y1 * (y2 + 1), y2 ** -1),
        10: (y1, y2),
    }


def a2_word(length=10):
    return tuple(1 if t % 2 == 0 else 2 for t in range(length))


def test_a2_y_pattern_table_and_periodicity():
    orbit = y_pattern_orbit(symbolic_a2(), a2_word())
    expected = a2_expected_rows()
    for t, row in expected.items():
        got = orbit[t].yvals
        assert got[0] == row[0] and got[1] == row[1], f"row {t} differs"
    assert orbit[10].matrix == freeze(B_A2)


def test_mutate_y_inverts_at_k():
    ys = symbolic_a2()
    out = mutate_y(ys, 1)
    assert out.yvals[0] == ys.yvals[0] ** -1


def test_involutivity():
    rng = random.Random(0)
    for _ in range(30):
        vals = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(2))
        ys = YSeed(vals, B_A2)
        k = rng.choice([1, 2])
        back = mutate_y(mutate_y(ys, k), k)
        assert back.yvals == ys.yvals and back.matrix == ys.matrix


def test_zero_denominator_raises():
    ys = YSeed((Fraction(0), Fraction(2)), B_A2)
    with pytest.raises(ZeroDenominator):
        mutate_y(ys, 1)
    ys2 = YSeed((Fraction(-1), Fraction(2)), B_A2)
    with pytest.raises(ZeroDenominator):
        mutate_y(ys2, 1)


def test_markov_all_ones_orbit_nondegenerate():
    B = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))
    ys = YSeed((Fraction(1), Fraction(1), Fraction(1)), B)
    rng = random.Random(1)
    word = [rng.randint(1, 3) for _ in range(20)]
    orbit = y_pattern_orbit(ys, word)
    assert len(orbit) == 21
    assert all(v != 0 for s in orbit for v in s.yvals)


def test_hat_y_initial_a11():
    # column exponents of [[0,1],[-1,0]]: yhat_1 = x2^{b_21} = x2^{-1},
    # yhat_2 = x1^{b_12} = x1
    s = initial_seed(ExtendedExchangeMatrix(((0, 1), (-1, 0)), 2))
    ys = hat_y(s)
    assert ys.yvals[0] == RF.variable(2, 2) ** -1
    assert ys.yvals[1] == RF.variable(1, 2)


def _random_ext(rng):
    n = rng.randint(2, 3)
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-1, 1)
            B[i][j] = v
            B[j][i] = -v
    rows = B + [[rng.randint(-1, 1) for _ in range(n)] for _ in range(rng.randint(0, 2))]
    return ExtendedExchangeMatrix(freeze(rows), n)


def test_hat_y_intertwines_mutation():
    rng = random.Random(2)
    for _ in range(60):
        Bt = _random_ext(rng)
        s = seed_at(Bt, [rng.randint(1, Bt.n) for _ in range(rng.randint(0, 3))])
        k = rng.randint(1, Bt.n)
        lhs = hat_y(mutate_seed(s, k))
        rhs = mutate_y(hat_y(s), k)
        assert lhs.matrix == rhs.matrix
        assert all(a == b for a, b in zip(lhs.yvals, rhs.yvals))


def test_tropicalization_of_hat_is_coefficient_tuple():
    rng = random.Random(3)
    for _ in range(60):
        Bt = _random_ext(rng)
        s = seed_at(Bt, [rng.randint(1, Bt.n) for _ in range(rng.randint(0, 3))])
        assert coefficient_tuple_of_hat(hat_y(s), Bt.n) == to_triple(s).coeffs


def test_yseed_json_roundtrip():
    ys = mutate_y(symbolic_a2(), 1)
    text = yseed_to_json(ys)
    again = yseed_from_json(text, 2)
    assert again.matrix == ys.matrix
    assert all(a == b for a, b in zip(again.yvals, ys.yvals))
