import random

import pytest

from clusterkit.laurent import LaurentPolynomial as LP
from clusterkit.matrices import ExtendedExchangeMatrix, freeze
from clusterkit.seeds import (
    Seed,
    SeedError,
    check_laurent_sharp,
    collapse_word,
    initial_seed,
    mutate_seed,
    mutate_triple,
    parse_polynomial,
    seed_at,
    seed_from_json,
    seed_to_json,
    to_triple,
    unlabeled_key,
)

A11 = ExtendedExchangeMatrix(((0, 1), (-1, 0)), 2)
A12 = ExtendedExchangeMatrix(((0, 1), (-2, 0)), 2)


def x(i, m):
    return LP.variable(i, m)


def test_initial_seed_examples():
    s = initial_seed(ExtendedExchangeMatrix(((0,), (1,)), 1))
    assert s.cluster == (x(1, 2),)
    s = initial_seed(A11)
    assert s.cluster == (x(1, 2), x(2, 2))
    assert s.word == ()


def test_a11_pattern():
    x1, x2 = x(1, 2), x(2, 2)
    s1 = seed_at(A11, (1,))
    assert s1.cluster[0] * x1 == x2 + 1
    s2 = seed_at(A11, (1, 2))
    assert s2.cluster[1] * (x1 * x2) == x1 + x2 + 1
    s3 = seed_at(A11, (1, 2, 1))
    assert s3.cluster[0] * x2 == x1 + 1
    s4 = seed_at(A11, (1, 2, 1, 2))
    assert s4.cluster[1] == x1
    s5 = seed_at(A11, (1, 2, 1, 2, 1))
    assert s5.cluster == (x2, x1)
    assert unlabeled_key(s5) == unlabeled_key(initial_seed(A11))


def test_a12_pattern():
    x1, x2 = x(1, 2), x(2, 2)
    z3 = seed_at(A12, (1,)).cluster[0]
    assert z3 * x1 == x2 ** 2 + 1
    z4 = seed_at(A12, (1, 2)).cluster[1]
    assert z4 * (x1 * x2) == x2 ** 2 + x1 + 1
    z5 = seed_at(A12, (1, 2, 1)).cluster[0]
    assert z5 * (x1 * x2 ** 2) == x1 ** 2 + x2 ** 2 + 2 * x1 + 1
    z6 = seed_at(A12, (1, 2, 1, 2)).cluster[1]
    assert z6 * x2 == x1 + 1
    assert seed_at(A12, (1, 2, 1, 2, 1)).cluster[0] == x1
    # 6 distinct unlabeled seeds over all words of length <= 8
    keys = set()
    def walk(s, depth):
        keys.add(unlabeled_key(s))
        if depth == 0:
            return
        for k in (1, 2):
            if s.word and s.word[-1] == k:
                continue
            walk(mutate_seed(s, k), depth - 1)
    walk(initial_seed(A12), 8)
    assert len(keys) == 6


def test_rank1_coprime_frozen_monomials():
    Bt = ExtendedExchangeMatrix(((0,), (2,), (-3,)), 1)
    s = mutate_seed(initial_seed(Bt), 1)
    # x1 x1' = x2^2 + x3^3, and the two monomials share no frozen variable
    m = s.m
    assert s.cluster[0] * x(1, m) == LP.monomial((0, 2, 0)) + LP.monomial((0, 0, 3))


def test_involutivity_random():
    rng = random.Random(0)
    for _ in range(40):
        n = rng.randint(2, 3)
        extra = rng.randint(0, 2)
        B = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = rng.randint(-1, 1)
                B[i][j] = v
                B[j][i] = -v
        rows = B + [[rng.randint(-1, 1) for _ in range(n)] for _ in range(extra)]
        Bt = ExtendedExchangeMatrix(freeze(rows), n)
        s = seed_at(Bt, [rng.randint(1, n) for _ in range(rng.randint(0, 3))])
        k = rng.randint(1, n)
        assert mutate_seed(mutate_seed(s, k), k) == s


def test_collapse_word():
    assert collapse_word((1, 1, 2, 2, 1), 2) == (1,)
    assert collapse_word((1, 2, 1), 2) == (1, 2, 1)
    with pytest.raises(SeedError):
        collapse_word((3,), 2)


def test_unlabeled_key_relabeling_invariance():
    s = seed_at(A11, (1, 2))
    # swap the two positions by hand
    perm_rows = s.matrix.permuted([2, 1]).rows
    swapped = Seed(
        ExtendedExchangeMatrix(perm_rows, 2), (s.cluster[1], s.cluster[0]), ()
    )
    assert unlabeled_key(swapped) == unlabeled_key(s)


def test_check_laurent_sharp():
    Bt = ExtendedExchangeMatrix(((0, 1), (-1, 0), (1, -1)), 2)
    s = initial_seed(Bt)
    for k in (1, 2, 1, 2, 1, 2):
        s = mutate_seed(s, k)
        assert check_laurent_sharp(s) == []


def test_triple_route_agrees_with_seed_route():
    rng = random.Random(5)
    for _ in range(30):
        n = 2
        rows = [[0, 1], [-1, 0]] + [
            [rng.randint(-2, 2), rng.randint(-2, 2)] for _ in range(rng.randint(1, 2))
        ]
        Bt = ExtendedExchangeMatrix(freeze(rows), n)
        word = [rng.choice([1, 2]) for _ in range(6)]
        s = initial_seed(Bt)
        t = to_triple(s)
        for k in word:
            s = mutate_seed(s, k)
            t = mutate_triple(t, k)
        assert t.cluster == s.cluster
        assert to_triple(s).coeffs == t.coeffs
        assert t.matrix == s.matrix.top()


def test_triple_frozen_free_reduces_to_plain_exchange():
    s = initial_seed(A11)
    t = to_triple(s)
    assert all(c.exps == () for c in t.coeffs)
    t2 = mutate_triple(t, 1)
    assert t2.cluster == mutate_seed(s, 1).cluster


def test_seed_json_roundtrip_bit_exact():
    s = seed_at(ExtendedExchangeMatrix(((0, 1), (-1, 0), (1, 0)), 2), (1, 2, 1))
    text = seed_to_json(s)
    again = seed_from_json(text)
    assert again == s
    assert seed_to_json(again) == text


def test_parse_polynomial_rejects_garbage():
    with pytest.raises(SeedError):
        parse_polynomial("1 * y1^2", 2)
    with pytest.raises(SeedError):
        parse_polynomial("nonsense", 2)


def test_deleting_frozen_rows_specializes_to_one():
    # Lemma: dropping a frozen row = specializing that variable to 1
    full = ExtendedExchangeMatrix(((0, 1), (-1, 0), (1, -2), (2, 1)), 2)
    dropped = ExtendedExchangeMatrix(((0, 1), (-1, 0), (2, 1)), 2)
    word = (1, 2, 1, 2)
    sf = seed_at(full, word)
    sd = seed_at(dropped, word)
    ones = [
        LP.variable(1, 3),
        LP.variable(2, 3),
        LP.one(3),           # specialized frozen x3
        LP.variable(3, 3),   # remaining frozen drops an index
    ]
    for a, b in zip(sf.cluster, sd.cluster):
        assert a.subs(ones) == b
