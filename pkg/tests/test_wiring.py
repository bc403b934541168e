import pytest

from clusterkit.geometry.wiring import (
    WiringDiagram,
    WiringError,
    braid_moves,
    chambers_of_wiring,
    commutation_class,
    parse_word,
    quiver_of_wiring,
    reduced_words_w0,
)

FIG = WiringDiagram(3, (1, 2, 1))


def test_reduced_word_validation():
    with pytest.raises(WiringError):
        WiringDiagram(3, (1, 1, 2))
    with pytest.raises(WiringError):
        WiringDiagram(3, (1, 2))
    WiringDiagram(4, (1, 2, 1, 3, 2, 1))


def test_reduced_word_counts():
    assert len(reduced_words_w0(3)) == 2
    assert len(reduced_words_w0(4)) == 16


def test_chambers_of_figure():
    labels = [c.label() for c in chambers_of_wiring(FIG)]
    assert labels == [(1,), (2,), (3,), (1, 2), (2, 3)]
    bounded = [c.label() for c in chambers_of_wiring(FIG) if c.bounded]
    assert bounded == [(2,)]


def test_chamber_count_formula():
    for n in (2, 3, 4, 5):
        for word in reduced_words_w0(n)[:6]:
            D = WiringDiagram(n, word)
            assert len(D.chambers()) == (n - 1) * (n + 2) // 2


def test_chamber_labels_unique():
    for n in (3, 4):
        for word in reduced_words_w0(n):
            D = WiringDiagram(n, word)
            labels = [(c.gap, c.label()) for c in D.chambers()]
            assert len(labels) == len(set(labels))
            plain = [c.label() for c in D.chambers()]
            assert len(plain) == len(set(plain))


def test_quiver_of_figure():
    Q, cmap = FIG.labeled_quiver()
    named = {
        (cmap[i].label(), cmap[j].label()): mult for (i, j), mult in Q.arrows.items()
    }
    assert named == {
        ((1,), (2,)): 1,
        ((2,), (3,)): 1,
        ((2,), (1, 2)): 1,
        ((2, 3), (2,)): 1,
    }
    assert Q.n == 1


def test_commutation_equality():
    a = WiringDiagram(4, (1, 3, 2, 1, 3, 2))
    b = WiringDiagram(4, (3, 1, 2, 3, 1, 2))
    assert a == b
    assert hash(a) == hash(b)


def _braid_matches_mutation(D, Dn):
    Q1, m1 = D.labeled_quiver()
    Q2, m2 = Dn.labeled_quiver()
    lab1 = {m1[v].label(): v for v in m1}
    lab2 = {m2[v].label(): v for v in m2}
    only1 = set(lab1) - set(lab2)
    only2 = set(lab2) - set(lab1)
    assert len(only1) == 1 and len(only2) == 1
    Y = lab1[only1.pop()]
    Z = lab2[only2.pop()]
    assert Y <= Q1.n, "exchanged chamber must be bounded"
    mut = Q1.mutate(Y)
    corr = {v: lab2[m1[v].label()] for v in m1 if m1[v].label() in lab2}
    corr[Y] = Z
    remapped = {(corr[i], corr[j]): mult for (i, j), mult in mut.arrows.items()}
    return remapped == dict(Q2.arrows)


def test_braid_move_is_quiver_mutation_all_words():
    for n in (3, 4):
        seen = set()
        for w in reduced_words_w0(n):
            D = WiringDiagram(n, w)
            key = D.canonical_word()
            if key in seen:
                continue
            seen.add(key)
            for _, Dn in braid_moves(D):
                assert _braid_matches_mutation(D, Dn)


def test_braid_and_commutation_connect_all_reduced_words():
    for n in (3, 4):
        words = {WiringDiagram(n, w).canonical_word() for w in reduced_words_w0(n)}
        start = WiringDiagram(n, tuple(sorted(words)[0]))
        seen = {start.canonical_word()}
        stack = [start]
        while stack:
            D = stack.pop()
            for _, Dn in braid_moves(D):
                key = Dn.canonical_word()
                if key not in seen:
                    seen.add(key)
                    stack.append(Dn)
        assert seen == words


def test_parse_word():
    assert parse_word("1, 2, 1") == (1, 2, 1)
