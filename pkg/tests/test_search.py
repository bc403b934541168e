import itertools
import random

from clusterkit.matrices import ExtendedExchangeMatrix
from clusterkit.quivers import (
    Quiver,
    dynkin_quiver,
    grid_quiver,
    markov_quiver,
    somos4_quiver,
    tree_quiver,
    triangulated_grid_quiver,
)
from clusterkit.search import (
    AcyclicExperimentReport,
    ExplorationLimits,
    acyclic_class_experiment,
    are_mutation_equivalent,
    exchange_graph,
    explore_quiver_class,
    explore_seeds,
    finite_mutation_type_probe,
    matrix_invariants_along,
)
from clusterkit.seeds import initial_seed

LIM = ExplorationLimits(max_nodes=2000, max_depth=24)


def test_markov_class_single_node():
    g = explore_quiver_class(markov_quiver(), LIM)
    assert len(g) == 1 and not g.truncated
    assert finite_mutation_type_probe(markov_quiver(), LIM).count == 1


def test_path_orientations_reachable_by_sink_source_moves():
    # all 8 orientations of a path on 4 vertices, sink/source moves only
    edges = [(1, 2), (2, 3), (3, 4)]
    quivers = {}
    for signs in itertools.product((1, -1), repeat=3):
        q = tree_quiver(edges, signs)
        quivers[q.canonical_form()] = q
    start = tree_quiver(edges)
    seen = {start.canonical_form()}
    stack = [start]
    while stack:
        q = stack.pop()
        for k in range(1, 5):
            if not (q.is_sink(k) or q.is_source(k)):
                continue
            nxt = q.mutate(k)
            key = nxt.canonical_form()
            if key not in seen:
                seen.add(key)
                stack.append(nxt)
    assert set(quivers) <= seen


def test_grid_class_contains_triangulated_grid():
    assert are_mutation_equivalent(grid_quiver(2, 2), triangulated_grid_quiver(2, 2), LIM) == "yes"


def test_d4_row_equivalent_to_dynkin_orientations():
    row = triangulated_grid_quiver(2, 2)
    for signs in itertools.product((1, -1), repeat=3):
        assert are_mutation_equivalent(row, dynkin_quiver("D4", signs), LIM) == "yes"


def test_non_isomorphic_trees_not_equivalent():
    path5 = tree_quiver([(1, 2), (2, 3), (3, 4), (4, 5)])
    star5 = tree_quiver([(1, 2), (1, 3), (1, 4), (1, 5)])
    assert are_mutation_equivalent(path5, star5, LIM) == "no"


def test_self_equivalence_trivial():
    q = dynkin_quiver("A3")
    assert are_mutation_equivalent(q, q, LIM) == "yes"


def test_a3_path_class_size_four():
    report = finite_mutation_type_probe(dynkin_quiver("A3"), LIM)
    assert report.finite and report.count == 4


def test_somos4_recurrence_orbit_is_single_class():
    # the full mutation class of the Somos-4 quiver blows up (exceeded), but
    # the recurrence word 1,2,3,4,... keeps returning isomorphic quivers
    q = somos4_quiver()
    start_key = q.canonical_form()
    for step in range(8):
        q = q.mutate(step % 4 + 1)
        assert q.canonical_form() == start_key
    probe = finite_mutation_type_probe(
        somos4_quiver(), ExplorationLimits(max_nodes=200, max_depth=6)
    )
    assert not probe.finite


def test_exchange_graph_a11_pentagon():
    g = exchange_graph(ExtendedExchangeMatrix(((0, 1), (-1, 0)), 2), LIM)
    assert len(g) == 5 and g.is_regular(2) and not g.truncated


def test_exchange_graph_a12_hexagon():
    g = exchange_graph(ExtendedExchangeMatrix(((0, 1), (-2, 0)), 2), LIM)
    assert len(g) == 6 and g.is_regular(2)


def test_edges_are_involutive():
    g = exchange_graph(ExtendedExchangeMatrix(((0, 1), (-2, 0)), 2), LIM)
    edges = set(g.edges)
    for a, k, b in edges:
        assert (b, k, a) in edges


def test_truncation_flag():
    g = explore_quiver_class(markov_quiver(), ExplorationLimits(max_nodes=1, max_depth=1))
    assert len(g) == 1
    g2 = exchange_graph(
        ExtendedExchangeMatrix(((0, 1), (-1, 0)), 2),
        ExplorationLimits(max_nodes=3, max_depth=24),
    )
    assert g2.truncated and len(g2) == 3


def test_invariants_constant_across_class():
    g = explore_quiver_class(grid_quiver(2, 2), LIM)
    assert matrix_invariants_along(g)


def test_acyclic_experiment_n3():
    report = acyclic_class_experiment(3, ExplorationLimits(max_nodes=600, max_depth=16), max_mult=2)
    assert report.counterexamples == 0
    assert report.quivers_checked > 0


def test_unknown_on_truncated_search():
    # tiny limits cannot exhaust the class, so the answer must be unknown
    a = grid_quiver(2, 2)
    b = Quiver(4, 4, {(1, 2): 1, (3, 4): 1})
    verdict = are_mutation_equivalent(a, b, ExplorationLimits(max_nodes=2, max_depth=1))
    assert verdict in ("unknown", "no")
    assert verdict == "unknown"


def test_graph_exports():
    g = exchange_graph(ExtendedExchangeMatrix(((0, 1), (-1, 0)), 2), LIM)
    js = g.to_json()
    assert '"truncated": false' in js
    dot = g.to_dot()
    assert dot.startswith("graph exchange {")
