"""Command-line entry points.

Subcommands: mutate, explore, laurent, ypattern, tp, model, seq, serve.
Exit code 1 flags argument/parse errors, 2 flags engine errors; messages go to
standard error.  `--plot FILE` on the report paths renders a matplotlib figure
next to the textual output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from .laurent import LaurentPolynomial, ExactAlgebraError
from .matrices import (
    ExtendedExchangeMatrix,
    MatrixError,
    format_matrix,
    parse_extended_matrix,
)
from .presets import PRESET_NAMES, PresetError, preset_seed
from .quivers import Quiver, QuiverError
from .search import ExplorationLimits, exchange_graph, explore_quiver_class, explore_seeds
from .seeds import Seed, SeedError, collapse_word, mutate_seed, seed_from_json, seed_to_json
from .sequences import (
    SequenceError,
    fermat_demo,
    fordy_marsh_matrix,
    markov_tree,
    somos4_symbolic,
    somos4_terms,
    somos5_terms,
)
from .ypatterns import YPatternError, YSeed, mutate_y, yseed_from_json, yseed_to_json

PORT_ENV = "CLUSTERKIT_PORT"


class CliError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_input(fn, *args):
    """Run an input parser; its failures count as argument errors (exit 1),
    not engine errors."""
    try:
        return fn(*args)
    except Exception as exc:
        raise CliError(f"cannot parse input: {exc}") from exc


def _load_seed(args) -> Seed:
    if args.preset:
        return preset_seed(args.preset)
    if args.seed:
        return _parse_input(seed_from_json, _read_text(args.seed))
    if args.matrix:
        from .seeds import initial_seed

        return initial_seed(_parse_input(parse_extended_matrix, _read_text(args.matrix)))
    raise CliError("give one of --preset, --seed, or --matrix")


def _parse_word(text: Optional[str]) -> List[int]:
    if not text:
        return []
    return [int(v) for v in text.replace(" ", "").split(",") if v]


def _limits(args) -> ExplorationLimits:
    return ExplorationLimits(max_nodes=args.max_nodes, max_depth=args.max_depth)


def cmd_mutate(args) -> int:
    word = _parse_word(args.word)
    if args.quiver:
        from .geometry.triangulations import parse_triangulation, quiver_of_triangulation

        Bt = _parse_input(parse_extended_matrix, _read_text(args.quiver))
        Q = Quiver.from_matrix(Bt)
        for k in word:
            Q = Q.mutate(k)
        if args.format == "dot":
            print(Q.to_dot())
        else:
            print(format_matrix(Q.to_matrix().rows, Q.n))
        return 0
    if args.seed or args.preset:
        s = _load_seed(args)
        for k in word:
            s = mutate_seed(s, k)
        if args.format == "json":
            print(seed_to_json(s))
        else:
            print(format_matrix(s.matrix.rows, s.n))
            for line in s.cluster_strings():
                print(line)
        return 0
    Bt = _parse_input(parse_extended_matrix, _read_text(args.matrix))
    for k in word:
        Bt = Bt.mutate(k)
    print(format_matrix(Bt.rows, Bt.n))
    return 0


def cmd_explore(args) -> int:
    limits = _limits(args)
    if args.quiver:
        Bt = _parse_input(parse_extended_matrix, _read_text(args.quiver))
        graph = explore_quiver_class(Quiver.from_matrix(Bt), limits)
    else:
        s = _load_seed(args)
        graph = explore_seeds(s, limits)
    if args.format == "dot":
        print(graph.to_dot())
    elif args.format == "json":
        print(graph.to_json())
    else:
        print(f"nodes\t{len(graph.nodes)}")
        print(f"edges\t{len(set(graph.edges))}")
        print(f"truncated\t{str(graph.truncated).lower()}")
        for i, d in enumerate(graph.depths):
            print(f"node\t{i}\tdepth\t{d}\tdegree\t{graph.degree(i)}")
    if args.plot:
        from .plotting import render_class_graph

        render_class_graph(graph, args.plot)
    return 0


def cmd_laurent(args) -> int:
    s = _load_seed(args)
    for k in _parse_word(args.word):
        s = mutate_seed(s, k)
    for idx, x in enumerate(s.cluster, start=1):
        print(f"x{idx}\t{x.canonical_str()}")
        if args.denominator:
            print(f"denominator\t{x.denominator_vector()}")
        if args.positivity:
            print(f"positive\t{str(x.is_positive()).lower()}")
    return 0


def cmd_ypattern(args) -> int:
    doc = _parse_input(json.loads, _read_text(args.yseed))
    num_vars = int(doc["numVars"])
    ys = yseed_from_json(json.dumps(doc), num_vars)
    orbit = [ys]
    for k in _parse_word(args.word):
        orbit.append(mutate_y(orbit[-1], k))
    for t, item in enumerate(orbit):
        print(f"step\t{t}")
        print(yseed_to_json(item))
    return 0


def cmd_tp(args) -> int:
    from .tp import (
        all_minors_positive,
        rational_matrix,
        tp_test_double_wiring,
        tp_test_solid,
        tp_test_triangulation,
        tp_test_wiring,
    )

    rows = []
    text = _read_text(args.matrix)
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    header = lines[0].split()
    for ln in lines[1:]:
        rows.append([Fraction(v) for v in ln.split()])
    z = rational_matrix(rows)
    if args.test == "solid":
        result = tp_test_solid(z)
    elif args.test == "oracle":
        result = all_minors_positive(z)
    elif args.test == "triangulation":
        from .geometry.triangulations import parse_triangulation

        result = tp_test_triangulation(z, parse_triangulation(args.model))
    elif args.test == "wiring":
        from .geometry.wiring import WiringDiagram, parse_word

        result = tp_test_wiring(z, WiringDiagram(len(z), parse_word(args.model)))
    elif args.test == "double-wiring":
        from .geometry.double_wiring import DoubleWiringDiagram, parse_double_word

        result = tp_test_double_wiring(
            z, DoubleWiringDiagram(len(z), parse_double_word(args.model))
        )
    else:
        raise CliError(f"unknown test {args.test}")
    print("positive" if result else "not-positive")
    return 0


def cmd_model(args) -> int:
    if args.kind == "triangulation":
        from .geometry.triangulations import parse_triangulation, plucker_cluster

        pc = plucker_cluster(_parse_input(parse_triangulation, args.spec))
        Q = Quiver.from_matrix(pc.seed.matrix)
        names = {i + 1: f"P{a}{b}" for i, (a, b) in enumerate(pc.chords)}
        if args.format == "dot":
            print(Q.to_dot(names))
        elif args.format == "json":
            print(seed_to_json(pc.seed))
        else:
            print(format_matrix(pc.seed.matrix.rows, pc.seed.n))
            for i, ch in enumerate(pc.chords, start=1):
                role = "mutable" if i <= pc.seed.n else "frozen"
                print(f"x{i}\tP{ch[0]},{ch[1]}\t{role}")
        if args.plot:
            from .plotting import render_quiver

            render_quiver(Q, args.plot, names)
        return 0
    if args.kind == "wiring":
        from .geometry.wiring import WiringDiagram, parse_word

        word = parse_word(args.spec)
        n = max(word) + 1
        D = WiringDiagram(n, tuple(word))
        Q, cmap = D.labeled_quiver()
        names = {v: "".join(str(x) for x in cmap[v].label()) for v in cmap}
        if args.format == "dot":
            print(Q.to_dot(names))
        else:
            print(format_matrix(Q.to_matrix().rows, Q.n))
            for v in sorted(cmap):
                print(f"x{v}\tP{names[v]}")
        if args.plot:
            from .plotting import render_quiver

            render_quiver(Q, args.plot, names)
        return 0
    if args.kind == "double-wiring":
        from .geometry.double_wiring import DoubleWiringDiagram, parse_double_word

        word = parse_double_word(args.spec)
        n = max(i for _, i in word) + 1
        D = DoubleWiringDiagram(n, word)
        Q, cmap = D.labeled_quiver()
        names = {}
        for v in sorted(cmap):
            rows_l, cols_l = cmap[v].label()
            names[v] = "D{}|{}".format(
                "".join(map(str, rows_l)), "".join(map(str, cols_l))
            )
        if args.format == "dot":
            print(Q.to_dot(names))
        else:
            print(format_matrix(Q.to_matrix().rows, Q.n))
            for v in sorted(cmap):
                print(f"x{v}\t{names[v]}")
        if args.plot:
            from .plotting import render_quiver

            render_quiver(Q, args.plot, names)
        return 0
    if args.kind == "bipartite":
        from .geometry.bipartite import DiskBipartiteGraph

        G = DiskBipartiteGraph.from_json(_read_text(args.spec))
        Q, fmap = G.labeled_quiver()
        if args.format == "dot":
            print(Q.to_dot({v: f"f{fmap[v]}" for v in fmap}))
        else:
            print(format_matrix(Q.to_matrix().rows, Q.n))
            for v in sorted(fmap):
                print(f"x{v}\tface {fmap[v]}")
        return 0
    raise CliError(f"unknown model kind {args.kind}")


def cmd_seq(args) -> int:
    if args.name == "somos4":
        if args.symbolic is not None:
            print(somos4_symbolic(args.symbolic, with_coeffs=args.with_coeffs).canonical_str())
        else:
            for v in somos4_terms(args.count):
                print(v)
        return 0
    if args.name == "somos5":
        for v in somos5_terms(args.count):
            print(v)
        return 0
    if args.name == "markov":
        tree = markov_tree(args.depth)
        for depth, level in enumerate(tree.levels):
            for t in level:
                print(f"{depth}\t{t.x1}\t{t.x2}\t{t.x3}")
        if args.plot:
            from .plotting import render_markov_tree

            render_markov_tree(tree.levels, args.plot)
        return 0
    if args.name == "fermat":
        report = fermat_demo()
        for v in report.specialized:
            print(v)
        print(f"F5\t{report.f5}\t=\t{report.factor}\t*\t{report.cofactor}")
        if not report.holds():
            raise CliError("Fermat demonstration failed")
        return 0
    if args.name == "fordy-marsh":
        vec = tuple(int(v) for v in args.vector.split(","))
        rows = fordy_marsh_matrix(vec)
        print(format_matrix(rows, len(rows)))
        return 0
    raise CliError(f"unknown sequence {args.name}")


def cmd_serve(args) -> int:
    from .service import serve

    port = args.port or int(os.environ.get(PORT_ENV, "8765"))
    host = "0.0.0.0" if args.public else "127.0.0.1"
    print(f"serving on http://{host}:{port}", file=sys.stderr)
    serve(host, port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="clusterkit", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add_seed_inputs(p):
        p.add_argument("--preset", help=f"named seed, one of {PRESET_NAMES}")
        p.add_argument("--seed", help="seed JSON file (or - for stdin)")
        p.add_argument("--matrix", help="extended matrix text file (or -)")

    p = sub.add_parser("mutate", help="mutate a matrix, quiver, or seed along a word")
    add_seed_inputs(p)
    p.add_argument("--quiver", help="matrix file interpreted as a quiver")
    p.add_argument("--word", default="", help="comma-separated directions")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("explore", help="BFS a mutation class or exchange graph")
    add_seed_inputs(p)
    p.add_argument("--quiver", help="matrix file interpreted as a quiver")
    p.add_argument("--max-nodes", type=int, default=1000)
    p.add_argument("--max-depth", type=int, default=32)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--plot", help="render the graph to this image file")
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("laurent", help="expand cluster variables at a word")
    add_seed_inputs(p)
    p.add_argument("--word", default="")
    p.add_argument("--denominator", action="store_true")
    p.add_argument("--positivity", action="store_true")
    p.set_defaults(func=cmd_laurent)

    p = sub.add_parser("ypattern", help="run a Y-seed orbit along a word")
    p.add_argument("--yseed", required=True, help="Y-seed JSON file with numVars")
    p.add_argument("--word", default="")
    p.set_defaults(func=cmd_ypattern)

    p = sub.add_parser("tp", help="run a total-positivity test on a matrix file")
    p.add_argument("--matrix", required=True)
    p.add_argument(
        "--test",
        required=True,
        choices=["solid", "oracle", "triangulation", "wiring", "double-wiring"],
    )
    p.add_argument("--model", help="triangulation / wiring word for model tests")
    p.set_defaults(func=cmd_tp)

    p = sub.add_parser("model", help="build a quiver/seed from a combinatorial model")
    p.add_argument("kind", choices=["triangulation", "wiring", "double-wiring", "bipartite"])
    p.add_argument("spec", help="model text (triangulation string, word, or JSON file)")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--plot", help="render the model quiver to this image file")
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("seq", help="number-theoretic sequences")
    p.add_argument("name", choices=["somos4", "somos5", "markov", "fermat", "fordy-marsh"])
    p.add_argument("--count", type=int, default=15)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--symbolic", type=int, default=None, help="symbolic term index")
    p.add_argument("--with-coeffs", action="store_true")
    p.add_argument("--vector", default="1,-1,-1,1", help="fordy-marsh coefficient vector")
    p.add_argument("--plot", help="render a figure to this image file")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("serve", help="start the local session service")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--public", action="store_true", help="bind beyond loopback")
    p.set_defaults(func=cmd_serve)

    return top


ENGINE_ERRORS = (
    ExactAlgebraError,
    MatrixError,
    QuiverError,
    SeedError,
    SequenceError,
    YPatternError,
)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (CliError, PresetError, ValueError) as exc:
        if isinstance(exc, ENGINE_ERRORS):
            print(f"engine error: {exc}", file=sys.stderr)
            return 2
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ENGINE_ERRORS as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
