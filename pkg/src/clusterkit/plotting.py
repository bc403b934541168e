"""Figure rendering for the CLI report paths.

Exploration graphs and quivers can be rendered to image files next to the
delimited/JSON output; matplotlib stays behind this module so that library
users never pay for it unless they ask for a picture.
"""

from __future__ import annotations

import math
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .quivers import Quiver
from .search import MutationClassGraph


def _layout(nodes, edges) -> Dict:
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(nodes)
    G.add_edges_from(edges)
    if len(nodes) <= 12:
        return nx.circular_layout(G)
    return nx.spring_layout(G, seed=7)


def render_class_graph(graph: MutationClassGraph, path: str, title: Optional[str] = None) -> None:
    """Draw an exploration graph to an image file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    nodes = list(range(len(graph.nodes)))
    edges = sorted({(min(a, b), max(a, b)) for a, _, b in graph.edges if a != b})
    pos = _layout(nodes, edges)
    fig, ax = plt.subplots(figsize=(7, 7))
    for a, b in edges:
        xa, ya = pos[a]
        xb, yb = pos[b]
        ax.plot([xa, xb], [ya, yb], color="#888888", lw=0.8, zorder=1)
    xs = [pos[v][0] for v in nodes]
    ys = [pos[v][1] for v in nodes]
    ax.scatter(xs, ys, s=120, c="#3b6ea5", zorder=2)
    for v in nodes:
        ax.annotate(str(v), pos[v], ha="center", va="center", color="white", fontsize=7, zorder=3)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    if graph.truncated:
        ax.text(0.01, 0.01, "truncated", transform=ax.transAxes, color="#aa2222")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_quiver(Q: Quiver, path: str, names: Optional[Mapping[int, str]] = None,
                  title: Optional[str] = None) -> None:
    """Draw a quiver: mutable vertices as circles, frozen as squares, arrow
    multiplicities as labels."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    nodes = list(range(1, Q.m + 1))
    edges = [(i, j) for (i, j) in Q.arrows]
    pos = _layout(nodes, edges)
    fig, ax = plt.subplots(figsize=(6, 6))
    for (i, j), mult in Q.arrows.items():
        xi, yi = pos[i]
        xj, yj = pos[j]
        ax.annotate(
            "",
            xy=(xj, yj),
            xytext=(xi, yi),
            arrowprops=dict(arrowstyle="-|>", color="#444444", lw=1.1,
                            shrinkA=12, shrinkB=12),
            zorder=1,
        )
        if mult > 1:
            ax.text((xi + xj) / 2, (yi + yj) / 2, str(mult), fontsize=9,
                    color="#aa2222", ha="center", zorder=3)
    for v in nodes:
        x, y = pos[v]
        marker = "o" if v <= Q.n else "s"
        color = "#3b6ea5" if v <= Q.n else "#777777"
        ax.scatter([x], [y], s=330, marker=marker, c=color, zorder=2)
        name = names.get(v, str(v)) if names else str(v)
        ax.annotate(name, (x, y), ha="center", va="center", color="white",
                    fontsize=8, zorder=4)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_markov_tree(levels: Sequence[Sequence], path: str) -> None:
    """Draw the levels of a Markov triple tree."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(1.8 * max(2, len(levels)), 6))
    for depth, level in enumerate(levels):
        n = len(level)
        for idx, triple in enumerate(level):
            y = (idx + 1) / (n + 1)
            ax.text(depth, y, str(triple.as_tuple()), ha="center", va="center",
                    fontsize=8,
                    bbox=dict(boxstyle="round", fc="#eef2fa", ec="#3b6ea5"))
    ax.set_xlim(-0.5, len(levels) - 0.5)
    ax.set_ylim(0, 1)
    ax.set_axis_off()
    ax.set_title("Markov triples by level")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
