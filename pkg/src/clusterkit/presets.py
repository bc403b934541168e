"""Named starting seeds shared by the CLI and the session service.

`gr2-<m>` and `grid-<a>-<b>` are parameterized; the bare names listed by
PRESET_NAMES are what the /presets endpoint reports.
"""

from __future__ import annotations

import re
from typing import Optional

from .matrices import ExtendedExchangeMatrix, freeze
from .quivers import grid_quiver, markov_quiver, somos4_quiver
from .seeds import Seed, initial_seed
from .geometry.triangulations import fan_triangulation, plucker_cluster
from .geometry.double_wiring import DoubleWiringDiagram, sl3_demo_word

PRESET_NAMES = [
    "markov",
    "somos4",
    "a11",
    "a12",
    "gr2-m",
    "sl3-double-wiring",
    "grid-a-b",
]

_GR2 = re.compile(r"^gr2-(\d+)$")
_GRID = re.compile(r"^grid-(\d+)-(\d+)$")


class PresetError(ValueError):
    pass


def preset_seed(name: str) -> Seed:
    name = name.strip().lower()
    if name == "markov":
        return initial_seed(markov_quiver().to_matrix())
    if name == "somos4":
        return initial_seed(somos4_quiver().to_matrix())
    if name == "a11":
        return initial_seed(ExtendedExchangeMatrix(((0, 1), (-1, 0)), 2))
    if name == "a12":
        return initial_seed(ExtendedExchangeMatrix(((0, 1), (-2, 0)), 2))
    if name == "sl3-double-wiring":
        D = DoubleWiringDiagram(3, sl3_demo_word())
        return initial_seed(D.quiver().to_matrix())
    m = _GR2.match(name)
    if m:
        size = int(m.group(1))
        if size < 4:
            raise PresetError("gr2-m needs m >= 4")
        return plucker_cluster(fan_triangulation(size)).seed
    m = _GRID.match(name)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        return initial_seed(grid_quiver(a, b).to_matrix())
    if name in ("gr2-m", "grid-a-b"):
        raise PresetError(f"{name} is parameterized; use e.g. gr2-6 or grid-2-3")
    raise PresetError(f"unknown preset {name!r}")
