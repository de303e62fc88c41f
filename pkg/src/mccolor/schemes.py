"""Constructive 2-colorings for wheels, snowflakes and outerpaths.

Each scheme returns a :class:`SchemeResult` carrying the coloring, the bound
the construction guarantees for the instance, and the verified report.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError
from .generators import OuterpathMeta, SnowflakeMeta
from .graph import BLACK, WHITE, Coloring, Graph, MccReport, max_degree, monochromatic_components


class BoundExceptionWarning(UserWarning):
    """A scheme ran on an instance where its textbook bound cannot hold."""


@dataclass(frozen=True)
class SchemeResult:
    coloring: Coloring
    claimed_bound: int
    report: MccReport
    notes: tuple[str, ...] = field(default=())
    # recursion step that colored each vertex, for recursive schemes
    steps: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def max_component(self) -> int:
        return self.report.max_component


def finish(
    g: Graph, colors, t: int, claimed: int, notes: tuple[str, ...] = (), components: bool = True,
    steps: np.ndarray | None = None,
) -> SchemeResult:
    coloring = Coloring.of(t, colors)
    report = monochromatic_components(g, coloring, with_components=components)
    if report.max_component > claimed:
        raise AssertionError(f"scheme produced a component of size {report.max_component} > claimed {claimed}")
    return SchemeResult(coloring, claimed, report, notes, steps)


# --- wheels -------------------------------------------------------------------


def wheel_structure(g: Graph) -> tuple[int, list[int]]:
    """Return ``(center, rim in cyclic order)`` or raise if ``g`` is not a wheel."""
    n = g.n
    if n < 4 or g.m != 2 * (n - 1):
        raise InvalidInputError("graph is not a wheel")
    centers = [v for v in range(n) if len(g.adj[v]) == n - 1]
    if not centers:
        raise InvalidInputError("graph is not a wheel: no vertex is adjacent to all others")
    center = centers[0]
    rim_set = [v for v in range(n) if v != center]
    rim_adj = {v: [u for u in g.adj[v] if u != center] for v in rim_set}
    if any(len(a) != 2 for a in rim_adj.values()):
        raise InvalidInputError("graph is not a wheel: rim is not a cycle")
    rim = [rim_set[0]]
    prev = None
    while True:
        cur = rim[-1]
        nxt = rim_adj[cur][0] if rim_adj[cur][0] != prev else rim_adj[cur][1]
        if nxt == rim[0]:
            break
        prev = cur
        rim.append(nxt)
    if len(rim) != n - 1:
        raise InvalidInputError("graph is not a wheel: rim splits into several cycles")
    return center, rim


def ceil_sqrt(x: int) -> int:
    return math.isqrt(x - 1) + 1 if x > 0 else 0


def _wheel_cost(rim: int, b: int) -> int:
    return max(b + 1, -(-(rim - b) // b))


def separator_count(n: int) -> int:
    """Black rim vertices for a wheel on ``n`` vertices.

    Starts from ``floor(sqrt(n))`` and takes any count that does strictly
    better on this instance.  That happens at perfect squares, where one
    separator fewer saves a vertex (K4 drops from 3 to 2).
    """
    rim = n - 1
    base = math.isqrt(n)
    best = base
    for b in range(1, rim + 1):
        if _wheel_cost(rim, b) < _wheel_cost(rim, best):
            best = b
    return best


def evenly_spaced(length: int, count: int) -> list[int]:
    """``count`` positions in ``range(length)`` starting at 0 with near-equal gaps."""
    return [(i * length) // count for i in range(count)]


def color_wheel(g: Graph) -> SchemeResult:
    center, rim = wheel_structure(g)
    n = g.n
    b = separator_count(n)
    colors = [WHITE] * n
    colors[center] = BLACK
    for pos in evenly_spaced(len(rim), b):
        colors[rim[pos]] = BLACK
    return finish(g, colors, 2, ceil_sqrt(n) + 1)


# --- snowflakes ---------------------------------------------------------------


def color_snowflake(g: Graph, meta: SnowflakeMeta | None) -> SchemeResult:
    """Height-0 triangle black; a vertex takes the opposite of two equal ancestors, else p(v)'s color."""
    if meta is None or len(meta.parent) != g.n:
        raise InvalidInputError("snowflake coloring needs ancestor metadata")
    if meta.h < 1:
        raise InvalidInputError("snowflake coloring needs height h >= 1")
    colors = [BLACK] * g.n
    for v in sorted(range(g.n), key=meta.height.__getitem__):
        if meta.height[v] == 0:
            continue
        p, o = meta.parent[v], meta.other[v]
        colors[v] = 1 - colors[p] if colors[p] == colors[o] else colors[p]
    delta = max_degree(g)
    notes: tuple[str, ...] = ()
    if delta - 3 < 3:
        msg = (
            f"snowflake of height {meta.h} (max degree {delta}): the height-0 triangle is "
            f"monochromatic, so the bound {delta - 3} is raised to 3"
        )
        warnings.warn(msg, BoundExceptionWarning, stacklevel=2)
        notes = (msg,)
    return finish(g, colors, 2, max(3, delta - 3), notes)


# --- outerpaths ---------------------------------------------------------------


def spine_colors(k: int) -> list[int]:
    """Pairs of consecutive spine vertices share a color; pairs alternate, starting black."""
    return [BLACK if ((i // 2) % 2 == 0) else WHITE for i in range(k)]


def color_outerpath(g: Graph, meta: OuterpathMeta | None) -> SchemeResult:
    if meta is None or not meta.fans:
        raise InvalidInputError("outerpath coloring needs outerpath metadata")
    k = len(meta.spine)
    colors = [-1] * g.n
    for v, c in zip(meta.spine, spine_colors(k)):
        colors[v] = c
    colors[meta.v0] = WHITE
    before_last = colors[meta.spine[k - 2]] if k >= 2 else colors[meta.v0]
    last = colors[meta.spine[k - 1]]
    colors[meta.v_end] = 1 - last if before_last == last else last

    for i, rim in enumerate(meta.fans):
        interior = list(rim[1:-1])
        if not interior:
            continue
        center_color = colors[meta.spine[i]]
        # exactly one spine end of the fan differs from the center
        if colors[rim[0]] != center_color:
            bridge, rest = interior[0], interior[1:]
        else:
            bridge, rest = interior[-1], interior[-2::-1]
        colors[bridge] = center_color
        block = ceil_sqrt(len(rim) + 1)
        # runs of ``block`` vertices of the other color, split by center-colored separators
        for j, v in enumerate(rest):
            colors[v] = center_color if j % (block + 1) == block else 1 - center_color
    return finish(g, colors, 2, 4 * (ceil_sqrt(max_degree(g)) + 1))
