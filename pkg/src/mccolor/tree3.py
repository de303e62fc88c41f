"""Colorings and lower-bound witnesses for complete planar 3-trees.

All routines walk the face hierarchy stored in :class:`Planar3TreeMeta`
rather than the edge list, so they stay linear in ``n`` up to ``k = 13``
(about 800k vertices).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, InvalidParameterError, PreconditionError
from .generators import Planar3TreeMeta, complete_3tree_order
from .graph import Coloring, Graph, component_labels
from .schemes import SchemeResult, finish

COMPONENT_LIST_LIMIT = 5000
# child (a,b,w) drops c, (b,c,w) drops a, (c,a,w) drops b
_CHILD_WITHOUT = (1, 2, 0)


@dataclass(frozen=True)
class LevelPlan:
    k: int
    ell: int
    n1: int
    n2: int

    @property
    def bound(self) -> int:
        return max(self.n1, self.n2)


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    color: int

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def _require_meta(g: Graph, meta: Planar3TreeMeta | None) -> Planar3TreeMeta:
    if meta is None:
        raise InvalidInputError("3-tree routines need complete planar 3-tree metadata")
    if complete_3tree_order(meta.k) != g.n:
        raise InvalidInputError(f"metadata describes T_{meta.k}, graph has {g.n} vertices")
    return meta


def inner_neighbor_count(levels: int) -> int:
    """Interior vertices adjacent to some outer vertex of ``T_levels``."""
    return 3 * 2**levels - 3 * levels - 2


def check_steps(g: Graph, colors: np.ndarray, step: np.ndarray) -> None:
    """Every recursion step's vertex set must be exactly one monochromatic component."""
    ncomp, labels = component_labels(g, colors)
    pairs = np.unique(np.stack([labels, step], axis=1), axis=0)
    nsteps = len(np.unique(step))
    if not (len(pairs) == ncomp == nsteps):
        raise AssertionError(
            f"recursion steps ({nsteps}) and monochromatic components ({ncomp}) do not correspond"
        )


# --- three colors -------------------------------------------------------------


def color_3tree_3colors(g: Graph, meta: Planar3TreeMeta | None) -> SchemeResult:
    """Recursive 3-coloring with a central-path structure of size ``3k - 2`` on top."""
    meta = _require_meta(g, meta)
    k = meta.k
    colors = np.full(g.n, -1, dtype=np.int64)
    step = np.full(g.n, -1, dtype=np.int64)
    v1, v2, v3 = meta.outer
    colors[[v1, v2, v3]] = (0, 0, 1)
    step[[v1, v2]] = 0
    step[v3] = 1
    next_step = 2
    blocks = [(0, 0)] if k > 0 else []
    while blocks:
        d, j = blocks.pop()
        a, b, c = meta.faces[d][j].tolist()
        (c3,) = {0, 1, 2} - {int(colors[a]), int(colors[b]), int(colors[c])}
        sid = next_step
        next_step += 1
        w = meta.center(d, j)
        colors[w], step[w] = c3, sid
        for p in range(3):
            dd, jj = d + 1, 3 * j + p
            while dd < k:
                x = meta.center(dd, jj)
                colors[x], step[x] = c3, sid
                if dd + 1 < k:
                    # children 1 and 2 are the side triangles of the path
                    blocks += [(dd + 1, 3 * jj + 1), (dd + 1, 3 * jj + 2)]
                dd, jj = dd + 1, 3 * jj
    assert (colors >= 0).all()
    check_steps(g, colors, step)
    return finish(g, colors.tolist(), 3, max(2, 3 * k - 2), components=g.n <= COMPONENT_LIST_LIMIT, steps=step)


def extract_monochromatic_path(g: Graph, meta: Planar3TreeMeta | None, c: Coloring) -> PathWitness:
    """Follow nested central vertices from a rainbow outer face.

    Each central vertex repeats the color of exactly one outer vertex of the
    current triangle and extends that vertex's path; the three paths hold
    ``k + 3`` vertices in total, so the longest has at least ``k / 3`` edges.
    """
    meta = _require_meta(g, meta)
    if len(c.colors) != g.n:
        raise InvalidInputError("coloring length does not match the graph")
    outer = meta.outer
    if len({c.colors[v] for v in outer}) != 3:
        raise PreconditionError("outer vertices must carry three distinct colors")
    paths = [[v] for v in outer]
    owner = {v: i for i, v in enumerate(outer)}
    d, j = 0, 0
    while d < meta.k:
        tri = meta.faces[d][j].tolist()
        w = meta.center(d, j)
        hits = [p for p, v in enumerate(tri) if c.colors[v] == c.colors[w]]
        if len(hits) != 1:
            raise PreconditionError(f"central vertex {w} has a color outside the outer triangle's colors")
        p = hits[0]
        path_id = owner.pop(tri[p])
        paths[path_id].append(w)
        owner[w] = path_id
        d, j = d + 1, 3 * j + _CHILD_WITHOUT[p]
    best = max(paths, key=len)
    return PathWitness(tuple(best), c.colors[best[0]])


# --- two colors ---------------------------------------------------------------


def plan_levels(k: int) -> LevelPlan:
    """Top-block depth minimizing ``max(n1, n2)`` by exhaustive search; ties go to smaller depth."""
    if k < 0:
        raise InvalidParameterError(f"level count must be >= 0, got k={k}")
    best = None
    for ell in range(k + 1):
        plan = LevelPlan(k, ell, complete_3tree_order(ell), inner_neighbor_count(k - ell))
        if best is None or plan.bound < best.bound:
            best = plan
    assert best is not None
    return best


def color_3tree_2colors(g: Graph, meta: Planar3TreeMeta | None) -> SchemeResult:
    """Top ``ell`` levels in one color, then alternate on neighbours of each block's outer vertices."""
    meta = _require_meta(g, meta)
    k = meta.k
    plan = plan_levels(k)
    colors = np.full(g.n, -1, dtype=np.int64)
    step = np.full(g.n, -1, dtype=np.int64)
    top = meta.level <= plan.ell
    colors[top] = 0
    step[top] = 0
    next_step = 1
    # (depth, index, color of the block's outer vertices)
    blocks = [(plan.ell, j, 0) for j in range(len(meta.faces[plan.ell]))] if plan.ell < k else []
    while blocks:
        d0, j0, outer_color = blocks.pop()
        tri = meta.faces[d0][j0].tolist()
        if len({int(colors[v]) for v in tri}) != 1:
            raise AssertionError(f"non-monochromatic triangle {tri} still has uncolored interior")
        inner = 1 - outer_color
        outer = set(tri)
        sid = next_step
        next_step += 1
        faces = [(d0, j0)]
        while faces:
            d, j = faces.pop()
            if d >= k:
                continue
            if d > d0 and outer.isdisjoint(meta.faces[d][j].tolist()):
                blocks.append((d, j, inner))
                continue
            w = meta.center(d, j)
            colors[w], step[w] = inner, sid
            faces += [(d + 1, 3 * j + p) for p in range(3)]
    assert (colors >= 0).all()
    check_steps(g, colors, step)
    return finish(g, colors.tolist(), 2, plan.bound, components=g.n <= COMPONENT_LIST_LIMIT, steps=step)


# --- wheel subgraphs ----------------------------------------------------------


def outer_wheel_vertices(meta: Planar3TreeMeta, outer_index: int) -> tuple[int, list[int]]:
    """Center and cyclically ordered rim of the wheel around an outer vertex."""
    if meta.k < 1:
        raise InvalidParameterError("T_0 has no interior, so its outer vertices span no wheel")
    if outer_index not in (1, 2, 3):
        raise InvalidParameterError("outer_index must be 1, 2 or 3")
    v = meta.outer[outer_index - 1]
    faces = meta.faces[meta.k]
    rows = faces[(faces == v).any(axis=1)]
    link: dict[int, list[int]] = {}
    pairs = [tuple(x for x in row if x != v) for row in rows.tolist()]
    pairs.append(tuple(x for x in meta.outer if x != v))
    for a, b in pairs:
        link.setdefault(a, []).append(b)
        link.setdefault(b, []).append(a)
    start = min(link)
    rim = [start]
    prev = None
    while True:
        cur = rim[-1]
        nxt = link[cur][0] if link[cur][0] != prev else link[cur][1]
        if nxt == start:
            break
        prev = cur
        rim.append(nxt)
    assert len(rim) == len(link), "link of an outer vertex must be one cycle"
    return v, rim


def extract_outer_wheel(g: Graph, meta: Planar3TreeMeta | None, outer_index: int) -> Graph:
    """The wheel formed by an outer vertex and its neighbours, relabeled center 0, rim 1..r."""
    meta = _require_meta(g, meta)
    center, rim = outer_wheel_vertices(meta, outer_index)
    r = len(rim)
    edges = [(0, i) for i in range(1, r + 1)] + [(i, i % r + 1) for i in range(1, r + 1)]
    for i in range(r):
        assert g.has_edge(center, rim[i]) and g.has_edge(rim[i], rim[(i + 1) % r])
    return Graph.from_edges(r + 1, edges, outer_cycle=range(1, r + 1), family={"name": "wheel", "params": {"n": r + 1}})
