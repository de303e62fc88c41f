"""Constructions of the graph families studied here, with structural metadata.

Every generator returns a :class:`~mccolor.graph.Graph` whose ``family`` tag
records the name and parameters, so metadata can be rebuilt from a saved file
with :func:`rebuild_meta`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence

import numpy as np

from .errors import InvalidInputError, InvalidParameterError
from .graph import Graph


def gen_wheel(n: int) -> Graph:
    """Wheel on ``n`` vertices: center 0, rim ``1..n-1`` in cyclic order."""
    if n < 4:
        raise InvalidParameterError(f"a wheel needs at least 4 vertices, got n={n}")
    rim = list(range(1, n))
    edges = [(0, r) for r in rim] + [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return Graph.from_edges(n, edges, outer_cycle=rim, family={"name": "wheel", "params": {"n": n}})


def gen_double_wheel(n: int, centers_adjacent: bool = False) -> Graph:
    """Two centers 0 and 1 joined to every vertex of the rim ``2..n-1``."""
    if n < 5:
        raise InvalidParameterError(f"a double wheel needs at least 5 vertices, got n={n}")
    rim = list(range(2, n))
    edges = [(c, r) for c in (0, 1) for r in rim]
    edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    if centers_adjacent:
        edges.append((0, 1))
    params: dict[str, Any] = {"n": n, "centers_adjacent": centers_adjacent}
    return Graph.from_edges(n, edges, family={"name": "double-wheel", "params": params})


# --- snowflakes -------------------------------------------------------------


@dataclass(frozen=True)
class SnowflakeMeta:
    """``parent[v]`` is p(v), the ancestor one height below; ``other[v]`` the lower one.

    Both are -1 for the three height-0 vertices.  At height 1 both ancestors
    have height 0 and ``parent`` is simply the first endpoint of the outer edge.
    """

    h: int
    height: tuple[int, ...]
    parent: tuple[int, ...]
    other: tuple[int, ...]


def gen_snowflake(h: int) -> tuple[Graph, SnowflakeMeta]:
    if h < 0:
        raise InvalidParameterError(f"snowflake height must be >= 0, got h={h}")
    edges = [(0, 1), (1, 2), (0, 2)]
    height = [0, 0, 0]
    parent = [-1, -1, -1]
    other = [-1, -1, -1]
    cycle = [0, 1, 2]
    for level in range(1, h + 1):
        new_cycle = []
        for i, a in enumerate(cycle):
            b = cycle[(i + 1) % len(cycle)]
            v = len(height)
            edges += [(a, v), (b, v)]
            height.append(level)
            p, o = (a, b) if height[a] >= height[b] else (b, a)
            parent.append(p)
            other.append(o)
            new_cycle += [a, v]
        cycle = new_cycle
    n = len(height)
    g = Graph.from_edges(n, edges, outer_cycle=cycle, family={"name": "snowflake", "params": {"h": h}})
    return g, SnowflakeMeta(h, tuple(height), tuple(parent), tuple(other))


# --- outerpaths -------------------------------------------------------------


@dataclass(frozen=True)
class OuterpathMeta:
    """Spine ``v_1..v_k``, degree-two ends ``v_0`` / ``v_{k+1}`` and fans.

    ``fans[i]`` is the rim of fan ``f_{i+1}`` in order, from ``v_i`` to
    ``v_{i+2}`` (0-based spine indexing); the fan center is ``spine[i]``.
    Fan size counts the center and every rim vertex.
    """

    spine: tuple[int, ...]
    v0: int
    v_end: int
    fans: tuple[tuple[int, ...], ...]
    fan_sizes: tuple[int, ...]


def check_fan_sizes(fan_sizes: Sequence[int]) -> None:
    k = len(fan_sizes)
    if k == 0:
        raise InvalidParameterError("an outerpath needs at least one fan")
    if k == 1:
        # the lone spine vertex sees only its own fan
        if fan_sizes[0] < 5:
            raise InvalidParameterError("a single-fan outerpath needs |f_1| >= 5")
        return
    for i, s in enumerate(fan_sizes):
        lo = 4 if i in (0, k - 1) else 3
        if s < lo:
            raise InvalidParameterError(f"fan {i + 1} has size {s}, needs at least {lo}")


def gen_outerpath(fan_sizes: Sequence[int]) -> tuple[Graph, OuterpathMeta]:
    """Maximal outerplanar graph whose weak dual is a path, built fan by fan.

    Numbering: spine vertices ``0..k-1``, then ``v_0 = k`` and ``v_{k+1} = k+1``,
    then fan interiors fan by fan.
    """
    fan_sizes = tuple(int(s) for s in fan_sizes)
    check_fan_sizes(fan_sizes)
    k = len(fan_sizes)
    spine = list(range(k))
    v0, v_end = k, k + 1
    nxt = k + 2
    # with v_0 and v_{k+1} included, position j in ext is v_j
    ext = [v0] + spine + [v_end]
    fans = []
    edges: set[tuple[int, int]] = set()
    for i in range(1, k + 1):
        interior = list(range(nxt, nxt + fan_sizes[i - 1] - 3))
        nxt += len(interior)
        rim = [ext[i - 1]] + interior + [ext[i + 1]]
        fans.append(tuple(rim))
        center = ext[i]
        for r in rim:
            edges.add((min(center, r), max(center, r)))
        for a, b in zip(rim, rim[1:]):
            edges.add((min(a, b), max(a, b)))
    n = nxt
    # sides of the outer cycle alternate between odd and even spine vertices
    side_even = [v0]
    side_odd = [spine[0]]
    for i in range(1, k + 1):
        inner = list(fans[i - 1][1:-1])
        target = side_even if i % 2 == 1 else side_odd
        target += inner + [ext[i + 1]]
    cycle = side_even + side_odd[::-1]
    g = Graph.from_edges(
        n,
        sorted(edges),
        outer_cycle=cycle,
        family={"name": "outerpath", "params": {"fan_sizes": list(fan_sizes)}},
    )
    return g, OuterpathMeta(tuple(spine), v0, v_end, tuple(fans), fan_sizes)


def random_fan_sizes(delta: int, seed: int, max_fans: int = 6) -> list[int]:
    """Seeded random fan sizes whose outerpath has maximum degree exactly ``delta``.

    Spine degrees are ``|f_i| - 1`` plus one per neighbouring fan.
    """
    if delta < 5:
        raise InvalidParameterError("delta must be at least 5")
    rng = random.Random(seed)
    k = rng.randint(2, max_fans)

    def cap(i: int) -> int:
        return delta + 1 - (2 if 0 < i < k - 1 else 1)

    sizes = []
    for i in range(k):
        lo = 4 if i in (0, k - 1) else 3
        sizes.append(rng.randint(lo, cap(i)))
    i = rng.randrange(k)
    sizes[i] = cap(i)
    return sizes


# --- complete planar 3-trees ------------------------------------------------


@dataclass(frozen=True, eq=False)
class Planar3TreeMeta:
    """Face hierarchy of a complete planar 3-tree ``T_k``.

    ``faces[d]`` is a ``(3**d, 3)`` array of the internal faces of ``T_d``.
    Face ``j`` at depth ``d < k`` has central vertex ``offsets[d + 1] + j`` and
    children ``3j, 3j+1, 3j+2`` at depth ``d + 1``; for face ``(a, b, c)`` with
    center ``w`` these are ``(a, b, w)``, ``(b, c, w)``, ``(c, a, w)``.
    """

    k: int
    outer: tuple[int, int, int]
    level: np.ndarray
    faces: tuple[np.ndarray, ...]
    offsets: tuple[int, ...]
    central_paths: dict[tuple[int, int], tuple[int, ...]]

    def center(self, depth: int, j: int) -> int:
        return self.offsets[depth + 1] + j

    def is_empty(self, depth: int) -> bool:
        return depth >= self.k


def _level_offset(level: int) -> int:
    # ids of level-L vertices start after the outer triangle and all lower levels
    return 3 + (3 ** (level - 1) - 1) // 2 if level >= 1 else 0


def complete_3tree_order(k: int) -> int:
    return (3**k + 5) // 2


def gen_complete_3tree(k: int) -> tuple[Graph, Planar3TreeMeta]:
    if k < 0:
        raise InvalidParameterError(f"level count must be >= 0, got k={k}")
    n = complete_3tree_order(k)
    faces = [np.array([[0, 1, 2]], dtype=np.int64)]
    offsets = [0] + [_level_offset(L) for L in range(1, k + 1)]
    level = np.zeros(n, dtype=np.int64)
    edge_blocks = [np.array([[0, 1], [1, 2], [0, 2]], dtype=np.int64)]
    for L in range(1, k + 1):
        cur = faces[-1]
        w = np.arange(offsets[L], offsets[L] + len(cur), dtype=np.int64)
        level[w] = L
        a, b, c = cur[:, 0], cur[:, 1], cur[:, 2]
        edge_blocks.append(np.stack([np.column_stack([x, w]) for x in (a, b, c)], axis=1).reshape(-1, 2))
        children = np.stack(
            [np.column_stack([a, b, w]), np.column_stack([b, c, w]), np.column_stack([c, a, w])], axis=1
        ).reshape(-1, 3)
        faces.append(children)
    for f in faces:
        f.flags.writeable = False
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for pair, child in (((0, 1), 0), ((1, 2), 1), ((0, 2), 2)):
        path = []
        d, j = 0, 0
        while d < k:
            path.append(offsets[d + 1] + j)
            # after the first step the outer pair sits in positions (0, 1)
            d, j = d + 1, 3 * j + (child if d == 0 else 0)
        paths[pair] = tuple(path)
    g = Graph.from_edges(
        n,
        np.concatenate(edge_blocks),
        outer_cycle=(0, 1, 2),
        levels=level,
        family={"name": "complete-3tree", "params": {"k": k}},
    )
    meta = Planar3TreeMeta(k, (0, 1, 2), g.levels, tuple(faces), tuple(offsets), paths)
    return g, meta


# --- random maximal outerplanar graphs --------------------------------------


@lru_cache(maxsize=None)
def catalan(i: int) -> int:
    if i <= 1:
        return 1
    return catalan(i - 1) * 2 * (2 * i - 1) // (i + 1)


def gen_random_mop(n: int, seed: int) -> Graph:
    """Uniformly random triangulation of the convex ``n``-gon ``0..n-1``."""
    if n < 3:
        raise InvalidParameterError(f"a maximal outerplanar graph needs n >= 3, got n={n}")
    rng = random.Random(seed)
    edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        # apex x splits the polygon i..j; weight = triangulations of both halves
        weights = [catalan(x - i - 1) * catalan(j - x - 1) for x in range(i + 1, j)]
        r = rng.randrange(sum(weights))
        x = i + 1
        for wgt in weights:
            if r < wgt:
                break
            r -= wgt
            x += 1
        edges.add((i, x))
        edges.add((x, j))
        stack += [(i, x), (x, j)]
    return Graph.from_edges(
        n, sorted(edges), outer_cycle=range(n), family={"name": "random-mop", "params": {"n": n, "seed": seed}}
    )


# --- family registry --------------------------------------------------------


def generate(name: str, **params: Any) -> tuple[Graph, Any]:
    """Dispatch by family name; returns ``(graph, meta_or_None)``."""
    if name == "wheel":
        return gen_wheel(int(params["n"])), None
    if name == "double-wheel":
        return gen_double_wheel(int(params["n"]), bool(params.get("centers_adjacent", False))), None
    if name == "snowflake":
        return gen_snowflake(int(params["h"]))
    if name == "outerpath":
        return gen_outerpath(params["fan_sizes"])
    if name == "complete-3tree":
        return gen_complete_3tree(int(params["k"]))
    if name == "random-mop":
        return gen_random_mop(int(params["n"]), int(params["seed"])), None
    raise InvalidParameterError(f"unknown family {name!r}")


FAMILIES = ("wheel", "double-wheel", "snowflake", "outerpath", "complete-3tree", "random-mop")


def rebuild_meta(g: Graph, expected: str) -> Any:
    """Regenerate the metadata of a saved graph from its family tag.

    Raises :class:`InvalidInputError` when the tag is missing, names another
    family, or the regenerated graph does not match ``g``.
    """
    fam = g.family
    if not fam or fam.get("name") != expected:
        got = fam.get("name") if fam else None
        raise InvalidInputError(f"graph lacks {expected} metadata (family tag is {got!r})")
    try:
        regen, meta = generate(expected, **fam.get("params", {}))
    except (KeyError, TypeError) as exc:
        raise InvalidInputError(f"family tag for {expected} is incomplete: {exc}") from None
    if regen.n != g.n or not np.array_equal(regen.edges, g.edges):
        raise InvalidInputError(f"graph does not match the {expected} named by its family tag")
    return meta
