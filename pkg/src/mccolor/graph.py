"""Graphs, colorings and monochromatic-component analysis.

Vertex ids are dense ``0..n-1`` everywhere in the package.  Edge lists are kept
as a sorted ``(m, 2)`` integer array with ``u < v`` in every row, which keeps the
million-vertex 3-trees cheap to hold and makes serialization canonical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import InvalidInputError

GRAPH_FORMAT = "mcc-graph/1"
COLORING_FORMAT = "mcc-coloring/1"
REPORT_FORMAT = "mcc-report/1"

BLACK = 0
WHITE = 1


def _normalize_edges(n: int, edges: Iterable[Sequence[int]] | np.ndarray) -> np.ndarray:
    arr = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, 2), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InvalidInputError("edges must be a list of vertex pairs")
    if arr.min() < 0 or arr.max() >= n:
        raise InvalidInputError(f"edge endpoint outside 0..{n - 1}")
    if np.any(arr[:, 0] == arr[:, 1]):
        raise InvalidInputError("self-loops are not allowed")
    arr = np.sort(arr, axis=1)
    uniq = np.unique(arr, axis=0)
    if len(uniq) != len(arr):
        raise InvalidInputError("duplicate edges are not allowed")
    return uniq


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph with optional embedding metadata.

    Build instances with :meth:`from_edges`; the raw constructor trusts its
    arguments.
    """

    n: int
    edges: np.ndarray
    outer_cycle: tuple[int, ...] | None = None
    levels: np.ndarray | None = None
    family: dict[str, Any] | None = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]] | np.ndarray,
        outer_cycle: Sequence[int] | None = None,
        levels: Sequence[int] | np.ndarray | None = None,
        family: dict[str, Any] | None = None,
    ) -> "Graph":
        if n < 0:
            raise InvalidInputError("vertex count must be non-negative")
        arr = _normalize_edges(n, edges)
        arr.flags.writeable = False
        g_levels = None
        if levels is not None:
            g_levels = np.asarray(levels, dtype=np.int64)
            if g_levels.shape != (n,):
                raise InvalidInputError("levels must have one entry per vertex")
            g_levels.flags.writeable = False
        g = cls(
            n=n,
            edges=arr,
            outer_cycle=tuple(int(v) for v in outer_cycle) if outer_cycle is not None else None,
            levels=g_levels,
            family=family,
        )
        if g.outer_cycle is not None:
            g._check_outer_cycle()
        return g

    def _check_outer_cycle(self) -> None:
        cyc = self.outer_cycle
        assert cyc is not None
        if len(set(cyc)) != len(cyc) or any(not 0 <= v < self.n for v in cyc):
            raise InvalidInputError("outer_cycle must list distinct vertices of the graph")
        if len(cyc) >= 2:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not self.has_edge(a, b):
                    raise InvalidInputError(f"outer_cycle step ({a}, {b}) is not an edge")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n)

    @cached_property
    def adj(self) -> list[list[int]]:
        """Sorted adjacency lists; meant for small graphs and exact solvers."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges.tolist():
            out[u].append(v)
            out[v].append(u)
        for row in out:
            row.sort()
        return out

    @cached_property
    def _edge_keys(self) -> np.ndarray:
        return self.edges[:, 0] * max(self.n, 1) + self.edges[:, 1]

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        a, b = (u, v) if u < v else (v, u)
        key = a * max(self.n, 1) + b
        i = np.searchsorted(self._edge_keys, key)
        return bool(i < len(self._edge_keys) and self._edge_keys[i] == key)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.edges.tolist()]

    def with_family(self, name: str, **params: Any) -> "Graph":
        return Graph(self.n, self.edges, self.outer_cycle, self.levels, {"name": name, "params": params})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        same_levels = (self.levels is None and other.levels is None) or (
            self.levels is not None
            and other.levels is not None
            and np.array_equal(self.levels, other.levels)
        )
        return (
            self.n == other.n
            and np.array_equal(self.edges, other.edges)
            and self.outer_cycle == other.outer_cycle
            and same_levels
            and self.family == other.family
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        fam = self.family["name"] if self.family else None
        return f"Graph(n={self.n}, m={self.m}, family={fam!r})"


@dataclass(frozen=True)
class Coloring:
    t: int
    colors: tuple[int, ...]

    @classmethod
    def of(cls, t: int, colors: Iterable[int]) -> "Coloring":
        return cls(t, tuple(int(c) for c in colors))

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class MccReport:
    max_component: int
    per_color_max: tuple[int, ...]
    components: tuple[tuple[int, tuple[int, ...]], ...] | None = field(default=None, repr=False)


def validate_coloring(g: Graph, c: Coloring, t: int) -> bool:
    if len(c.colors) != g.n:
        return False
    return all(0 <= x < t for x in c.colors)


def max_degree(g: Graph) -> int:
    return int(g.degrees.max()) if g.n and g.m else 0


def component_labels(g: Graph, colors: Sequence[int] | np.ndarray) -> tuple[int, np.ndarray]:
    """Label vertices by monochromatic component (scipy graph traversal)."""
    col = np.asarray(colors, dtype=np.int64)
    e = g.edges
    mono = e[col[e[:, 0]] == col[e[:, 1]]]
    mat = coo_matrix(
        (np.ones(len(mono), dtype=np.int8), (mono[:, 0], mono[:, 1])), shape=(g.n, g.n)
    )
    return connected_components(mat, directed=False)


def monochromatic_components(g: Graph, c: Coloring, with_components: bool = True) -> MccReport:
    """Sizes of all maximal connected single-colored vertex sets.

    Components are listed by their smallest vertex id.  Pass
    ``with_components=False`` on large graphs to skip materializing the
    vertex lists.
    """
    if len(c.colors) != g.n:
        raise InvalidInputError(f"coloring has {len(c.colors)} entries, graph has {g.n} vertices")
    if not validate_coloring(g, c, c.t):
        raise InvalidInputError(f"coloring uses a color outside 0..{c.t - 1}")
    if g.n == 0:
        return MccReport(0, (0,) * c.t, () if with_components else None)
    col = np.asarray(c.colors, dtype=np.int64)
    ncomp, labels = component_labels(g, col)
    sizes = np.bincount(labels, minlength=ncomp)
    # every vertex of a component carries the component's color
    comp_color = np.zeros(ncomp, dtype=np.int64)
    comp_color[labels] = col
    per_color = np.zeros(c.t, dtype=np.int64)
    np.maximum.at(per_color, comp_color, sizes)
    comps = None
    if with_components:
        order = np.argsort(labels, kind="stable")
        bounds = np.cumsum(sizes)[:-1]
        groups = np.split(order, bounds)
        groups.sort(key=lambda grp: int(grp[0]))
        comps = tuple((int(col[grp[0]]), tuple(int(v) for v in grp)) for grp in groups)
    return MccReport(int(sizes.max()), tuple(int(x) for x in per_color), comps)


# --- serialization -------------------------------------------------------


def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {
        "format": GRAPH_FORMAT,
        "n": g.n,
        "edges": g.edges.tolist(),
        "outer_cycle": list(g.outer_cycle) if g.outer_cycle is not None else None,
        "levels": g.levels.tolist() if g.levels is not None else None,
        "family": g.family,
    }


def graph_from_dict(data: dict[str, Any]) -> Graph:
    if data.get("format") != GRAPH_FORMAT:
        raise InvalidInputError(f"expected format {GRAPH_FORMAT!r}, got {data.get('format')!r}")
    try:
        return Graph.from_edges(
            int(data["n"]),
            data["edges"],
            outer_cycle=data.get("outer_cycle"),
            levels=data.get("levels"),
            family=data.get("family"),
        )
    except KeyError as exc:
        raise InvalidInputError(f"graph JSON is missing field {exc}") from None


def coloring_to_dict(c: Coloring) -> dict[str, Any]:
    return {"format": COLORING_FORMAT, "t": c.t, "colors": list(c.colors)}


def coloring_from_dict(data: dict[str, Any]) -> Coloring:
    if data.get("format") != COLORING_FORMAT:
        raise InvalidInputError(f"expected format {COLORING_FORMAT!r}, got {data.get('format')!r}")
    try:
        c = Coloring.of(int(data["t"]), data["colors"])
    except KeyError as exc:
        raise InvalidInputError(f"coloring JSON is missing field {exc}") from None
    if any(not 0 <= x < c.t for x in c.colors):
        raise InvalidInputError("coloring JSON contains a color outside 0..t-1")
    return c


def report_to_dict(r: MccReport) -> dict[str, Any]:
    out: dict[str, Any] = {
        "format": REPORT_FORMAT,
        "max_component": r.max_component,
        "per_color_max": list(r.per_color_max),
    }
    if r.components is not None:
        out["components"] = [[color, list(vs)] for color, vs in r.components]
    return out


def report_from_dict(data: dict[str, Any]) -> MccReport:
    comps = data.get("components")
    return MccReport(
        int(data["max_component"]),
        tuple(int(x) for x in data["per_color_max"]),
        tuple((int(col), tuple(int(v) for v in vs)) for col, vs in comps) if comps is not None else None,
    )


def dumps(obj: dict[str, Any]) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def save_json(obj: dict[str, Any], path: str | Path) -> None:
    Path(path).write_text(dumps(obj))


def load_json(path: str | Path) -> dict[str, Any]:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path}: not valid JSON ({exc})") from None


def load_graph(path: str | Path) -> Graph:
    return graph_from_dict(load_json(path))


def load_coloring(path: str | Path) -> Coloring:
    return coloring_from_dict(load_json(path))


PALETTE = ("black", "white", "gray60", "tomato", "skyblue", "gold", "palegreen", "plum")


def graph_to_dot(g: Graph, c: Coloring | None = None) -> str:
    lines = ["graph G {", "  node [style=filled, shape=circle];"]
    for v in range(g.n):
        if c is None:
            lines.append(f"  {v};")
        else:
            fill = PALETTE[c.colors[v] % len(PALETTE)]
            font = "white" if fill == "black" else "black"
            lines.append(f'  {v} [fillcolor="{fill}", fontcolor="{font}"];')
    for u, v in g.edges.tolist():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
