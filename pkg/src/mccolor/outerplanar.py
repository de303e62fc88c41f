"""Exact mcc_2 of maximal outerplanar graphs by dynamic programming on the weak dual.

The weak dual is rooted at a leaf face.  For a dual node ``mu`` with
attachment edge ``(u, v)``, ``G(mu)`` is the union of the faces in its
subtree, and a 2-coloring of ``G(mu)`` is summarized by a :class:`DpState`:
pole colors, the sizes of the components holding each pole, and the largest
black / white components avoiding both poles.  Colorings with equal summaries
extend identically, so one witness per summary suffices.

Colors are ``0`` (black) and ``1`` (white).
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import RecognitionError
from .graph import Coloring, Graph, max_degree

LEFT = "left"  # child hung on (u, w); the new vertex is v
RIGHT = "right"  # child hung on (w, v); the new vertex is u


class DpState(NamedTuple):
    k1: int
    k2: int
    l1: int
    l2: int
    s1: int
    s2: int

    def value(self) -> int:
        return max(self.l1, self.l2, self.s1, self.s2)


@dataclass
class WeakDualTree:
    """Rooted weak dual; node ``i`` is the face ``(u, v, w)`` with attachment ``(u, v)``."""

    faces: list[tuple[int, int, int]]
    root: int
    attach: list[tuple[int, int]]
    apex: list[int]
    left: list[int | None]
    right: list[int | None]
    parent: list[int | None]

    def __len__(self) -> int:
        return len(self.faces)

    def children(self, i: int) -> list[int]:
        return [c for c in (self.left[i], self.right[i]) if c is not None]

    def postorder(self) -> list[int]:
        out: list[int] = []
        stack = [(self.root, False)]
        while stack:
            node, done = stack.pop()
            if done:
                out.append(node)
                continue
            stack.append((node, True))
            for c in reversed(self.children(node)):
                stack.append((c, False))
        return out

    def subtree_vertices(self, i: int) -> set[int]:
        verts: set[int] = set()
        stack = [i]
        while stack:
            node = stack.pop()
            verts.update(self.faces[node])
            stack.extend(self.children(node))
        return verts


@dataclass
class DpTable:
    node: int
    states: dict[DpState, tuple] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.states)


def _ear_faces(g: Graph) -> list[tuple[int, int, int]]:
    n = g.n
    if g.m != 2 * n - 3:
        raise RecognitionError(f"not maximal outerplanar: m={g.m} but 2n-3={2 * n - 3}")
    nbrs = [set(a) for a in g.adj]
    if any(len(s) < 2 for s in nbrs):
        v = next(i for i, s in enumerate(nbrs) if len(s) < 2)
        raise RecognitionError(f"not biconnected: vertex {v} has degree {len(nbrs[v])}")
    alive = n
    queue = [v for v in range(n) if len(nbrs[v]) == 2]
    faces = []
    while alive > 3:
        while queue and (len(nbrs[queue[-1]]) != 2):
            queue.pop()
        if not queue:
            raise RecognitionError("ear decomposition failed: no removable vertex of degree 2")
        v = queue.pop()
        a, b = sorted(nbrs[v])
        if b not in nbrs[a]:
            raise RecognitionError(f"ear decomposition failed: neighbours {a}, {b} of vertex {v} are not adjacent")
        faces.append((a, b, v))
        nbrs[a].discard(v)
        nbrs[b].discard(v)
        nbrs[v].clear()
        alive -= 1
        for x in (a, b):
            if len(nbrs[x]) < 2:
                raise RecognitionError(f"not biconnected: vertex {x} is a cut vertex")
            if len(nbrs[x]) == 2:
                queue.append(x)
    rest = sorted(v for v in range(n) if nbrs[v])
    a, b, c = rest
    if not (b in nbrs[a] and c in nbrs[a] and c in nbrs[b]):
        raise RecognitionError("ear decomposition failed: final three vertices do not form a triangle")
    faces.append((a, b, c))
    return faces


def build_weak_dual(g: Graph) -> WeakDualTree:
    """Recognize a maximal outerplanar graph and root its weak dual at a leaf face."""
    if g.n < 3:
        raise RecognitionError(f"need at least 3 vertices, got {g.n}")
    faces = sorted(tuple(sorted(f)) for f in _ear_faces(g))
    by_edge: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i, f in enumerate(faces):
        for a, b in itertools.combinations(f, 2):
            by_edge[(a, b)].append(i)
    for e, fs in by_edge.items():
        if len(fs) > 2:
            raise RecognitionError(f"not outerplanar: edge {e} lies on {len(fs)} triangles")

    def across(i: int, a: int, b: int) -> int | None:
        for j in by_edge[(min(a, b), max(a, b))]:
            if j != i:
                return j
        return None

    k = len(faces)
    root = next(
        i for i, f in enumerate(faces)
        if sum(len(by_edge[e]) == 2 for e in itertools.combinations(f, 2)) <= 1
    )
    attach: list[tuple[int, int]] = [(0, 0)] * k
    apex = [0] * k
    left: list[int | None] = [None] * k
    right: list[int | None] = [None] * k
    parent: list[int | None] = [None] * k
    root_edge = next(e for e in itertools.combinations(faces[root], 2) if len(by_edge[e]) == 1)
    stack = [(root, root_edge, None)]
    while stack:
        i, (u, v), par = stack.pop()
        w = next(x for x in faces[i] if x not in (u, v))
        attach[i], apex[i], parent[i] = (u, v), w, par
        lc, rc = across(i, u, w), across(i, w, v)
        left[i], right[i] = lc, rc
        if rc is not None:
            stack.append((rc, (w, v), i))
        if lc is not None:
            stack.append((lc, (u, w), i))
    return WeakDualTree(faces, root, attach, apex, left, right, parent)


# --- transitions --------------------------------------------------------------


def _fits(s: DpState, cap: int) -> DpState | None:
    return s if max(s.l1, s.l2, s.s1, s.s2) <= cap else None


def triangle_state(cu: int, cv: int, cw: int) -> DpState:
    sig = [0, 0]
    if cu == cv == cw:
        return DpState(cu, cv, 3, 3, 0, 0)
    if cu == cv:
        sig[cw] = 1
        return DpState(cu, cv, 2, 2, sig[0], sig[1])
    if cu == cw:
        return DpState(cu, cv, 2, 1, 0, 0)
    return DpState(cu, cv, 1, 2, 0, 0)


def leaf_table(face: tuple[int, int, int], cap: int, node: int = -1) -> DpTable:
    """All eight colorings of a leaf face ``(u, v, w)`` as states."""
    table = DpTable(node)
    for cu, cv, cw in itertools.product((0, 1), repeat=3):
        s = _fits(triangle_state(cu, cv, cw), cap)
        if s is not None and s not in table.states:
            table.states[s] = ((cu, cv, cw),)
    return table


def combine_two_children(s1: DpState, s2: DpState, cap: int) -> DpState | None:
    """Glue ``G(mu1)`` (poles u, w) and ``G(mu2)`` (poles w, v) and add the edge (u, v)."""
    if s1.k2 != s2.k1:
        return None
    cu, cw, cv = s1.k1, s1.k2, s2.k2
    w_size = s1.l2 + s2.l1 - 1
    sig = [max(s1.s1, s2.s1), max(s1.s2, s2.s2)]
    if cu == cv == cw:
        lu = lv = w_size
    elif cu == cv:
        # poles merge through (u, v); w's component is cut off from both poles
        lu = lv = s1.l1 + s2.l2
        sig[cw] = max(sig[cw], w_size)
    elif cu == cw:
        lu, lv = w_size, s2.l2
    else:
        lu, lv = s1.l1, w_size
    return _fits(DpState(cu, cv, lu, lv, sig[0], sig[1]), cap)


def combine_one_child(s1: DpState, apex_color: int, cap: int, side: str = LEFT) -> DpState | None:
    """Add the third face vertex next to a single child.

    ``side=LEFT``: the child has poles ``(u, w)`` and the new vertex is ``v``.
    ``side=RIGHT``: the child has poles ``(w, v)`` and the new vertex is ``u``.
    The new vertex is adjacent to both child poles.
    """
    cp, cq, lp, lq = s1.k1, s1.k2, s1.l1, s1.l2
    c = apex_color
    if cp == c:
        x_size = 1 + lp
    elif cq == c:
        x_size = 1 + lq
    else:
        x_size = 1
    p_size = x_size if cp == c else lp
    q_size = x_size if cq == c else lq
    sig = [s1.s1, s1.s2]
    if side == LEFT:
        # w = q leaves the pole set
        if cq != cp and cq != c:
            sig[cq] = max(sig[cq], lq)
        out = DpState(cp, c, p_size, x_size, sig[0], sig[1])
    else:
        if cp != cq and cp != c:
            sig[cp] = max(sig[cp], lp)
        out = DpState(c, cq, x_size, q_size, sig[0], sig[1])
    return _fits(out, cap)


# --- solver -------------------------------------------------------------------


def table_limit(cap: int) -> int:
    return 4 * (cap + 1) ** 4


def compute_tables(tree: WeakDualTree, cap: int) -> list[DpTable]:
    tables: list[DpTable | None] = [None] * len(tree)
    for i in tree.postorder():
        lc, rc = tree.left[i], tree.right[i]
        if lc is None and rc is None:
            table = leaf_table((*tree.attach[i], tree.apex[i]), cap, i)
        elif lc is not None and rc is not None:
            table = DpTable(i)
            t1, t2 = tables[lc], tables[rc]
            assert t1 is not None and t2 is not None
            right_by_color: dict[int, list[DpState]] = defaultdict(list)
            for s2 in sorted(t2.states):
                right_by_color[s2.k1].append(s2)
            for s1 in sorted(t1.states):
                for s2 in right_by_color[s1.k2]:
                    s = combine_two_children(s1, s2, cap)
                    if s is not None and s not in table.states:
                        table.states[s] = (None, s1, s2)
        else:
            table = DpTable(i)
            child = lc if lc is not None else rc
            side = LEFT if lc is not None else RIGHT
            tc = tables[child]
            assert tc is not None
            for s1 in sorted(tc.states):
                for col in (0, 1):
                    s = combine_one_child(s1, col, cap, side)
                    if s is not None and s not in table.states:
                        table.states[s] = (col, s1)
        assert len(table) <= table_limit(cap), "table exceeds the O(cap^4) envelope"
        tables[i] = table
    return tables  # type: ignore[return-value]


def reconstruct(tree: WeakDualTree, tables: list[DpTable], node: int, state: DpState) -> dict[int, int]:
    """Follow witnesses down from ``node`` and color every vertex of ``G(node)``."""
    colors: dict[int, int] = {}
    stack = [(node, state)]
    while stack:
        i, s = stack.pop()
        (u, v), w = tree.attach[i], tree.apex[i]
        wit = tables[i].states[s]
        lc, rc = tree.left[i], tree.right[i]
        if lc is None and rc is None:
            cu, cv, cw = wit[0]
            colors[u], colors[v], colors[w] = cu, cv, cw
        elif lc is not None and rc is not None:
            stack += [(lc, wit[1]), (rc, wit[2])]
        elif lc is not None:
            colors[v] = wit[0]
            stack.append((lc, wit[1]))
        else:
            colors[u] = wit[0]
            stack.append((rc, wit[1]))
    return colors


@dataclass(frozen=True)
class Mcc2Solution:
    value: int
    coloring: Coloring
    tree: WeakDualTree | None = field(default=None, repr=False)
    tables: list[DpTable] | None = field(default=None, repr=False)

    def __iter__(self):
        # allows ``value, coloring = solve_mcc2(g)``
        return iter((self.value, self.coloring))


def solve_mcc2(g: Graph, cap: int | None = None) -> Mcc2Solution:
    """Exact mcc_2 of a maximal outerplanar graph with an optimal 2-coloring."""
    tree = build_weak_dual(g)
    if g.n == 3:
        return Mcc2Solution(2, Coloring.of(2, (0, 0, 1)), tree, None)
    if cap is None:
        cap = 2 * max_degree(g)
    tables = compute_tables(tree, cap)
    root_table = tables[tree.root]
    best = min(sorted(root_table.states), key=DpState.value)
    colors = reconstruct(tree, tables, tree.root, best)
    coloring = Coloring.of(2, (colors[v] for v in range(g.n)))
    return Mcc2Solution(best.value(), coloring, tree, tables)


def table_stats(sol: Mcc2Solution) -> list[tuple[int, tuple[int, int, int], int]]:
    """Per-node ``(node, face, state count)`` rows, root last."""
    assert sol.tree is not None
    if sol.tables is None:
        return [(0, sol.tree.faces[0], 8)]
    return [(i, sol.tree.faces[i], len(sol.tables[i])) for i in sol.tree.postorder()]
