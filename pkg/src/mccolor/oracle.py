"""Exact mcc_t for small graphs by depth-first branch and bound.

Vertices are assigned in BFS order.  Monochromatic components are tracked by
a union-find without path compression, so every union can be undone in O(1)
when the search backtracks.  Colors are used canonically (vertex ``i`` may
open at most one new color), which removes the ``t!`` relabelings.
"""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExhaustedError, InvalidParameterError
from .graph import Coloring, Graph

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Coloring
    nodes_explored: int


def bfs_order(g: Graph) -> list[int]:
    seen = [False] * g.n
    order: list[int] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


class _Search:
    def __init__(self, g: Graph, t: int, bound: int, budget: int):
        self.n = g.n
        self.t = t
        self.order = bfs_order(g)
        pos = {v: i for i, v in enumerate(self.order)}
        # neighbours assigned earlier in the order, the only ones that matter on arrival
        self.back = [[u for u in g.adj[v] if pos[u] < pos[v]] for v in self.order]
        self.parent = list(range(g.n))
        self.size = [1] * g.n
        self.colors = [-1] * g.n
        self.undo: list[tuple[int, int]] = []
        self.best = bound
        self.best_colors: list[int] | None = None
        self.budget = budget
        self.nodes = 0

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return self.size[ra]
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.undo.append((rb, ra))
        return self.size[ra]

    def rollback(self, mark: int) -> None:
        while len(self.undo) > mark:
            rb, ra = self.undo.pop()
            self.parent[rb] = rb
            self.size[ra] -= self.size[rb]

    def assign(self, i: int, col: int) -> int | None:
        """Color ``order[i]``; return its component size, or None if pruned."""
        v = self.order[i]
        self.colors[v] = col
        mark = len(self.undo)
        s = 1
        for u in self.back[i]:
            if self.colors[u] == col:
                s = self.union(u, v)
        if s >= self.best:
            self.rollback(mark)
            self.colors[v] = -1
            return None
        return s

    def run(self, i: int, used: int, cur: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhaustedError(
                f"search budget of {self.budget} nodes exhausted before optimality was proven",
                self.nodes,
            )
        if i == self.n:
            self.best = cur
            self.best_colors = list(self.colors)
            return
        v = self.order[i]
        for col in range(min(self.t, used + 1)):
            mark = len(self.undo)
            s = self.assign(i, col)
            if s is None:
                continue
            self.run(i + 1, max(used, col + 1), max(cur, s))
            self.rollback(mark)
            self.colors[v] = -1


def _prefixes(n: int, t: int, depth: int) -> list[tuple[int, ...]]:
    out = []
    for combo in itertools.product(range(t), repeat=depth):
        used = 0
        ok = True
        for col in combo:
            if col > used:
                ok = False
                break
            used = max(used, col + 1)
        if ok:
            out.append(combo)
    return out


def _solve_prefix(g: Graph, t: int, bound: int, budget: int, prefix: tuple[int, ...]) -> _Search:
    s = _Search(g, t, bound, budget)
    cur = 0
    used = 0
    for i, col in enumerate(prefix):
        size = s.assign(i, col)
        if size is None:
            return s
        cur = max(cur, size)
        used = max(used, col + 1)
    s.run(len(prefix), used, cur)
    return s


def _search(g: Graph, t: int, bound: int, budget: int, threads: int) -> tuple[list[int] | None, int, int]:
    if t < 1:
        raise InvalidParameterError(f"need at least one color, got t={t}")
    if g.n == 0:
        return [], 0, 0
    if threads <= 1:
        s = _solve_prefix(g, t, bound, budget, ())
        return s.best_colors, s.best, s.nodes
    # independent subtrees, merged in sequential order: the result equals the
    # lexicographically first optimum that the sequential search returns
    depth = 1
    while depth < g.n and len(_prefixes(g.n, t, depth)) < threads:
        depth += 1
    prefixes = _prefixes(g.n, t, depth)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        runs = list(pool.map(lambda p: _solve_prefix(g, t, bound, budget, p), prefixes))
    nodes = sum(r.nodes for r in runs)
    if nodes > budget:
        raise BudgetExhaustedError(f"search budget of {budget} nodes exhausted", nodes)
    best, colors = bound, None
    for r in runs:
        if r.best_colors is not None and r.best < best:
            best, colors = r.best, r.best_colors
    return colors, best, nodes


def exact_mcc(g: Graph, t: int, budget: int | None = None, threads: int = 1) -> OracleResult:
    """Smallest achievable largest monochromatic component over all t-colorings."""
    colors, value, nodes = _search(g, t, g.n + 1, budget or DEFAULT_BUDGET, threads)
    assert colors is not None
    return OracleResult(value, Coloring.of(t, colors), nodes)


def exact_mcc_decision(g: Graph, t: int, m: int, budget: int | None = None) -> bool:
    """True iff some t-coloring keeps every monochromatic component at most ``m``."""
    colors, _, _ = _search(g, t, m + 1, budget or DEFAULT_BUDGET, 1)
    return colors is not None
