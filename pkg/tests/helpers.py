"""Independent brute-force references used as test oracles.

Nothing here imports the package's component code: components are found by
a plain DFS and optima by enumerating every coloring.
"""

import itertools


def components(n, edges, colors):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        if colors[u] == colors[v]:
            adj[u].append(v)
            adj[v].append(u)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(comp))
    return out


def largest(n, edges, colors):
    return max((len(c) for c in components(n, edges, colors)), default=0)


def brute_mcc(n, edges, t):
    """Exact mcc_t by full enumeration of t**n colorings."""
    return min(largest(n, edges, cols) for cols in itertools.product(range(t), repeat=n))


def pole_state(n, edges, colors, u, v):
    """(k1, k2, l1, l2, s1, s2) of a coloring with poles u, v, by direct counting."""
    comps = components(n, edges, colors)
    size_of = {}
    for comp in comps:
        for x in comp:
            size_of[x] = len(comp)
    sig = [0, 0]
    for comp in comps:
        if u not in comp and v not in comp:
            col = colors[comp[0]]
            sig[col] = max(sig[col], len(comp))
    return (colors[u], colors[v], size_of[u], size_of[v], sig[0], sig[1])
