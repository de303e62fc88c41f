import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mccolor import Graph, RecognitionError, gen_outerpath, gen_random_mop, max_degree, monochromatic_components
from mccolor.outerplanar import (
    LEFT,
    RIGHT,
    DpState,
    build_weak_dual,
    combine_one_child,
    combine_two_children,
    compute_tables,
    leaf_table,
    reconstruct,
    solve_mcc2,
    table_limit,
    table_stats,
)

from helpers import brute_mcc, pole_state
from strategies import mops, permutations

B, W = 0, 1
DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def face_edges(tree, node):
    edges = set()
    stack = [node]
    while stack:
        i = stack.pop()
        for a, b in itertools.combinations(sorted(tree.faces[i]), 2):
            edges.add((a, b))
        stack.extend(tree.children(i))
    return sorted(edges)


def brute_states(tree, node, cap):
    """Every state of G(node) reachable by some coloring, by enumeration."""
    verts = sorted(tree.subtree_vertices(node))
    idx = {v: i for i, v in enumerate(verts)}
    edges = [(idx[a], idx[b]) for a, b in face_edges(tree, node)]
    u, v = tree.attach[node]
    out = set()
    for cols in itertools.product((0, 1), repeat=len(verts)):
        s = DpState(*pole_state(len(verts), edges, cols, idx[u], idx[v]))
        if s.value() <= cap:
            out.add(s)
    return out


# --- weak dual ------------------------------------------------------------------


def test_diamond_dual():
    tree = build_weak_dual(DIAMOND)
    assert len(tree) == 2
    assert sum(p is not None for p in tree.parent) == 1


def test_fan_dual_is_path():
    g, _ = gen_outerpath([5])
    tree = build_weak_dual(g)
    assert len(tree) == 3
    assert sorted(len(tree.children(i)) for i in range(3)) == [0, 1, 1]


@pytest.mark.parametrize(
    "g, fragment",
    [
        (Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), "m=4"),
        (Graph.from_edges(2, [(0, 1)]), "at least 3"),
        # K4 plus a pendant vertex has the right edge count
        (Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]), "biconnected"),
        # K4 plus a 2-vertex ear from 0 to 1
        (Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (1, 5)]), "ear"),
    ],
)
def test_recognition_errors(g, fragment):
    with pytest.raises(RecognitionError, match=fragment):
        build_weak_dual(g)


def test_root_attaches_on_outer_edge():
    for seed in range(20):
        g = gen_random_mop(11, seed)
        tree = build_weak_dual(g)
        u, v = tree.attach[tree.root]
        assert abs(u - v) in (1, g.n - 1)
        assert len(tree.children(tree.root)) == 1


# --- transitions ------------------------------------------------------------------


def test_leaf_examples():
    states = set(leaf_table((0, 1, 2), cap=10).states)
    assert DpState(B, B, 3, 3, 0, 0) in states
    assert DpState(B, B, 2, 2, 0, 1) in states
    assert DpState(B, W, 1, 2, 0, 0) in states
    assert len(states) == 8


def test_combine_examples():
    s = DpState(B, B, 3, 3, 0, 0)
    assert combine_two_children(s, s, 10) == DpState(B, B, 5, 5, 0, 0)
    assert combine_two_children(DpState(W, B, 1, 2, 0, 0), DpState(B, W, 1, 2, 0, 0), 10) == DpState(W, W, 3, 3, 2, 0)
    assert combine_two_children(DpState(W, B, 1, 2, 0, 0), DpState(W, W, 3, 3, 0, 0), 10) is None


def test_combine_example_by_direct_count():
    # u=0, w=1, x=2, v=3, y=4; faces (u,w,x), (w,v,y) plus edge (u,v)
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (3, 4), (0, 3)]
    assert pole_state(5, edges, [W, B, B, W, W], 0, 3) == (W, W, 3, 3, 2, 0)


def test_one_child_examples():
    assert combine_one_child(DpState(B, B, 3, 3, 0, 0), B, 10) == DpState(B, B, 4, 4, 0, 0)
    assert combine_one_child(DpState(B, B, 2, 2, 0, 1), W, 10, LEFT) == DpState(B, W, 2, 1, 0, 1)
    assert combine_one_child(DpState(B, W, 4, 1, 0, 0), B, 4, LEFT) is None
    assert combine_one_child(DpState(W, B, 1, 4, 0, 0), B, 4, RIGHT) is None


def test_cap_prunes_two_children():
    s = DpState(B, B, 3, 3, 0, 0)
    assert combine_two_children(s, s, 4) is None


@given(mops(min_n=4, max_n=10), st.sampled_from([2, 3, 4, None]))
@settings(max_examples=40, deadline=None)
def test_tables_equal_enumerated_states(g, cap):
    tree = build_weak_dual(g)
    cap = 2 * max_degree(g) if cap is None else cap
    tables = compute_tables(tree, cap)
    for i in range(len(tree)):
        assert set(tables[i].states) == brute_states(tree, i, cap)


@given(mops(min_n=4, max_n=12))
@settings(max_examples=40, deadline=None)
def test_every_witness_replays_to_its_state(g):
    tree = build_weak_dual(g)
    tables = compute_tables(tree, 2 * max_degree(g))
    for i in range(len(tree)):
        verts = sorted(tree.subtree_vertices(i))
        idx = {v: j for j, v in enumerate(verts)}
        edges = [(idx[a], idx[b]) for a, b in face_edges(tree, i)]
        u, v = tree.attach[i]
        for s in tables[i].states:
            colors = reconstruct(tree, tables, i, s)
            assert sorted(colors) == verts
            got = pole_state(len(verts), edges, [colors[x] for x in verts], idx[u], idx[v])
            assert DpState(*got) == s


# --- solver -------------------------------------------------------------------------


def test_small_values():
    assert solve_mcc2(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])).value == 2
    value, coloring = solve_mcc2(DIAMOND)
    assert value == 2
    assert monochromatic_components(DIAMOND, coloring).max_component == 2


@given(mops(min_n=3, max_n=12))
@settings(max_examples=60, deadline=None)
def test_matches_enumeration(g):
    sol = solve_mcc2(g)
    assert sol.value == brute_mcc(g.n, g.edge_list(), 2)
    assert monochromatic_components(g, sol.coloring).max_component == sol.value
    assert sol.value <= max(2, 2 * (max_degree(g) - 1))


@given(mops(min_n=4, max_n=12), st.data())
@settings(max_examples=40, deadline=None)
def test_relabeling_invariant(g, data):
    perm = data.draw(permutations(g.n))
    h = Graph.from_edges(g.n, [(perm[a], perm[b]) for a, b in g.edge_list()])
    assert solve_mcc2(h).value == solve_mcc2(g).value


@given(mops(min_n=4, max_n=30))
@settings(max_examples=30, deadline=None)
def test_table_sizes_and_pole_consistency(g):
    sol = solve_mcc2(g)
    cap = 2 * max_degree(g)
    for _, _, count in table_stats(sol):
        assert count <= table_limit(cap)
    for table in sol.tables:
        for s in table.states:
            # poles of equal color are adjacent, so they share a component
            if s.k1 == s.k2:
                assert s.l1 == s.l2


def test_default_cap_is_safe():
    for seed in range(30):
        g = gen_random_mop(12, seed)
        assert solve_mcc2(g).value == solve_mcc2(g, cap=g.n).value
