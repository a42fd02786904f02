import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordless.generators import complete, cycle, gnp, path, star
from chordless.graph import Graph, GraphError, MarkSet, from_edge_list, mark_reachable, shortest_path
from chordless.oracle import AdjacencyMatrix, is_chordless

from helpers import adjacency_sets, bfs_distance, reach_set


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def test_triangle_degrees():
    g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert [g.degree(v) for v in range(3)] == [2, 2, 2]
    assert g.m_active == 3


def test_rejects_self_loop():
    with pytest.raises(GraphError, match="self-loop"):
        from_edge_list(2, [(0, 0)])


def test_rejects_multi_edge():
    with pytest.raises(GraphError, match="duplicate"):
        from_edge_list(4, [(0, 1), (1, 0)])


def test_rejects_out_of_range_endpoint():
    with pytest.raises(GraphError):
        from_edge_list(2, [(0, 2)])


def test_remove_vertex_from_triangle():
    g = complete(3)
    g.remove_vertex(0)
    assert g.active_edges() == [(1, 2)]
    assert g.m_active == 1


def test_remove_middle_of_path():
    g = path(3)
    g.remove_vertex(1)
    assert g.active_edges() == []
    assert g.m_active == 0


def test_k4_remove_restore_roundtrip():
    g = complete(4)
    before = g.snapshot()
    c = g.checkpoint()
    g.remove_vertex(3)
    assert g.snapshot() != before
    g.restore(c)
    assert g.snapshot() == before


def test_remove_edge_triangle():
    g = complete(3)
    g.remove_edge(0, 1)
    assert not g.is_adjacent(0, 1)
    assert g.neighbors(2) == [0, 1]
    assert g.neighbors(0) == [2] and g.neighbors(1) == [2]


def test_remove_edge_c4_gives_path():
    g = cycle(4)
    g.remove_edge(0, 1)
    assert sorted(g.degree(v) for v in range(4)) == [1, 1, 2, 2]
    assert g.m_active == 3


def test_remove_edge_restore():
    g = cycle(4)
    before = g.snapshot()
    c = g.checkpoint()
    g.remove_edge(1, 0)
    g.restore(c)
    assert g.snapshot() == before
    assert g.is_adjacent(0, 1)


def test_removing_absent_edge_is_contract_violation():
    g = path(3)
    with pytest.raises(AssertionError):
        g.remove_edge(0, 2)


def test_removing_inactive_vertex_is_contract_violation():
    g = path(3)
    g.remove_vertex(1)
    with pytest.raises(AssertionError):
        g.remove_vertex(1)


def test_checkpoint_remove_five_restore():
    g = gnp(12, 0.5, seed=3)
    degrees = [g.degree(v) for v in range(12)]
    c = g.checkpoint()
    for v in (0, 4, 5, 9, 11):
        g.remove_vertex(v)
    g.restore(c)
    assert [g.degree(v) for v in range(12)] == degrees


def test_nested_checkpoints_lifo():
    g = gnp(10, 0.6, seed=1)
    original = g.snapshot()
    c0 = g.checkpoint()
    g.remove_vertex(2)
    c1 = g.checkpoint()
    g.remove_vertex(5)
    g.remove_edge(*g.active_edges()[0])
    c2 = g.checkpoint()
    g.remove_vertex(7)
    g.restore(c2)
    g.restore(c1)
    g.restore(c0)
    assert g.snapshot() == original


def test_restore_with_empty_suffix_is_noop():
    g = cycle(5)
    g.remove_vertex(0)
    state = g.snapshot()
    g.restore(g.checkpoint())
    assert g.snapshot() == state


def test_invalidated_checkpoint_is_rejected():
    g = cycle(6)
    c0 = g.checkpoint()
    g.remove_vertex(0)
    g.remove_vertex(2)
    late = g.checkpoint()
    g.restore(c0)
    g.remove_vertex(3)
    g.remove_vertex(4)
    with pytest.raises(AssertionError):
        g.restore(late)


def test_is_adjacent_and_neighbors():
    g = complete(3)
    assert g.is_adjacent(0, 2)
    g.remove_edge(0, 2)
    assert not g.is_adjacent(0, 2)
    assert star(4).neighbors(0) == [1, 2, 3, 4]


def test_neighbor_order_independent_of_history():
    g = gnp(15, 0.5, seed=9)
    order = [g.neighbors(v) for v in range(15)]
    rng = random.Random(0)
    for _ in range(20):
        c = g.checkpoint()
        for v in rng.sample(range(15), 6):
            g.remove_vertex(v)
        g.restore(c)
    assert [g.neighbors(v) for v in range(15)] == order


def test_mark_reachable_path():
    g = path(4)
    marks = MarkSet(4)
    assert mark_reachable(g, [3], marks) == 4
    assert marks.members() == {0, 1, 2, 3}


def test_mark_reachable_stays_in_component():
    g = Graph(4, [(0, 1), (2, 3)])
    marks = MarkSet(4)
    mark_reachable(g, [0], marks)
    assert marks.members() == {0, 1}


def test_mark_reachable_already_marked_scans_nothing():
    g = complete(5)
    marks = MarkSet(5)
    for v in range(5):
        marks.add(v)
    before = g.edge_scans
    assert mark_reachable(g, [0, 3], marks) == 0
    assert g.edge_scans == before


def test_markset_clear_is_epoch_bump():
    marks = MarkSet(3)
    marks.add(1)
    marks.clear()
    assert 1 not in marks and len(marks) == 0


def test_shortest_path_c6():
    p = shortest_path(cycle(6), 0, 3)
    assert len(p) == 4 and p[0] == 0 and p[-1] == 3


def test_shortest_path_disconnected():
    assert shortest_path(Graph(4, [(0, 1), (2, 3)]), 0, 3) is None


def test_shortest_path_is_chordless_on_random_graphs():
    for seed in range(100):
        g = gnp(10, 0.5, seed=seed)
        adj = adjacency_sets(g)
        m = AdjacencyMatrix.from_graph(g)
        s, t = random.Random(seed).sample(range(10), 2)
        p = shortest_path(g, s, t)
        d = bfs_distance(adj, s, t)
        if d is None:
            assert p is None
        else:
            assert len(p) - 1 == d
            assert is_chordless(m, p)


@settings(max_examples=150, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_journal_roundtrip_property(g, rng):
    original = g.snapshot()
    c = g.checkpoint()
    for _ in range(rng.randint(0, 10)):
        edges = g.active_edges()
        active = g.vertices()
        if edges and rng.random() < 0.4:
            u, v = rng.choice(edges)
            g.remove_edge(v, u)
        elif active:
            v = rng.choice(active)
            before = g.journal_size
            deg = g.degree(v)
            g.remove_vertex(v)
            assert g.journal_size - before <= deg + 1
        # symmetry and edge-count invariants after every step
        for x in g.vertices():
            nbrs = g.neighbors(x)
            assert nbrs == sorted(nbrs)
            for y in nbrs:
                assert g.is_active(y) and x in g.neighbors(y)
        assert 2 * g.m_active == sum(g.degree(x) for x in g.vertices())
    g.restore(c)
    assert g.snapshot() == original


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=50), st.randoms(use_true_random=False))
def test_mark_reachable_matches_plain_search(g, rng):
    if g.n < 2:
        return
    adj = adjacency_sets(g)
    banned = set(rng.sample(range(g.n), rng.randint(0, g.n // 3)))
    t = rng.choice([v for v in range(g.n) if v not in banned] or [None])
    if t is None:
        return
    marks = MarkSet(g.n)
    count = mark_reachable(g, [t], marks, guard=lambda v: v not in banned)
    expected = reach_set(adj, t, banned)
    assert marks.members() == expected
    assert count == len(expected)
