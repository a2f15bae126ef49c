import random

import pytest
from conftest import mf, multifunctions, undirected_multifunctions
from hypothesis import given
from hypothesis import strategies as st
from oracles import floyd_warshall, odd_closed_walk_unbounded, rows_as_sets, simple_graph_rows, two_coloring

from multifun import MultiFunction, VertexUniverse, classify, constant_mf
from multifun.analysis import (
    INF,
    Bipartition,
    bipartition,
    components,
    diameter,
    has_odd_closed_walk,
    is_bipartite_even_iteration,
    is_clique,
    is_connected,
    is_independent,
    metric,
)
from multifun.errors import NotUndirectedError, PreconditionError, UniverseMismatchError
from multifun.iterate import closure, power_image
from multifun.setops import preimage_complete


def test_independent_examples(p3, c3):
    assert is_independent(p3, p3.universe.empty())
    assert is_independent(p3, p3.universe.set([0, 2]))
    assert not is_independent(c3, c3.universe.set([0, 1]))
    with pytest.raises(UniverseMismatchError):
        is_independent(p3, VertexUniverse(4).empty())


def test_clique_examples(c3):
    u = c3.universe
    assert is_clique(constant_mf(u, u.full()), u.full())
    # literal quantifier includes u == w, so a loopless pair is not a clique
    assert not is_clique(c3, u.set([0, 1]))
    assert not is_clique(c3, u.set([0]))
    assert is_clique(closure(c3, 1), u.full())
    assert is_clique(c3, u.empty())


def test_connected_examples(p3, two_edges):
    assert is_connected(p3)
    assert not is_connected(two_edges)
    assert is_connected(constant_mf(VertexUniverse(1), VertexUniverse(1).empty()))


def test_components_examples(p3, two_edges):
    assert [c.members for c in components(p3)] == [(0, 1, 2)]
    assert [c.members for c in components(two_edges)] == [(0, 1), (2, 3)]
    u = VertexUniverse(2)
    assert [c.members for c in components(constant_mf(u, u.empty()))] == [(0,), (1,)]
    with pytest.raises(NotUndirectedError):
        components(mf(2, [[1], []]))


def test_bipartition_examples(p3, c3, c4, two_edges):
    b = bipartition(p3)
    assert (b.U.members, b.W.members) == ((0, 2), (1,))
    assert bipartition(c3) is None
    b = bipartition(c4)
    assert (b.U.members, b.W.members) == ((0, 2), (1, 3))
    b = bipartition(two_edges)
    assert (b.U.members, b.W.members) == ((0, 2), (1, 3))


def test_bipartition_preconditions():
    with pytest.raises(PreconditionError):
        bipartition(mf(3, [[1], [0], []]))
    with pytest.raises(PreconditionError):
        bipartition(mf(2, [[1], []]))
    with pytest.raises(PreconditionError):
        is_bipartite_even_iteration(mf(2, [[0], [1]]))


def test_bipartition_type_invariants():
    u = VertexUniverse(3)
    with pytest.raises(ValueError):
        Bipartition(u.set([0, 1, 2]), u.empty())
    with pytest.raises(ValueError):
        Bipartition(u.set([0, 1]), u.set([1, 2]))
    with pytest.raises(ValueError):
        Bipartition(u.set([0]), u.set([1]))


def test_even_iteration_examples(c3, c4, p3):
    assert closure(c3, 2)(0) == c3.universe.full()
    assert not is_bipartite_even_iteration(c3)
    assert closure(c4, 2)(0).members == (0, 2)
    assert is_bipartite_even_iteration(c4)
    assert closure(p3, 2)(1).members == (1,)
    assert is_bipartite_even_iteration(p3)


def test_odd_closed_walk_examples(c3, c4, p3):
    assert has_odd_closed_walk(c3, 0)
    assert not has_odd_closed_walk(c4, 0)
    assert not any(0 in power_image(c4, n)(0) for n in range(1, 13, 2))
    assert not has_odd_closed_walk(p3, 1)
    with pytest.raises(PreconditionError):
        has_odd_closed_walk(mf(2, [[1], []]), 0)


def test_odd_closed_walk_bound_against_unbounded_search():
    # undirected relations on up to 5 vertices, loops allowed
    for n in range(1, 6):
        for adj in simple_graph_rows(n):
            for loops in (0, 1, (1 << n) - 1):
                rows = [set(a) | ({v} if loops >> v & 1 else set()) for v, a in enumerate(adj)]
                f = MultiFunction.from_sets(VertexUniverse(n), rows)
                for v in range(n):
                    assert has_odd_closed_walk(f, v) == odd_closed_walk_unbounded(rows, v)


def _agreement(f):
    rows = rows_as_sets(f)
    votes = {
        bipartition(f) is not None,
        is_bipartite_even_iteration(f),
        not any(has_odd_closed_walk(f, v) for v in f.universe.vertices),
        two_coloring(rows) is not None,
    }
    return len(votes) == 1


def test_three_way_agreement_small_graphs():
    checked = 0
    for n in range(2, 6):
        for adj in simple_graph_rows(n):
            if all(adj):
                f = MultiFunction.from_sets(VertexUniverse(n), adj)
                assert _agreement(f)
                checked += 1
    assert checked > 700


def _random_strict_graph(rng, n):
    while True:
        p = rng.uniform(0.15, 0.6)
        adj = [set() for _ in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    adj[u].add(v)
                    adj[v].add(u)
        if all(adj):
            return MultiFunction.from_sets(VertexUniverse(n), adj)


def test_three_way_agreement_random_graphs():
    rng = random.Random(6091)
    for _ in range(500):
        assert _agreement(_random_strict_graph(rng, rng.randint(6, 9)))


def test_bipartite_sides_are_swapped_by_the_preimage():
    rng = random.Random(77)
    seen = 0
    while seen < 80:
        f = _random_strict_graph(rng, rng.randint(2, 8))
        b = bipartition(f)
        if b is None:
            continue
        seen += 1
        assert is_independent(f, b.U) and is_independent(f, b.W)
        assert preimage_complete(f, b.U) == b.W
        assert preimage_complete(f, b.W) == b.U
        for n in range(5):
            even = power_image(f, 2 * n)
            assert all(not (even(w).bits & b.U.bits) for w in b.W.members)


@st.composite
def nested_pairs(draw):
    g = draw(multifunctions())
    rows = tuple(r & draw(st.integers(0, g.universe.full_mask)) for r in g.rows)
    return MultiFunction(g.universe, rows), g, draw(st.integers(0, g.universe.full_mask))


@given(nested_pairs())
def test_independence_is_anti_monotone(fgu):
    f, g, bits = fgu
    s = f.universe.set(b for b in f.universe.vertices if bits >> b & 1)
    if is_independent(g, s):
        assert is_independent(f, s)


@given(undirected_multifunctions(min_size=2))
def test_connected_square_forces_odd_cycle(f):
    if is_connected(power_image(f, 2)):
        assert is_connected(f)
        if classify(f).strict:
            assert bipartition(f) is None


def test_parity_sanity():
    rng = random.Random(5)
    for _ in range(500):
        a, b, c = (rng.randint(0, 20) for _ in range(3))
        first = (a + b + 2 * c + 1) % 2 == 0
        second = (a + b + 2 * (2 * c + 1)) % 2 == 0
        assert first or second


def test_metric_examples(p3, two_edges):
    d = metric(p3)
    assert d(0, 2) == 2
    assert all(d(v, v) == 0 for v in range(3))
    assert metric(two_edges)(0, 2) is INF
    with pytest.raises(PreconditionError):
        metric(mf(2, [[1], []]))


def test_metric_matches_floyd_warshall():
    for n in range(1, 6):
        for adj in simple_graph_rows(n):
            f = MultiFunction.from_sets(VertexUniverse(n), adj)
            expected = floyd_warshall(adj)
            got = metric(f).as_lists()
            assert [[float("inf") if x is INF else x for x in row] for row in got] == expected


@given(undirected_multifunctions())
def test_metric_axioms(f):
    d = metric(f)
    vs = f.universe.vertices
    for u in vs:
        assert d(u, u) == 0
        for w in vs:
            assert d(u, w) == d(w, u)
            if u != w:
                assert d(u, w) != 0
            for v in vs:
                assert d(u, w) <= d(u, v) + d(v, w)
    if is_connected(f):
        assert all(d(u, w) is not INF for u in vs for w in vs)


@given(undirected_multifunctions(), st.lists(st.integers(0, 5), min_size=1, max_size=12))
def test_small_distances_force_constant_sequences(f, seq):
    # distances below 1 only happen between equal vertices
    d = metric(f)
    seq = [x % f.universe.size for x in seq]
    if all(d(seq[i], seq[j]) < 1 for i in range(len(seq)) for j in range(len(seq))):
        assert len(set(seq)) == 1


def test_diameter_examples(p3, two_edges):
    u = p3.universe
    assert diameter(p3, u.set([1])) == 0
    assert diameter(p3, u.set([0, 2])) == 2
    assert diameter(p3, u.empty()) == 0
    assert diameter(two_edges, two_edges.universe.set([0, 3])) is INF
    with pytest.raises(PreconditionError):
        diameter(mf(2, [[1], []]), VertexUniverse(2).full())


def test_infinity_marker():
    assert INF + 3 is INF and 3 + INF is INF and INF + INF is INF
    assert 10**9 < INF and not INF < 5 and INF == INF and INF != 7
    assert max(2, INF) is INF
    assert str(INF) == "inf"
