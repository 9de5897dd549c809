import itertools

import pytest

from switchgraphs.graph_core import (
    Graph,
    GraphError,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    induced,
    intersection,
    make_graph,
    pad,
    pair_index,
    path,
    symmetric_difference,
)
from switchgraphs.canonical import isomorphic

from oracles import brute_isomorphic, edge_set


def test_pair_index_is_colex():
    assert [pair_index(i, j) for j in range(4) for i in range(j)] == list(range(6))
    assert pair_index(3, 1) == pair_index(1, 3) == 4


def test_make_graph_basic():
    assert make_graph(3, [(0, 1)]).edge_count == 1
    assert make_graph(3, [(0, 1), (1, 0)]).edge_count == 1


@pytest.mark.parametrize("n, edges", [(4, [(0, 4)]), (3, [(1, 1)]), (17, []), (3, [(-1, 0)])])
def test_make_graph_rejects(n, edges):
    with pytest.raises(GraphError):
        make_graph(n, edges)


def test_graph_rejects_stray_bits():
    with pytest.raises(GraphError):
        Graph(3, 1 << 3)


def test_named_families():
    assert complete(6).edge_count == 15
    assert empty(6).edge_count == 0
    p = path(6)
    assert p.edge_count == 5
    assert sorted(p.degrees()) == [1, 1, 2, 2, 2, 2]
    c = cycle(5)
    assert c.edge_count == 5 and set(c.degrees()) == {2}
    with pytest.raises(GraphError):
        cycle(2)


def test_complete_bipartite():
    assert complete_bipartite(6, 0) == empty(6)
    star = complete_bipartite(6, {0})
    assert star.edge_count == 5 and star.degrees()[0] == 5
    k22 = complete_bipartite(4, {0, 1})
    assert k22.edge_count == 4
    assert k22 == complete_bipartite(4, {2, 3})


def test_symmetric_difference_examples():
    a = complete_bipartite(4, {0, 1})
    assert symmetric_difference(complete(4), a) == make_graph(4, [(0, 1), (2, 3)])
    b = complete_bipartite(4, {1, 2})
    assert symmetric_difference(a, b) == complete_bipartite(4, {0, 2})
    g = path(5)
    assert symmetric_difference(g, g) == empty(5)
    with pytest.raises(GraphError):
        symmetric_difference(path(3), path(4))


def test_disjoint_union():
    g = disjoint_union(path(3), path(3))
    assert g.n == 6 and g.edge_count == 4
    assert g.edge_list() == [(0, 1), (1, 2), (3, 4), (4, 5)]
    assert disjoint_union(complete(2), complete(2)).edge_list() == [(0, 1), (2, 3)]
    assert pad(path(3), 5) == disjoint_union(path(3), empty(2))
    # colex indexing keeps edge bits fixed under padding
    assert pad(path(3), 5).edges == path(3).edges
    with pytest.raises(GraphError):
        disjoint_union(complete(9), complete(8))


def test_complement():
    assert complement(complete(5)) == empty(5)
    assert complement(complement(path(7))) == path(7)


@pytest.mark.parametrize("g", [cycle(5), path(4)], ids=["C5", "L4"])
def test_self_complementary(g):
    co = complement(g)
    assert brute_isomorphic(g.n, edge_set(g), edge_set(co))
    assert isomorphic(g, co) is not None


def test_induced():
    assert induced(path(6), {0, 1, 2}) == path(3)
    assert induced(path(4), {0, 1, 3}) == make_graph(3, [(0, 1)])
    assert induced(cycle(6), {0, 1, 3, 4}) == make_graph(4, [(0, 1), (2, 3)])


def test_group_laws_exhaustive_n3():
    graphs = [Graph(3, b) for b in range(8)]
    e = empty(3)
    for g1, g2, g3 in itertools.product(graphs, repeat=3):
        sd = symmetric_difference
        assert sd(sd(g1, g2), g3) == sd(g1, sd(g2, g3))
    for g1, g2 in itertools.product(graphs, repeat=2):
        assert symmetric_difference(g1, g2) == symmetric_difference(g2, g1)
        common = intersection(g1, g2).edge_count
        assert symmetric_difference(g1, g2).edge_count == g1.edge_count + g2.edge_count - 2 * common
    for g in graphs:
        assert symmetric_difference(e, g) == g


@pytest.mark.parametrize("n", range(1, 7))
def test_bipartite_product_formula(n):
    for a in range(1 << n):
        for b in range(1 << n):
            lhs = symmetric_difference(complete_bipartite(n, a), complete_bipartite(n, b))
            assert lhs == complete_bipartite(n, a ^ b)


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_minus_bipartite_is_two_cliques(n):
    for a in range(1 << n):
        inside = [v for v in range(n) if a >> v & 1]
        outside = [v for v in range(n) if not a >> v & 1]
        cliques = make_graph(n, list(itertools.combinations(inside, 2)) + list(itertools.combinations(outside, 2)))
        assert symmetric_difference(complete(n), complete_bipartite(n, a)) == cliques


@pytest.mark.parametrize("n", range(1, 7))
def test_clique_switch_complement_identity(n):
    for a in range(1 << n):
        inside = [v for v in range(n) if a >> v & 1]
        outside = [v for v in range(n) if not a >> v & 1]
        k_a = make_graph(n, itertools.combinations(inside, 2))
        k_rest = make_graph(n, itertools.combinations(outside, 2))
        assert symmetric_difference(k_a, complete_bipartite(n, a)) == complement(k_rest)
