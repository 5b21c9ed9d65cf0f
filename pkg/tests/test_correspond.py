"""The six explicit bijections between graphs, vines and domains."""

import pytest

from vinery import correspond as co
from vinery import domain as dm
from vinery import matgraph as mg
from vinery import vine as vn
from vinery.errors import StructureError


# ------------------------------------------------------- worked examples

def test_intro_triple_maps(intro_graph, intro_vine, intro_domain):
    assert co.graph_to_vine(intro_graph) == intro_vine
    assert co.vine_to_graph(intro_vine) == intro_graph
    assert co.graph_to_domain(intro_graph) == intro_domain
    assert co.domain_to_graph(intro_domain) == intro_graph
    assert co.vine_to_domain(intro_vine) == intro_domain
    assert co.domain_to_vine(intro_domain) == intro_vine


def test_fig_triple_maps(fig_graph, fig_vine, fig_domain):
    assert co.graph_to_vine(fig_graph) == fig_vine
    assert co.vine_to_graph(fig_vine) == fig_graph
    assert co.graph_to_domain(fig_graph) == fig_domain
    assert co.domain_to_graph(fig_domain) == fig_graph
    assert co.vine_to_domain(fig_vine) == fig_domain
    assert co.domain_to_vine(fig_domain) == fig_vine


def test_tiny_cases():
    assert co.vine_to_domain(vn.vine("", [])) == dm.domain("", [()])
    assert co.vine_to_domain(vn.vine("a", ["a"])) == dm.domain("a", [("a",)])
    assert co.graph_to_vine(mg.MatLabeledGraph(frozenset("a"), {})) == vn.vine("a", ["a"])
    two = mg.mat_graph("ab", [("a", "b", 1)])
    assert co.graph_to_domain(two) == dm.domain("ab", [("a", "b"), ("b", "a")])
    assert co.domain_to_graph(co.graph_to_domain(two)) == two


# --------------------------------------------------------- input checking

def test_graph_maps_require_complete_valid_input():
    path = mg.mat_graph("abc", [("a", "b", 1), ("b", "c", 1)])
    with pytest.raises(StructureError) as exc:
        co.graph_to_vine(path)
    assert exc.value.axiom == "matgraph.complete"
    bad = mg.mat_graph("abc", [("a", "b", 1), ("b", "c", 1), ("a", "c", 1)])
    with pytest.raises(StructureError):
        co.graph_to_domain(bad)


def test_domain_maps_require_maximal_aspd():
    d = dm.domain("abc", [("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")])
    for f in (co.domain_to_graph, co.domain_to_vine):
        with pytest.raises(StructureError) as exc:
            f(d)
        assert exc.value.axiom == "domain.maximal-aspd"


def test_vine_maps_require_valid_vine():
    broken = vn.RegularVine(frozenset("abc"), frozenset({frozenset("a")}))
    with pytest.raises(StructureError):
        co.vine_to_graph(broken)
    with pytest.raises(StructureError):
        co.vine_to_domain(broken)


# ------------------------------------------------ inverses and commuting

def test_maps_mutually_inverse_exhaustive_small(vines_by_n):
    for n in range(5):
        for v in vines_by_n[n]:
            g = co.vine_to_graph(v)
            d = co.vine_to_domain(v)
            assert co.graph_to_vine(g) == v
            assert co.domain_to_vine(d) == v
            assert co.graph_to_domain(g) == d
            assert co.domain_to_graph(d) == g


def test_maps_commute_exhaustive_small(vines_by_n):
    for n in range(5):
        for v in vines_by_n[n]:
            g = co.vine_to_graph(v)
            d = co.vine_to_domain(v)
            # each map factors through the third representation
            assert co.vine_to_domain(co.graph_to_vine(g)) == co.graph_to_domain(g)
            assert co.vine_to_graph(co.domain_to_vine(d)) == co.domain_to_graph(d)
            assert co.graph_to_domain(co.vine_to_graph(v)) == d
            assert co.domain_to_graph(co.vine_to_domain(v)) == g


def test_graph_labels_match_domain_positions(intro_graph, intro_domain):
    # the edge label equals the topmost contiguous position of the pair
    for (u, v), k in intro_graph.labels.items():
        assert dm.topmost_contiguous_position(intro_domain, u, v) == k


def test_graph_labels_match_vine_joins(fig_graph, fig_vine):
    for (u, v), k in fig_graph.labels.items():
        assert len(vn.join_node(fig_vine, u, v)) - 1 == k
