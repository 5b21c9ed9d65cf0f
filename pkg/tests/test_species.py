"""The split/merge species layer and the generic transport isomorphism."""

import random

import pytest

from vinery import correspond as co
from vinery import domain as dm
from vinery import matgraph as mg
from vinery import species as sp
from vinery import vine as vn
from vinery.errors import StructureError

from conftest import random_relabeling

ALL_SPECIES = (sp.GRAPH, sp.VINE, sp.DOMAIN)

TO_VINE = {sp.GRAPH: co.graph_to_vine, sp.VINE: lambda v: v, sp.DOMAIN: co.domain_to_vine}
FROM_VINE = {sp.GRAPH: co.vine_to_graph, sp.VINE: lambda v: v, sp.DOMAIN: co.vine_to_domain}


def incarnations(v):
    """The vine v in all three species."""
    return {S: FROM_VINE[S](v) for S in ALL_SPECIES}


# ----------------------------------------------------------- basic layer

def test_trivial_structures():
    assert sp.GRAPH.trivial("a") == mg.MatLabeledGraph(frozenset("a"), {})
    assert sp.VINE.trivial("a") == vn.vine("a", ["a"])
    assert sp.VINE.trivial("") == vn.vine("", [])
    assert sp.DOMAIN.trivial("") == dm.domain("", [()])
    assert sp.DOMAIN.trivial("a") == dm.domain("a", [("a",)])


def test_make_pair_orders_by_ground():
    x = vn.vine("bcd", ["b", "c", "d", "bc", "cd", "bcd"])
    y = vn.vine("abc", ["a", "b", "c", "ab", "bc", "abc"])
    p = sp.make_pair(x, y)
    assert p.left is y and p.right is x
    assert p.removed == frozenset("ad")


def test_validate_rejects_incomplete_graph():
    g = mg.mat_graph("abc", [("a", "b", 1), ("b", "c", 1)])
    with pytest.raises(StructureError) as exc:
        sp.GRAPH.validate(g)
    assert exc.value.axiom == "matgraph.complete"


def test_validate_rejects_non_maximal_domain():
    with pytest.raises(StructureError) as exc:
        sp.DOMAIN.validate(dm.domain("ab", [("a", "b")]))
    assert exc.value.axiom == "domain.maximal-aspd"


def test_relabel_requires_bijection(intro_vine):
    with pytest.raises(StructureError) as exc:
        sp.VINE.relabel(intro_vine, {"a": "x", "b": "x", "c": "y", "d": "z"})
    assert exc.value.axiom == "species.bijection"
    with pytest.raises(StructureError):
        sp.VINE.relabel(intro_vine, {"a": "x"})


# ----------------------------------------------- proximity and merging

def test_check_proximity_on_examples(intro_vine, fig_vine):
    for v in (intro_vine, fig_vine):
        for S, x in incarnations(v).items():
            assert sp.check_proximity(S, x)


def test_check_proximity_requires_two_elements():
    with pytest.raises(StructureError):
        sp.check_proximity(sp.VINE, vn.vine("a", ["a"]))


def test_merge_checked_round_trip(fig_vine):
    for S, x in incarnations(fig_vine).items():
        assert sp.merge_checked(S, S.split(x)) == x


def test_merge_checked_incompatible_is_none():
    v1 = vn.vine("abc", ["a", "b", "c", "ab", "bc", "abc"])
    v2 = vn.vine("abd", ["a", "b", "d", "ad", "bd", "abd"])
    # the split images share nothing, so the compatibility count is four
    p = sp.make_pair(v1, v2)
    assert sp.merge_checked(sp.VINE, p) is None
    assert sp.VINE.merge(p) is None


def test_merge_checked_singletons():
    p = sp.make_pair(vn.vine("a", ["a"]), vn.vine("b", ["b"]))
    assert sp.merge_checked(sp.VINE, p) == vn.vine("ab", ["a", "b", "ab"])


# ------------------------------------------------------------- transport

def test_transport_identity_on_each_species(intro_vine):
    for S, x in incarnations(intro_vine).items():
        assert sp.transport(S, S, x) == x


def test_transport_equals_explicit_on_examples(intro_vine, fig_vine):
    for v in (intro_vine, fig_vine):
        inc = incarnations(v)
        for F in ALL_SPECIES:
            for G in ALL_SPECIES:
                assert sp.transport(F, G, inc[F]) == inc[G]


def test_transport_tiny():
    assert sp.transport(sp.VINE, sp.DOMAIN, vn.vine("", [])) == dm.domain("", [()])
    assert sp.transport(sp.DOMAIN, sp.GRAPH, dm.domain("a", [("a",)])) == \
        mg.MatLabeledGraph(frozenset("a"), {})
    two = vn.vine("ab", ["a", "b", "ab"])
    assert sp.transport(sp.VINE, sp.GRAPH, two) == \
        mg.mat_graph("ab", [("a", "b", 1)])


def test_transport_validates_input():
    with pytest.raises(StructureError):
        sp.transport(sp.VINE, sp.DOMAIN, vn.RegularVine(frozenset("ab"), frozenset()))


# ------------------------------------------------- exhaustive small laws

def test_split_merge_identity_exhaustive_small(vines_by_n):
    for n in (2, 3, 4):
        for v in vines_by_n[n]:
            for S, x in incarnations(v).items():
                assert sp.merge_checked(S, S.split(x)) == x


def test_transport_equals_explicit_exhaustive_small(vines_by_n):
    for n in range(5):
        for v in vines_by_n[n]:
            inc = incarnations(v)
            for F in ALL_SPECIES:
                for G in ALL_SPECIES:
                    if F is not G:
                        assert sp.transport(F, G, inc[F]) == inc[G]


def test_transport_naturality_sampled(vines_by_n, seed):
    rng = random.Random(seed)
    relabel = {sp.GRAPH: mg.relabel_graph, sp.VINE: vn.relabel_vine,
               sp.DOMAIN: dm.relabel_domain}
    for v in vines_by_n[4]:
        h = random_relabeling(v.ground, rng)
        inc = incarnations(v)
        for F in ALL_SPECIES:
            for G in ALL_SPECIES:
                assert sp.transport(F, G, relabel[F](inc[F], h)) == relabel[G](inc[G], h)
