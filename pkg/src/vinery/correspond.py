"""The six explicit bijections between graphs, vines and domains.

These are the direct, non-recursive maps; the generic ``species.transport``
computes the same functions and the test suite holds the two routes equal.
"""

from __future__ import annotations

from . import domain as dm
from . import matgraph as mg
from . import vine as vn
from .errors import StructureError


def graph_to_vine(g: mg.MatLabeledGraph) -> vn.RegularVine:
    """Singletons plus the principal clique generated by every edge."""
    mg.require_valid(g)
    if not g.is_complete():
        raise StructureError("matgraph.complete", "conversion requires a complete graph")
    nodes = {frozenset([a]) for a in g.vertices}
    for (u, v), k in g.labels.items():
        clique = frozenset({u, v} | mg.triangle_partners(g, u, v))
        if len(clique) != k + 1:
            raise StructureError("matgraph.principal-clique",
                                 f"principal clique of {u}-{v} has size {len(clique)}, expected {k + 1}",
                                 witness=sorted(clique))
        nodes.add(clique)
    out = vn.RegularVine(g.vertices, frozenset(nodes))
    vn.require_valid(out)
    return out


def vine_to_graph(v: vn.RegularVine) -> mg.MatLabeledGraph:
    """Label every pair by the rank of the join of its atoms, minus one."""
    vn.require_valid(v)
    labels = {}
    ground = sorted(v.ground)
    for i, a in enumerate(ground):
        for b in ground[i + 1:]:
            labels[mg.edge_key(a, b)] = len(vn.join_node(v, a, b)) - 1
    out = mg.MatLabeledGraph(v.ground, labels)
    mg.require_valid(out)
    return out


def graph_to_domain(g: mg.MatLabeledGraph) -> dm.PreferenceDomain:
    """All MAT-PEOs, read directly as preferences (first eliminated = first ranked)."""
    peos = mg.enumerate_mat_peos(g)
    return dm.PreferenceDomain(g.vertices, frozenset(peos))


def domain_to_graph(d: dm.PreferenceDomain) -> mg.MatLabeledGraph:
    """Label every pair by its topmost contiguous occurrence."""
    if not dm.is_maximal_aspd(d):
        raise StructureError("domain.maximal-aspd", "conversion requires a maximal ASPD")
    labels = {}
    alts = sorted(d.alternatives)
    for i, x in enumerate(alts):
        for y in alts[i + 1:]:
            labels[mg.edge_key(x, y)] = dm.topmost_contiguous_position(d, x, y)
    out = mg.MatLabeledGraph(d.alternatives, labels)
    mg.require_valid(out)
    return out


def vine_to_domain(v: vn.RegularVine) -> dm.PreferenceDomain:
    """One preference per maximal chain: rank the elements in chain order."""
    chains = vn.maximal_chains(v)
    prefs = set()
    for chain in chains:
        w = []
        seen: frozenset = frozenset()
        for node in chain:
            (x,) = node - seen
            w.append(x)
            seen = node
        prefs.add(tuple(w))
    if v.n == 0:
        prefs = {()}
    return dm.PreferenceDomain(v.ground, frozenset(prefs))


def domain_to_vine(d: dm.PreferenceDomain) -> vn.RegularVine:
    """All preference prefixes, as a node set."""
    if not dm.is_maximal_aspd(d):
        raise StructureError("domain.maximal-aspd", "conversion requires a maximal ASPD")
    nodes = set()
    for w in d.prefs:
        for k in range(1, len(w) + 1):
            nodes.add(frozenset(w[:k]))
    out = vn.RegularVine(d.alternatives, frozenset(nodes))
    vn.require_valid(out)
    return out
