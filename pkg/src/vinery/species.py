"""Split/merge species interfaces and the generic transport isomorphism.

Each of the three core families (MAT-labeled complete graphs, regular vines,
maximal ASPDs) implements the same small interface: split a structure on A
into its two halves on co-atoms of A, merge two compatible halves back, and
relabel along a bijection.  Any two such species are connected by a unique
natural isomorphism, computed recursively by ``transport``: split in the
source, transport both halves, merge in the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from . import domain as dm
from . import matgraph as mg
from . import vine as vn
from .errors import InternalInconsistencyError, StructureError


@dataclass(frozen=True)
class SplitPair:
    """Unordered pair of sub-structures on the two co-atoms of the ground set."""
    left: object
    right: object

    @property
    def removed(self) -> frozenset:
        gl, gr = _ground_of(self.left), _ground_of(self.right)
        return frozenset((gl | gr) - (gl & gr))


def _ground_of(x) -> frozenset:
    if isinstance(x, mg.MatLabeledGraph):
        return x.vertices
    if isinstance(x, vn.RegularVine):
        return x.ground
    if isinstance(x, dm.PreferenceDomain):
        return x.alternatives
    raise TypeError(f"not a species structure: {type(x).__name__}")


def make_pair(x, y) -> SplitPair:
    """Normalized pair: halves ordered by their sorted ground sets."""
    if sorted(_ground_of(x)) <= sorted(_ground_of(y)):
        return SplitPair(x, y)
    return SplitPair(y, x)


class GraphSpecies:
    name = "matgraph"

    def ground(self, g: mg.MatLabeledGraph) -> frozenset:
        return g.vertices

    def validate(self, g: mg.MatLabeledGraph) -> None:
        mg.require_valid(g)
        if not g.is_complete():
            raise StructureError("matgraph.complete", "species operations require a complete graph")

    def trivial(self, ground) -> mg.MatLabeledGraph:
        return mg.MatLabeledGraph(frozenset(ground), {})

    def split(self, g: mg.MatLabeledGraph) -> SplitPair:
        g1, g2, _ = mg.split_graph(g)
        return make_pair(g1, g2)

    def merge(self, p: SplitPair) -> Optional[mg.MatLabeledGraph]:
        return mg.merge_graphs(p.left, p.right)

    def relabel(self, g, h) -> mg.MatLabeledGraph:
        _check_bijection(g.vertices, h)
        return mg.relabel_graph(g, h)


class VineSpecies:
    name = "vine"

    def ground(self, v: vn.RegularVine) -> frozenset:
        return v.ground

    def validate(self, v: vn.RegularVine) -> None:
        vn.require_valid(v)

    def trivial(self, ground) -> vn.RegularVine:
        g = frozenset(ground)
        return vn.RegularVine(g, frozenset({g}) if g else frozenset())

    def split(self, v: vn.RegularVine) -> SplitPair:
        v1, v2, _ = vn.split_vine(v)
        return make_pair(v1, v2)

    def merge(self, p: SplitPair) -> Optional[vn.RegularVine]:
        return vn.merge_vines(p.left, p.right)

    def relabel(self, v, h) -> vn.RegularVine:
        _check_bijection(v.ground, h)
        return vn.relabel_vine(v, h)


class DomainSpecies:
    name = "domain"

    def ground(self, d: dm.PreferenceDomain) -> frozenset:
        return d.alternatives

    def validate(self, d: dm.PreferenceDomain) -> None:
        if not dm.is_maximal_aspd(d):
            raise StructureError("domain.maximal-aspd", "species operations require a maximal ASPD")

    def trivial(self, ground) -> dm.PreferenceDomain:
        g = frozenset(ground)
        return dm.PreferenceDomain(g, frozenset({tuple(sorted(g))}))

    def split(self, d: dm.PreferenceDomain) -> SplitPair:
        d1, d2, _ = dm.split_domain(d)
        return make_pair(d1, d2)

    def merge(self, p: SplitPair) -> Optional[dm.PreferenceDomain]:
        return dm.merge_domains(p.left, p.right)

    def relabel(self, d, h) -> dm.PreferenceDomain:
        _check_bijection(d.alternatives, h)
        return dm.relabel_domain(d, h)


GRAPH = GraphSpecies()
VINE = VineSpecies()
DOMAIN = DomainSpecies()
SPECIES = {s.name: s for s in (GRAPH, VINE, DOMAIN)}


def _check_bijection(ground: frozenset, h: Mapping) -> None:
    if set(h) != set(ground) or len(set(h.values())) != len(ground):
        raise StructureError("species.bijection", "relabeling map is not a bijection on the ground set",
                             witness=sorted(h.items()))


def _split_image(S, x) -> list:
    """The splitting image as a comparable list: the halves, or the bare
    ground set for structures with n <= 1 (where splitting is the identity)."""
    if len(S.ground(x)) <= 1:
        return [("trivial", tuple(sorted(S.ground(x))))]
    p = S.split(x)
    return [p.left, p.right]


def check_proximity(S, x) -> bool:
    """Do the split images of the two halves differ in exactly two structures?"""
    S.validate(x)
    if len(S.ground(x)) < 2:
        raise StructureError("species.split", "proximity is defined for n >= 2 only")
    p = S.split(x)
    return _image_symmetric_difference(S, p.left, p.right) == 2


def _image_symmetric_difference(S, x, y) -> int:
    ix, iy = _split_image(S, x), _split_image(S, y)
    common = sum(1 for a in ix if any(a == b for b in iy))
    return len(ix) + len(iy) - 2 * common


def merge_checked(S, p: SplitPair):
    """The unique structure splitting into p, or None when incompatible."""
    S.validate(p.left)
    S.validate(p.right)
    if _image_symmetric_difference(S, p.left, p.right) != 2:
        return None
    out = S.merge(p)
    if out is None:
        raise InternalInconsistencyError(
            f"{S.name}: merge failed on a pair passing the compatibility condition")
    return out


def transport(F, G, x):
    """The unique split/merge-compatible image of x under species G.

    Recursive: split in F, transport both halves, merge in G.  Memoized per
    invocation on the sub-ground-set, which is enough because the recursion
    below a fixed structure visits each sub-ground-set through a unique
    substructure.
    """
    F.validate(x)
    memo: dict[frozenset, object] = {}

    def go(y):
        key = frozenset(F.ground(y))
        hit = memo.get(key)
        if hit is not None:
            return hit
        if len(key) <= 1:
            out = G.trivial(key)
        else:
            p = F.split(y)
            out = G.merge(make_pair(go(p.left), go(p.right)))
            if out is None:
                raise InternalInconsistencyError(
                    f"transport {F.name}->{G.name}: merge failed on transported halves")
        memo[key] = out
        return out

    return go(x)
