"""Exhaustive generation, canonical forms, classification and counting.

Labeled regular vines are generated by the tree-sequence construction: pick a
tree on the singletons, then repeatedly a spanning tree of the previous
tree's line graph (proximity makes exactly the line-graph edges admissible).
This produces every labeled vine exactly once, so no dedup set is needed.

Counting at n=7 uses the observation that the number of completions of a
partial tree sequence depends only on the unlabeled shape of the current
associated tree, which collapses the count into a tiny shape-memoized DP.
"""

from __future__ import annotations

import math
import random
import string
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import vine as vn
from .errors import InternalInconsistencyError, StructureError

GENERATION_CAP = 7


# ---------------------------------------------------------------- tree tools

def _decode_prufer(n: int, seq: Sequence[int]) -> tuple[tuple[int, int], ...]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        for i in range(n):
            if degree[i] == 1:
                edges.append((min(i, x), max(i, x)))
                degree[i] -= 1
                degree[x] -= 1
                break
    last = [i for i in range(n) if degree[i] == 1]
    edges.append((min(last), max(last)))
    return tuple(edges)


def prufer_trees(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All labeled trees on vertices 0..n-1, one per Prüfer sequence."""
    if n == 1:
        yield ()
        return
    if n == 2:
        yield ((0, 1),)
        return

    seq = [0] * (n - 2)
    while True:
        yield _decode_prufer(n, seq)
        i = n - 3
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            return
        seq[i] += 1


def spanning_trees(nv: int, edges: list[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    """All spanning trees of a graph on 0..nv-1, as sorted edge-index tuples."""
    if nv == 1:
        yield ()
        return
    m = len(edges)

    def rec(i: int, parent: list[int], used: tuple[int, ...]):
        if len(used) == nv - 1:
            yield used
            return
        if i == m or len(used) + (m - i) < nv - 1:
            return

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            child = parent.copy()
            child[ru] = rv
            yield from rec(i + 1, child, used + (i,))
        yield from rec(i + 1, parent, used)

    yield from rec(0, list(range(nv)), ())


def tree_shape(nv: int, edges: Iterable[tuple[int, int]]) -> tuple:
    """AHU canonical form of an unlabeled tree (rooted at its center)."""
    adj: dict[int, list[int]] = {i: [] for i in range(nv)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if nv == 1:
        return ("()",)
    degree = {i: len(adj[i]) for i in range(nv)}
    layer = [i for i in range(nv) if degree[i] <= 1]
    remaining = nv
    while remaining > 2:
        nxt = []
        for leaf in layer:
            remaining -= 1
            degree[leaf] = 0
            for w in adj[leaf]:
                if degree[w] > 0:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [i for i in range(nv) if degree[i] >= 1] or layer

    def encode(root: int, parent: int) -> str:
        subs = sorted(encode(w, root) for w in adj[root] if w != parent)
        return "(" + "".join(subs) + ")"

    return tuple(sorted(encode(c, -1) for c in centers))


# ------------------------------------------------------------- vine streams

class _Level(NamedTuple):
    nodes: tuple        # bitmask per tree vertex
    edges: tuple        # (u, v) index pairs into nodes


def generate_vines(ground: Iterable[str]) -> Iterator[vn.RegularVine]:
    """Every labeled regular vine on the ground set, exactly once, in a
    deterministic order."""
    labels = sorted(ground)
    n = len(labels)
    if n > GENERATION_CAP:
        raise StructureError("enumerate.cap", f"generation capped at n <= {GENERATION_CAP}")
    if n == 0:
        yield vn.RegularVine(frozenset(), frozenset())
        return
    atom_masks = tuple(1 << i for i in range(n))
    if n == 1:
        yield _masks_to_vine(labels, list(atom_masks))
        return

    def expand(level: _Level, acc: list[int]) -> Iterator[list[int]]:
        new_nodes = tuple(level.nodes[u] | level.nodes[v] for u, v in level.edges)
        acc = acc + list(new_nodes)
        if len(new_nodes) == 1:
            yield acc
            return
        # line graph of the current tree: edges sharing an endpoint
        lg_edges = [(i, j) for i in range(len(level.edges)) for j in range(i + 1, len(level.edges))
                    if set(level.edges[i]) & set(level.edges[j])]
        for chosen in spanning_trees(len(new_nodes), lg_edges):
            nxt = _Level(new_nodes, tuple(lg_edges[k] for k in chosen))
            yield from expand(nxt, acc)

    for t1 in prufer_trees(n):
        base = _Level(atom_masks, t1)
        for masks in expand(base, list(atom_masks)):
            yield _masks_to_vine(labels, masks)


def random_vine(ground: Iterable[str], rng: random.Random) -> vn.RegularVine:
    """One labeled vine, drawn by uniform choices along the tree-sequence
    construction (uniform per level, not over all vines)."""
    labels = sorted(ground)
    n = len(labels)
    if n == 0:
        return vn.RegularVine(frozenset(), frozenset())
    masks = [1 << i for i in range(n)]
    if n == 1:
        return _masks_to_vine(labels, masks)
    nodes = tuple(masks)
    edges = _decode_prufer(n, [rng.randrange(n) for _ in range(n - 2)])
    while True:
        new_nodes = tuple(nodes[u] | nodes[v] for u, v in edges)
        masks.extend(new_nodes)
        if len(new_nodes) == 1:
            return _masks_to_vine(labels, masks)
        lg_edges = [(i, j) for i in range(len(edges)) for j in range(i + 1, len(edges))
                    if set(edges[i]) & set(edges[j])]
        chosen = rng.choice(list(spanning_trees(len(new_nodes), lg_edges)))
        nodes, edges = new_nodes, tuple(lg_edges[k] for k in chosen)


def _masks_to_vine(labels: list[str], masks: list[int]) -> vn.RegularVine:
    nodes = frozenset(frozenset(labels[i] for i in range(len(labels)) if m >> i & 1) for m in masks)
    return vn.RegularVine(frozenset(labels), nodes)


_SHAPE_COUNTS: dict[tuple, int] = {}


def _completions(nv: int, edges: tuple) -> int:
    """Completions of a tree sequence whose current tree is the given one;
    depends only on the unlabeled shape, which keys the memo."""
    if nv <= 2:
        return 1
    shape = tree_shape(nv, edges)
    hit = _SHAPE_COUNTS.get(shape)
    if hit is not None:
        return hit
    lg_vertices = len(edges)
    lg_edges = [(i, j) for i in range(lg_vertices) for j in range(i + 1, lg_vertices)
                if set(edges[i]) & set(edges[j])]
    total = 0
    for chosen in spanning_trees(lg_vertices, lg_edges):
        total += _completions(lg_vertices, tuple(lg_edges[k] for k in chosen))
    _SHAPE_COUNTS[shape] = total
    return total


def count_vines(n: int) -> int:
    """|generate_vines(n)| via the shape-memoized DP over level-1 trees."""
    if n <= 1:
        return 1
    total = 0
    for t1 in prufer_trees(n):
        total += _completions(n, t1)
    return total


# ------------------------------------------------------- counting formulas

def labeled_count_formula(n: int) -> int:
    if n <= 1:
        return 1
    value = Fraction(2) ** ((n - 2) * (n - 3) // 2 - 1) * math.factorial(n)
    if value.denominator != 1:
        raise InternalInconsistencyError(f"labeled count formula non-integral at n={n}")
    return int(value)


def unlabeled_count_formula(n: int) -> int:
    if n <= 3:
        return 1
    pre = Fraction(2) ** ((n - 2) * (n - 3) // 2 - 1)
    kmax = n // 2 - 1
    total = Fraction(0)
    for k in range(kmax + 1):
        c = 2 if k == kmax else 1
        total += c * Fraction(2) ** (-k * (n - k - 2))
    value = pre * total
    if value.denominator != 1:
        raise InternalInconsistencyError(f"unlabeled count formula non-integral at n={n}")
    return int(value)


def recursive_pq_counts(n: int) -> tuple[int, int]:
    """(p_n, q_n): unlabeled class counts with automorphism order 2 and 1."""
    if n < 1:
        raise StructureError("enumerate.range", "n >= 1 required")
    table: dict[int, tuple[Fraction, Fraction]] = {1: (Fraction(0), Fraction(1)),
                                                   2: (Fraction(1), Fraction(0))}
    for m in range(3, n + 1):
        p2, q2 = table[m - 2]
        a = Fraction(2) ** (m - 3)
        b = Fraction(2) ** (m - 4)
        p = a * (p2 + q2)
        q = b * (b - 1) * p2 + b * (2 * b - 1) * q2
        table[m] = (p, q)
    p, q = table[n]
    if p.denominator != 1 or q.denominator != 1:
        raise InternalInconsistencyError(f"recursion non-integral at n={n}")
    return int(p), int(q)


# ------------------------------------------------- canonical forms, classes

def canonical_form(v: vn.RegularVine) -> tuple:
    """Minimum node-set encoding over the maximal-chain-induced labelings.

    Every maximal chain orders the ground set by first appearance; a
    relabeling permutes the chain set, so the minimum over chain-induced
    encodings is a complete isomorphism invariant.  The number of chains
    attaining the minimum equals the automorphism group order.
    """
    form, _ = _canonical_form_and_aut(v)
    return form


def _chains_unchecked(v: vn.RegularVine) -> Iterator[tuple]:
    """Maximal chains of an already-validated vine, without re-validation."""
    by_rank: dict[int, list[frozenset]] = {}
    for s in v.nodes:
        by_rank.setdefault(len(s), []).append(s)
    covers = {s: [t for t in by_rank.get(len(s) - 1, ()) if t < s]
              for s in v.nodes if len(s) > 1}
    stack = [(v.ground, (v.ground,))]
    while stack:
        s, acc = stack.pop()
        if len(s) == 1:
            yield tuple(reversed(acc))
        else:
            for t in covers[s]:
                stack.append((t, acc + (t,)))


def _canonical_form_and_aut(v: vn.RegularVine) -> tuple[tuple, int]:
    if v.n == 0:
        return ((), 1)
    if v.n == 1:
        return (((0,),), 1)
    best = None
    hits = 0
    for chain in _chains_unchecked(v):
        order: dict[str, int] = {}
        for node in chain:
            for x in sorted(node):
                if x not in order:
                    order[x] = len(order)
        enc = tuple(sorted(tuple(sorted(order[x] for x in s)) for s in v.nodes))
        if best is None or enc < best:
            best, hits = enc, 1
        elif enc == best:
            hits += 1
    return best, hits


def canonical_form_bruteforce(v: vn.RegularVine) -> tuple:
    """n!-scan over all relabelings; the verification oracle for canonical_form."""
    from itertools import permutations
    ground = sorted(v.ground)
    if not ground:
        return ()
    best = None
    for perm in permutations(range(len(ground))):
        order = dict(zip(ground, perm))
        enc = tuple(sorted(tuple(sorted(order[x] for x in s)) for s in v.nodes))
        if best is None or enc < best:
            best = enc
    return best


def vine_from_form(form: tuple, labels: list[str] | None = None) -> vn.RegularVine:
    """Rebuild the canonically labeled vine encoded by a canonical form."""
    size = max((i for node in form for i in node), default=-1) + 1
    if labels is None:
        labels = list(string.ascii_lowercase[:size])
    nodes = frozenset(frozenset(labels[i] for i in node) for node in form)
    return vn.RegularVine(frozenset(labels[:size]), nodes)


class IsoClass(NamedTuple):
    form: tuple
    representative: vn.RegularVine  # canonically labeled
    orbit_size: int
    aut_order: int


def classify(vines: Iterable[vn.RegularVine]) -> list[IsoClass]:
    """Group labeled vines by canonical form; assert orbit sizes n!/|Aut|."""
    groups: dict[tuple, list] = {}
    n = None
    for v in vines:
        if n is None:
            n = v.n
        elif v.n != n:
            raise StructureError("enumerate.mixed", "classification requires a uniform ground size")
        form, aut = _canonical_form_and_aut(v)
        entry = groups.setdefault(form, [0, aut])
        entry[0] += 1
    out = []
    for form in sorted(groups):
        orbit, aut = groups[form]
        if n and n >= 1 and orbit * aut != math.factorial(n):
            raise InternalInconsistencyError(
                f"orbit size {orbit} with |Aut|={aut} violates n!={math.factorial(n)}")
        out.append(IsoClass(form, vine_from_form(form), orbit, aut))
    return out


def class_representatives(n: int) -> list[vn.RegularVine]:
    """One canonically labeled representative per isomorphism class.

    For n <= 6 by full enumeration; for n = 7 by doubling every n = 6 class
    along every maximal chain (complete, since every extremal lattice arises
    as a doubling) and deduplicating by canonical form.
    """
    from . import lattice as lt
    labels = list(string.ascii_lowercase[:n])
    if n <= 6:
        return [c.representative for c in classify(generate_vines(labels))]
    reps = class_representatives(n - 1)
    seen: set[tuple] = set()
    for rep in reps:
        L = lt.vine_to_lattice(rep)
        for chain in lt.maximal_chains_of_lattice(L):
            v = lt.lattice_to_vine(lt.doubling(L, chain))
            seen.add(canonical_form(v))
    return [vine_from_form(f) for f in sorted(seen)]


# ---------------------------------------------------------------- catalog

def catalog_entries(n: int) -> list[dict]:
    """One catalog entry per isomorphism class, in canonical-form order."""
    from . import correspond as co
    from . import lattice as lt
    labels = list(string.ascii_lowercase[:n])
    classes = classify(generate_vines(labels))
    entries = []
    for idx, cls in enumerate(classes):
        v = cls.representative
        g = co.vine_to_graph(v)
        d = co.vine_to_domain(v)
        L = lt.vine_to_lattice(v)
        M = lt.lattice_to_matrix(L)
        entries.append({
            "index": idx,
            "n": n,
            "vine_nodes": [sorted(s) for s in v.sorted_nodes()],
            "graph_edges": [{"u": u, "v": w, "label": g.labels[(u, w)]} for (u, w) in g.edges()],
            "preferences": [list(w) for w in d.sorted_prefs()],
            "lattice_size": len(L.elements),
            "matrix_columns": ["".join(str(b) for b in col) for col in sorted(M.columns)],
            "richness": vn.richness_via_vine(v),
            "first_rank": dict(sorted(vn.chain_counts_from_atoms(v).items())),
            "is_d_vine": vn.is_d_vine(v),
            "is_c_vine": vn.is_c_vine(v),
            "aut_order": cls.aut_order,
            "orbit_size": cls.orbit_size,
        })
    return entries
