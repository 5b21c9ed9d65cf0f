"""(n,3)-extremal lattices and triangle-free extremal binary matrices.

Lattices are carried with a powerset realization: the element set is a family
of subsets of a ground set ordered by inclusion.  A regular vine plus a
bottom element is exactly an (n,3)-extremal lattice; the characteristic
vectors of the elements form a triangle-free binary matrix with the extremal
column count 1 + n + C(n,2).
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional

from . import vine as vn
from .errors import StructureError


@dataclass(frozen=True, eq=True)
class BoundedLattice:
    elements: frozenset  # frozenset of frozensets, ordered by inclusion

    @property
    def ground(self) -> frozenset:
        out: frozenset = frozenset()
        for e in self.elements:
            out = out | e
        return out

    def sorted_elements(self) -> list[frozenset]:
        return sorted(self.elements, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True, eq=True)
class BinaryMatrix:
    rows: tuple            # sorted row labels
    columns: frozenset     # frozenset of 0/1 tuples, one per column

    def sorted_columns(self) -> list[tuple]:
        return sorted(self.columns, reverse=True)


def lattice(elements: Iterable[Iterable[str]]) -> BoundedLattice:
    return BoundedLattice(frozenset(frozenset(e) for e in elements))


def join(L: BoundedLattice, x: frozenset, y: frozenset) -> Optional[frozenset]:
    """Least upper bound within the element family, or None if not unique."""
    uppers = [z for z in L.elements if x <= z and y <= z]
    mins = [z for z in uppers if not any(w < z for w in uppers)]
    return mins[0] if len(mins) == 1 else None


def meet(L: BoundedLattice, x: frozenset, y: frozenset) -> Optional[frozenset]:
    lowers = [z for z in L.elements if z <= x and z <= y]
    maxs = [z for z in lowers if not any(w > z for w in lowers)]
    return maxs[0] if len(maxs) == 1 else None


def is_lattice(L: BoundedLattice) -> bool:
    if not L.elements:
        return False
    elems = L.sorted_elements()
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            if join(L, x, y) is None or meet(L, x, y) is None:
                return False
    return True


def _require_lattice(L: BoundedLattice) -> None:
    if not is_lattice(L):
        raise StructureError("lattice.lattice", "element family is not a lattice under inclusion")


def covered_elements(L: BoundedLattice, s: frozenset) -> list[frozenset]:
    below = [t for t in L.elements if t < s]
    return sorted((t for t in below if not any(t < u < s for u in below)), key=lambda t: (len(t), sorted(t)))


def join_irreducibles(L: BoundedLattice) -> list[frozenset]:
    """Elements covering exactly one element (the standard finite-lattice test)."""
    bottom = min(L.elements, key=len)
    return [s for s in L.sorted_elements() if s != bottom and len(covered_elements(L, s)) == 1]


_B3_PATTERN = {0: frozenset(), 1: frozenset("1"), 2: frozenset("2"), 3: frozenset("3"),
               4: frozenset("12"), 5: frozenset("13"), 6: frozenset("23"), 7: frozenset("123")}


def _is_induced_b3(candidates: list[frozenset]) -> bool:
    """candidates in the fixed order bottom, T1, T2, T3, J12, J13, J23, top."""
    if len(set(candidates)) != 8:
        return False
    shape = [_B3_PATTERN[i] for i in range(8)]
    for i in range(8):
        for j in range(8):
            if (candidates[i] <= candidates[j]) != (shape[i] <= shape[j]):
                return False
    return True


def direct_b3_search(L: BoundedLattice) -> Optional[tuple]:
    """3-generator search for an induced B(3): triples with their joins.

    Complete: any induced B(3) copy can be replaced by one whose middle layer
    consists of the pairwise joins of its atoms.
    """
    _require_lattice(L)
    for t1, t2, t3 in combinations(L.sorted_elements(), 3):
        j12, j13, j23 = join(L, t1, t2), join(L, t1, t3), join(L, t2, t3)
        top = join(L, j12, j23)
        m12 = meet(L, t1, t2)
        bottom = meet(L, m12, t3)
        cand = [bottom, t1, t2, t3, j12, j13, j23, top]
        if _is_induced_b3(cand):
            return tuple(cand)
    return None


def is_b3_free(L: BoundedLattice) -> Optional[tuple]:
    """None if B(3)-free, else an 8-element induced-B(3) witness.

    Uses the matrix triangle criterion when all singletons are elements,
    falling back to the direct 3-generator search otherwise.
    """
    _require_lattice(L)
    ground = L.ground
    if all(frozenset([a]) in L.elements for a in sorted(ground)):
        tri = has_no_triangles(lattice_to_matrix(L))
        if tri is None:
            return None
        (a1, a2, a3), cols = tri
        by_restriction = {}
        for col in cols:
            s = _column_to_set(lattice_to_matrix(L).rows, col)
            by_restriction[frozenset(s & {a1, a2, a3})] = s
        s1 = by_restriction[frozenset({a1, a2})]
        s2 = by_restriction[frozenset({a1, a3})]
        s3 = by_restriction[frozenset({a2, a3})]
        bottom = min(L.elements, key=len)
        top = max(L.elements, key=len)
        witness = (bottom, frozenset([a1]), frozenset([a2]), frozenset([a3]), s1, s2, s3, top)
        if _is_induced_b3(list(witness)):
            return witness
        return direct_b3_search(L)  # degenerate overlaps; fall back
    return direct_b3_search(L)


def is_extremal_lattice(L: BoundedLattice, n: int) -> bool:
    """Lattice, at most n join-irreducibles, B(3)-free, extremal size."""
    if not is_lattice(L):
        return False
    if len(join_irreducibles(L)) > n:
        return False
    if is_b3_free(L) is not None:
        return False
    return len(L.elements) == 1 + n + n * (n - 1) // 2


def vine_to_lattice(v: vn.RegularVine) -> BoundedLattice:
    vn.require_valid(v)
    return BoundedLattice(v.nodes | {frozenset()})


def lattice_to_vine(L: BoundedLattice) -> vn.RegularVine:
    bottom = min(L.elements, key=len)
    nodes = frozenset(s for s in L.elements if s != bottom)
    out = vn.RegularVine(frozenset(x for s in nodes for x in s), nodes)
    vn.require_valid(out)
    return out


def maximal_chains_of_lattice(L: BoundedLattice) -> list[tuple]:
    """All bottom-to-top saturated chains, lexicographically ordered."""
    _require_lattice(L)
    top = max(L.sorted_elements(), key=lambda s: (len(s), sorted(s)))
    chains = []

    def descend(s, acc):
        acc.append(s)
        cov = covered_elements(L, s)
        if not cov:
            chains.append(tuple(reversed(acc)))
        for t in cov:
            descend(t, acc)
        acc.pop()

    descend(top, [])
    chains.sort(key=lambda c: [(len(s), sorted(s)) for s in c])
    return chains


def fresh_label(ground: frozenset) -> str:
    for c in string.ascii_lowercase:
        if c not in ground:
            return c
    i = 1
    while True:
        for c in string.ascii_lowercase:
            cand = f"{c}{i}"
            if cand not in ground:
                return cand
        i += 1


def doubling(L: BoundedLattice, chain: Iterable[frozenset]) -> BoundedLattice:
    """Adjoin a dotted copy of a maximal chain above itself.

    The dotted copy of x is realized as x plus one fresh ground label, which
    keeps the construction inside a powerset and reproducible.
    """
    _require_lattice(L)
    chain = tuple(chain)
    if chain not in set(maximal_chains_of_lattice(L)):
        raise StructureError("lattice.chain", "not a maximal chain of the lattice",
                             witness=[sorted(s) for s in chain])
    f = fresh_label(L.ground)
    dotted = {x | {f} for x in chain}
    return BoundedLattice(L.elements | frozenset(dotted))


def undouble(L: BoundedLattice) -> tuple[BoundedLattice, tuple]:
    """One decomposition (L1, C) with doubling(L1, C) isomorphic to L.

    Mirrors the vine split: keep the principal ideal of the lexicographically
    smaller co-atom under the top; the chain is read off as the elements of
    that ideal covered by a removed element.  The other co-atom induces a
    second, equally valid decomposition.
    """
    _require_lattice(L)
    v = lattice_to_vine(L)
    if v.n < 2:
        raise StructureError("lattice.undouble", "undoubling requires n >= 2")
    bottom = min(L.elements, key=len)
    c1, c2 = vn.covered_by(v, v.ground)
    keep = min((c1, c2), key=sorted)
    ideal = frozenset(s for s in L.elements if s <= keep) | {bottom}
    removed = L.elements - ideal
    chain_elems = {x for x in ideal if any(x in covered_elements(L, r) for r in removed)}
    L1 = BoundedLattice(ideal)
    chain = tuple(sorted(chain_elems, key=len))
    return L1, chain


def lattice_to_matrix(L: BoundedLattice) -> BinaryMatrix:
    rows = tuple(sorted(L.ground))
    cols = frozenset(tuple(1 if r in s else 0 for r in rows) for s in L.elements)
    return BinaryMatrix(rows, cols)


def matrix_to_lattice(M: BinaryMatrix) -> BoundedLattice:
    return BoundedLattice(frozenset(_column_to_set(M.rows, col) for col in M.columns))


def _column_to_set(rows: tuple, col: tuple) -> frozenset:
    return frozenset(r for r, bit in zip(rows, col) if bit)


def has_no_triangles(M: BinaryMatrix) -> Optional[tuple]:
    """None if triangle-free; else ((rows), (columns)) of the least witness.

    A triangle is three rows and three columns whose restrictions are the
    three weight-2 vectors in some order.
    """
    cols = sorted(M.columns)
    for rows3 in combinations(range(len(M.rows)), 3):
        found = {}
        for col in cols:
            pat = tuple(col[r] for r in rows3)
            if sum(pat) == 2 and pat not in found:
                found[pat] = col
        if len(found) == 3:
            witness_rows = tuple(M.rows[r] for r in rows3)
            witness_cols = tuple(found[p] for p in sorted(found))
            return witness_rows, witness_cols
    return None


def is_extremal_matrix(M: BinaryMatrix) -> bool:
    n = len(M.rows)
    return has_no_triangles(M) is None and len(M.columns) == 1 + n + n * (n - 1) // 2


def automorphism_group_order(v: vn.RegularVine) -> int:
    """Number of ground bijections fixing the node set; always 1 or 2."""
    vn.require_valid(v)
    if v.n <= 1:
        return 1
    ground = sorted(v.ground)
    count = 0
    for perm in permutations(ground):
        h = dict(zip(ground, perm))
        if vn.relabel_vine(v, h).nodes == v.nodes:
            count += 1
    if count not in (1, 2):
        raise StructureError("lattice.automorphisms", f"automorphism group of order {count} found (expected 1 or 2)",
                             witness=count)
    return count
