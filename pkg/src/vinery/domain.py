"""Preference domains and Arrow/Black single-peakedness.

A domain is a set of linear orders (preferences) over a common alternative
set.  Arrow's single-peaked domains (ASPDs) are characterized by the
never-bottom condition on triples; the maximal ones have size 2^(n-1),
exactly two bottom alternatives, and split/merge along those bottoms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Mapping, Optional

from .errors import StructureError

Preference = tuple  # tuple of alternative labels, first-ranked first


@dataclass(frozen=True, eq=True)
class PreferenceDomain:
    alternatives: frozenset
    prefs: frozenset  # frozenset of Preference

    @property
    def n(self) -> int:
        return len(self.alternatives)

    def sorted_prefs(self) -> list[Preference]:
        return sorted(self.prefs)


def domain(alternatives: Iterable[str], prefs: Iterable[Iterable[str]]) -> PreferenceDomain:
    alts = frozenset(alternatives)
    seen: set[Preference] = set()
    for p in prefs:
        w = tuple(p)
        if sorted(w) != sorted(alts):
            raise StructureError("domain.permutation", f"preference {w} is not a linear order on the alternatives", witness=w)
        if w in seen:
            raise StructureError("domain.duplicate", f"duplicate preference {w}", witness=w)
        seen.add(w)
    return PreferenceDomain(alts, frozenset(seen))


def restrict_domain(d: PreferenceDomain, subset: Iterable[str]) -> PreferenceDomain:
    sub = frozenset(subset)
    if not sub <= d.alternatives:
        raise StructureError("domain.subset", f"{sorted(sub)} is not a subset of the alternatives")
    return PreferenceDomain(sub, frozenset(tuple(x for x in w if x in sub) for w in d.prefs))


def find_condorcet_cycle(d: PreferenceDomain):
    """A witness (w1, w2, w3, triple) of a Condorcet cycle, or None."""
    for T in combinations(sorted(d.alternatives), 3):
        rt = restrict_domain(d, T)
        orders = {w: {x: i for i, x in enumerate(w)} for w in rt.prefs}
        for w1, w2, w3 in permutations(sorted(rt.prefs), 3):
            for a, b, c in permutations(T):
                if (orders[w1][a] < orders[w1][b] < orders[w1][c]
                        and orders[w2][b] < orders[w2][c] < orders[w2][a]
                        and orders[w3][c] < orders[w3][a] < orders[w3][b]):
                    return (w1, w2, w3, T)
    return None


def is_aspd(d: PreferenceDomain) -> tuple[bool, Optional[tuple]]:
    """Never-bottom check on all triples; returns (flag, violating triple)."""
    for T in combinations(sorted(d.alternatives), 3):
        rt = restrict_domain(d, T)
        bottoms = {w[-1] for w in rt.prefs}
        if bottoms >= set(T):
            return False, T
    return True, None


def bottom_alternatives(d: PreferenceDomain) -> frozenset:
    return frozenset(w[-1] for w in d.prefs if w)


def is_maximal_aspd(d: PreferenceDomain, definitional: bool = False) -> bool:
    """ASPD of the maximal size 2^(n-1).

    With ``definitional=True`` the literal no-extension property is checked
    instead (every absent preference breaks the never-bottom condition);
    feasible only for small n.
    """
    ok, _ = is_aspd(d)
    if not ok:
        return False
    if definitional:
        for w in permutations(sorted(d.alternatives)):
            if w not in d.prefs:
                bigger = PreferenceDomain(d.alternatives, d.prefs | {w})
                if is_aspd(bigger)[0]:
                    return False
        return True
    if d.n == 0:
        return d.prefs == frozenset({()})
    return len(d.prefs) == 2 ** (d.n - 1)


def _require_maximal(d: PreferenceDomain) -> None:
    if not is_maximal_aspd(d):
        raise StructureError("domain.maximal-aspd", "domain is not a maximal ASPD")


def split_domain(d: PreferenceDomain) -> tuple[PreferenceDomain, PreferenceDomain, PreferenceDomain]:
    """Split a maximal ASPD along its two bottom alternatives."""
    _require_maximal(d)
    if d.n < 2:
        raise StructureError("domain.split", "split requires n >= 2")
    a1, a2 = sorted(bottom_alternatives(d))
    d1 = PreferenceDomain(d.alternatives - {a1}, frozenset(w[:-1] for w in d.prefs if w[-1] == a1))
    d2 = PreferenceDomain(d.alternatives - {a2}, frozenset(w[:-1] for w in d.prefs if w[-1] == a2))
    dp = _second_block(d1, a2)
    return d1, d2, dp


def _second_block(di: PreferenceDomain, other_bottom: str) -> PreferenceDomain:
    """Restriction of the preferences of d_i ending in the other removed alternative."""
    return PreferenceDomain(di.alternatives - {other_bottom},
                            frozenset(w[:-1] for w in di.prefs if w and w[-1] == other_bottom))


def merge_domains(d1: PreferenceDomain, d2: PreferenceDomain) -> Optional[PreferenceDomain]:
    """Re-append the removed bottoms; succeeds when the second-level blocks agree."""
    A = d1.alternatives | d2.alternatives
    if len(d1.alternatives) != len(d2.alternatives) or len(d1.alternatives) != len(A) - 1:
        raise StructureError("domain.coatoms", "alternative sets are not distinct co-atoms of a common set",
                             witness=(sorted(d1.alternatives), sorted(d2.alternatives)))
    (a1,) = A - d1.alternatives
    (a2,) = A - d2.alternatives
    if len(A) >= 2:
        if a2 not in bottom_alternatives(d1) or a1 not in bottom_alternatives(d2):
            return None
        if _second_block(d1, a2) != _second_block(d2, a1):
            return None
    merged = frozenset(w + (a1,) for w in d1.prefs) | frozenset(w + (a2,) for w in d2.prefs)
    return PreferenceDomain(A, merged)


def first_rank_distribution(d: PreferenceDomain) -> dict[str, int]:
    counts = {a: 0 for a in d.alternatives}
    for w in d.prefs:
        if w:
            counts[w[0]] += 1
    return counts


def topmost_contiguous_position(d: PreferenceDomain, x: str, y: str) -> int:
    """Minimum position at which x and y occur adjacently in some preference."""
    if x == y or x not in d.alternatives or y not in d.alternatives:
        raise StructureError("domain.labels", f"need two distinct alternatives, got {x!r}, {y!r}")
    best = None
    for w in d.prefs:
        for i in range(len(w) - 1):
            if {w[i], w[i + 1]} == {x, y}:
                best = i + 1 if best is None else min(best, i + 1)
                break
    if best is None:
        raise StructureError("domain.contiguity", f"{x!r} and {y!r} are never contiguous", witness=(x, y))
    return best


def richness_direct(d: PreferenceDomain) -> int:
    """Largest k such that every row up to k contains every alternative."""
    if d.n == 0:
        return 0
    rich = 0
    for k in range(d.n):
        if {w[k] for w in d.prefs} == set(d.alternatives):
            rich = k + 1
        else:
            break
    return rich


def _single_peaked_on(w: Preference, pos: Mapping[str, int]) -> bool:
    # every prefix of w must be a contiguous interval of the axis
    lo = hi = pos[w[0]]
    for x in w[1:]:
        p = pos[x]
        if p == lo - 1:
            lo = p
        elif p == hi + 1:
            hi = p
        else:
            return False
    return True


def _axis_fits(d: PreferenceDomain, axis: tuple) -> bool:
    pos = {x: i for i, x in enumerate(axis)}
    return all(_single_peaked_on(w, pos) for w in d.prefs if w)


def is_bspd(d: PreferenceDomain) -> Optional[tuple]:
    """A societal axis along which all preferences are single-peaked, or None.

    Maximal ASPDs have a fast path: the domain is a BSPD iff it contains some
    preference together with its reversal, and that preference then serves as
    the axis.  Other domains fall back to a pruned axis search (an axis
    endpoint is the only place a bottom-ranked alternative can sit).
    """
    if d.n <= 1:
        return tuple(sorted(d.alternatives))
    if is_maximal_aspd(d):
        for w in d.sorted_prefs():
            if tuple(reversed(w)) in d.prefs:
                return w if _axis_fits(d, w) else None
        return None
    bottoms = bottom_alternatives(d)
    if len(bottoms) > 2:
        return None
    for axis in permutations(sorted(d.alternatives)):
        if axis[0] > axis[-1]:
            continue  # an axis and its reversal are the same witness
        if bottoms <= {axis[0], axis[-1]} and _axis_fits(d, axis):
            return axis
    return None


def relabel_domain(d: PreferenceDomain, h: Mapping[str, str]) -> PreferenceDomain:
    return PreferenceDomain(frozenset(h[a] for a in d.alternatives),
                            frozenset(tuple(h[x] for x in w) for w in d.prefs))


def render_table(d: PreferenceDomain) -> str:
    """Plain-text table: columns are preferences, top row is rank 1."""
    cols = d.sorted_prefs()
    if not cols or d.n == 0:
        return "(empty)\n"
    width = max(len(str(x)) for w in cols for x in w)
    lines = []
    for r in range(d.n):
        lines.append(" ".join(str(w[r]).rjust(width) for w in cols))
    return "\n".join(lines) + "\n"
