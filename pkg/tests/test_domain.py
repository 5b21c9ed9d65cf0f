"""Preference domains: restriction, Condorcet cycles, single-peakedness,
maximality, split/merge, analytics."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vinery import domain as dm
from vinery.errors import StructureError


def mkdom(alts, words):
    return dm.domain(alts, [tuple(w) for w in words])


# ----------------------------------------------------------- construction

def test_factory_rejects_malformed_input():
    with pytest.raises(StructureError) as exc:
        dm.domain("abc", [("a", "b")])
    assert exc.value.axiom == "domain.permutation"
    with pytest.raises(StructureError) as exc:
        dm.domain("ab", [("a", "b"), ("a", "b")])
    assert exc.value.axiom == "domain.duplicate"


def test_restrict_domain(fig_domain):
    r = dm.restrict_domain(fig_domain, "abc")
    assert r.alternatives == frozenset("abc")
    assert r.prefs == frozenset({("a", "b", "c"), ("b", "a", "c"),
                                 ("b", "c", "a"), ("c", "b", "a")})
    with pytest.raises(StructureError):
        dm.restrict_domain(fig_domain, "axy")


# ------------------------------------------------- cycles and peakedness

def test_condorcet_cycle_found():
    d = mkdom("abc", ["abc", "bca", "cab"])
    hit = dm.find_condorcet_cycle(d)
    assert hit is not None
    assert hit[3] == ("a", "b", "c")


def test_no_condorcet_cycle_but_not_aspd():
    d = mkdom("abc", ["abc", "acb", "cab", "cba"])
    assert dm.find_condorcet_cycle(d) is None
    ok, triple = dm.is_aspd(d)
    assert not ok and triple == ("a", "b", "c")


def test_worked_examples_are_maximal_aspds(intro_domain, fig_domain, trd1, trd2):
    for d in (intro_domain, fig_domain, trd1, trd2):
        assert dm.is_aspd(d) == (True, None)
        assert dm.is_maximal_aspd(d)


def test_definitional_maximality_matches_size_criterion(intro_domain):
    assert dm.is_maximal_aspd(intro_domain, definitional=True)
    smaller = dm.PreferenceDomain(intro_domain.alternatives,
                                  intro_domain.prefs - {("a", "b", "c", "d")})
    assert not dm.is_maximal_aspd(smaller)
    assert not dm.is_maximal_aspd(smaller, definitional=True)


def test_tiny_maximality():
    assert dm.is_maximal_aspd(dm.domain("", [()]))
    assert dm.is_maximal_aspd(mkdom("a", ["a"]))
    assert dm.is_maximal_aspd(mkdom("ab", ["ab", "ba"]))
    assert not dm.is_maximal_aspd(mkdom("ab", ["ab"]))


def test_bottom_alternatives(intro_domain, trd2):
    assert dm.bottom_alternatives(intro_domain) == frozenset("ad")
    assert dm.bottom_alternatives(trd2) == frozenset("cd")


# ------------------------------------------------------------ split/merge

def test_split_fig(fig_domain):
    d1, d2, dp = dm.split_domain(fig_domain)
    assert d1 == mkdom("bcde", ["bcde", "cbde", "cdbe", "dcbe",
                                "cdeb", "dceb", "cedb", "ecdb"])
    assert d2 == mkdom("abcd", ["abcd", "bacd", "bcad", "cbad",
                                "bcda", "cbda", "cdba", "dcba"])
    assert dp == mkdom("bcd", ["bcd", "cbd", "cdb", "dcb"])


def test_merge_recovers_split(intro_domain, fig_domain):
    for d in (intro_domain, fig_domain):
        d1, d2, _ = dm.split_domain(d)
        assert dm.merge_domains(d1, d2) == d
        assert dm.merge_domains(d2, d1) == d


def test_merge_requires_coatoms(fig_domain):
    d1, _, dp = dm.split_domain(fig_domain)
    with pytest.raises(StructureError) as exc:
        dm.merge_domains(d1, dp)
    assert exc.value.axiom == "domain.coatoms"


def test_merge_wrong_bottom_is_none(fig_domain):
    d1, _, _ = dm.split_domain(fig_domain)
    other = mkdom("abcd", ["acbd", "cabd", "bacd", "abcd",
                           "badc", "abdc", "adbc", "dabc"])
    # 'a' is not a bottom alternative of the second part
    assert dm.merge_domains(d1, other) is None


def test_merge_mismatching_second_blocks_is_none(fig_domain):
    d1, d2, _ = dm.split_domain(fig_domain)
    swapped = dm.relabel_domain(d2, {"a": "a", "b": "c", "c": "b", "d": "d"})
    assert dm.merge_domains(d1, swapped) is None


def test_split_requires_maximal_aspd():
    with pytest.raises(StructureError) as exc:
        dm.split_domain(mkdom("abc", ["abc", "bca", "cab"]))
    assert exc.value.axiom == "domain.maximal-aspd"


# -------------------------------------------------------------- analytics

def test_first_rank_distribution(trd1, trd2):
    assert dm.first_rank_distribution(trd1) == {"a": 1, "b": 3, "c": 3, "d": 1}
    assert dm.first_rank_distribution(trd2) == {"a": 4, "b": 2, "c": 1, "d": 1}


def test_richness_direct(intro_domain, trd1, trd2):
    assert dm.richness_direct(intro_domain) == 2
    assert dm.richness_direct(trd1) == 3
    assert dm.richness_direct(trd2) == 2
    assert dm.richness_direct(mkdom("ab", ["ab", "ba"])) == 2
    assert dm.richness_direct(dm.domain("", [()])) == 0


def test_topmost_contiguous_position(intro_domain, fig_domain):
    assert dm.topmost_contiguous_position(fig_domain, "a", "c") == 2
    assert dm.topmost_contiguous_position(intro_domain, "a", "d") == 3
    assert dm.topmost_contiguous_position(intro_domain, "d", "a") == 3
    with pytest.raises(StructureError):
        dm.topmost_contiguous_position(intro_domain, "a", "a")
    with pytest.raises(StructureError) as exc:
        dm.topmost_contiguous_position(mkdom("abc", ["abc"]), "a", "c")
    assert exc.value.axiom == "domain.contiguity"


# ------------------------------------------------------------------ BSPD

def test_bspd_maximal_fast_path(trd1, trd2):
    assert dm.is_bspd(trd1) == ("a", "b", "c", "d")
    assert dm.is_bspd(trd2) is None


def test_bspd_small_examples():
    assert dm.is_bspd(mkdom("abc", ["abc", "bac", "bca", "cba"])) == ("a", "b", "c")
    assert dm.is_bspd(mkdom("ab", ["ab", "ba"])) == ("a", "b")
    assert dm.is_bspd(mkdom("a", ["a"])) == ("a",)
    # three distinct bottoms rule out any axis
    assert dm.is_bspd(mkdom("abc", ["abc", "bca", "cab"])) is None


def test_bspd_non_maximal_fallback():
    assert dm.is_bspd(mkdom("abc", ["abc", "cba"])) == ("a", "b", "c")
    axis = dm.is_bspd(mkdom("abcd", ["bacd", "bcad"]))
    assert axis is not None
    pos = {x: i for i, x in enumerate(axis)}
    for w in [("b", "a", "c", "d"), ("b", "c", "a", "d")]:
        positions = [pos[x] for x in w]
        # each prefix is an interval of the axis
        for k in range(1, 5):
            chunk = sorted(positions[:k])
            assert chunk == list(range(chunk[0], chunk[0] + k))


# ------------------------------------------------- relabeling, rendering

@given(st.permutations(list("abcde")))
def test_relabel_preserves_structure(perm):
    d = dm.domain("abcde", [tuple(w) for w in
                            ["abcde", "bacde", "bcade", "cbade", "bcdae", "cbdae",
                             "cdbae", "dcbae", "bcdea", "cbdea", "cdbea", "dcbea",
                             "cdeba", "dceba", "cedba", "ecdba"]])
    h = dict(zip("abcde", perm))
    out = dm.relabel_domain(d, h)
    assert dm.is_maximal_aspd(out)
    assert dm.richness_direct(out) == dm.richness_direct(d)
    assert dm.bottom_alternatives(out) == frozenset(h[x] for x in dm.bottom_alternatives(d))


def test_render_table(intro_domain):
    text = dm.render_table(intro_domain)
    lines = text.splitlines()
    assert len(lines) == 4
    assert all(len(line.split()) == 8 for line in lines)
    assert lines[0].split()[0] == "a"           # first column is abcd
    assert dm.render_table(dm.domain("", [()])) == "(empty)\n"
