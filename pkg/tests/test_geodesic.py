import pytest

from oracles import oracle_K, walk_table
from permwreath.actions import dinf_on_z, natural_action, regular_action, z_regular
from permwreath.errors import MaskWidthExceeded, RadiusBudgetExceeded, TruncationEscape
from permwreath.finite import symmetric_group
from permwreath.geodesic import K, CoverWalkProblem, cover_walk_length, explore
from permwreath.groups import ZInt


def test_explore_examples():
    z = z_regular()
    f0 = explore(z, 0)
    assert f0.vertices == {0} and len(f0) == 1
    f3 = explore(z, 3)
    assert sorted(g.value for g in f3.elements) == list(range(-3, 4))
    assert not f3.complete
    s3 = explore(regular_action(symmetric_group(3)), 20)
    assert len(s3.vertices) == 6 and s3.complete


def test_explore_window():
    with pytest.raises(TruncationEscape):
        explore(z_regular(), 5, window=range(-3, 4))


def test_fragment_edges_invertible():
    frag = explore(natural_action(symmetric_group(3)), 10)
    edges = frag.edges()
    labels = set(frag.labels)
    for u, v, s in edges:
        inv = s[:-3] if s.endswith("^-1") else s + "^-1"
        if inv not in labels:
            inv = s  # involution
        assert (v, u, inv) in edges


def test_K_examples():
    frag = explore(z_regular(), 8)
    assert K(set(), ZInt(0), frag) == 0
    assert K({2}, ZInt(2), frag) == 2
    assert K({-1, 2}, ZInt(0), frag) == 6


def test_K_matches_walk_enumeration_on_Z():
    frag = explore(z_regular(), 9)
    table = walk_table([1, -1], 0, lambda c, x: c + x, lambda c, s: c + s, 0, 9)
    for F in [{1}, {-2, 2}, {-1, 3}, {0, 2, -2}]:
        for c in range(-3, 4):
            want = oracle_K(table, F, c)
            try:
                got = K(F, ZInt(c), frag)
            except RadiusBudgetExceeded:
                got = None
            assert got == want, (F, c)


def test_budget_and_mask_errors():
    frag = explore(z_regular(), 4)
    with pytest.raises(RadiusBudgetExceeded):
        K({-2, 2}, ZInt(0), frag)
    with pytest.raises(RadiusBudgetExceeded):
        K({1}, ZInt(0), frag, budget=6)
    with pytest.raises(MaskWidthExceeded):
        from permwreath.geodesic import cover_distances
        cover_distances(range(30), explore(z_regular(), 2), mask_width=24)


def test_triangle_bounds():
    frag = explore(natural_action(symmetric_group(4)), 30)
    for g in frag.elements[:40]:
        for F in [{0}, {1, 2}, {3}]:
            k = K(F, g, frag)
            assert k >= frag.word_length(g)
            assert k >= max(frag.point_depth(x) for x in F)


def test_left_side_fragment_differs_in_general():
    # the two path conventions give the same K for abelian groups
    a = explore(dinf_on_z(), 6, side="left")
    b = explore(dinf_on_z(), 6, side="right")
    assert set(a.elements) == set(b.elements)


def test_cover_walk_problem():
    frag = explore(z_regular(), 6)
    assert cover_walk_length(CoverWalkProblem(frozenset({3}), ZInt(0)), frag) == 6
