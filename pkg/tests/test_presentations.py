import math

import pytest

from permwreath.actions import natural_action, z_regular
from permwreath.errors import MissingRepresentatives, PreconditionNotFP
from permwreath.finite import FiniteGroup, perm_group
from permwreath.groups import Perm
from permwreath.presentations import (G_MODELS, W_MODELS, FpCriteriaInput, GroupPresentation,
                                      check_fg_criteria, check_fp_criteria, expected_wreath_order,
                                      finite_fp_input, generated_order, presentation, schreier_generators,
                                      synthesize_wreath_presentation, truncated_pres1, verify_relators,
                                      wreath_assignment)
from permwreath.words import Word


def sym3_input(w="C2", base=None):
    G = FiniteGroup(G_MODELS["Sym3"][1], name="Sym3")
    return finite_fp_input("Sym3", w, natural_action(G), base)


def test_c2_wr_sym3_six_relators():
    p = synthesize_wreath_presentation(sym3_input())
    assert p.generators == ("a", "b", "t")
    assert len(p) == 6
    assert p.families() == {"G": 3, "W": 1, "HW": 1, "WgW": 1}
    assign, _ = wreath_assignment(sym3_input())
    assert verify_relators(p, assign).ok
    assert generated_order(assign) == expected_wreath_order(2, 3, 6) == 48


def test_corrupted_relator_is_caught():
    inp = sym3_input()
    p = synthesize_wreath_presentation(inp)
    bad = GroupPresentation(p.generators, p.relators + [Word.parse("a t")], p.tags + ["junk"])
    rep = verify_relators(bad, wreath_assignment(inp)[0])
    assert not rep.ok
    assert [f["tag"] for f in rep.failures] == ["junk"]
    assert rep.to_json()["failed"] == 1


@pytest.mark.parametrize("g", ["Sym3", "Sym4", "D4"])
@pytest.mark.parametrize("w", ["C2", "C3", "Sym3"])
def test_relators_hold_in_model(g, w):
    G = FiniteGroup(G_MODELS[g][1], name=g)
    inp = finite_fp_input(g, w, natural_action(G))
    p = synthesize_wreath_presentation(inp)
    assert verify_relators(p, wreath_assignment(inp)[0]).ok
    assert set(p.families()) <= {"G", "W", "HW", "WgW", "WgWij"}


def test_stabilizer_point_equal_to_whole_group():
    # a fixed point has H = G, so there is no nontrivial double coset on it
    gens = {"a": Perm.from_cycles(4, (0, 1)), "b": Perm.from_cycles(4, (0, 1, 2))}
    G = perm_group(gens)
    act = natural_action(G)
    assert act.base_points == (0, 3)
    inp = finite_fp_input((G_MODELS["Sym3"][0], gens), "C2", act)
    assert inp.representatives[(1, 1)] == [Word()]
    p = synthesize_wreath_presentation(inp)
    assign, _ = wreath_assignment(inp)
    assert verify_relators(p, assign).ok
    assert generated_order(assign) == 2 ** 4 * 6


def test_two_orbit_action():
    gens = {"a": Perm.from_cycles(5, (0, 1), (3, 4)), "b": Perm.from_cycles(5, (0, 1, 2))}
    act = natural_action(perm_group(gens))
    inp = finite_fp_input((G_MODELS["Sym3"][0], gens), "C2", act)
    p = synthesize_wreath_presentation(inp)
    assert "t_1" in p.generators and "t_2" in p.generators
    assert p.families().get("WgWij", 0) > 0
    assign, _ = wreath_assignment(inp)
    assert verify_relators(p, assign).ok
    assert generated_order(assign) == 2 ** 5 * 6


def test_schreier_generators_generate_stabilizer():
    G = FiniteGroup(G_MODELS["Sym4"][1])
    act = natural_action(G)
    for x in range(4):
        H = G.subgroup(schreier_generators(G, act, x))
        assert H == frozenset(g for g in G.elements if g.act(x) == x)


# -- verdicts ----------------------------------------------------------------------

def test_z_regular_not_fp():
    inp = FpCriteriaInput(g=G_MODELS["Z"][0], w=W_MODELS["C2"][0], stabilizers=[[]],
                          simply_transitive=True, x_finite=False)
    assert check_fg_criteria(inp).status == "FG"
    v = check_fp_criteria(inp)
    assert v.status == "NotFP" and v.clause.startswith("(iii)")
    assert "force X finite" in v.note


def test_thompson_flags_fp():
    inp = FpCriteriaInput(g=G_MODELS["F"][0], w=W_MODELS["C2"][0], stabilizers=[["x1"]],
                          pair_orbits_finite=True)
    inp.stabilizers = [[Word.parse("x1")]]
    assert check_fp_criteria(inp).status == "FP"


def test_infinitely_many_orbits():
    inp = FpCriteriaInput(g_fg=True, w_fg=True, orbit_count=math.inf)
    assert check_fg_criteria(inp).status == "NotFG"
    v = check_fp_criteria(inp)
    assert v.status == "NotFP" and v.clause.startswith("(iii)")


def test_w_not_fg():
    v = check_fg_criteria(FpCriteriaInput(g_fg=True, w_fg=False, orbit_count=1))
    assert v.status == "NotFG" and "W" in v.clause


def test_unknown_and_trivial_w():
    assert check_fp_criteria(FpCriteriaInput()).status == "Unknown"
    v = check_fp_criteria(FpCriteriaInput(g_fp=True, w_trivial=True, orbit_count=math.inf))
    assert v.status == "FP"


def test_orbit_count_mismatch():
    with pytest.raises(ValueError):
        FpCriteriaInput(stabilizers=[[], []], orbit_count=1)


def test_synthesis_preconditions():
    inp = FpCriteriaInput(g=G_MODELS["Z"][0], w=W_MODELS["C2"][0], stabilizers=[[]],
                          simply_transitive=True, x_finite=False)
    with pytest.raises(PreconditionNotFP):
        synthesize_wreath_presentation(inp)
    inp = FpCriteriaInput(g=G_MODELS["Sym3"][0], w=W_MODELS["C2"][0], stabilizers=[[Word.parse("a")]],
                          representatives={}, pair_orbits_finite=True)
    with pytest.raises(MissingRepresentatives):
        synthesize_wreath_presentation(inp)


# -- truncated presentations -------------------------------------------------------------

def test_truncated_sym3_stabilises():
    inp = sym3_input()
    fams = [truncated_pres1(inp, n).families() for n in range(5)]
    assert fams[0] == {"G": 3, "W": 1, "HW": 1}
    assert fams[1]["WgW"] == 3
    assert fams[2]["WgW"] == fams[3]["WgW"] == fams[4]["WgW"] == 4
    assign, _ = wreath_assignment(inp)
    for n in range(4):
        assert verify_relators(truncated_pres1(inp, n), assign).ok


def test_truncated_z_monotone():
    gp, ga = G_MODELS["Z"]
    wp, wa = W_MODELS["C2"]
    inp = FpCriteriaInput(g=gp, w=wp, stabilizers=[[]], action=z_regular(), g_assignment=ga,
                          w_assignment=wa, simply_transitive=True, x_finite=False)
    sizes = [len(truncated_pres1(inp, n)) for n in range(5)]
    assert sizes == [1, 3, 5, 7, 9]
    prev = set()
    for n in range(5):
        cur = set(truncated_pres1(inp, n).relators)
        assert prev <= cur
        prev = cur
    with pytest.raises(ValueError):
        truncated_pres1(inp, -1)


def test_json_round_trip():
    p = synthesize_wreath_presentation(sym3_input("Sym3"))
    q = GroupPresentation.loads(p.dumps())
    assert q.generators == p.generators and q.relators == p.relators and q.tags == p.tags


def test_presentation_validation():
    with pytest.raises(ValueError):
        presentation("a", "b^2")
    assert presentation("a b", "a^2", "b^3").pretty() == "< a, b | a a, b b b >"


def test_single_point_gives_direct_product():
    from permwreath.actions import coset_action
    G = FiniteGroup(G_MODELS["Sym3"][1], name="Sym3")
    act = coset_action(G, G.whole())
    inp = finite_fp_input("Sym3", "C2", act)
    p = synthesize_wreath_presentation(inp)
    assert set(p.families()) == {"G", "W", "HW"}
    assign, _ = wreath_assignment(inp)
    assert verify_relators(p, assign).ok and generated_order(assign) == 12


def test_trivial_w_adds_only_redundant_generator():
    inp = sym3_input()
    inp.w = presentation("t", "t", name="1")
    inp.w_trivial = True
    p = synthesize_wreath_presentation(inp)
    assert p.relators[:3] == G_MODELS["Sym3"][0].relators
    assert Word.parse("t") in p.relators
