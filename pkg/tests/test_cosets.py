import pytest

from oracles import double_coset_count, perm_closure
from permwreath.actions import (houghton_action, houghton_window, int_window,
                                natural_action, regular_action, thompson_dyadic_action, dyadic_window,
                                z_regular)
from permwreath.dyadic import Dyadic
from permwreath.cosets import (InvariantClassifier, almost_maximal_check, biindex, caracfini_check,
                               cosets_from_edges, dicho_check, double_cosets_finite, edges_from_cosets,
                               equality_classifier, expand_double_cosets, fibas_check, invariant_edge_sets,
                               orbit_data, orbits_on_pairs, orbits_on_set, quotient_check, sign_classifier)
from permwreath.errors import (ClassifierViolation, ConditionViolated, NotFullyEnumerable, NotInvariant)
from permwreath.finite import CATALOGUE, FiniteGroup, klein_four, perm_group, symmetric_group
from permwreath.groups import Perm
from permwreath.thompson import pair_transporter


@pytest.fixture(scope="module")
def s3():
    return symmetric_group(3)


def stab(G, x):
    return G.stabilizer(x)


# -- orbits -------------------------------------------------------------------

def test_trivial_group_orbits():
    G = FiniteGroup({"e": Perm.identity_of(4)}, name="1")
    act = natural_action(G)
    assert orbits_on_set(act, range(4)).count == 4


def test_sym3_transitive(s3):
    assert orbits_on_set(natural_action(s3), range(3)).count == 1


def test_houghton_orbit_on_window():
    rep = orbits_on_set(houghton_action(3), houghton_window(3, 20))
    assert rep.count == 1 and rep.classes[0].__len__() == 63


def test_z_pair_orbits_grow_with_window():
    counts = []
    for m in (3, 5, 8):
        rep = orbits_on_pairs(z_regular(), int_window(-m, m),
                              InvariantClassifier(lambda a, b: b - a, name="b-a"))
        counts.append(rep.count)
    assert counts == [13, 21, 33]


def test_thompson_pair_orbits_without_witnesses():
    # generator moves inside a finite window do not connect the sign classes
    rep = orbits_on_pairs(thompson_dyadic_action(), dyadic_window(4), sign_classifier())
    assert rep.count > 3
    assert set(rep.labels) == {-1, 0, 1}


def test_thompson_pair_orbits_with_witnesses():
    rep = orbits_on_pairs(thompson_dyadic_action(), dyadic_window(5), sign_classifier(), pair_transporter)
    assert rep.count == 3 and sorted(rep.labels) == [-1, 0, 1] and not rep.flags


def test_classifier_violation_names_pair_and_generator():
    half = Dyadic.parse("1/2")
    bad = InvariantClassifier(lambda a, b: a < half, name="bad")
    with pytest.raises(ClassifierViolation) as exc:
        orbits_on_pairs(thompson_dyadic_action(), dyadic_window(3), bad)
    assert exc.value.pair is not None and exc.value.generator is not None


def test_report_json(s3):
    doc = orbits_on_pairs(natural_action(s3), range(3), equality_classifier()).to_json()
    assert doc["classes"] == 2 and doc["labels"] == ["True", "False"] or doc["labels"] == ["False", "True"]


# -- double cosets ----------------------------------------------------------------

def test_sym3_double_cosets(s3):
    H = s3.subgroup([Perm.from_cycles(3, (1, 2))])
    table = double_cosets_finite(s3, H)
    assert len(table) == 2
    G = perm_closure([(1, 0, 2), (1, 2, 0)])
    assert double_coset_count(G, {(0, 1, 2), (0, 2, 1)}) == 2
    for g in s3.elements:
        assert g in table.cosets[table.index_of(g)]


def test_normal_and_whole(s3):
    A3 = s3.subgroup([Perm.from_cycles(3, (0, 1, 2))])
    assert len(double_cosets_finite(s3, A3)) == 2
    assert len(double_cosets_finite(s3, s3.whole())) == 1


def test_double_cosets_need_finite_group():
    with pytest.raises(NotFullyEnumerable):
        double_cosets_finite(object(), [])


@pytest.mark.parametrize("name", ["Sym3", "Sym4", "D4", "Q8", "Alt4"])
def test_double_coset_counts_match_oracle(name):
    G = CATALOGUE[name]()
    G_t = {g.images for g in G.elements}
    for H in G.all_subgroups():
        assert biindex(G, H) == double_coset_count(G_t, {h.images for h in H})


def test_almost_maximal(s3):
    assert almost_maximal_check(s3, s3.whole()).count == 1
    assert almost_maximal_check(s3, s3.subgroup([Perm.from_cycles(3, (1, 2))])).count == 2
    V = klein_four()
    assert almost_maximal_check(V, V.trivial()).count == 5


@pytest.mark.parametrize("name", sorted(CATALOGUE))
def test_two_power_bound(name):
    G = CATALOGUE[name]()
    for H in G.all_subgroups():
        rep = almost_maximal_check(G, H)
        assert rep.count <= 2 ** rep.biindex


# -- edges <-> cosets ----------------------------------------------------------------

def test_edges_examples(s3):
    act = natural_action(s3)
    data = orbit_data(act)
    H = data.stabilizers[0]
    full = edges_from_cosets(act, {(0, 0): s3.element_set - H}).edges()
    assert full == {(x, y) for x in range(3) for y in range(3) if x != y}
    assert edges_from_cosets(act, {}).edges() == frozenset()
    g = Perm.from_cycles(3, (0, 1))
    V = expand_double_cosets(s3, H, H, [g])
    assert edges_from_cosets(act, {(0, 0): V}).edges() == full


def test_condition_violations(s3):
    act = natural_action(s3)
    H = orbit_data(act).stabilizers[0]
    with pytest.raises(ConditionViolated) as exc:
        edges_from_cosets(act, {(0, 0): s3.element_set})
    assert "H_i cap B_ii" in exc.value.condition or "H_i B_ij" in exc.value.condition
    lone = next(g for g in s3.elements if g not in H)
    with pytest.raises(ConditionViolated):
        edges_from_cosets(act, {(0, 0): {lone}})


def test_cosets_from_edges_examples(s3):
    act = natural_action(s3)
    H = orbit_data(act).stabilizers[0]
    assert cosets_from_edges(act, set()) == {(0, 0): frozenset()}
    full = {(x, y) for x in range(3) for y in range(3) if x != y}
    assert cosets_from_edges(act, full)[(0, 0)] == s3.element_set - H
    with pytest.raises(NotInvariant):
        cosets_from_edges(act, {(0, 1), (1, 0)})
    with pytest.raises(NotInvariant):
        cosets_from_edges(act, {(0, 1)})


def test_regular_sym3_round_trip_all_families(s3):
    act = regular_action(s3)
    sets = invariant_edge_sets(act)
    assert len(sets) == 16
    for E in sets:
        fam = cosets_from_edges(act, E)
        assert edges_from_cosets(act, fam).edges() == E
        assert cosets_from_edges(act, edges_from_cosets(act, fam).edges()) == fam


def test_two_orbit_round_trip():
    G = perm_group({"a": Perm.from_cycles(5, (0, 1), (3, 4)), "b": Perm.from_cycles(5, (0, 1, 2))})
    act = natural_action(G)
    assert len(act.base_points) == 2
    for E in invariant_edge_sets(act):
        fam = cosets_from_edges(act, E)
        assert edges_from_cosets(act, fam).edges() == E


# -- hereditary count invariants ---------------------------------------------------------

@pytest.mark.parametrize("name", ["Sym3", "Sym4", "D4", "Q8", "Alt4", "D6"])
def test_dicho_fibas(name):
    G = CATALOGUE[name]()
    subs = G.all_subgroups()
    for H1 in subs:
        for H2 in subs:
            if H1 <= H2:
                assert dicho_check(G, H1, H2)["ok"]
                assert fibas_check(G, H1, H2)["ok"]


@pytest.mark.parametrize("name", ["Sym3", "Sym4", "D4", "Q8", "Alt4", "C6", "C2xC2", "D6"])
def test_quotient_and_caracfini(name):
    G = CATALOGUE[name]()
    for N in G.normal_subgroups():
        assert caracfini_check(G, N)["ok"]
        for H in G.all_subgroups()[:10]:
            assert quotient_check(G, H, N)["ok"]
