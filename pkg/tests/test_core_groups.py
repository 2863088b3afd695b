from fractions import Fraction

import pytest

from oracles import dinf_bfs_lengths, x0_formula, x1_formula
from permwreath.actions import houghton_action, thompson_dyadic_action
from permwreath.dyadic import Dyadic, dyadic, dyadics_in_unit_interval
from permwreath.errors import InvalidElement, MixedGroupKinds, PointOutOfDomain, UnboundSymbol
from permwreath.groups import (DINF_A, DINF_B, Cyclic, Dihedral, DirectProduct, Perm, ZInt, compose,
                               dinf_power_ab, element_order, evaluate_word)
from permwreath.houghton import HoughtonElement, houghton_generators, houghton_translation
from permwreath.thompson import IDENTITY, X0, X1, PLMap, map_through, relators_hold, thompson_generator
from permwreath.words import Word


# -- dyadics ----------------------------------------------------------------------

def test_dyadic_canonical_form():
    d = Dyadic(6, 3)
    assert (d.mantissa, d.exponent) == (3, 2)
    assert Dyadic(0, 5) == Dyadic(0) and Dyadic(0, 5).exponent == 0
    assert Dyadic(4, 1) == 2


def test_dyadic_parse_and_order():
    assert dyadic("3/8") < dyadic("1/2") < dyadic("5/8")
    assert str(dyadic("6/16")) == "3/8"
    assert dyadic("1/4").to_fraction() == Fraction(1, 4)
    with pytest.raises(ValueError):
        dyadic("1/3")


def test_dyadics_in_unit_interval_counts():
    assert len(dyadics_in_unit_interval(3)) == 7
    assert len(dyadics_in_unit_interval(6)) == 63


# -- compose / evaluate_word ----------------------------------------------------------

@pytest.mark.parametrize("g", [Perm.from_cycles(3, (0, 1)), ZInt(4), DINF_A, Cyclic(2, 5), X0,
                               houghton_translation(3, 1, 2)])
def test_identity_and_inverse(g):
    e = g.identity()
    assert compose(e, g) == g == compose(g, e)
    assert compose(g, g.inverse()) == e


def test_dihedral_involution():
    assert compose(DINF_A, DINF_A).is_identity()
    assert compose(DINF_B, DINF_B).is_identity()


def test_thompson_inverse_law():
    assert compose(X0, X0.inverse()) == IDENTITY


def test_mixed_kinds_raise():
    with pytest.raises(MixedGroupKinds):
        compose(ZInt(1), DINF_A)
    with pytest.raises(MixedGroupKinds):
        compose(Perm.identity_of(3), Perm.identity_of(4))
    with pytest.raises(MixedGroupKinds):
        compose(Cyclic(1, 2), Cyclic(1, 3))


def test_evaluate_word_examples():
    t = Cyclic(1, 2)
    assert evaluate_word(Word(), {"t": t}).is_identity()
    assert evaluate_word(Word.parse("t t"), {"t": t}).is_identity()
    a, b = Perm.from_cycles(4, (0, 1)), Perm.from_cycles(4, (2, 3))
    assert evaluate_word(Word.parse("a b a^-1 b^-1"), {"a": a, "b": b}).is_identity()
    with pytest.raises(UnboundSymbol):
        evaluate_word(Word.parse("a c"), {"a": a})


def test_word_order_matches_composition():
    a, b = Perm.from_cycles(3, (0, 1)), Perm.from_cycles(3, (0, 1, 2))
    assert evaluate_word(Word.parse("a b"), {"a": a, "b": b}) == a * b
    assert (a * b).act(0) == a.act(b.act(0))


def test_direct_product_and_orders():
    g = DirectProduct((Cyclic(1, 2), Cyclic(1, 3)))
    assert element_order(g) == 6
    assert element_order(ZInt(1), limit=50) == 0


# -- D_inf -------------------------------------------------------------------------

def test_dinf_word_length_matches_bfs():
    oracle = dinf_bfs_lengths(12)
    for (sign, shift), d in oracle.items():
        if d > 10:
            continue
        g = Dihedral(sign == -1, shift)
        assert g.word_length() == d, g


def test_dinf_power_ab():
    for n in range(-5, 6):
        g = dinf_power_ab(n)
        assert g == (DINF_A * DINF_B) ** n
        assert g.word_length() == 2 * abs(n)


# -- Thompson's group F -------------------------------------------------------------------

def test_x0_at_half():
    assert X0(Dyadic(1, 1)) == Dyadic(1, 2)


def test_generators_against_rational_formulas():
    for x in dyadics_in_unit_interval(7):
        assert X0(x).to_fraction() == x0_formula(x.to_fraction())
        assert X1(x).to_fraction() == x1_formula(x.to_fraction())


def test_thompson_relators():
    assert relators_hold()


def test_thompson_generator_support():
    x3 = thompson_generator(3)
    for x in dyadics_in_unit_interval(5):
        if x <= Dyadic(7, 3):
            assert x3(x) == x


def test_plmap_validation():
    with pytest.raises(ValueError):
        PLMap.from_pairs(("1/2", "1/3"))  # not dyadic
    with pytest.raises(InvalidElement):
        PLMap.from_pairs(("1/2", "3/8"))  # slope 3/4
    with pytest.raises(InvalidElement):
        PLMap.from_pairs(("1/2", "3/4"), ("3/4", "1/2"))
    assert PLMap.from_pairs(("1/2", "1/2")) == IDENTITY


def test_map_through():
    g = map_through(["3/64", "61/64"], ["1/4", "1/2"])
    assert g(dyadic("3/64")) == dyadic("1/4")
    assert g(dyadic("61/64")) == dyadic("1/2")


def test_thompson_action_domain():
    act = thompson_dyadic_action()
    assert act.act(X0, dyadic("1/2")) == dyadic("1/4")
    assert act.act(IDENTITY, dyadic("1/2")) == dyadic("1/2")
    with pytest.raises(PointOutOfDomain):
        act.act(X0, dyadic("1"))


# -- Houghton ---------------------------------------------------------------------------

def test_houghton_translation_eventual_rule():
    g = houghton_translation(3, 1, 2)
    assert g.act((1, 5)) == (1, 6)
    assert g.act((2, 5)) == (2, 4)
    assert g.act((2, 0)) == (1, 0)
    assert g.act((3, 7)) == (3, 7)
    assert sum(g.offsets) == 0


def test_houghton_canonical_threshold():
    ident = HoughtonElement.identity_of(3)
    gens = houghton_generators(3)
    g = gens["g1"]
    assert g * g.inverse() == ident
    assert (g * g.inverse()).thresholds == (0, 0, 0)


def test_houghton_action_domain():
    act = houghton_action(3)
    with pytest.raises(PointOutOfDomain):
        act.act(act.identity, (4, 0))
    with pytest.raises(PointOutOfDomain):
        act.act(act.identity, (1, -1))
