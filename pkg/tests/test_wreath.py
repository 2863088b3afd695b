import pytest

from oracles import lamplighter_ball, perm_mul
from permwreath.actions import regular_action, z_regular
from permwreath.errors import MixedGroupKinds, RadiusBudgetExceeded, TruncationEscape
from permwreath.finite import symmetric_group
from permwreath.groups import DINF_A, DINF_B, Cyclic, Perm, ZInt, dinf_power_ab
from permwreath.wreath import WreathElement, WreathProduct, bilipschitz_compare, delta, transport, z_to_dinf

T = Cyclic(1, 2)


@pytest.fixture(scope="module")
def lamplighter():
    return WreathProduct(z_regular(), {"t": T}, radius=10)


def test_product_formula_example(lamplighter):
    W = lamplighter
    a = delta(0, T, ZInt(1))
    b = delta(0, T, ZInt(-1))
    assert W.multiply(a, b) == WreathElement({0: T, 1: T}, ZInt(0))


def test_identity_and_inverse(lamplighter):
    W = lamplighter
    a = WreathElement({0: T, 3: T}, ZInt(2))
    assert W.multiply(W.identity(), a) == a == W.multiply(a, W.identity())
    assert W.multiply(a, W.inverse(a)) == W.identity()


def test_support_is_exact(lamplighter):
    a = WreathElement({0: T, 1: Cyclic(0, 2)}, ZInt(0))
    assert a.support == {0}


def test_lengths(lamplighter):
    W = lamplighter
    assert W.word_length(W.identity()) == 0
    assert W.word_length(delta(0, T, ZInt(0))) == 1
    assert W.word_length(delta(2, T, ZInt(0))) == 5


def test_multiply_matches_cayley_steps(lamplighter):
    # right multiplication by (t, 1) toggles the lamp under the cursor
    W = lamplighter
    a = WreathElement({}, ZInt(3))
    assert W.multiply(a, delta(0, T, ZInt(0))) == WreathElement({3: T}, ZInt(3))


def test_ball_sizes(lamplighter):
    W = lamplighter
    assert [len(W.ball(r)) for r in range(5)] == [1, 4, 10, 22, 44]
    ball = W.ball(3)
    lengths = [n for _, n in ball]
    assert lengths == sorted(lengths)


def test_ball_sizes_match_oracle(lamplighter):
    oracle = lamplighter_ball(6, [1, -1], 0, lambda c, x: c + x, lambda c, s: c + s, 0)
    assert len(lamplighter.ball(6)) == len(oracle)


def test_ball_window_escape(lamplighter):
    with pytest.raises(TruncationEscape):
        lamplighter.ball(4, window=range(-2, 3))


def test_radius_budget(lamplighter):
    W = WreathProduct(z_regular(), {"t": T}, radius=3)
    with pytest.raises(RadiusBudgetExceeded):
        W.word_length(delta(3, T, ZInt(0)))


def test_regular_sym3_against_oracle():
    G = symmetric_group(3)
    W = WreathProduct(regular_action(G), {"t": T})
    gens = [G.generators["a"].images, G.generators["b"].images, G.generators["b"].inverse().images]
    oracle = lamplighter_ball(8, gens, (0, 1, 2), lambda c, x: perm_mul(c, x), perm_mul, (0, 1, 2))
    assert len(oracle) == 312
    for (lamps, c), d in oracle.items():
        f = {Perm(x): Cyclic(v, 2) for x, v in lamps}
        assert W.word_length(WreathElement(f, Perm(c))) == d


def test_non_abelian_fibre():
    fib = symmetric_group(3).generators
    W = WreathProduct(z_regular(), dict(fib), radius=6)
    a = WreathElement({0: fib["a"], 1: fib["b"]}, ZInt(0))
    assert W.word_length(a) == 1 + 1 + 2
    assert W.multiply(a, W.inverse(a)) == W.identity()


def test_mixed_cursor_kinds(lamplighter):
    with pytest.raises(MixedGroupKinds):
        lamplighter.multiply(WreathElement({}, ZInt(0)), WreathElement({}, DINF_A))


def test_bilipschitz_example():
    A = WreathProduct(z_regular(), {"t": ZInt(1)}, radius=6)
    B = WreathProduct(z_regular(), {"a": DINF_A, "b": DINF_B}, radius=6)
    a = WreathElement({0: ZInt(3)}, ZInt(0))
    assert A.word_length(a) == 3
    assert B.word_length(transport(a, z_to_dinf)) == 6
    rep = bilipschitz_compare([A.identity(), a], z_to_dinf, A, B)
    assert rep.identities == 1 and rep.compared == 1 and rep.ok
    assert str(rep.max_ratio) == "2"


def test_z_to_dinf():
    assert z_to_dinf(ZInt(-2)) == dinf_power_ab(-2)
