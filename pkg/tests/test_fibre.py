import pytest

from oracles import double_coset_count
from permwreath.errors import BudgetExceeded, DoesNotContainH, NotHomomorphism, NotNormal, NotSurjective
from permwreath.fibre import (FibreProductSpec, biindex_vs_conjclasses, extend_hom, fibre_product,
                              find_isomorphism, lattice_map_u, lattice_map_v, spec_from_kernels,
                              verify_lattice_bijection)
from permwreath.finite import CATALOGUE, alternating_group, cyclic_group, klein_four, symmetric_group
from permwreath.groups import Perm


@pytest.fixture(scope="module")
def s3():
    return symmetric_group(3)


def diagonal(G):
    return FibreProductSpec(G, G, G, dict(G.generators), dict(G.generators))


def test_sym3_diagonal(s3):
    fp = fibre_product(diagonal(s3))
    assert len(fp.H) == 6
    assert all(x.parts[0] == x.parts[1] for x in fp.H)


def test_trivial_quotient(s3):
    spec = spec_from_kernels(s3, s3.whole(), s3, s3.whole())
    assert spec.Q.order == 1
    fp = fibre_product(spec)
    assert len(fp.H) == 36
    assert verify_lattice_bijection(spec).intermediate == 1


def test_sign_quotient(s3):
    A3 = alternating_group(3)
    N = frozenset(g for g in s3.elements if g.images in {h.images for h in A3.elements})
    spec = spec_from_kernels(s3, N, s3, N)
    assert spec.Q.order == 2
    assert len(fibre_product(spec).H) == 18


def test_u_and_v_extremes(s3):
    spec = diagonal(s3)
    fp = fibre_product(spec)
    Q = spec.Q
    assert lattice_map_u(fp, fp.H) == Q.trivial()
    assert lattice_map_u(fp, fp.P.whole()) == Q.whole()
    assert lattice_map_v(fp, Q.trivial()) == fp.H
    A3 = Q.subgroup([Perm.from_cycles(3, (0, 1, 2))])
    V = lattice_map_v(fp, A3)
    assert fp.P.order // len(V) == 2


def test_klein_five_to_five():
    V = klein_four()
    rep = verify_lattice_bijection(diagonal(V))
    assert rep.intermediate == rep.normal == 5 and rep.ok


@pytest.mark.parametrize("name", ["C2", "C4", "C2xC2", "Sym3", "D4"])
def test_diagonal_lattice_and_biindex(name):
    G = CATALOGUE[name]()
    spec = diagonal(G)
    assert verify_lattice_bijection(spec).ok
    b = biindex_vs_conjclasses(spec)
    assert b.ok
    fp = fibre_product(spec)
    assert b.double_cosets == _oracle_dc(fp)


def _oracle_dc(fp):
    # each element becomes its left-regular permutation, as an image tuple
    elems = list(fp.P.elements)
    idx = {g: i for i, g in enumerate(elems)}

    def enc(x):
        return tuple(idx[x * g] for g in elems)
    return double_coset_count({enc(x) for x in elems}, {enc(x) for x in fp.H})


def test_errors(s3):
    C2 = cyclic_group(2)
    t = C2.generators[next(iter(C2.generators))]
    with pytest.raises(NotHomomorphism):
        extend_hom(s3, {s: t for s in s3.generators} | {"x": t}, C2.identity)
    # the 3-cycle b cannot go to an element of order 2
    bad = {s: t for s in s3.generators}
    with pytest.raises(NotHomomorphism):
        FibreProductSpec(s3, s3, C2, bad, bad)


def test_not_surjective(s3):
    trivial_imgs = {s: s3.identity for s in s3.generators}
    with pytest.raises(NotSurjective):
        FibreProductSpec(s3, s3, s3, trivial_imgs, dict(s3.generators))


def test_not_normal_and_not_containing(s3):
    fp = fibre_product(diagonal(s3))
    with pytest.raises(NotNormal):
        lattice_map_v(fp, s3.subgroup([Perm.from_cycles(3, (0, 1))]))
    with pytest.raises(DoesNotContainH):
        lattice_map_u(fp, fp.P.trivial())


def test_budget(s3):
    with pytest.raises(BudgetExceeded):
        fibre_product(diagonal(s3), budget=10)


def test_isomorphism_search():
    assert find_isomorphism(cyclic_group(4), klein_four()) is None
    assert find_isomorphism(klein_four(), CATALOGUE["C2xC2"]()) is not None


def test_v_of_whole_quotient(s3):
    fp = fibre_product(diagonal(s3))
    assert lattice_map_v(fp, s3.whole()) == fp.P.whole()


def test_c2_counts():
    C2 = cyclic_group(2)
    spec = diagonal(C2)
    assert verify_lattice_bijection(spec).intermediate == 2
    b = biindex_vs_conjclasses(spec)
    assert b.double_cosets == b.conjugacy_classes == 2
