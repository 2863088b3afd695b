"""Fibre products of finite groups and the correspondence between subgroups
containing the fibre product and normal subgroups of the common quotient."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

from .errors import BudgetExceeded, DoesNotContainH, NotHomomorphism, NotNormal, NotSurjective
from .finite import FiniteGroup, product_group
from .groups import DirectProduct, GroupElement, evaluate_word

DEFAULT_BUDGET = 2500


def extend_hom(G: FiniteGroup, images: Mapping[str, GroupElement], identity: GroupElement) -> dict:
    """The map G -> target determined by generator images; raises NotHomomorphism if ill defined."""
    if set(images) != set(G.generators):
        raise NotHomomorphism(f"images given for {sorted(images)}, generators are {sorted(G.generators)}")
    phi = {g: evaluate_word(G.word_of(g), images, identity) for g in G.elements}
    for x in G.elements:
        for s, g in G.generators.items():
            if phi[x * g] != phi[x] * images[s]:
                raise NotHomomorphism(f"images of {G.word_of(x)} and {s} are inconsistent")
    return phi


@dataclass
class FibreProductSpec:
    G1: FiniteGroup
    G2: FiniteGroup
    Q: FiniteGroup
    p1_images: dict
    p2_images: dict
    p1: dict = field(init=False, repr=False)
    p2: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.p1 = extend_hom(self.G1, self.p1_images, self.Q.identity)
        self.p2 = extend_hom(self.G2, self.p2_images, self.Q.identity)
        for name, phi in (("p1", self.p1), ("p2", self.p2)):
            if self.Q.subgroup(set(phi.values())) != self.Q.element_set:
                raise NotSurjective(f"{name} does not reach all of Q")

    @property
    def size(self) -> int:
        return self.G1.order * self.G2.order


def spec_from_projection(G1: FiniteGroup, G2: FiniteGroup, Q: FiniteGroup, proj1: Mapping, proj2: Mapping) -> FibreProductSpec:
    return FibreProductSpec(G1, G2, Q, {s: proj1[g] for s, g in G1.generators.items()},
                            {s: proj2[g] for s, g in G2.generators.items()})


def find_isomorphism(A: FiniteGroup, B: FiniteGroup) -> dict | None:
    """An isomorphism A -> B as an element map, by trying generator images (small groups only)."""
    if A.order != B.order:
        return None
    syms = list(A.generators)
    for imgs in product(B.elements, repeat=len(syms)):
        try:
            phi = extend_hom(A, dict(zip(syms, imgs)), B.identity)
        except NotHomomorphism:
            continue
        if len(set(phi.values())) == B.order:
            return phi
    return None


def spec_from_kernels(G1: FiniteGroup, N1: frozenset, G2: FiniteGroup, N2: frozenset) -> FibreProductSpec | None:
    """Q = G1/N1, with G2 -> G2/N2 identified with Q when the quotients are isomorphic."""
    Q, proj1 = G1.quotient(N1)
    Q2, proj2 = G2.quotient(N2)
    iso = find_isomorphism(Q2, Q)
    if iso is None:
        return None
    return spec_from_projection(G1, G2, Q, proj1, {g: iso[q] for g, q in proj2.items()})


@dataclass
class FibreProduct:
    spec: FibreProductSpec
    P: FiniteGroup
    H: frozenset

    def pair(self, x, y) -> DirectProduct:
        return DirectProduct((x, y))


def fibre_product(spec: FibreProductSpec, budget: int = DEFAULT_BUDGET) -> FibreProduct:
    if spec.size > budget:
        raise BudgetExceeded(f"|G1 x G2| = {spec.size} exceeds budget {budget}")
    P = product_group(spec.G1, spec.G2)
    H = frozenset(DirectProduct((x, y)) for x in spec.G1.elements for y in spec.G2.elements
                  if spec.p1[x] == spec.p2[y])
    assert len(H) * spec.Q.order == spec.size
    return FibreProduct(spec, P, H)


def lattice_map_u(fp: FibreProduct, K: frozenset) -> frozenset:
    """u(K) = p1(K cap (G1 x {1}))."""
    if not fp.H <= K:
        raise DoesNotContainH("K does not contain the fibre product")
    e2 = fp.spec.G2.identity
    N = frozenset(fp.spec.p1[k.parts[0]] for k in K if k.parts[1] == e2)
    assert fp.spec.Q.is_normal(N), "u(K) is not normal in Q"
    return N


def lattice_map_v(fp: FibreProduct, N: frozenset) -> frozenset:
    """v(N) = {(x, y) : p1(x) N = p2(y) N}."""
    Q = fp.spec.Q
    if not Q.is_subgroup(N) or not Q.is_normal(N):
        raise NotNormal("N is not a normal subgroup of Q")
    p1, p2 = fp.spec.p1, fp.spec.p2
    return frozenset(DirectProduct((x, y)) for x in fp.spec.G1.elements for y in fp.spec.G2.elements
                     if p1[x].inverse() * p2[y] in N)


@dataclass
class LatticeReport:
    intermediate: int
    normal: int
    u_after_v: bool
    v_after_u: bool
    order_preserving: bool
    sizes_ok: bool

    @property
    def ok(self) -> bool:
        return (self.intermediate == self.normal and self.u_after_v and self.v_after_u
                and self.order_preserving and self.sizes_ok)

    def to_json(self) -> dict:
        return {"intermediate_subgroups": self.intermediate, "normal_subgroups": self.normal,
                "u_after_v": self.u_after_v, "v_after_u": self.v_after_u,
                "order_preserving": self.order_preserving, "sizes_ok": self.sizes_ok, "ok": self.ok}


def verify_lattice_bijection(spec: FibreProductSpec, budget: int = DEFAULT_BUDGET) -> LatticeReport:
    fp = fibre_product(spec, budget)
    Ks = fp.P.subgroups_containing(fp.H)
    Ns = spec.Q.normal_subgroups()
    us = [lattice_map_u(fp, K) for K in Ks]
    vs = [lattice_map_v(fp, N) for N in Ns]
    u_after_v = all(lattice_map_u(fp, V) == N for V, N in zip(vs, Ns))
    v_after_u = all(lattice_map_v(fp, U) == K for U, K in zip(us, Ks))
    order = all((K1 <= K2) == (U1 <= U2) for (K1, U1), (K2, U2) in product(zip(Ks, us), repeat=2))
    sizes = all(len(V) * (spec.Q.order // len(N)) == spec.size for V, N in zip(vs, Ns))
    return LatticeReport(len(Ks), len(Ns), u_after_v, v_after_u, order, sizes)


@dataclass
class BiindexReport:
    double_cosets: int
    conjugacy_classes: int
    meets_first_factor: bool
    conjugacy_matches: bool

    @property
    def ok(self) -> bool:
        return (self.double_cosets == self.conjugacy_classes and self.meets_first_factor
                and self.conjugacy_matches)

    def to_json(self) -> dict:
        return {"double_cosets": self.double_cosets, "conjugacy_classes": self.conjugacy_classes,
                "meets_first_factor": self.meets_first_factor,
                "conjugacy_matches": self.conjugacy_matches, "ok": self.ok}


def biindex_vs_conjclasses(spec: FibreProductSpec, budget: int = DEFAULT_BUDGET) -> BiindexReport:
    """|H \\ (G1 x G2) / H| against the number of conjugacy classes of Q."""
    fp = fibre_product(spec, budget)
    dcs = fp.P.double_cosets(fp.H)
    classes = spec.Q.conjugacy_classes()
    e2 = spec.G2.identity
    meets = all(any(d.parts[1] == e2 for d in dc) for dc in dcs)
    where = {g: i for i, dc in enumerate(dcs) for g in dc}
    cls_of = {q: i for i, c in enumerate(classes) for q in c}
    G1 = spec.G1.elements
    match = all((where[DirectProduct((x, e2))] == where[DirectProduct((y, e2))])
                == (cls_of[spec.p1[x]] == cls_of[spec.p1[y]]) for x in G1 for y in G1)
    return BiindexReport(len(dcs), len(classes), meets, match)
