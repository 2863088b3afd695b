"""Exhaustive machinery for finite groups given by concrete generators.

Subgroups are represented as frozensets of elements. Everything here is brute
force by design: the groups handled are small enough to enumerate.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

from .errors import NotFullyEnumerable
from .groups import Cyclic, DirectProduct, GroupElement, Perm
from .words import Word

DEFAULT_LIMIT = 100_000


def closure(gens: Iterable[GroupElement], identity: GroupElement,
            limit: int = DEFAULT_LIMIT) -> frozenset:
    """The subgroup generated by ``gens``."""
    gens = [g for g in gens if g != identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        raise NotFullyEnumerable(f"more than {limit} elements")
        frontier = nxt
    return frozenset(seen)


class FiniteGroup:
    """A finite group presented by named concrete generators.

    Elements are enumerated breadth-first so ``word_of`` returns a shortest
    word (ties broken by generator order) for every element.
    """

    def __init__(self, generators: Mapping[str, GroupElement], name: str = "",
                 identity: GroupElement | None = None, limit: int = DEFAULT_LIMIT):
        if not generators and identity is None:
            raise ValueError("need generators or an explicit identity")
        self.generators = dict(generators)
        self.name = name
        self.identity = identity if identity is not None else next(iter(generators.values())).identity()
        letters = []
        for sym, g in self.generators.items():
            letters.append((sym, 1, g))
            inv = g.inverse()
            if inv != g:
                letters.append((sym, -1, inv))
        # right Cayley BFS: word w, letter s -> element w s
        self._words: dict[GroupElement, Word] = {self.identity: Word()}
        order = [self.identity]
        queue = deque(order)
        while queue:
            x = queue.popleft()
            wx = self._words[x]
            for sym, exp, g in letters:
                y = x * g
                if y not in self._words:
                    self._words[y] = Word(wx.letters + ((sym, exp),))
                    order.append(y)
                    queue.append(y)
                    if len(order) > limit:
                        raise NotFullyEnumerable(f"{name or 'group'} has more than {limit} elements")
        self.elements: list[GroupElement] = order
        self.index = {g: i for i, g in enumerate(order)}
        self.element_set = frozenset(order)

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g):
        return g in self.element_set

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def word_of(self, g: GroupElement) -> Word:
        return self._words[g]

    def subgroup(self, gens: Iterable[GroupElement]) -> frozenset:
        return closure(gens, self.identity)

    def whole(self) -> frozenset:
        return self.element_set

    def trivial(self) -> frozenset:
        return frozenset([self.identity])

    # cosets ---------------------------------------------------------------
    def double_cosets(self, H: frozenset, K: frozenset | None = None) -> list[frozenset]:
        """H\\G/K as a list of sets, ordered by first element in enumeration order."""
        K = H if K is None else K
        seen: set = set()
        out = []
        for g in self.elements:
            if g in seen:
                continue
            dc = frozenset(h * g * k for h in H for k in K)
            seen |= dc
            out.append(dc)
        return out

    def left_cosets(self, H: frozenset) -> list[frozenset]:
        seen: set = set()
        out = []
        for g in self.elements:
            if g in seen:
                continue
            c = frozenset(g * h for h in H)
            seen |= c
            out.append(c)
        return out

    def is_subgroup(self, S: frozenset) -> bool:
        if self.identity not in S:
            return False
        return all(a * b.inverse() in S for a in S for b in S)

    def is_normal(self, N: frozenset) -> bool:
        return all(g * n * g.inverse() in N for g in self.generators.values() for n in N)

    def normal_closure(self, gens: Iterable[GroupElement]) -> frozenset:
        conj = {g * x * g.inverse() for x in gens for g in self.elements}
        return self.subgroup(conj)

    def conjugacy_classes(self) -> list[frozenset]:
        seen: set = set()
        out = []
        for x in self.elements:
            if x in seen:
                continue
            cls = frozenset(g * x * g.inverse() for g in self.elements)
            seen |= cls
            out.append(cls)
        return out

    def stabilizer(self, point, act=None) -> frozenset:
        act = act or (lambda g, x: g.act(x))
        return frozenset(g for g in self.elements if act(g, point) == point)

    # subgroup lattices ------------------------------------------------------
    def _table(self) -> list[list[int]]:
        """Multiplication table on element indices (built on first use)."""
        if getattr(self, "_mul", None) is None:
            idx = self.index
            self._mul = [[idx[x * y] for y in self.elements] for x in self.elements]
        return self._mul

    def _span(self, gens: list[int]) -> frozenset:
        mul = self._table()
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                row = mul[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def subgroups_containing(self, H: frozenset) -> list[frozenset]:
        """Every subgroup K with H <= K <= G, by adjoining one double-coset representative at a time."""
        idx = self.index
        reps = [idx[min(dc, key=idx.__getitem__)] for dc in self.double_cosets(H)]
        h_gens = [idx[g] for g in self._generators_of(H)]
        start = self._span(h_gens)
        found = {start: h_gens}
        frontier = [start]
        while frontier:
            nxt = []
            for K in frontier:
                for r in reps:
                    if r in K:
                        continue
                    gens = found[K] + [r]
                    L = self._span(gens)
                    if L not in found:
                        found[L] = gens
                        nxt.append(L)
            frontier = nxt
        els = self.elements
        out = [frozenset(els[i] for i in S) for S in found]
        return sorted(out, key=lambda S: (len(S), sorted(idx[x] for x in S)))

    def _generators_of(self, S: frozenset) -> list:
        gens: list = []
        span = frozenset([self.identity])
        for x in sorted(S, key=self.index.__getitem__):
            if x not in span:
                gens.append(x)
                span = self.subgroup(gens)
        return gens

    def all_subgroups(self) -> list[frozenset]:
        return self.subgroups_containing(self.trivial())

    def normal_subgroups(self) -> list[frozenset]:
        return [N for N in self.all_subgroups() if self.is_normal(N)]

    def generators_of(self, S: frozenset) -> list:
        """A small generating list for the subgroup S (greedy, deterministic)."""
        return self._generators_of(S)

    # quotients --------------------------------------------------------------
    def quotient(self, N: frozenset) -> tuple["FiniteGroup", dict]:
        """G/N realised as permutations of the cosets of N; returns the group and the projection."""
        cosets = self.left_cosets(N)
        where = {}
        for i, c in enumerate(cosets):
            for g in c:
                where[g] = i
        reps = [min(c, key=self.index.__getitem__) for c in cosets]

        def image(g):
            return Perm(tuple(where[g * r] for r in reps))

        gens = {s: image(g) for s, g in self.generators.items()}
        Q = FiniteGroup(gens, name=f"{self.name}/N", identity=Perm.identity_of(len(cosets)))
        proj = {g: image(g) for g in self.elements}
        return Q, proj


# ---------------------------------------------------------------------------
# a small catalogue of finite groups

def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup({}, name="Sym(1)", identity=Perm.identity_of(1))
    gens = {"a": Perm.from_cycles(n, (0, 1))}
    if n > 2:
        gens["b"] = Perm.from_cycles(n, tuple(range(n)))
    return FiniteGroup(gens, name=f"Sym({n})")


def alternating_group(n: int) -> FiniteGroup:
    gens = {f"c{i}": Perm.from_cycles(n, (0, 1, i)) for i in range(2, n)}
    return FiniteGroup(gens, name=f"Alt({n})")


def cyclic_group(m: int) -> FiniteGroup:
    return FiniteGroup({"c": Cyclic(1, m)}, name=f"C{m}", identity=Cyclic(0, m))


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon acting on its vertices 0..n-1 (order 2n)."""
    rot = Perm.from_cycles(n, tuple(range(n)))
    refl = Perm(tuple((-i) % n for i in range(n)))
    return FiniteGroup({"a": refl, "b": rot}, name=f"D{n}")


def klein_four() -> FiniteGroup:
    e = (Cyclic(0, 2), Cyclic(0, 2))
    return FiniteGroup({"u": DirectProduct((Cyclic(1, 2), Cyclic(0, 2))),
                        "v": DirectProduct((Cyclic(0, 2), Cyclic(1, 2)))},
                       name="C2xC2", identity=DirectProduct(e))


def product_group(*groups: FiniteGroup) -> FiniteGroup:
    """Direct product with generators embedded factor by factor."""
    ident = tuple(G.identity for G in groups)
    gens = {}
    for i, G in enumerate(groups):
        for s, g in G.generators.items():
            parts = list(ident)
            parts[i] = g
            gens[f"{s}{i + 1}"] = DirectProduct(tuple(parts))
    name = "x".join(G.name for G in groups)
    return FiniteGroup(gens, name=name, identity=DirectProduct(ident))


def perm_group(gens: Mapping[str, Perm], name: str = "") -> FiniteGroup:
    return FiniteGroup(gens, name=name)


def gl2_f3() -> FiniteGroup:
    """GL(2, 3) acting on the 8 nonzero vectors of F_3^2 (order 48)."""
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def perm(m):
        (a, b), (c, d) = m
        return Perm(tuple(idx[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vecs))

    return FiniteGroup({"s": perm(((1, 1), (0, 1))), "t": perm(((0, 1), (2, 0))),
                        "d": perm(((2, 0), (0, 1)))}, name="GL(2,3)")


CATALOGUE = {
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C4": lambda: cyclic_group(4),
    "C6": lambda: cyclic_group(6),
    "C2xC2": klein_four,
    "Sym3": lambda: symmetric_group(3),
    "Sym4": lambda: symmetric_group(4),
    "Alt4": lambda: alternating_group(4),
    "D4": lambda: dihedral_group(4),
    "D5": lambda: dihedral_group(5),
    "D6": lambda: dihedral_group(6),
    "Q8": lambda: FiniteGroup({"i": Perm.from_cycles(8, (0, 2, 1, 3), (4, 6, 5, 7)),
                               "j": Perm.from_cycles(8, (0, 4, 1, 5), (2, 7, 3, 6))}, name="Q8"),
    "C2xSym4": lambda: product_group(cyclic_group(2), symmetric_group(4)),
    "GL2F3": gl2_f3,
}
