"""Vertex-labelled graphs, the free-subgroup criterion for graph-product kernels,
and the stabilisation detector for increasing graph sequences.

Labels name groups; the criterion only needs their orders, so labels are
resolved through :func:`label_order`. Free-subgroup witnesses live in a free
product of (products of) cyclic groups, computed in syllable normal form.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import NotIncreasing, NotRegularOnClass, TrivialLabel
from .groups import DINF_A, DINF_B, Dihedral

INF = math.inf

_NAMED = {"Z": INF, "Dinf": INF, "Sym3": 6, "Sym4": 24, "D4": 8, "C2xC2": 4, "trivial": 1, "1": 1}

# a subgroup as in the "at least three elements" fact, by label: moduli of a product of cyclics
_SMALL_SUBGROUP = {"Z": (0,), "Dinf": (0,), "Sym3": (3,), "Sym4": (3,), "D4": (4,), "C2xC2": (2, 2)}


def label_order(label: str) -> float:
    if label in _NAMED:
        return _NAMED[label]
    m = re.fullmatch(r"C(\d+)", label)
    if m:
        return int(m.group(1))
    raise ValueError(f"unknown group label {label!r}")


def _smallest_prime(n: int) -> int:
    p = 2
    while n % p:
        p += 1
    return p


def small_subgroup(label: str) -> tuple[int, ...]:
    """Z (modulus 0), C_p with p odd prime, C4, or C2 x C2 inside a group of order >= 3."""
    if label in _SMALL_SUBGROUP:
        return _SMALL_SUBGROUP[label]
    n = int(label_order(label))
    if n < 3:
        raise ValueError(f"{label} has fewer than three elements")
    odd = n
    while odd % 2 == 0:
        odd //= 2
    if odd > 1:
        return (_smallest_prime(odd),)
    return (4,)


def cyclic_subgroup(label: str) -> tuple[int, ...]:
    """Some nontrivial cyclic subgroup (modulus 0 means infinite cyclic)."""
    n = label_order(label)
    if n == INF:
        return (0,) if label == "Z" else (2,)
    return (_smallest_prime(int(n)),)


@dataclass(frozen=True)
class VertexGraph:
    n: int
    edges: frozenset
    labels: tuple = ()

    def __post_init__(self):
        es = set()
        for e in self.edges:
            i, j = tuple(e) if len(tuple(e)) == 2 else (None, None)
            if i is None or i == j:
                raise ValueError(f"bad edge {e!r}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {e!r} outside 0..{self.n - 1}")
            es.add(frozenset((i, j)))
        object.__setattr__(self, "edges", frozenset(es))
        labels = tuple(self.labels) or ("C2",) * self.n
        if len(labels) != self.n:
            raise ValueError("one label per vertex")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable, labels: Sequence[str] = ()) -> "VertexGraph":
        return cls(n, frozenset(frozenset(p) for p in pairs), tuple(labels))

    @classmethod
    def complete(cls, n: int, labels: Sequence[str] = ()) -> "VertexGraph":
        return cls.from_pairs(n, combinations(range(n), 2), labels)

    @classmethod
    def empty(cls, n: int, labels: Sequence[str] = ()) -> "VertexGraph":
        return cls(n, frozenset(), tuple(labels))

    def has_edge(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbours(self, v: int) -> list[int]:
        return sorted(u for e in self.edges if v in e for u in e if u != v)

    def components(self) -> list[list[int]]:
        seen: set = set()
        out = []
        for v in range(self.n):
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.neighbours(x):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def to_json(self) -> dict:
        return {"vertices": self.n, "edges": sorted(sorted(e) for e in self.edges),
                "labels": list(self.labels)}

    @classmethod
    def from_json(cls, doc: dict) -> "VertexGraph":
        return cls.from_pairs(doc["vertices"], [tuple(e) for e in doc["edges"]], doc.get("labels", ()))


def complement(g: VertexGraph) -> VertexGraph:
    pairs = [p for p in combinations(range(g.n), 2) if not g.has_edge(*p)]
    return VertexGraph.from_pairs(g.n, pairs, g.labels)


# ---------------------------------------------------------------------------
# free products of finite products of cyclic groups, syllable normal form

class FreeProduct:
    """Free product of factors, each a direct product of cyclic groups given by moduli (0 = Z).

    Elements are tuples of syllables (factor index, residues) with adjacent
    syllables in different factors and no trivial syllable.
    """

    def __init__(self, factors: Sequence[Sequence[int]]):
        self.factors = [tuple(f) for f in factors]

    def _norm(self, fi, res):
        return tuple(r % m if m else r for r, m in zip(res, self.factors[fi]))

    def gen(self, fi: int, coord: int = 0, power: int = 1) -> tuple:
        res = [0] * len(self.factors[fi])
        res[coord] = power
        res = self._norm(fi, res)
        return () if not any(res) else ((fi, res),)

    def mul(self, a: tuple, b: tuple) -> tuple:
        out = list(a)
        for fi, res in b:
            if out and out[-1][0] == fi:
                _, r0 = out.pop()
                merged = self._norm(fi, [x + y for x, y in zip(r0, res)])
                if any(merged):
                    out.append((fi, merged))
            else:
                out.append((fi, res))
        return tuple(out)

    def inverse(self, a: tuple) -> tuple:
        return tuple((fi, self._norm(fi, [-r for r in res])) for fi, res in reversed(a))

    def commutator(self, x: tuple, y: tuple) -> tuple:
        return self.mul(self.mul(self.mul(x, y), self.inverse(x)), self.inverse(y))

    def abelian_image(self, a: tuple) -> tuple:
        """Image in the direct sum of the factors."""
        tot = [[0] * len(f) for f in self.factors]
        for fi, res in a:
            tot[fi] = [x + y for x, y in zip(tot[fi], res)]
        return tuple(self._norm(fi, t) for fi, t in enumerate(tot))

    def ball_counts(self, gens: Sequence[tuple], radius: int) -> list[int]:
        """Cumulative sizes of balls in the subgroup generated by ``gens`` (word metric over gens^+-1)."""
        steps = list(gens) + [self.inverse(g) for g in gens]
        seen = {(): 0}
        frontier = [()]
        counts = [1]
        for _ in range(radius):
            nxt = []
            for x in frontier:
                for s in steps:
                    y = self.mul(x, s)
                    if y not in seen:
                        seen[y] = 1
                        nxt.append(y)
            frontier = nxt
            counts.append(len(seen))
        return counts


def free_group_ball_counts(rank: int, radius: int) -> list[int]:
    """1, then 1 + 2r((2r-1)^k - 1)/(2r-2) for radius k: sizes of balls in the free group of rank r."""
    out = []
    total = 1
    sphere = 1
    for k in range(radius + 1):
        if k == 1:
            sphere = 2 * rank
        elif k > 1:
            sphere *= 2 * rank - 1
        total = total + sphere if k else 1
        out.append(total)
    return out


# ---------------------------------------------------------------------------
# the criterion

@dataclass
class FreeSubgroupWitness:
    case: str
    vertices: tuple
    factors: list
    generators: list  # syllable normal forms
    description: str

    def to_json(self) -> dict:
        return {"case": self.case, "vertices": list(self.vertices), "factors": [list(f) for f in self.factors],
                "generators": [[[fi, list(r)] for fi, r in g] for g in self.generators],
                "description": self.description}

    def ball_counts(self, radius: int = 6) -> list[int]:
        return FreeProduct(self.factors).ball_counts(self.generators, radius)

    def in_kernel(self) -> bool:
        fp = FreeProduct(self.factors)
        return all(not any(any(r) for r in fp.abelian_image(g)) for g in self.generators)


@dataclass
class CriterionResult:
    verdict: str  # "NoFreeSubgroup" | "ContainsF2"
    case: str | None = None
    component: list | None = None
    witness: FreeSubgroupWitness | None = None

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "case": self.case, "component": self.component,
                "witness": self.witness.to_json() if self.witness else None}


def _case_a(g: VertexGraph, i: int, j: int, comp) -> CriterionResult:
    zi = small_subgroup(g.labels[i])
    zj = cyclic_subgroup(g.labels[j])
    fp = FreeProduct([zi, zj])
    b = fp.gen(1)
    if len(zi) == 2:
        x1, x2 = fp.gen(0, 0), fp.gen(0, 1)
    else:
        x1, x2 = fp.gen(0, 0), fp.gen(0, 0, 2)
    gens = [fp.commutator(x1, b), fp.commutator(x2, b)]
    w = FreeSubgroupWitness("a", (i, j), [zi, zj], gens,
                            f"[x, y], [x', y] with x != x' in Z_{i} and y in Z_{j}")
    return CriterionResult("ContainsF2", "a", comp, w)


def _case_b(g: VertexGraph, i: int, j: int, k: int, comp) -> CriterionResult:
    if g.has_edge(i, j):
        factors = [(2, 2), (2,)]
        a, b, c = (FreeProduct(factors).gen(0, 0), FreeProduct(factors).gen(0, 1), FreeProduct(factors).gen(1))
        desc = "(C2 x C2) * C2"
    else:
        factors = [(2,), (2,), (2,)]
        a, b, c = (FreeProduct(factors).gen(t) for t in range(3))
        desc = "C2 * C2 * C2"
    fp = FreeProduct(factors)
    gens = [fp.commutator(a, c), fp.commutator(b, c)]
    w = FreeSubgroupWitness("b", (i, j, k), factors, gens, f"[a, c], [b, c] in {desc}, c the middle vertex")
    return CriterionResult("ContainsF2", "b", comp, w)


def kernel_free_subgroup_criterion(g: VertexGraph) -> CriterionResult:
    """Does the kernel of the graph product onto the direct sum avoid free subgroups of rank 2?

    No free subgroup exactly when every component of the complement graph has at
    most two vertices and each two-vertex component carries two copies of C2.
    """
    for v, lab in enumerate(g.labels):
        if label_order(lab) == 1:
            raise TrivialLabel(f"vertex {v} has a trivial label")
    op = complement(g)
    comps = op.components()
    # case a first: any non-C2 vertex in a component of size >= 2
    for comp in comps:
        if len(comp) < 2:
            continue
        for i in comp:
            if label_order(g.labels[i]) != 2:
                j = op.neighbours(i)[0]
                return _case_a(g, i, j, comp)
    for comp in comps:
        if len(comp) >= 3:
            for k in comp:
                nb = op.neighbours(k)
                if len(nb) >= 2:
                    return _case_b(g, nb[0], nb[1], k, comp)
    return CriterionResult("NoFreeSubgroup")


def dinf_kernel_check(radius: int = 8) -> dict:
    """In D_inf = <a, b>, the kernel of the map onto C2 x C2 is generated by (ab)^2 and is abelian.

    Enumerates the radius ball with letter parities, collects kernel elements,
    and checks each is an even translation and that they commute pairwise.
    """
    start = Dihedral(False, 0)
    seen = {start: (0, 0)}
    frontier = [start]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            pa, pb = seen[x]
            for s, par in ((DINF_A, (1, 0)), (DINF_B, (0, 1))):
                y = x * s
                p = ((pa + par[0]) % 2, (pb + par[1]) % 2)
                if y in seen:
                    if seen[y] != p:
                        raise AssertionError("parity map is not well defined")
                    continue
                seen[y] = p
                nxt.append(y)
        frontier = nxt
    kernel = [x for x, p in seen.items() if p == (0, 0)]
    even_translations = all(not x.reflect and x.shift % 2 == 0 for x in kernel)
    abelian = all(x * y == y * x for x in kernel for y in kernel)
    return {"ball": len(seen), "kernel": len(kernel), "even_translations": even_translations,
            "abelian": abelian, "ok": even_translations and abelian}


# ---------------------------------------------------------------------------
# stabilisation of increasing graph sequences

@dataclass
class StabilizationReport:
    index: int | None
    degrees: list[list[int]]

    @property
    def status(self) -> str:
        return "Stable" if self.index is not None else "NotYet"

    @property
    def degree_sums(self) -> list[int]:
        return [sum(d) for d in self.degrees]

    def to_json(self) -> dict:
        return {"status": self.status, "index": self.index, "degrees": self.degrees,
                "degree_sums": self.degree_sums}


def detect_stabilization(seq: Sequence[VertexGraph], partition: Sequence[Sequence[int]]) -> StabilizationReport:
    """First m with seq[m] == seq[m+1], after checking the sequence is increasing and
    that every complement splits over the classes with constant degree on each class."""
    if not seq:
        return StabilizationReport(None, [])
    n = seq[0].n
    cls_of = {}
    for ci, cls in enumerate(partition):
        for v in cls:
            cls_of[v] = ci
    if sorted(cls_of) != list(range(n)):
        raise ValueError("partition must cover the vertices exactly once")
    degrees = []
    for t, g in enumerate(seq):
        if g.n != n:
            raise ValueError("all graphs must share the vertex set")
        if t and not seq[t - 1].edges <= g.edges:
            e = sorted(sorted(x) for x in seq[t - 1].edges - g.edges)[0]
            raise NotIncreasing(f"edge {e} of graph {t - 1} is missing from graph {t}")
        op = complement(g)
        row = []
        for ci, cls in enumerate(partition):
            ds = []
            for v in cls:
                nb = op.neighbours(v)
                for u in nb:
                    if cls_of[u] != ci:
                        raise NotRegularOnClass(
                            f"graph {t}: complement edge {v}-{u} joins two classes", vertex=v)
                ds.append(len(nb))
            if len(set(ds)) > 1:
                v = cls[ds.index(max(ds))]
                raise NotRegularOnClass(f"graph {t}: complement degrees {ds} on class {ci}", vertex=v)
            row.append(ds[0] if ds else 0)
        degrees.append(row)
    # equal degree on a class forces equal complement there (edges only grow)
    for t in range(len(seq) - 1):
        for ci, cls in enumerate(partition):
            if degrees[t][ci] == degrees[t + 1][ci]:
                a = {e for e in complement(seq[t]).edges if set(e) <= set(cls)}
                b = {e for e in complement(seq[t + 1]).edges if set(e) <= set(cls)}
                assert a == b, "equal degrees but different complements"
    for t in range(len(seq) - 1):
        if seq[t].edges == seq[t + 1].edges:
            return StabilizationReport(t, degrees)
    return StabilizationReport(None, degrees)
