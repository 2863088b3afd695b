"""Orbits on X and X^2, double cosets, intermediate subgroups and G-invariant edge sets.

For infinite X everything is computed inside a finite window. Orbit classes
are built from generator moves that stay inside the window, optionally merged
through explicit transporting elements. Without transporters the count only
says "consistent with k orbits at this window". With transporters and an
invariant classifier taking k values, the window's pairs fall into exactly k
orbits: the transporters are genuine group elements, so classes can only merge
within a label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .actions import GroupAction
from .errors import ClassifierViolation, ConditionViolated, NotFullyEnumerable, NotInvariant
from .finite import FiniteGroup


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class InvariantClassifier:
    """A labelling of pairs that should be constant on G-orbits."""

    fn: Callable[[Hashable, Hashable], Hashable]
    labels: frozenset | None = None
    name: str = "classifier"

    def __call__(self, a, b):
        lab = self.fn(a, b)
        if self.labels is not None and lab not in self.labels:
            raise ValueError(f"classifier returned undeclared label {lab!r}")
        return lab


def sign_classifier() -> InvariantClassifier:
    """sign(b - a): the three pair orbits of an order-preserving action that is transitive on a < b."""
    return InvariantClassifier(lambda a, b: (b > a) - (b < a), frozenset({-1, 0, 1}), "sign(b-a)")


def equality_classifier() -> InvariantClassifier:
    return InvariantClassifier(lambda a, b: a == b, frozenset({True, False}), "a == b")


@dataclass
class OrbitReport:
    classes: list[list]
    incomplete: list[bool]
    window_size: int
    labels: list | None = None

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def flags(self) -> list[str]:
        out = [f"class {i} touches the window boundary" for i, b in enumerate(self.incomplete) if b]
        if self.labels is not None and len(set(map(repr, self.labels))) != self.count:
            out.append("classes and classifier labels differ in number")
        return out

    def to_json(self) -> dict:
        doc = {"classes": self.count, "sizes": [len(c) for c in self.classes],
               "window": self.window_size, "flags": self.flags}
        if self.labels is not None:
            doc["labels"] = [repr(l) for l in self.labels]
        return doc


def _classes(nodes: Sequence, moves, transporter, uf: _UnionFind | None = None):
    """Union-find over ``nodes`` using generator moves, then transporter merges."""
    node_set = set(nodes)
    uf = uf or _UnionFind()
    touches = set()
    for p in nodes:
        uf.find(p)
        for q in moves(p):
            if q in node_set:
                uf.union(p, q)
            else:
                touches.add(p)
    if transporter is not None:
        roots = {}
        for p in nodes:
            roots.setdefault(uf.find(p), p)
        for p in roots.values():
            q = transporter(p)
            if q is not None:
                uf.union(p, q)
    groups: dict = {}
    for p in nodes:
        groups.setdefault(uf.find(p), []).append(p)
    classes = list(groups.values())
    incomplete = [any(p in touches for p in c) for c in classes]
    if transporter is not None:
        # a class joined to an anchor by explicit group elements is certified
        incomplete = [False] * len(classes)
    return classes, incomplete


def orbits_on_set(action: GroupAction, window: Iterable,
                  transporter: Callable | None = None) -> OrbitReport:
    """Orbits of G on a finite window of points.

    ``transporter(x)`` may return a group element ``g``; x is then merged with
    ``g.x`` (checked by evaluating the action).
    """
    pts = list(window)
    gens = [g for _, g in action.symmetric_generators()]

    def moves(x):
        return [action.act(g, x) for g in gens]

    def transport(x):
        g = transporter(x)
        return None if g is None else ("anchor", action.act(g, x))

    classes, incomplete = _classes(pts, moves, transport if transporter else None)
    return OrbitReport(classes, incomplete, len(pts))


def orbits_on_pairs(action: GroupAction, window: Iterable,
                    classifier: InvariantClassifier | None = None,
                    transporter: Callable | None = None) -> OrbitReport:
    """Orbits of the diagonal action on window x window.

    With a classifier, every generator move (including moves that leave the
    window) and every transporter element is checked to preserve the label;
    a failure raises :class:`ClassifierViolation` naming the pair and element.
    """
    pts = list(window)
    pairs = [(a, b) for a in pts for b in pts]
    gens = action.symmetric_generators()

    def moves(p):
        out = []
        for label, g in gens:
            q = (action.act(g, p[0]), action.act(g, p[1]))
            if classifier is not None and classifier(*p) != classifier(*q):
                raise ClassifierViolation(
                    f"{classifier.name} changes from {classifier(*p)!r} to {classifier(*q)!r} "
                    f"under {label}", pair=p, generator=label)
            out.append(q)
        return out

    def transport(p):
        g = transporter(p)
        if g is None:
            return None
        q = (action.act(g, p[0]), action.act(g, p[1]))
        if classifier is not None and classifier(*p) != classifier(*q):
            raise ClassifierViolation(f"transporter for {p} changes the label", pair=p, generator=str(g))
        return ("anchor", q)

    classes, incomplete = _classes(pairs, moves, transport if transporter else None)
    labels = None
    if classifier is not None:
        labels = []
        for c in classes:
            labs = {classifier(*p) for p in c}
            if len(labs) != 1:
                raise ClassifierViolation(f"class mixes labels {labs}", pair=c[0])
            labels.append(labs.pop())
    return OrbitReport(classes, incomplete, len(pairs), labels)


# ---------------------------------------------------------------------------
# double cosets in finite groups

@dataclass
class DoubleCosetTable:
    left: frozenset
    right: frozenset
    representatives: list
    cosets: list[frozenset]
    membership: dict = field(repr=False, default_factory=dict)

    def __len__(self):
        return len(self.representatives)

    def index_of(self, g) -> int:
        return self.membership[g]


def _as_subgroup(G: FiniteGroup, H) -> frozenset:
    if isinstance(H, frozenset):
        return H
    return G.subgroup(list(H))


def double_cosets_finite(G: FiniteGroup, H1, H2=None) -> DoubleCosetTable:
    """H1\\G/H2 for a finite G; subgroups given as element sets or generator lists."""
    if not isinstance(G, FiniteGroup):
        raise NotFullyEnumerable("double_cosets_finite needs an enumerated finite group")
    A = _as_subgroup(G, H1)
    B = A if H2 is None else _as_subgroup(G, H2)
    cosets = G.double_cosets(A, B)
    reps = [min(c, key=G.index.__getitem__) for c in cosets]
    membership = {g: i for i, c in enumerate(cosets) for g in c}
    return DoubleCosetTable(A, B, reps, cosets, membership)


def biindex(G: FiniteGroup, H) -> int:
    return len(double_cosets_finite(G, H))


@dataclass
class AlmostMaximalReport:
    count: int
    biindex: int
    subgroups: list[frozenset]

    @property
    def bound_holds(self) -> bool:
        return self.count <= 2 ** self.biindex


def almost_maximal_check(G: FiniteGroup, H) -> AlmostMaximalReport:
    """Count the subgroups between H and G; the count never exceeds 2**biindex."""
    if not isinstance(G, FiniteGroup):
        raise NotFullyEnumerable("almost_maximal_check needs an enumerated finite group")
    A = _as_subgroup(G, H)
    subs = G.subgroups_containing(A)
    m = biindex(G, A)
    report = AlmostMaximalReport(len(subs), m, subs)
    assert report.bound_holds, "more intermediate subgroups than unions of double cosets"
    return report


# ---------------------------------------------------------------------------
# G-invariant edge sets <-> families B_ij

@dataclass
class OrbitData:
    """Base points x_i, their stabilisers H_i, and a transversal g with g.x_i = x."""

    base_points: tuple
    stabilizers: list[frozenset]
    transversal: dict  # point -> (orbit index, element g with g.x_i = point)


def orbit_data(action: GroupAction) -> OrbitData:
    G = action.group
    if G is None or not action.domain.finite:
        raise NotFullyEnumerable("edge/coset correspondence needs a finite action")
    transversal = {}
    stabs = []
    for i, x in enumerate(action.base_points):
        stabs.append(frozenset(g for g in G.elements if action.act(g, x) == x))
        for g in G.elements:
            transversal.setdefault(action.act(g, x), (i, g))
    missing = [x for x in action.domain.points if x not in transversal]
    if missing:
        raise ValueError(f"base points miss the orbits of {missing}")
    return OrbitData(tuple(action.base_points), stabs, transversal)


def check_coset_family(action: GroupAction, V: Mapping[tuple[int, int], frozenset],
                       data: OrbitData | None = None) -> None:
    """Raise :class:`ConditionViolated` unless V^-1_ij = V_ji, H_i V_ij = V_ij and H_i meets no V_ii."""
    data = data or orbit_data(action)
    k = len(data.base_points)
    fam = {(i, j): frozenset(V.get((i, j), ())) for i in range(k) for j in range(k)}
    for (i, j), B in fam.items():
        inv = frozenset(g.inverse() for g in B)
        if inv != fam[(j, i)]:
            witness = next(iter(inv ^ fam[(j, i)]))
            raise ConditionViolated("B_ij^-1 = B_ji", ((i, j), witness))
        Hi = data.stabilizers[i]
        for h in Hi:
            for g in B:
                if h * g not in B:
                    raise ConditionViolated("H_i B_ij = B_ij", ((i, j), h, g))
        if i == j:
            bad = Hi & B
            if bad:
                raise ConditionViolated("H_i cap B_ii = empty", (i, next(iter(bad))))


@dataclass
class EdgePredicate:
    """The G-invariant edge set defined by (g x_i, g' x_j) in E iff g^-1 g' in V_ij."""

    family: dict
    data: OrbitData

    def __call__(self, x, y) -> bool:
        i, g = self.data.transversal[x]
        j, h = self.data.transversal[y]
        return g.inverse() * h in self.family.get((i, j), frozenset())

    def edges(self) -> frozenset:
        pts = list(self.data.transversal)
        return frozenset((x, y) for x in pts for y in pts if self(x, y))


def edges_from_cosets(action: GroupAction, V: Mapping[tuple[int, int], Iterable]) -> EdgePredicate:
    data = orbit_data(action)
    fam = {key: frozenset(val) for key, val in V.items()}
    check_coset_family(action, fam, data)
    return EdgePredicate(fam, data)


def expand_double_cosets(G: FiniteGroup, Hi: frozenset, Hj: frozenset, reps: Iterable) -> frozenset:
    """Union of the double cosets H_i g H_j over the given representatives."""
    return frozenset(h * g * k for g in reps for h in Hi for k in Hj)


def cosets_from_edges(action: GroupAction, E: Iterable[tuple]) -> dict[tuple[int, int], frozenset]:
    """B_ij = {g : (x_i, g x_j) in E}, after checking E is a G-invariant edge set."""
    data = orbit_data(action)
    G = action.group
    E = frozenset(E)
    for x, y in E:
        if x == y:
            raise NotInvariant("edge set meets the diagonal", witness=(x, y))
        if (y, x) not in E:
            raise NotInvariant("edge set is not symmetric", witness=(x, y))
        for s, g in action.generators.items():
            e2 = (action.act(g, x), action.act(g, y))
            if e2 not in E:
                raise NotInvariant(f"generator {s} moves edge {(x, y)} off E", witness=(s, (x, y)))
    k = len(data.base_points)
    fam = {}
    for i, j in product(range(k), repeat=2):
        xi, xj = data.base_points[i], data.base_points[j]
        fam[(i, j)] = frozenset(g for g in G.elements if (xi, action.act(g, xj)) in E)
    return fam


def invariant_edge_sets(action: GroupAction) -> list[frozenset]:
    """Every G-invariant edge set of a finite action (unions of symmetrised orbitals)."""
    G = action.group
    pts = action.domain.points
    seen: set = set()
    blocks = []
    for x in pts:
        for y in pts:
            if x == y or (x, y) in seen:
                continue
            orb = set()
            for g in G.elements:
                a, b = action.act(g, x), action.act(g, y)
                orb.add((a, b))
                orb.add((b, a))
            seen |= orb
            blocks.append(frozenset(orb))
    out = []
    for mask in range(1 << len(blocks)):
        out.append(frozenset().union(*[b for i, b in enumerate(blocks) if mask >> i & 1]))
    return out


# ---------------------------------------------------------------------------
# hereditary count invariants on finite groups

def dicho_check(G: FiniteGroup, H1: frozenset, H2: frozenset) -> dict:
    """H1 <= H2: H2 is the union of the H1-double cosets of its elements, and biindices drop."""
    dcs = G.double_cosets(H1)
    inside = [c for c in dcs if c & H2]
    union_ok = frozenset().union(*inside) == H2 and all(c <= H2 for c in inside)
    b1, b2 = len(dcs), len(G.double_cosets(H2))
    b12 = len({frozenset(h * g * k for h in H1 for k in H1) for g in H2})
    return {"union_ok": union_ok, "biindex_H1": b1, "biindex_H2": b2, "biindex_H1_in_H2": b12,
            "ok": union_ok and b2 <= b1 and b12 <= b1}


def fibas_check(G: FiniteGroup, H1: frozenset, H2: frozenset) -> dict:
    """|H1\\G/H1| <= [H2:H1]^2 |H2\\G/H2|."""
    b1 = len(G.double_cosets(H1))
    b2 = len(G.double_cosets(H2))
    idx = len(H2) // len(H1)
    return {"biindex_H1": b1, "bound": idx * idx * b2, "ok": b1 <= idx * idx * b2}


def quotient_check(G: FiniteGroup, H: frozenset, N: frozenset) -> dict:
    """|(HN/N)\\(G/N)/(HN/N)| <= |H\\G/H|, computed in an explicit model of G/N."""
    Q, proj = G.quotient(N)
    HN = frozenset(proj[h] for h in H)
    bq = len(Q.double_cosets(HN))
    b = len(G.double_cosets(H))
    return {"biindex": b, "biindex_quotient": bq, "ok": bq <= b}


def caracfini_check(G: FiniteGroup, N: frozenset) -> dict:
    """Subgroups between N and G are as many as the subgroups of G/N."""
    Q, _ = G.quotient(N)
    above = len(G.subgroups_containing(N))
    inq = len(Q.all_subgroups())
    return {"between": above, "quotient_subgroups": inq, "ok": above == inq}
