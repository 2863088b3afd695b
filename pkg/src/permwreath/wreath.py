"""Elements, word length and balls of permutational wreath products W wr_X G.

An element is a pair (f, c): a finitely supported function f from X to W and
a cursor c in G. The product is

    (f1, c1)(f2, c2) = (f1 * (c1 . f2), c1 c2),   (c . f)(x) = f(c^-1 x),

written multiplicatively because W need not be abelian. The standard
generators are (t, 1) = ({x0: t}, 1) for t in T and (1, s) for s in S.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping

from .actions import GroupAction
from .errors import MixedGroupKinds, RadiusBudgetExceeded, TruncationEscape
from .geodesic import SchreierFragment, cover_distances, explore
from .groups import DINF_A, DINF_B, Dihedral, GroupElement, ZInt, dinf_power_ab


def _sorted_items(items: Iterable[tuple[Hashable, GroupElement]]) -> tuple:
    items = list(items)
    try:
        return tuple(sorted(items, key=lambda kv: kv[0]))
    except TypeError:
        return tuple(sorted(items, key=lambda kv: repr(kv[0])))


@dataclass(frozen=True)
class WreathElement:
    """(f, c) with f stored as sorted (point, value) pairs; identity values never stored."""

    f: tuple
    c: GroupElement

    def __post_init__(self):
        if isinstance(self.f, Mapping):
            items = self.f.items()
        else:
            items = self.f
        object.__setattr__(self, "f", _sorted_items((x, v) for x, v in items if not v.is_identity()))

    @property
    def support(self) -> frozenset:
        return frozenset(x for x, _ in self.f)

    def value(self, x, identity):
        return dict(self.f).get(x, identity)

    def to_json(self, length: int | None = None) -> dict:
        from .serialize import jsonable
        out = {"f": [[jsonable(x), jsonable(v)] for x, v in self.f], "c": jsonable(self.c)}
        if length is not None:
            out["len"] = length
        return out

    def __str__(self):
        body = ", ".join(f"{x}:{v}" for x, v in self.f)
        return f"({{{body}}}, {self.c})"


@dataclass(frozen=True)
class BoundElement(GroupElement):
    """A wreath element tied to its ambient product, so the generic group helpers apply."""

    kind = "wreath"
    value: WreathElement
    product: "WreathProduct" = field(compare=False, hash=False, repr=False)

    def ambient(self):
        return id(self.product)

    def identity(self) -> "BoundElement":
        return BoundElement(self.product.identity(), self.product)

    def _compose(self, other: "BoundElement") -> "BoundElement":
        return BoundElement(self.product.multiply(self.value, other.value), self.product)

    def inverse(self) -> "BoundElement":
        return BoundElement(self.product.inverse(self.value), self.product)

    def __str__(self):
        return str(self.value)

    def to_json(self):
        return self.value.to_json()


def delta(x, w: GroupElement, cursor: GroupElement) -> WreathElement:
    """The function supported on the single point x with value w, paired with ``cursor``."""
    return WreathElement(((x, w),), cursor)


@dataclass
class FiberMetric:
    """Word length in W over the symmetric generating set T.

    Closed forms are used for Z over {+-1} and D_infinity over {a, b}; other
    fibres are measured by a breadth-first search that grows on demand.
    """

    generators: dict[str, GroupElement]
    limit: int = 200_000
    _dist: dict = field(default_factory=dict, repr=False)
    _frontier: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        gens = set(self.generators.values())
        gens |= {g.inverse() for g in gens}
        self._closed = None
        if gens == {ZInt(1), ZInt(-1)}:
            self._closed = "int"
        elif gens == {DINF_A, DINF_B}:
            self._closed = "dinf"
        self._steps = sorted(gens, key=repr)
        ident = next(iter(self.generators.values())).identity()
        self._dist = {ident: 0}
        self._frontier = [ident]
        self._radius = 0

    def __call__(self, w: GroupElement) -> int:
        if self._closed == "int":
            return abs(w.value)
        if self._closed == "dinf":
            return w.word_length()
        while w not in self._dist:
            if not self._frontier:
                raise ValueError(f"{w} is not in the group generated by T")
            self._grow()
        return self._dist[w]

    def _grow(self):
        self._radius += 1
        nxt = []
        for x in self._frontier:
            for s in self._steps:
                y = x * s
                if y not in self._dist:
                    self._dist[y] = self._radius
                    nxt.append(y)
        self._frontier = nxt
        if len(self._dist) > self.limit:
            raise RadiusBudgetExceeded(f"fiber ball exceeds {self.limit} elements")


class WreathProduct:
    """W wr_X G for a transitive action with base point x0.

    ``radius`` bounds the Cayley ball of G explored for covering walks; for a
    finite G the whole group is explored whatever the value.
    """

    def __init__(self, action: GroupAction, fiber_generators: Mapping[str, GroupElement],
                 radius: int = 12, base_point=None, window=None, name: str = ""):
        self.action = action
        self.fiber_generators = dict(fiber_generators)
        self.fiber_identity = next(iter(self.fiber_generators.values())).identity()
        self.base_point = action.base_point if base_point is None else base_point
        self.radius = radius
        self.window = window
        self.name = name or f"W wr {action.name}"
        self.fiber_length = FiberMetric(self.fiber_generators)
        self._fragment: SchreierFragment | None = None

    # group law ---------------------------------------------------------------
    def identity(self) -> WreathElement:
        return WreathElement((), self.action.identity)

    def multiply(self, a: WreathElement, b: WreathElement) -> WreathElement:
        if type(a.c) is not type(b.c):
            raise MixedGroupKinds("cursors from different groups")
        f = dict(a.f)
        for x, v in b.f:
            y = self.action.act(a.c, x)
            f[y] = f[y] * v if y in f else v
        return WreathElement(f, a.c * b.c)

    def inverse(self, a: WreathElement) -> WreathElement:
        cinv = a.c.inverse()
        return WreathElement({self.action.act(cinv, x): v.inverse() for x, v in a.f}, cinv)

    def element(self, f: Mapping | Iterable, c: GroupElement) -> WreathElement:
        return WreathElement(f, c)

    def bind(self, a: WreathElement) -> BoundElement:
        return BoundElement(a, self)

    # generators ----------------------------------------------------------------
    def generators(self) -> list[tuple[str, WreathElement]]:
        """Symmetric standard generating set: (t, 1) for t in T and (1, s) for s in S."""
        out = []
        ident = self.action.identity
        for s, t in self.fiber_generators.items():
            out.append((s, delta(self.base_point, t, ident)))
            tinv = t.inverse()
            if tinv != t:
                out.append((s + "^-1", delta(self.base_point, tinv, ident)))
        for s, g in self.action.symmetric_generators():
            out.append((s, WreathElement((), g)))
        return out

    # word length ---------------------------------------------------------------
    def fragment(self) -> SchreierFragment:
        if self._fragment is None:
            self._fragment = explore(self.action, self.radius, base_point=self.base_point)
        return self._fragment

    def travel_cost(self, support: Iterable, cursor: GroupElement, budget: int | None = None) -> int:
        """K(support, cursor): least length of a covering walk from 1 to the cursor."""
        frag = self.fragment()
        ci = frag.index.get(cursor)
        if ci is None:
            raise RadiusBudgetExceeded(f"cursor {cursor} outside the radius-{frag.radius} ball of G")
        dist = cover_distances(support, frag, budget)
        if ci not in dist:
            raise RadiusBudgetExceeded(
                f"covering walk for {len(set(support))} points not certified within radius {frag.radius}")
        return dist[ci]

    def word_length(self, a: WreathElement, budget: int | None = None) -> int:
        """|(f, c)| = K(supp f, c) + sum of the fibre lengths of the values of f."""
        return self.travel_cost(a.support, a.c, budget) + sum(self.fiber_length(v) for _, v in a.f)

    # balls -----------------------------------------------------------------------
    def ball(self, radius: int, window=None) -> list[tuple[WreathElement, int]]:
        """All elements of length <= radius with their lengths, by breadth-first search.

        Order is deterministic: by length, then discovery order. If ``window``
        is given, any support point or cursor image of x0 leaving it raises
        :class:`TruncationEscape`.
        """
        if radius < 0:
            raise ValueError("radius must be non-negative")
        window = self.window if window is None else window
        gens = [g for _, g in self.generators()]
        start = self.identity()
        dist = {start: 0}
        order = [start]
        frontier = [start]
        for d in range(1, radius + 1):
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.multiply(a, g)
                    if b not in dist:
                        if window is not None:
                            self._check_window(b, window)
                        dist[b] = d
                        order.append(b)
                        nxt.append(b)
            frontier = nxt
        return [(a, dist[a]) for a in order]

    def _check_window(self, a: WreathElement, window):
        for x in a.support:
            if x not in window:
                raise TruncationEscape(f"support point {x!r} leaves the window")
        p = self.action.act(a.c, self.base_point)
        if p not in window:
            raise TruncationEscape(f"cursor position {p!r} leaves the window")


def wr_multiply(W: WreathProduct, a: WreathElement, b: WreathElement) -> WreathElement:
    return W.multiply(a, b)


def wr_word_length(W: WreathProduct, a: WreathElement) -> int:
    return W.word_length(a)


def wr_ball(W: WreathProduct, radius: int, window=None) -> list[tuple[WreathElement, int]]:
    return W.ball(radius, window)


# bi-Lipschitz comparison -----------------------------------------------------

@dataclass
class DistortionReport:
    compared: int
    identities: int
    max_ratio: Fraction | None
    min_ratio: Fraction | None
    constant: Fraction
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"compared": self.compared, "identities": self.identities,
                "max_ratio": str(self.max_ratio) if self.max_ratio is not None else None,
                "min_ratio": str(self.min_ratio) if self.min_ratio is not None else None,
                "constant": str(self.constant), "violations": len(self.violations), "ok": self.ok}


def transport(a: WreathElement, fiber_map: Callable[[GroupElement], GroupElement]) -> WreathElement:
    """(f, c) -> (fiber_map o f, c)."""
    return WreathElement(tuple((x, fiber_map(v)) for x, v in a.f), a.c)


def bilipschitz_compare(elements: Iterable[WreathElement], fiber_map: Callable, A: WreathProduct,
                        B: WreathProduct, constant=2) -> DistortionReport:
    """Compare |a| in A with |fiber_map . a| in B over ``elements``.

    Identity elements (length 0 on both sides) are counted separately; a zero
    length on one side only is a violation.
    """
    L = Fraction(constant)
    lo = hi = None
    compared = identities = 0
    violations = []
    for a in elements:
        b = transport(a, fiber_map)
        la, lb = A.word_length(a), B.word_length(b)
        if la == 0 and lb == 0:
            identities += 1
            continue
        if la == 0 or lb == 0:
            violations.append((a, la, lb))
            continue
        r = Fraction(lb, la)
        compared += 1
        lo = r if lo is None else min(lo, r)
        hi = r if hi is None else max(hi, r)
        if not (1 / L <= r <= L):
            violations.append((a, la, lb))
    return DistortionReport(compared, identities, hi, lo, L, violations)


def z_to_dinf(w: ZInt) -> Dihedral:
    """n -> (ab)^n."""
    return dinf_power_ab(w.value)
