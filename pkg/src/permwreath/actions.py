"""Group actions on point domains, with named generators and base points."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable

from .dyadic import ONE, ZERO, Dyadic, dyadics_in_unit_interval
from .errors import PointOutOfDomain
from .finite import FiniteGroup
from .groups import DINF_A, DINF_B, GroupElement, ZInt
from .houghton import HoughtonElement, houghton_generators
from .thompson import X0, X1


@dataclass(frozen=True)
class Domain:
    """A point domain: membership test plus, when finite, the full point list."""

    name: str
    contains: Callable[[Hashable], bool]
    points: tuple | None = None

    def __contains__(self, x):
        try:
            return bool(self.contains(x))
        except TypeError:
            return False

    @property
    def finite(self) -> bool:
        return self.points is not None


@dataclass
class GroupAction:
    name: str
    generators: dict[str, GroupElement]
    domain: Domain
    base_points: tuple
    act_fn: Callable[[GroupElement, Hashable], Hashable] | None = None
    group: FiniteGroup | None = None
    identity: GroupElement | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.identity is None:
            self.identity = next(iter(self.generators.values())).identity()

    def act(self, g: GroupElement, x):
        if x not in self.domain:
            raise PointOutOfDomain(f"{x!r} not in {self.domain.name}")
        if self.act_fn is not None:
            return self.act_fn(g, x)
        return g.act(x)

    def symmetric_generators(self) -> list[tuple[str, GroupElement]]:
        """Generators and their inverses as (label, element); involutions appear once."""
        out = []
        for s, g in self.generators.items():
            out.append((s, g))
            inv = g.inverse()
            if inv != g:
                out.append((s + "^-1", inv))
        return out

    @property
    def base_point(self):
        return self.base_points[0]


def natural_action(G: FiniteGroup, degree: int | None = None, name: str = "") -> GroupAction:
    """A permutation group acting on 0..n-1; one base point per orbit."""
    n = degree if degree is not None else G.identity.degree
    pts = tuple(range(n))
    base = []
    seen: set = set()
    for x in pts:
        if x in seen:
            continue
        base.append(x)
        seen |= {g.act(x) for g in G.elements}
    dom = Domain(f"{{0..{n - 1}}}", lambda x: isinstance(x, int) and 0 <= x < n, pts)
    return GroupAction(name or f"{G.name} natural", dict(G.generators), dom, tuple(base),
                       group=G, identity=G.identity)


def regular_action(G: FiniteGroup, name: str = "") -> GroupAction:
    """G acting on itself by left multiplication."""
    dom = Domain(G.name or "G", lambda x: x in G.element_set, tuple(G.elements))
    return GroupAction(name or f"{G.name} regular", dict(G.generators), dom, (G.identity,),
                       act_fn=lambda g, x: g * x, group=G, identity=G.identity)


def coset_action(G: FiniteGroup, H: frozenset, name: str = "") -> GroupAction:
    """G acting on G/H, points numbered by enumeration order of the cosets."""
    cosets = G.left_cosets(H)
    where = {}
    for i, c in enumerate(cosets):
        for g in c:
            where[g] = i
    reps = [min(c, key=G.index.__getitem__) for c in cosets]
    n = len(cosets)
    dom = Domain(f"G/H ({n} points)", lambda x: isinstance(x, int) and 0 <= x < n, tuple(range(n)))
    return GroupAction(name or f"{G.name} on cosets", dict(G.generators), dom, (0,),
                       act_fn=lambda g, x: where[g * reps[x]], group=G, identity=G.identity)


def z_regular() -> GroupAction:
    dom = Domain("Z", lambda x: isinstance(x, int) and not isinstance(x, bool))
    return GroupAction("Z regular", {"z": ZInt(1)}, dom, (0,))


def dinf_on_z() -> GroupAction:
    dom = Domain("Z", lambda x: isinstance(x, int) and not isinstance(x, bool))
    return GroupAction("Dinf on Z", {"a": DINF_A, "b": DINF_B}, dom, (0,))


def thompson_dyadic_action() -> GroupAction:
    """F acting on the dyadic rationals of (0, 1); base point 1/2."""
    dom = Domain("Z[1/2] cap (0,1)", lambda x: isinstance(x, Dyadic) and ZERO < x < ONE)
    return GroupAction("F on dyadics", {"x0": X0, "x1": X1}, dom, (Dyadic(1, 1),))


def houghton_action(n: int) -> GroupAction:
    dom = Domain(f"Omega_{n}", lambda x: (isinstance(x, tuple) and len(x) == 2
                                          and isinstance(x[0], int) and isinstance(x[1], int)
                                          and 1 <= x[0] <= n and x[1] >= 0))
    return GroupAction(f"H{n} on Omega_{n}", dict(houghton_generators(n)), dom, ((1, 0),),
                       identity=HoughtonElement.identity_of(n))


# windows ------------------------------------------------------------------

def dyadic_window(max_exponent: int) -> list[Dyadic]:
    return dyadics_in_unit_interval(max_exponent)


def houghton_window(n: int, m: int) -> list[tuple[int, int]]:
    """Points (ray, k) with k <= m on every ray."""
    return [(r, k) for r in range(1, n + 1) for k in range(m + 1)]


def int_window(lo: int, hi: int) -> list[int]:
    return list(range(lo, hi + 1))


def orbit(action: GroupAction, x, limit: int = 100_000) -> list:
    """Full orbit of ``x`` (finite actions only)."""
    gens = [g for _, g in action.symmetric_generators()]
    seen = {x}
    order = [x]
    i = 0
    while i < len(order):
        y = order[i]
        i += 1
        for g in gens:
            z = action.act(g, y)
            if z not in seen:
                seen.add(z)
                order.append(z)
                if len(order) > limit:
                    raise PointOutOfDomain("orbit larger than limit")
    return order
