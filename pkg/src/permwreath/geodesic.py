"""Exact covering-walk lengths K(F, c).

K(F, c) is the least n such that some generator path 1 = g_0, ..., g_n = c
visits every point of F among g_0 x_0, ..., g_n x_0. The solver runs a
breadth-first search over states (group element, covered subset of F), so the
first time a state (c, F) is reached is a certified optimum.

Paths step by right multiplication, g_{i+1} = g_i s. This is the convention
under which K(supp f, c) + |f| is the word length of (f, c) for the product
(f1, c1)(f2, c2) = (f1 * c1.f2, c1 c2) used in :mod:`permwreath.wreath`.
Pass ``side="left"`` to :func:`explore` to use g_{i+1} = s g_i instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .actions import GroupAction
from .errors import MaskWidthExceeded, RadiusBudgetExceeded, TruncationEscape
from .groups import GroupElement

MAX_MASK_WIDTH = 24


@dataclass
class SchreierFragment:
    """Ball of radius ``radius`` in the Cayley graph of G, with point images g.x0.

    ``neighbors[i][j]`` is the index of ``elements[i]`` stepped by generator
    ``labels[j]``, or -1 when that element lies outside the ball.
    """

    elements: list
    depth: list[int]
    points: list
    neighbors: list[list[int]]
    labels: list[str]
    radius: int
    complete: bool
    base_point: Hashable
    side: str = "right"
    index: dict = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.index:
            self.index = {g: i for i, g in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    @property
    def vertices(self) -> set:
        return set(self.points)

    def edges(self) -> set[tuple[Hashable, Hashable, str]]:
        """Labelled point edges (g.x0 -> h.x0) along Cayley steps inside the ball."""
        out = set()
        for i, row in enumerate(self.neighbors):
            for j, k in enumerate(row):
                if k >= 0:
                    out.add((self.points[i], self.points[k], self.labels[j]))
        return out

    def word_length(self, g: GroupElement) -> int:
        try:
            return self.depth[self.index[g]]
        except KeyError:
            raise RadiusBudgetExceeded(f"{g} lies outside the radius-{self.radius} ball") from None

    def point_depth(self, x) -> int:
        """Least length of an element carrying x0 to x."""
        best = [d for d, p in zip(self.depth, self.points) if p == x]
        if not best:
            raise RadiusBudgetExceeded(f"point {x!r} not reached within radius {self.radius}")
        return min(best)


def explore(action: GroupAction, radius: int, generators: Sequence[tuple[str, GroupElement]] | None = None,
            base_point=None, window=None, side: str = "right", limit: int = 2_000_000) -> SchreierFragment:
    """Breadth-first ball of radius ``radius`` with every element's image of the base point.

    ``generators`` defaults to the action's generators closed under inversion.
    If ``window`` (a container of points) is given, an image leaving it raises
    :class:`TruncationEscape`.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    gens = list(generators) if generators is not None else action.symmetric_generators()
    x0 = action.base_point if base_point is None else base_point

    def step(g, s):
        return g * s if side == "right" else s * g

    ident = action.identity
    elements = [ident]
    depth = [0]
    points = [x0]
    index = {ident: 0}
    rows: dict[int, list[int]] = {}
    frontier = [0]
    for d in range(radius):
        nxt = []
        for i in frontier:
            row = []
            for _, s in gens:
                h = step(elements[i], s)
                k = index.get(h)
                if k is None:
                    k = len(elements)
                    p = action.act(h, x0)
                    if window is not None and p not in window:
                        raise TruncationEscape(f"point {p!r} of {h} leaves the window")
                    index[h] = k
                    elements.append(h)
                    depth.append(d + 1)
                    points.append(p)
                    nxt.append(k)
                    if len(elements) > limit:
                        raise RadiusBudgetExceeded(f"ball exceeds {limit} elements")
                row.append(k)
            rows[i] = row
        frontier = nxt
        if not frontier:
            break
    complete = not frontier
    # outermost layer: neighbours may still fall inside the ball
    for i in frontier:
        rows[i] = [index.get(step(elements[i], s), -1) for _, s in gens]
    neighbors = [rows[i] for i in range(len(elements))]
    if complete:
        radius = max(depth)
    return SchreierFragment(elements, depth, points, neighbors, [s for s, _ in gens],
                            radius, complete, x0, side, index)


@dataclass(frozen=True)
class CoverWalkProblem:
    targets: frozenset
    terminal: GroupElement
    budget: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "targets", frozenset(self.targets))


def cover_distances(targets: Iterable, frag: SchreierFragment, budget: int | None = None,
                    mask_width: int = MAX_MASK_WIDTH) -> dict[int, int]:
    """K(F, c) for every c reachable within the budget, keyed by element index.

    Results are cached on the fragment per (F, budget).
    """
    F = sorted(set(targets), key=repr)
    if len(F) > mask_width:
        raise MaskWidthExceeded(f"|F| = {len(F)} exceeds mask width {mask_width}")
    if budget is None and not frag.complete:
        budget = frag.radius
    if budget is not None and budget < 0:
        raise ValueError("budget must be non-negative")
    if not frag.complete and budget > frag.radius:
        raise RadiusBudgetExceeded(f"budget {budget} exceeds fragment radius {frag.radius}")
    key = (frozenset(F), budget)
    cached = frag._cache.get(key)
    if cached is not None:
        return cached

    k = len(F)
    bit_of = {x: 1 << j for j, x in enumerate(F)}
    bits = [bit_of.get(p, 0) for p in frag.points]
    full = (1 << k) - 1
    n = len(frag.elements)
    seen = bytearray(n << k)
    start = bits[0]
    seen[start] = 1
    frontier = [start]
    result: dict[int, int] = {}
    if start == full:
        result[0] = 0
    nbrs = frag.neighbors
    level = 0
    while frontier and (budget is None or level < budget):
        level += 1
        nxt = []
        for state in frontier:
            i, mask = state >> k, state & full
            for j in nbrs[i]:
                if j < 0:
                    continue
                m2 = mask | bits[j]
                s2 = (j << k) | m2
                if not seen[s2]:
                    seen[s2] = 1
                    nxt.append(s2)
                    if m2 == full and j not in result:
                        result[j] = level
        frontier = nxt
    frag._cache[key] = result
    return result


def cover_walk_length(problem: CoverWalkProblem, frag: SchreierFragment,
                      mask_width: int = MAX_MASK_WIDTH) -> int:
    """Certified K(F, c); raises :class:`RadiusBudgetExceeded` if no walk fits the budget."""
    budget = problem.budget
    ci = frag.index.get(problem.terminal)
    if ci is None:
        raise RadiusBudgetExceeded(f"terminal {problem.terminal} outside the radius-{frag.radius} ball")
    dist = cover_distances(problem.targets, frag, budget, mask_width)
    if ci not in dist:
        limit = frag.radius if budget is None else budget
        raise RadiusBudgetExceeded(
            f"no covering walk of length <= {limit} for |F| = {len(problem.targets)}")
    return dist[ci]


def K(targets, terminal, frag: SchreierFragment, budget: int | None = None) -> int:
    """Shorthand for :func:`cover_walk_length`."""
    return cover_walk_length(CoverWalkProblem(frozenset(targets), terminal, budget), frag)
