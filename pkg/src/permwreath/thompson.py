"""Thompson's group F as piecewise-linear maps of [0, 1].

An element is stored as its list of breakpoints ``(x, y)``, endpoints
included, with every removable breakpoint deleted. Slopes are powers of two
and all coordinates are dyadic, so composition stays exact.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import cached_property

from .dyadic import HALF, ONE, ZERO, Dyadic
from .errors import InvalidElement, PointOutOfDomain
from .groups import GroupElement

Breakpoint = tuple[Dyadic, Dyadic]


def _slope_exp(p: Breakpoint, q: Breakpoint) -> int:
    dx, dy = q[0] - p[0], q[1] - p[1]
    try:
        return dy.log2_ratio(dx)
    except ValueError:
        raise InvalidElement(f"slope between {p} and {q} is not a power of 2") from None


def _canonical(points: list[Breakpoint]) -> tuple[Breakpoint, ...]:
    out = [points[0]]
    for i in range(1, len(points) - 1):
        if _slope_exp(out[-1], points[i]) != _slope_exp(points[i], points[i + 1]):
            out.append(points[i])
    out.append(points[-1])
    return tuple(out)


@dataclass(frozen=True)
class PLMap(GroupElement):
    breakpoints: tuple[Breakpoint, ...]

    kind = "thompson_f"

    def __post_init__(self):
        pts = [(Dyadic.parse(x), Dyadic.parse(y)) for x, y in self.breakpoints]
        if len(pts) < 2 or pts[0] != (ZERO, ZERO) or pts[-1] != (ONE, ONE):
            raise InvalidElement("breakpoints must start at (0,0) and end at (1,1)")
        for p, q in zip(pts, pts[1:]):
            if not (p[0] < q[0] and p[1] < q[1]):
                raise InvalidElement("breakpoints must be strictly increasing")
            _slope_exp(p, q)
        object.__setattr__(self, "breakpoints", _canonical(pts))

    @classmethod
    def from_pairs(cls, *pairs) -> "PLMap":
        """``PLMap.from_pairs(("1/2", "1/4"), ("3/4", "1/2"))``; endpoints are added."""
        pts = [(ZERO, ZERO)] + [(Dyadic.parse(x), Dyadic.parse(y)) for x, y in pairs] + [(ONE, ONE)]
        return cls(tuple(pts))

    def identity(self) -> "PLMap":
        return IDENTITY

    def slopes(self) -> list[int]:
        """Base-2 logarithms of the segment slopes."""
        b = self.breakpoints
        return [_slope_exp(p, q) for p, q in zip(b, b[1:])]

    @cached_property
    def _segments(self):
        b = self.breakpoints
        return [p[0] for p in b], self.slopes() + [0]

    def __call__(self, x: Dyadic) -> Dyadic:
        if x < ZERO or x > ONE:
            raise PointOutOfDomain(f"{x} not in [0, 1]")
        xs, slopes = self._segments
        i = bisect.bisect_right(xs, x) - 1
        x0, y0 = self.breakpoints[i]
        return y0 + (x - x0).scale(slopes[i])

    def act(self, x):
        if not isinstance(x, Dyadic):
            try:
                x = Dyadic.parse(x)
            except (ValueError, TypeError):
                raise PointOutOfDomain(f"{x!r} is not dyadic") from None
        return self(x)

    def inverse(self) -> "PLMap":
        return PLMap(tuple((y, x) for x, y in self.breakpoints))

    def _compose(self, other: "PLMap") -> "PLMap":
        # (self * other)(x) = self(other(x)); breakpoints come from other's
        # breakpoints and the preimages under other of self's breakpoints
        inv = other.inverse()
        xs = {x for x, _ in other.breakpoints}
        xs.update(inv(x) for x, _ in self.breakpoints)
        pts = [(x, self(other(x))) for x in sorted(xs)]
        return PLMap(tuple(pts))

    def __str__(self):
        return "PL[" + ", ".join(f"({x},{y})" for x, y in self.breakpoints) + "]"

    def to_json(self):
        return [[str(x), str(y)] for x, y in self.breakpoints]


IDENTITY = PLMap(((ZERO, ZERO), (ONE, ONE)))

# standard generators: x0 = t/2 on [0,1/2], t-1/4 on [1/2,3/4], 2t-1 on [3/4,1];
# x1 is the identity on [0,1/2] and a half-scale copy of x0 on [1/2,1]
X0 = PLMap.from_pairs(("1/2", "1/4"), ("3/4", "1/2"))
X1 = PLMap.from_pairs(("1/2", "1/2"), ("3/4", "5/8"), ("7/8", "3/4"))


def thompson_generator(n: int) -> PLMap:
    """x_n = x0^-(n-1) x1 x0^(n-1) for n >= 1, supported on [1 - 2^-n, 1]."""
    if n == 0:
        return X0
    g = X1
    for _ in range(n - 1):
        g = X0.inverse() * g * X0
    return g


def relators_hold() -> bool:
    """Check the two defining relations [x0 x1^-1, x0^-1 x1 x0] and [x0 x1^-1, x0^-2 x1 x0^2]."""
    a = X0 * X1.inverse()
    x2 = X0.inverse() * X1 * X0
    x3 = X0.inverse() * x2 * X0
    return (a * x2 * a.inverse() * x2.inverse() == IDENTITY
            and a * x3 * a.inverse() * x3.inverse() == IDENTITY)


def standard_pieces(lo: Dyadic, hi: Dyadic) -> list[Dyadic]:
    """Cut points of the greedy split of [lo, hi] into standard dyadic intervals [m/2^n, (m+1)/2^n]."""
    cuts = [lo]
    x = lo
    while x < hi:
        n = x.exponent
        # largest standard interval starting at x that fits
        while x + Dyadic(1, n) > hi:
            n += 1
        x = x + Dyadic(1, n)
        cuts.append(x)
    return cuts


def _refine(cuts: list[Dyadic], count: int) -> list[Dyadic]:
    """Halve the widest pieces until there are ``count`` pieces; halves of standard intervals are standard."""
    cuts = list(cuts)
    while len(cuts) - 1 < count:
        widths = [(cuts[i + 1] - cuts[i], -i) for i in range(len(cuts) - 1)]
        _, neg_i = max(widths)
        i = -neg_i
        cuts.insert(i + 1, cuts[i] + (cuts[i + 1] - cuts[i]).scale(-1))
    return cuts


def map_through(sources, targets) -> PLMap:
    """An element of F sending sources[i] to targets[i].

    Both lists must be strictly increasing dyadics in (0, 1) of equal length.
    Each gap is split into standard dyadic intervals, the coarser side is
    refined until the counts agree, and pieces are matched linearly, which
    gives power-of-two slopes.
    """
    src = [ZERO] + [Dyadic.parse(x) for x in sources] + [ONE]
    dst = [ZERO] + [Dyadic.parse(y) for y in targets] + [ONE]
    if len(src) != len(dst):
        raise ValueError("sources and targets differ in length")
    for seq in (src, dst):
        if any(not a < b for a, b in zip(seq, seq[1:])):
            raise ValueError("points must be strictly increasing inside (0, 1)")
    pts: list[Breakpoint] = []
    for i in range(len(src) - 1):
        a = standard_pieces(src[i], src[i + 1])
        b = standard_pieces(dst[i], dst[i + 1])
        k = max(len(a), len(b)) - 1
        a, b = _refine(a, k), _refine(b, k)
        pts.extend(zip(a[:-1], b[:-1]))
    pts.append((ONE, ONE))
    return PLMap(tuple(pts))


def pair_transporter(pair) -> PLMap:
    """An element carrying (a, b) to the anchor of its sign class.

    Anchors: (1/4, 1/2) for a < b, (1/2, 1/4) for a > b, (1/2, 1/2) for a = b.
    """
    a, b = (Dyadic.parse(x) for x in pair)
    if a == b:
        return map_through([a], [HALF])
    lo, hi = (a, b) if a < b else (b, a)
    return map_through([lo, hi], [Dyadic(1, 2), HALF])
