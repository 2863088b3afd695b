"""Houghton groups H_n acting on n rays of naturals.

A point is ``(ray, k)`` with ``ray`` in 1..n and ``k >= 0``. An element is
eventually a translation by ``offsets[ray - 1]`` on each ray: every point with
``k >= thresholds[ray - 1]`` maps to ``(ray, k + offset)``, and the finitely
many points below the thresholds are listed in ``table``. Thresholds are kept
minimal so that structural equality is group equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidElement, PointOutOfDomain
from .groups import GroupElement

Point = tuple[int, int]


@dataclass(frozen=True, order=True)
class HoughtonElement(GroupElement):
    offsets: tuple[int, ...]
    thresholds: tuple[int, ...]
    table: tuple[tuple[Point, Point], ...]

    kind = "houghton"

    def __post_init__(self):
        n = len(self.offsets)
        if len(self.thresholds) != n or n < 1:
            raise InvalidElement("offsets and thresholds must have one entry per ray")
        if sum(self.offsets) != 0:
            raise InvalidElement("ray offsets must sum to zero")
        mapping = dict(self.table)
        expected = {(r + 1, k) for r in range(n) for k in range(self.thresholds[r])}
        if set(mapping) != expected:
            raise InvalidElement("table must list exactly the points below the thresholds")
        for r in range(n):
            if self.thresholds[r] + self.offsets[r] < 0:
                raise InvalidElement(f"ray {r + 1}: threshold too small for offset")
        # the finite table must biject onto the complement of the tail images
        targets = {(r + 1, k) for r in range(n) for k in range(self.thresholds[r] + self.offsets[r])}
        if sorted(mapping.values()) != sorted(targets):
            raise InvalidElement("element is not a bijection of the rays")
        thr = list(self.thresholds)
        for r in range(n):
            while thr[r] > 0:
                k = thr[r] - 1
                if k + self.offsets[r] >= 0 and mapping[(r + 1, k)] == (r + 1, k + self.offsets[r]):
                    del mapping[(r + 1, k)]
                    thr[r] = k
                else:
                    break
        object.__setattr__(self, "thresholds", tuple(thr))
        object.__setattr__(self, "table", tuple(sorted(mapping.items())))

    @classmethod
    def identity_of(cls, n: int) -> "HoughtonElement":
        return cls((0,) * n, (0,) * n, ())

    @classmethod
    def from_function(cls, n: int, offsets, thresholds, func) -> "HoughtonElement":
        """Build from a callable giving the images of the points below the thresholds."""
        table = tuple(((r + 1, k), tuple(func((r + 1, k))))
                      for r in range(n) for k in range(thresholds[r]))
        return cls(tuple(offsets), tuple(thresholds), table)

    @property
    def rays(self) -> int:
        return len(self.offsets)

    def ambient(self):
        return len(self.offsets)

    def identity(self) -> "HoughtonElement":
        return HoughtonElement.identity_of(len(self.offsets))

    def act(self, x: Point) -> Point:
        try:
            ray, k = x
        except (TypeError, ValueError):
            raise PointOutOfDomain(f"{x!r} is not a (ray, k) pair") from None
        if not (isinstance(ray, int) and isinstance(k, int) and 1 <= ray <= self.rays and k >= 0):
            raise PointOutOfDomain(f"{x!r} not in Omega_{self.rays}")
        if k >= self.thresholds[ray - 1]:
            return (ray, k + self.offsets[ray - 1])
        return dict(self.table)[(ray, k)]

    def _compose(self, other: "HoughtonElement") -> "HoughtonElement":
        n = self.rays
        offsets = tuple(a + b for a, b in zip(self.offsets, other.offsets))
        thresholds = tuple(max(other.thresholds[r], self.thresholds[r] - other.offsets[r], 0)
                           for r in range(n))
        return HoughtonElement.from_function(n, offsets, thresholds,
                                             lambda p: self.act(other.act(p)))

    def inverse(self) -> "HoughtonElement":
        n = self.rays
        offsets = tuple(-t for t in self.offsets)
        thresholds = tuple(self.thresholds[r] + self.offsets[r] for r in range(n))
        back = {v: k for k, v in self.table}
        return HoughtonElement(offsets, thresholds, tuple(sorted(back.items())))

    def __str__(self):
        return f"H{self.rays}[t={list(self.offsets)}, {dict(self.table)}]"

    def to_json(self):
        return {"offsets": list(self.offsets), "thresholds": list(self.thresholds),
                "table": [[list(a), list(b)] for a, b in self.table]}


def houghton_translation(n: int, out_ray: int, in_ray: int) -> HoughtonElement:
    """Translation pushing points of ``in_ray`` toward 0, across to ``out_ray`` and outward.

    ``houghton_translation(3, 1, 2)`` sends (ray 1, k) to (ray 1, k + 1),
    (ray 2, k) to (ray 2, k - 1) for k >= 1, and (ray 2, 0) to (ray 1, 0).
    """
    if out_ray == in_ray:
        raise ValueError("rays must differ")
    offsets = [0] * n
    offsets[out_ray - 1] = 1
    offsets[in_ray - 1] = -1
    thresholds = [0] * n
    thresholds[in_ray - 1] = 1
    table = (((in_ray, 0), (out_ray, 0)),)
    return HoughtonElement(tuple(offsets), tuple(thresholds), table)


def houghton_transposition(n: int, p: Point, q: Point) -> HoughtonElement:
    """The finitary transposition swapping two points of Omega_n."""
    thresholds = [0] * n
    for ray, k in (p, q):
        thresholds[ray - 1] = max(thresholds[ray - 1], k + 1)
    swap = {p: q, q: p}
    return HoughtonElement.from_function(n, (0,) * n, thresholds, lambda x: swap.get(x, x))


def houghton_generators(n: int) -> dict[str, HoughtonElement]:
    """Translations g_i between ray i and ray i+1 (cyclically), for n >= 2."""
    if n < 2:
        raise ValueError("need at least two rays")
    gens = {}
    for i in range(1, n + 1):
        j = i % n + 1
        if n == 2 and i == 2:
            break
        gens[f"g{i}"] = houghton_translation(n, j, i)
    return gens
