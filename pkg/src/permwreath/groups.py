"""Concrete group elements with exact canonical forms.

Every element class is an immutable value whose structural equality is group
equality. ``a * b`` is the group law; as maps on points, ``(a * b).act(x) ==
a.act(b.act(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping

from .errors import InvalidElement, MixedGroupKinds, PointOutOfDomain, UnboundSymbol
from .words import Word


class GroupElement:
    """Mixin for the concrete variants; subclasses implement ``_compose``."""

    kind = "abstract"

    def ambient(self) -> Any:
        """Data that must agree for two elements to live in the same group."""
        return None

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, n: int):
        base = self if n >= 0 else self.inverse()
        result = self.identity()
        for _ in range(abs(n)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return self == self.identity()

    def conj(self, g):
        """g self g^-1."""
        return g * self * g.inverse()


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    if type(a) is not type(b) or a.ambient() != b.ambient():
        raise MixedGroupKinds(f"cannot compose {a.kind}{a.ambient()} with {b.kind}{b.ambient()}")
    return a._compose(b)


def commutator(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b * a.inverse() * b.inverse()


def act(g: GroupElement, x):
    return g.act(x)


def evaluate_word(word: Word, assignment: Mapping[str, GroupElement], identity=None):
    """Multiply the assigned elements in word order."""
    result = identity
    for sym, exp in word:
        try:
            g = assignment[sym]
        except KeyError:
            raise UnboundSymbol(f"symbol {sym!r} has no assigned element") from None
        if exp < 0:
            g = g.inverse()
        result = g if result is None else result * g
    if result is None:
        if not assignment:
            raise UnboundSymbol("empty word with no identity and no assignment")
        result = next(iter(assignment.values())).identity()
    return result


def element_order(g: GroupElement, limit: int = 10_000) -> int:
    """Order of ``g``, or 0 if it exceeds ``limit`` (treated as infinite)."""
    e = g.identity()
    h = g
    for n in range(1, limit + 1):
        if h == e:
            return n
        h = h * g
    return 0


# ---------------------------------------------------------------------------
# finite permutations

@dataclass(frozen=True, order=True)
class Perm(GroupElement):
    images: tuple[int, ...]

    kind = "perm"

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise InvalidElement(f"not a permutation: {self.images}")

    @classmethod
    def identity_of(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> "Perm":
        """0-based cycle notation: ``Perm.from_cycles(3, (0, 1))``."""
        img = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                img[x] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def ambient(self):
        return len(self.images)

    def identity(self) -> "Perm":
        return Perm.identity_of(len(self.images))

    def _compose(self, other: "Perm") -> "Perm":
        a = self.images
        return Perm(tuple(a[i] for i in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def act(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < len(self.images):
            raise PointOutOfDomain(f"{x!r} not in 0..{len(self.images) - 1}")
        return self.images[x]

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"

    def to_json(self):
        return list(self.images)


# ---------------------------------------------------------------------------
# Z, D_infinity, cyclic groups

@dataclass(frozen=True, order=True)
class ZInt(GroupElement):
    """An element of Z acting on Z by translation."""

    value: int

    kind = "int"

    def identity(self) -> "ZInt":
        return ZInt(0)

    def _compose(self, other: "ZInt") -> "ZInt":
        return ZInt(self.value + other.value)

    def inverse(self) -> "ZInt":
        return ZInt(-self.value)

    def act(self, x: int) -> int:
        if not isinstance(x, int):
            raise PointOutOfDomain(f"{x!r} is not an integer")
        return x + self.value

    def word_length(self) -> int:
        return abs(self.value)

    def __str__(self):
        return str(self.value)

    def to_json(self):
        return self.value


@dataclass(frozen=True, order=True)
class Dihedral(GroupElement):
    """Element x -> (-x if reflect else x) + shift of D_infinity, acting on Z.

    The generators are ``a = Dihedral(True, 0)`` and ``b = Dihedral(True, 1)``;
    ``a * b`` is translation by -1.
    """

    reflect: bool
    shift: int

    kind = "dihedral_inf"

    def identity(self) -> "Dihedral":
        return Dihedral(False, 0)

    def _compose(self, other: "Dihedral") -> "Dihedral":
        sign = -1 if self.reflect else 1
        return Dihedral(self.reflect != other.reflect, sign * other.shift + self.shift)

    def inverse(self) -> "Dihedral":
        if self.reflect:
            return self
        return Dihedral(False, -self.shift)

    def act(self, x: int) -> int:
        if not isinstance(x, int):
            raise PointOutOfDomain(f"{x!r} is not an integer")
        return (-x if self.reflect else x) + self.shift

    def word_length(self) -> int:
        """Length over {a, b} read off the normal form."""
        n = self.shift
        if not self.reflect:
            return 2 * abs(n)
        return 2 * n - 1 if n >= 1 else 1 - 2 * n

    def __str__(self):
        return f"{'r' if self.reflect else 't'}{self.shift}"

    def to_json(self):
        return {"reflect": self.reflect, "shift": self.shift}


DINF_A = Dihedral(True, 0)
DINF_B = Dihedral(True, 1)


def dinf_power_ab(n: int) -> Dihedral:
    """(ab)^n, the image of n under the standard Z -> D_infinity correspondence."""
    return Dihedral(False, -n)


@dataclass(frozen=True, order=True)
class Cyclic(GroupElement):
    residue: int
    modulus: int

    kind = "cyclic"

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidElement("modulus must be positive")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def ambient(self):
        return self.modulus

    def identity(self) -> "Cyclic":
        return Cyclic(0, self.modulus)

    def _compose(self, other: "Cyclic") -> "Cyclic":
        return Cyclic(self.residue + other.residue, self.modulus)

    def inverse(self) -> "Cyclic":
        return Cyclic(-self.residue, self.modulus)

    def act(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.modulus:
            raise PointOutOfDomain(f"{x!r} not a residue mod {self.modulus}")
        return (x + self.residue) % self.modulus

    def __str__(self):
        return f"{self.residue} mod {self.modulus}"

    def to_json(self):
        return self.residue


# ---------------------------------------------------------------------------
# direct products

@dataclass(frozen=True, order=True)
class DirectProduct(GroupElement):
    parts: tuple

    kind = "product"

    def ambient(self):
        return tuple((type(p).__name__, p.ambient()) for p in self.parts)

    def identity(self) -> "DirectProduct":
        return DirectProduct(tuple(p.identity() for p in self.parts))

    def _compose(self, other: "DirectProduct") -> "DirectProduct":
        return DirectProduct(tuple(compose(a, b) for a, b in zip(self.parts, other.parts)))

    def inverse(self) -> "DirectProduct":
        return DirectProduct(tuple(p.inverse() for p in self.parts))

    def act(self, x):
        if not isinstance(x, tuple) or len(x) != len(self.parts):
            raise PointOutOfDomain(f"{x!r} is not a {len(self.parts)}-tuple")
        return tuple(p.act(y) for p, y in zip(self.parts, x))

    def __str__(self):
        return "(" + ", ".join(map(str, self.parts)) + ")"

    def to_json(self):
        return [p.to_json() for p in self.parts]


def embed(parts_identity: tuple, index: int, g: GroupElement) -> DirectProduct:
    parts = list(parts_identity)
    parts[index] = g
    return DirectProduct(tuple(parts))
