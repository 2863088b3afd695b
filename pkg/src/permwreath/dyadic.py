"""Exact dyadic rationals m / 2**e.

Only integer arithmetic is used. The canonical form has ``exponent == 0`` or
an odd mantissa, so structural equality coincides with equality of values.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction


def _canon(mantissa: int, exponent: int) -> tuple[int, int]:
    if mantissa == 0:
        return 0, 0
    while exponent > 0 and mantissa % 2 == 0:
        mantissa //= 2
        exponent -= 1
    if exponent < 0:
        mantissa <<= -exponent
        exponent = 0
    return mantissa, exponent


@functools.total_ordering
class Dyadic:
    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: int, exponent: int = 0):
        if not isinstance(mantissa, int) or not isinstance(exponent, int):
            raise TypeError("Dyadic needs integer mantissa and exponent")
        m, e = _canon(mantissa, exponent)
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @classmethod
    def parse(cls, text) -> "Dyadic":
        """Accept ``"3/8"``, ``"1"``, ints, or a ``Fraction`` with a power-of-two denominator."""
        if isinstance(text, Dyadic):
            return text
        if isinstance(text, int):
            return cls(text)
        frac = Fraction(text) if not isinstance(text, Fraction) else text
        den = frac.denominator
        if den & (den - 1):
            raise ValueError(f"{text!r} is not a dyadic rational")
        return cls(frac.numerator, den.bit_length() - 1)

    # arithmetic -----------------------------------------------------------
    def _aligned(self, other: "Dyadic") -> tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        return (self.mantissa << (e - self.exponent),
                other.mantissa << (e - other.exponent), e)

    def __add__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b, e = self._aligned(other)
        return Dyadic(a + b, e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b, e = self._aligned(other)
        return Dyadic(a - b, e)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.mantissa, self.exponent)

    def __mul__(self, other: "Dyadic") -> "Dyadic":
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return Dyadic(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def scale(self, k: int) -> "Dyadic":
        """Multiply by 2**k (k may be negative)."""
        if k >= 0:
            return Dyadic(self.mantissa << k, self.exponent)
        return Dyadic(self.mantissa, self.exponent - k)

    def log2_ratio(self, other: "Dyadic") -> int:
        """Return k with self == 2**k * other; ValueError if the ratio is not a power of two."""
        if self.mantissa == 0 or other.mantissa == 0:
            raise ValueError("ratio with zero")
        if (self.mantissa < 0) != (other.mantissa < 0):
            raise ValueError("negative ratio")
        a, b = abs(self.mantissa), abs(other.mantissa)
        # both mantissas are odd or the exponent is 0; strip powers of two
        ta = (a & -a).bit_length() - 1
        tb = (b & -b).bit_length() - 1
        if a >> ta != b >> tb:
            raise ValueError(f"{self}/{other} is not a power of two")
        return (ta - self.exponent) - (tb - other.exponent)

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            return self.exponent == 0 and self.mantissa == other
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.mantissa == other.mantissa and self.exponent == other.exponent

    def __lt__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a < b

    def __hash__(self):
        return hash((self.mantissa, self.exponent))

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.exponent)

    def __float__(self):
        return self.mantissa / (1 << self.exponent)

    def __str__(self):
        if self.exponent == 0:
            return str(self.mantissa)
        return f"{self.mantissa}/{1 << self.exponent}"

    def __repr__(self):
        return f"Dyadic({self.mantissa}, {self.exponent})"

    def __reduce__(self):
        return (Dyadic, (self.mantissa, self.exponent))


_DYADIC_RE = re.compile(r"^-?\d+(/\d+)?$")


def dyadic(value) -> Dyadic:
    """Convenience coercion used by the descriptor and CLI layers."""
    if isinstance(value, str) and not _DYADIC_RE.match(value.strip()):
        raise ValueError(f"not a dyadic literal: {value!r}")
    return Dyadic.parse(value.strip() if isinstance(value, str) else value)


def dyadics_in_unit_interval(max_exponent: int) -> list[Dyadic]:
    """All dyadics strictly inside (0, 1) with exponent at most ``max_exponent``, sorted."""
    den = 1 << max_exponent
    return [Dyadic(k, max_exponent) for k in range(1, den)]


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)
