"""Freely reduced words over a set of generator symbols."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

Letter = tuple[str, int]

_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?")


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for sym, exp in letters:
        if exp not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {exp}")
        if out and out[-1][0] == sym and out[-1][1] == -exp:
            out.pop()
        else:
            out.append((sym, exp))
    return tuple(out)


@dataclass(frozen=True, order=True)
class Word:
    """A freely reduced word; letters are ``(symbol, +1 | -1)`` pairs."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``"a b^-1 a^2"``; whitespace or ``*`` separate tokens, ``1`` is the empty word."""
        text = text.replace("*", " ").strip()
        if text in ("", "1", "e"):
            return cls()
        letters: list[Letter] = []
        for token in text.split():
            m = _TOKEN.fullmatch(token)
            if not m:
                raise ValueError(f"bad token {token!r} in word {text!r}")
            sym, power = m.group(1), int(m.group(2) or 1)
            sign = 1 if power > 0 else -1
            letters.extend([(sym, sign)] * abs(power))
        return cls(tuple(letters))

    @classmethod
    def gen(cls, symbol: str, exp: int = 1) -> "Word":
        sign = 1 if exp > 0 else -1
        return cls(((symbol, sign),) * abs(exp))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def inverse(self) -> "Word":
        return Word(tuple((s, -e) for s, e in reversed(self.letters)))

    def symbols(self) -> set[str]:
        return {s for s, _ in self.letters}

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(s if e == 1 else f"{s}^-1" for s, e in self.letters)

    def to_json(self) -> list:
        return [s if e == 1 else {"sym": s, "inv": True} for s, e in self.letters]

    @classmethod
    def from_json(cls, items: list) -> "Word":
        letters = []
        for item in items:
            if isinstance(item, str):
                letters.append((item, 1))
            else:
                letters.append((item["sym"], -1 if item.get("inv") else 1))
        return cls(tuple(letters))


def commutator(x: Word, y: Word) -> Word:
    """[x, y] = x y x^-1 y^-1."""
    return x * y * x.inverse() * y.inverse()


def conjugate(g: Word, w: Word) -> Word:
    """g w g^-1."""
    return g * w * g.inverse()
