"""Unit complex gains stored as angles in turns.

A gain is a point on the unit circle.  Storing the angle as a fraction of
a full revolution ("turns") makes the group operations exact modular
addition: products and inverses of rational gains never drift, and float
gains accumulate at most one rounding per operation.  The complex value is
derived on demand.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

TurnsLike = Union[Fraction, float, int, str]

#: tolerance (in turns) for equality tests between float gains
GAIN_TOL = 1e-9


def _mod1(t):
    """Reduce turns into [0, 1), exactly for Fractions."""
    if isinstance(t, Fraction):
        return t % 1
    t = float(t) % 1.0
    if t >= 1.0:  # float mod can round up to 1.0 for tiny negatives
        t -= 1.0
    return t


def turns_distance(a, b) -> float:
    """Distance between two turn values on the circle (mod 1)."""
    d = float(a - b) % 1.0
    return min(d, 1.0 - d)


@dataclass(frozen=True)
class Gain:
    """An element of the circle group, e^(2*pi*i*turns).

    ``turns`` is either a Fraction (exact) or a float.  All constructors
    reduce mod 1, so ``turns`` always lies in [0, 1).
    """

    turns: Union[Fraction, float] = Fraction(0)

    def __post_init__(self):
        t = self.turns
        if isinstance(t, int):
            t = Fraction(t)
        if not isinstance(t, (Fraction, float)):
            raise TypeError(f"turns must be Fraction or float, got {type(t).__name__}")
        object.__setattr__(self, "turns", _mod1(t))

    # -- constructors ------------------------------------------------
    @classmethod
    def from_radians(cls, theta: float) -> "Gain":
        return cls(theta / (2.0 * math.pi))

    @classmethod
    def parse(cls, text: str) -> "Gain":
        """Parse 'p/q' (exact rational turns) or a decimal turn count."""
        text = text.strip()
        if "/" in text:
            return cls(Fraction(text))
        return cls(float(text))

    # -- group structure ---------------------------------------------
    def __mul__(self, other: "Gain") -> "Gain":
        return Gain(self.turns + other.turns)

    def inverse(self) -> "Gain":
        return Gain(-self.turns)

    def negated(self) -> "Gain":
        """Multiply by -1 (half a turn)."""
        return Gain(self.turns + Fraction(1, 2))

    # -- derived values ----------------------------------------------
    @property
    def exact(self) -> bool:
        return isinstance(self.turns, Fraction)

    @property
    def value(self) -> complex:
        angle = 2.0 * math.pi * float(self.turns)
        return complex(math.cos(angle), math.sin(angle))

    @property
    def radians(self) -> float:
        return 2.0 * math.pi * float(self.turns)

    def is_neutral(self, tol: float = GAIN_TOL) -> bool:
        if self.exact:
            return self.turns == 0
        return turns_distance(self.turns, 0.0) <= tol

    def isclose(self, other: "Gain", tol: float = GAIN_TOL) -> bool:
        if self.exact and other.exact:
            return self.turns == other.turns
        return turns_distance(self.turns, other.turns) <= tol

    def __repr__(self):
        return f"Gain({self.turns!r})"


NEUTRAL = Gain()
HALF_TURN = Gain(Fraction(1, 2))
QUARTER_TURN = Gain(Fraction(1, 4))


def as_gain(x) -> Gain:
    """Coerce a Gain, Fraction, float, int or string into a Gain (turns)."""
    if isinstance(x, Gain):
        return x
    if isinstance(x, str):
        return Gain.parse(x)
    return Gain(x)
