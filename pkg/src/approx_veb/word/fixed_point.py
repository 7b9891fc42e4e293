"""Fixed-point numbers ``i + j / 2**b`` and the word-size configuration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, field_validator

from approx_veb.config import settings
from approx_veb.errors import DomainError


class WordConfig(BaseModel):
    """Word size ``b`` of the simulated RAM."""

    model_config = ConfigDict(frozen=True)

    b: int = 64

    @field_validator("b")
    @classmethod
    def _check_bits(cls, value: int) -> int:
        if not 8 <= value <= 64 or value & (value - 1):
            raise ValueError("word size must be a power of two in [8, 64]")
        return value

    @classmethod
    def default(cls) -> WordConfig:
        """Word configuration taken from ``settings.word_bits``."""
        return cls(b=settings.word_bits)

    @property
    def word_max(self) -> int:
        return (1 << self.b) - 1


class Ordering(IntEnum):
    """Three-way comparison result."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True, order=True, slots=True)
class FixedPoint:
    """A non-negative number held as an integer word and a fraction word.

    The represented value is ``int_part + frac_part / 2**b``.  Field
    order makes the dataclass ordering lexicographic on
    ``(int_part, frac_part)``, which coincides with numeric order.
    """

    int_part: int
    frac_part: int = 0

    def check(self, word: WordConfig) -> FixedPoint:
        """Validate both parts against the word size and return ``self``.

        Raises:
            DomainError: If either part does not fit in ``b`` bits.
        """
        limit = 1 << word.b
        if not (0 <= self.int_part < limit and 0 <= self.frac_part < limit):
            raise DomainError(
                f"fixed-point value ({self.int_part}, {self.frac_part}) "
                f"does not fit {word.b}-bit words"
            )
        return self

    def scaled(self, b: int) -> int:
        """The ``2b``-bit concatenation ``int_part * 2**b + frac_part``."""
        return (self.int_part << b) | self.frac_part

    def to_fraction(self, b: int) -> Fraction:
        return Fraction(self.scaled(b), 1 << b)

    def to_float(self, b: int) -> float:
        return self.int_part + self.frac_part / (1 << b)

    @classmethod
    def from_scaled(cls, scaled: int, b: int) -> FixedPoint:
        return cls(scaled >> b, scaled & ((1 << b) - 1))

    @classmethod
    def from_value(
        cls, value: FixedPoint | int | Fraction | float, word: WordConfig
    ) -> FixedPoint:
        """Convert ``value`` to the nearest fixed-point number not above it.

        Raises:
            DomainError: If the value is negative, not finite, or too large.
        """
        if isinstance(value, FixedPoint):
            return value.check(word)
        if isinstance(value, float) and not math.isfinite(value):
            raise DomainError(f"cannot represent {value} as a fixed-point number")
        exact = Fraction(value)
        if exact < 0:
            raise DomainError(f"negative value {value} has no fixed-point form")
        scaled = math.floor(exact * (1 << word.b))
        return cls.from_scaled(scaled, word.b).check(word)


def fp_compare(x: FixedPoint, y: FixedPoint) -> Ordering:
    """Compare two fixed-point numbers by value."""
    if x == y:
        return Ordering.EQUAL
    return Ordering.LESS if x < y else Ordering.GREATER
