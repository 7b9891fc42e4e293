"""Universe reductions from approximate keys to exact integer keys.

Two mappings turn an approximate ordered multiset into an exact one
over a much smaller universe:

* the multiplicative map sends ``x`` in ``[1, U]`` to the pair
  ``<msb(x), next k bits below the msb>`` packed into one integer, so
  keys that differ by a factor of at least ``1 + epsilon`` stay ordered;
* the additive map sends ``x`` in ``[0, U]`` to ``x div delta``, so keys
  that differ by at least ``delta`` stay ordered.

Both maps are monotone and immutable once built.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Protocol

from approx_veb.errors import DomainError
from approx_veb.word import FixedPoint, WordConfig, msb, shift_signed

logger = logging.getLogger(__name__)


class KeyMap(Protocol):
    """What the approximate structures need from a universe reduction."""

    word: WordConfig
    universe_max: FixedPoint
    reduced_size: int

    def map(self, x: FixedPoint) -> int: ...

    def representative(self, key: int) -> FixedPoint: ...


def ceil_log2(u: FixedPoint) -> int:
    """Return ``ceil(log2 u)`` for ``u >= 1``, computed from the msb."""
    top = msb(u.int_part)
    if u.frac_part == 0 and u.int_part == 1 << top:
        return top
    return top + 1


def precision_bits(epsilon: Fraction) -> int:
    """Return ``k = ceil(log2(1 / epsilon))`` exactly."""
    inverse = 1 / epsilon
    ceiling = -(-inverse.numerator // inverse.denominator)
    return (ceiling - 1).bit_length()


def _check_reduced_size(size: int, word: WordConfig) -> int:
    if size > 1 << (2 * word.b):
        raise DomainError("universe too large for word size")
    return size


@dataclass(frozen=True)
class MultiplicativeMap:
    """The ``(1 + epsilon)`` mapping over the universe ``[1, U]``.

    Use :meth:`create` rather than the constructor; it derives ``k`` and
    the reduced universe size from ``epsilon`` and ``U``.
    """

    epsilon: Fraction
    k: int
    universe_max: FixedPoint
    reduced_size: int
    word: WordConfig

    @classmethod
    def create(
        cls,
        epsilon: Fraction | int | float | str,
        universe_max: FixedPoint | int | Fraction,
        word: WordConfig | None = None,
    ) -> MultiplicativeMap:
        """Build the map for error ``epsilon`` and largest key ``universe_max``.

        An ``epsilon`` above 1 is clamped to 1, which gives the same
        ``k = 0`` mapping.

        Raises:
            DomainError: If ``epsilon <= 0``, if ``epsilon`` needs more
                precision bits than a word holds, if ``U < 1``, or if the
                reduced universe overflows ``2b`` bits.
        """
        word = word or WordConfig.default()
        eps = Fraction(str(epsilon)) if isinstance(epsilon, float) else Fraction(epsilon)
        if eps <= 0:
            raise DomainError(f"epsilon must be positive, got {eps}")
        if eps > 1:
            logger.warning("epsilon %s exceeds 1; clamping to 1", eps)
            eps = Fraction(1)
        k = precision_bits(eps)
        if k >= word.b:
            raise DomainError(
                f"epsilon {eps} needs {k} precision bits; at most {word.b - 1} fit"
            )
        top = FixedPoint.from_value(universe_max, word)
        if top.int_part < 1:
            raise DomainError("multiplicative universe must satisfy U >= 1")
        size = (1 << (k + 1)) * ceil_log2(top) + 1
        return cls(
            epsilon=eps,
            k=k,
            universe_max=top,
            reduced_size=_check_reduced_size(size, word),
            word=word,
        )

    def map(self, x: FixedPoint) -> int:
        """Map ``x`` to its reduced key; see :func:`map_multiplicative`."""
        return map_multiplicative(self, x)

    def representative(self, key: int) -> FixedPoint:
        """Return the least element that maps to ``key``.

        Representatives of consecutive keys differ by a factor of at
        least ``1 + 2**-(k + 1)``, which exceeds ``1 + epsilon / 4``.

        Raises:
            DomainError: If ``key`` is not the image of an element of ``[1, U]``.
        """
        if not 0 <= key < self.reduced_size:
            raise DomainError(f"key {key} outside reduced universe [0, {self.reduced_size})")
        b = self.word.b
        level, low = key >> self.k, key & ((1 << self.k) - 1)
        mantissa = (1 << self.k) | low
        least = FixedPoint.from_scaled(mantissa << (b + level - self.k), b)
        if least > self.universe_max:
            raise DomainError(f"key {key} is not the image of any element of [1, U]")
        return least


@dataclass(frozen=True)
class AdditiveMap:
    """The ``delta`` mapping ``x -> x div delta`` over the universe ``[0, U]``."""

    delta: FixedPoint
    universe_max: FixedPoint
    reduced_size: int
    word: WordConfig

    @classmethod
    def create(
        cls,
        delta: FixedPoint | int | Fraction | float,
        universe_max: FixedPoint | int | Fraction | float,
        word: WordConfig | None = None,
    ) -> AdditiveMap:
        """Build the map for additive error ``delta`` and largest key ``universe_max``.

        Raises:
            DomainError: If ``delta`` is zero or exceeds ``U``.
        """
        word = word or WordConfig.default()
        step = FixedPoint.from_value(delta, word)
        top = FixedPoint.from_value(universe_max, word)
        if step == FixedPoint(0, 0):
            raise DomainError("delta must be positive")
        if step > top:
            raise DomainError("delta must not exceed the universe maximum")
        size = top.scaled(word.b) // step.scaled(word.b) + 1
        return cls(
            delta=step,
            universe_max=top,
            reduced_size=_check_reduced_size(size, word),
            word=word,
        )

    def map(self, x: FixedPoint) -> int:
        """Map ``x`` to its reduced key; see :func:`map_additive`."""
        return map_additive(self, x)

    def representative(self, key: int) -> FixedPoint:
        """Return the least element that maps to ``key``, namely ``key * delta``.

        Raises:
            DomainError: If ``key`` is outside the reduced universe.
        """
        if not 0 <= key < self.reduced_size:
            raise DomainError(f"key {key} outside reduced universe [0, {self.reduced_size})")
        return FixedPoint.from_scaled(key * self.delta.scaled(self.word.b), self.word.b)


def map_multiplicative(m: MultiplicativeMap, x: FixedPoint) -> int:
    """Pack ``x`` as ``(msb(x) << k) | (k bits below the msb)``.

    With ``l = msb(i)`` for ``x = i + j / 2**b`` the key is
    ``(l << k) | ((i >> (l - k)) ^ (1 << k)) | (j >> (b + l - k))``.
    Both shifted pieces come from one signed shift of the two-word
    concatenation; when ``l < k`` fraction bits shift in.

    Raises:
        DomainError: If ``x < 1`` ("multiplicative key below 1") or ``x > U``.
    """
    b = m.word.b
    x.check(m.word)
    if x.int_part == 0:
        raise DomainError("multiplicative key below 1")
    if x > m.universe_max:
        raise DomainError("key exceeds universe")
    level = msb(x.int_part)
    top_bits = shift_signed(x.int_part, x.frac_part, level - m.k, b)
    return (level << m.k) | (top_bits ^ (1 << m.k))


def map_additive(m: AdditiveMap, x: FixedPoint) -> int:
    """Return ``floor(x / delta)`` on the exact ``2b``-bit representations.

    Raises:
        DomainError: If ``x > U`` ("key exceeds universe").
    """
    b = m.word.b
    x.check(m.word)
    if x > m.universe_max:
        raise DomainError("key exceeds universe")
    return x.scaled(b) // m.delta.scaled(b)


def reduced_universe_size(m: MultiplicativeMap | AdditiveMap) -> int:
    """Number of distinct reduced keys; every mapped key is strictly below it."""
    return m.reduced_size
