"""Approximate ordered multisets: a key map composed with an exact ``VebSet``.

Every answer equals the answer an exact structure would give on the
mapped keys.  Elements are stored as given, so ``element(name)`` returns
the caller's original value rather than a bucket representative.
"""

from __future__ import annotations

from enum import StrEnum
from fractions import Fraction
from typing import Any, Iterator

from approx_veb.errors import DomainError
from approx_veb.mapping import AdditiveMap, KeyMap, MultiplicativeMap
from approx_veb.structures.names import Name
from approx_veb.structures.node import VebStats
from approx_veb.structures.veb_set import VebSet
from approx_veb.word import FixedPoint, WordConfig

Number = FixedPoint | int | Fraction | float


class Variant(StrEnum):
    """Which error model a structure (or priority queue) uses."""

    EXACT = "exact"
    MULTIPLICATIVE = "mult"
    ADDITIVE = "add"


class ApproxVeb:
    """Approximate van Emde Boas multiset.

    Build instances through :meth:`multiplicative`, :meth:`additive` or
    :meth:`exact`; universe and error parameters are fixed for the
    lifetime of the structure.

    Names stay valid from the ``insert`` that returned them until the
    ``delete`` that consumes them; any later use raises
    ``StaleNameError``.
    """

    def __init__(self, key_map: KeyMap, variant: Variant) -> None:
        self.variant = variant
        self.map = key_map
        self.word = key_map.word
        self.core = VebSet(key_map.reduced_size, word=key_map.word)

    @classmethod
    def multiplicative(
        cls,
        epsilon: Fraction | int | float | str,
        universe_max: Number,
        word: WordConfig | None = None,
    ) -> ApproxVeb:
        """Multiset over ``[1, U]`` that orders keys differing by a factor ``>= 1 + epsilon``."""
        return cls(MultiplicativeMap.create(epsilon, universe_max, word), Variant.MULTIPLICATIVE)

    @classmethod
    def additive(
        cls, delta: Number, universe_max: Number, word: WordConfig | None = None
    ) -> ApproxVeb:
        """Multiset over ``[0, U]`` that orders keys differing by at least ``delta``."""
        return cls(AdditiveMap.create(delta, universe_max, word), Variant.ADDITIVE)

    @classmethod
    def exact(cls, universe_max: int, word: WordConfig | None = None) -> ApproxVeb:
        """Exact multiset over the integers ``[0, U]`` (additive map with ``delta = 1``)."""
        return cls(AdditiveMap.create(1, universe_max, word), Variant.EXACT)

    # ------------------------------------------------------------------
    # Updates
    # ------------------------------------------------------------------

    def insert(self, x: Number, datum: Any = None) -> Name:
        """Store ``x`` with ``datum`` under key ``map(x)``.

        Raises:
            DomainError: If ``x`` lies outside the variant's universe.
        """
        return self.core.insert(self.map_key(x), x, datum)

    def insert_before(self, anchor: Name, x: Number, datum: Any = None) -> Name:
        """Store ``x`` just before ``anchor`` inside their shared bucket.

        Raises:
            DomainError: If ``x`` does not map to ``anchor``'s key.
            StaleNameError: If the anchor was already consumed.
        """
        key = self.map_key(x)
        if key != self.core.key(anchor):
            raise DomainError(f"{x} maps to key {key}, not to the anchor's key")
        return self.core.insert_before(anchor, x, datum)

    def delete(self, name: Name) -> None:
        self.core.delete(name)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def search(self, x: Number) -> Name | None:
        """Name of the last occurrence with the largest mapped key ``<= map(x)``.

        Queries below the universe return ``None``; queries above it
        return the maximum.
        """
        if not isinstance(x, FixedPoint):
            if x < 0:
                return None
            if Fraction(x) > self.map.universe_max.to_fraction(self.word.b):
                return self.core.maximum()
        point = FixedPoint.from_value(x, self.word)
        if point > self.map.universe_max:
            return self.core.maximum()
        try:
            key = self.map.map(point)
        except DomainError:
            return None
        return self.core.search(key)

    def minimum(self) -> Name | None:
        return self.core.minimum()

    def maximum(self) -> Name | None:
        return self.core.maximum()

    def predecessor(self, name: Name) -> Name | None:
        return self.core.predecessor(name)

    def successor(self, name: Name) -> Name | None:
        return self.core.successor(name)

    def element(self, name: Name) -> Any:
        return self.core.element(name)

    def data(self, name: Name) -> Any:
        return self.core.data(name)

    def key(self, name: Name) -> int:
        """Mapped key of the occurrence ``name`` refers to."""
        return self.core.key(name)

    def map_key(self, x: Number) -> int:
        """Mapped key of ``x``.

        Raises:
            DomainError: If ``x`` lies outside the variant's universe.
        """
        return self.map.map(FixedPoint.from_value(x, self.word))

    # ------------------------------------------------------------------
    # Introspection
    # ------------------------------------------------------------------

    @property
    def stats(self) -> VebStats:
        return self.core.stats

    @property
    def reduced_size(self) -> int:
        return self.map.reduced_size

    def check_invariants(self) -> None:
        self.core.check_invariants()

    def __len__(self) -> int:
        return len(self.core)

    def __iter__(self) -> Iterator[Name]:
        return iter(self.core)
