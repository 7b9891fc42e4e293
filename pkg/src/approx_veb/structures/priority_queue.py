"""Priority queues backed by approximate van Emde Boas multisets.

``extract_min`` removes the first occurrence of the smallest mapped key,
so among priorities that share a bucket the earliest inserted wins.
Decrease-key is ``delete`` followed by ``insert``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Protocol

from pydantic import BaseModel

from approx_veb.errors import DomainError, EmptyQueueError
from approx_veb.structures.approx import ApproxVeb, Number, Variant
from approx_veb.structures.names import Name
from approx_veb.structures.node import VebStats
from approx_veb.word import WordConfig


class PriorityQueue(Protocol):
    """Interface the graph algorithms rely on."""

    def insert(self, priority: Any, item: Any) -> Name: ...

    def delete(self, name: Name) -> None: ...

    def extract_min(self) -> tuple[Any, Any]: ...

    def __len__(self) -> int: ...


class QueueSummary(BaseModel):
    """Operation and descent counters of one priority-queue run."""

    variant: Variant
    reduced_universe: int
    inserts: int
    deletes: int
    extractions: int
    total_descents: int
    max_descents: int
    nodes_peak: int


class VebPriorityQueue:
    """Min-priority queue over an ``ApproxVeb``.

    Args:
        veb: The structure holding ``priority -> item`` occurrences.
    """

    def __init__(self, veb: ApproxVeb) -> None:
        self.veb = veb
        self.inserts = 0
        self.deletes = 0
        self.extractions = 0

    def insert(self, priority: Number, item: Any) -> Name:
        self.inserts += 1
        return self.veb.insert(priority, item)

    def delete(self, name: Name) -> None:
        self.deletes += 1
        self.veb.delete(name)

    def peek_min(self) -> tuple[Number, Any]:
        """Return the entry ``extract_min`` would remove, without removing it.

        Raises:
            EmptyQueueError: If the queue is empty.
        """
        name = self.veb.minimum()
        if name is None:
            raise EmptyQueueError("priority queue is empty")
        return self.veb.element(name), self.veb.data(name)

    def extract_min(self) -> tuple[Number, Any]:
        """Remove and return ``(priority, item)`` with the smallest mapped priority.

        Raises:
            EmptyQueueError: If the queue is empty.
        """
        name = self.veb.minimum()
        if name is None:
            raise EmptyQueueError("extract_min on an empty priority queue")
        entry = self.veb.element(name), self.veb.data(name)
        self.veb.delete(name)
        self.extractions += 1
        return entry

    def error_bound(self, true_min: Fraction | int) -> Fraction:
        """Largest priority ``extract_min`` may return when the true minimum is ``true_min``."""
        bound = Fraction(true_min)
        match self.veb.variant:
            case Variant.MULTIPLICATIVE:
                return bound * (1 + self.veb.map.epsilon)
            case Variant.ADDITIVE:
                return bound + self.veb.map.delta.to_fraction(self.veb.word.b)
            case _:
                return bound

    @property
    def operations(self) -> int:
        return self.inserts + self.deletes + self.extractions

    @property
    def stats(self) -> VebStats:
        return self.veb.stats

    def summary(self) -> QueueSummary:
        stats = self.veb.stats
        return QueueSummary(
            variant=self.veb.variant,
            reduced_universe=self.veb.reduced_size,
            inserts=self.inserts,
            deletes=self.deletes,
            extractions=self.extractions,
            total_descents=stats.total_descents,
            max_descents=stats.max_descents,
            nodes_peak=stats.nodes_peak,
        )

    def __len__(self) -> int:
        return len(self.veb)

    def __bool__(self) -> bool:
        return len(self.veb) > 0


def make_priority_queue(
    variant: Variant,
    universe_max: int,
    *,
    epsilon: Fraction | None = None,
    delta: Number | None = None,
    word: WordConfig | None = None,
) -> VebPriorityQueue:
    """Build a priority queue for integer priorities in ``[1, universe_max]``.

    Raises:
        DomainError: If the parameter the variant needs is missing.
    """
    match variant:
        case Variant.MULTIPLICATIVE:
            if epsilon is None:
                raise DomainError("the multiplicative queue needs epsilon")
            veb = ApproxVeb.multiplicative(epsilon, universe_max, word)
        case Variant.ADDITIVE:
            if delta is None:
                raise DomainError("the additive queue needs delta")
            veb = ApproxVeb.additive(delta, universe_max, word)
        case _:
            veb = ApproxVeb.exact(universe_max, word)
    return VebPriorityQueue(veb)
