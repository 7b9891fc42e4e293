"""Recursive van Emde Boas nodes over a padded universe ``b ** (2 ** level)``.

A node at level 0 covers ``b`` keys with a single bit-vector word.  A
node at level ``j > 0`` splits a key ``q`` into ``hi, lo = divmod(q, half)``
with ``half = b ** (2 ** (j - 1))``; ``clusters[hi]`` holds the ``lo``
parts and ``summary`` holds the indices of the non-empty clusters.

Children exist only while the node holds at least two distinct keys; a
single key is kept in the cached ``min``/``max``.  Nodes store distinct
keys only.  Multiplicity lives in the buckets of the owning set.

Each operation makes at most one non-constant-time call per level.
Those calls are counted in ``VebStats.last_descents``; calls into base
nodes and calls that are constant by construction (insert into an empty
node, delete from a node holding at most two keys) are not counted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from approx_veb.errors import InvariantViolation
from approx_veb.word import lsb, mask_through, msb, word_mask


@dataclass
class VebStats:
    """Instrumentation shared by all nodes of one set."""

    operations: Counter[str] = field(default_factory=Counter)
    last_descents: int = 0
    total_descents: int = 0
    max_descents: int = 0
    nodes_live: int = 0
    nodes_peak: int = 0

    def begin(self, op: str) -> None:
        self.operations[op] += 1
        self.last_descents = 0

    def end(self) -> None:
        self.total_descents += self.last_descents
        self.max_descents = max(self.max_descents, self.last_descents)

    def node_created(self) -> None:
        self.nodes_live += 1
        self.nodes_peak = max(self.nodes_peak, self.nodes_live)

    @property
    def total_operations(self) -> int:
        return sum(self.operations.values())


class Neighbor(NamedTuple):
    """Closest existing key to a freshly inserted one.

    ``below`` is true when ``key`` is the predecessor and false when it
    is the successor.
    """

    key: int
    below: bool


def tower_level(universe_size: int, b: int) -> int:
    """Smallest ``j`` with ``b ** (2 ** j) >= universe_size``."""
    level, size = 0, b
    while size < universe_size:
        level += 1
        size *= size
    return level


class VebNode:
    """One recursion level of the exact structure."""

    __slots__ = (
        "level",
        "b",
        "half",
        "count",
        "min",
        "max",
        "word",
        "clusters",
        "summary",
        "stats",
    )

    def __init__(self, level: int, b: int, stats: VebStats) -> None:
        self.level = level
        self.b = b
        self.half = b ** (1 << (level - 1)) if level else 0
        self.count = 0
        self.min: int | None = None
        self.max: int | None = None
        self.word = 0
        self.clusters: dict[int, VebNode] | None = None
        self.summary: VebNode | None = None
        self.stats = stats
        stats.node_created()

    @property
    def universe(self) -> int:
        return self.b ** (1 << self.level)

    # ------------------------------------------------------------------
    # Search
    # ------------------------------------------------------------------

    def search(self, q: int) -> int | None:
        """Return the largest stored key ``<= q``, or ``None``."""
        if self.count == 0 or q < self.min:
            return None
        if q >= self.max:
            return self.max
        if self.level == 0:
            return msb(self.word & mask_through(q, self.b))

        hi, lo = divmod(q, self.half)
        cluster = self.clusters.get(hi)
        if cluster is not None and lo >= cluster.min:
            return hi * self.half + self._descend_search(cluster, lo)
        # The minimum sits in an earlier cluster, so ``prev`` exists.
        prev = self._descend_search(self.summary, hi - 1)
        return prev * self.half + self.clusters[prev].max

    def _descend_search(self, child: VebNode, q: int) -> int | None:
        if child.level:
            self.stats.last_descents += 1
        return child.search(q)

    # ------------------------------------------------------------------
    # Insert
    # ------------------------------------------------------------------

    def insert(self, q: int) -> Neighbor | None:
        """Add the absent key ``q`` and return its nearest existing neighbour."""
        if self.count == 0:
            self.count = 1
            self.min = self.max = q
            if self.level == 0:
                self.word = 1 << q
            return None

        if self.level == 0:
            neighbor = self._base_neighbor(q)
            self.word |= 1 << q
        else:
            neighbor = self._insert_recursive(q)

        self.count += 1
        if q < self.min:
            self.min = q
        if q > self.max:
            self.max = q
        return neighbor

    def _base_neighbor(self, q: int) -> Neighbor:
        below = self.word & mask_through(q - 1, self.b)
        if below:
            return Neighbor(msb(below), True)
        above = self.word & ~mask_through(q, self.b) & word_mask(self.b)
        return Neighbor(lsb(above), False)

    def _insert_recursive(self, q: int) -> Neighbor:
        neighbor: Neighbor | None = None
        if self.count == 1:
            existing = self.min
            self._instantiate(existing)
            neighbor = Neighbor(existing, existing < q)

        hi, lo = divmod(q, self.half)
        cluster = self.clusters.get(hi)
        if cluster is not None:
            inner = self._descend_insert(cluster, lo)
            if neighbor is None:
                neighbor = Neighbor(hi * self.half + inner.key, inner.below)
            return neighbor

        cluster = VebNode(self.level - 1, self.b, self.stats)
        cluster.insert(lo)
        self.clusters[hi] = cluster
        outer = self._descend_insert(self.summary, hi)
        if neighbor is None:
            side = self.clusters[outer.key]
            offset = side.max if outer.below else side.min
            neighbor = Neighbor(outer.key * self.half + offset, outer.below)
        return neighbor

    def _instantiate(self, existing: int) -> None:
        """Build the children for the 1 -> 2 transition, holding ``existing``."""
        hi, lo = divmod(existing, self.half)
        cluster = VebNode(self.level - 1, self.b, self.stats)
        cluster.insert(lo)
        self.clusters = {hi: cluster}
        self.summary = VebNode(self.level - 1, self.b, self.stats)
        self.summary.insert(hi)

    def _descend_insert(self, child: VebNode, q: int) -> Neighbor:
        if child.level and child.count:
            self.stats.last_descents += 1
        neighbor = child.insert(q)
        assert neighbor is not None  # noqa: S101
        return neighbor

    # ------------------------------------------------------------------
    # Delete
    # ------------------------------------------------------------------

    def delete(self, q: int) -> None:
        """Remove the present key ``q``."""
        if self.count == 1:
            self.count = 0
            self.min = self.max = None
            self.word = 0
            return

        if self.level == 0:
            self.word &= ~(1 << q)
            self.count -= 1
            self.min = lsb(self.word)
            self.max = msb(self.word)
            return

        if self.count == 2:
            remaining = self.max if q == self.min else self.min
            self._release_children()
            self.count = 1
            self.min = self.max = remaining
            return

        hi, lo = divmod(q, self.half)
        cluster = self.clusters[hi]
        if cluster.count == 1:
            del self.clusters[hi]
            self.stats.nodes_live -= 1
            self._descend_delete(self.summary, hi)
        else:
            self._descend_delete(cluster, lo)

        self.count -= 1
        if q == self.min:
            first = self.summary.min
            self.min = first * self.half + self.clusters[first].min
        if q == self.max:
            last = self.summary.max
            self.max = last * self.half + self.clusters[last].max

    def _descend_delete(self, child: VebNode, q: int) -> None:
        if child.level and child.count >= 2:
            self.stats.last_descents += 1
        child.delete(q)

    def _release_children(self) -> None:
        released = self.summary.subtree_nodes() + sum(
            c.subtree_nodes() for c in self.clusters.values()
        )
        self.stats.nodes_live -= released
        self.clusters = None
        self.summary = None

    # ------------------------------------------------------------------
    # Introspection
    # ------------------------------------------------------------------

    def subtree_nodes(self) -> int:
        """Number of nodes in this subtree, this node included."""
        if self.clusters is None:
            return 1
        return (
            1
            + self.summary.subtree_nodes()
            + sum(c.subtree_nodes() for c in self.clusters.values())
        )

    def iter_keys(self) -> Iterator[int]:
        """Yield the stored keys in increasing order."""
        if self.count == 0:
            return
        if self.level == 0:
            word = self.word
            while word:
                low = lsb(word)
                yield low
                word &= word - 1
            return
        if self.count == 1:
            yield self.min
            return
        for hi in self.summary.iter_keys():
            for lo in self.clusters[hi].iter_keys():
                yield hi * self.half + lo

    def check(self) -> None:
        """Verify the structural invariants of this subtree.

        Raises:
            InvariantViolation: On the first inconsistency found.
        """
        if self.count == 0:
            _require(self.min is None and self.max is None, "empty node caches a key")
            _require(self.clusters is None and self.summary is None, "empty node has children")
            _require(self.word == 0, "empty node has bits set")
            return

        if self.level == 0:
            _require(self.word.bit_count() == self.count, "bit count differs from count")
            _require(self.min == lsb(self.word), "base min cache is stale")
            _require(self.max == msb(self.word), "base max cache is stale")
            _require(self.clusters is None and self.summary is None, "base node has children")
            return

        if self.count == 1:
            _require(self.min == self.max, "singleton min and max differ")
            _require(
                self.clusters is None and self.summary is None,
                "children exist with fewer than two keys",
            )
            return

        _require(self.clusters is not None and self.summary is not None, "children missing")
        self.summary.check()
        indices = list(self.summary.iter_keys())
        _require(indices == sorted(self.clusters), "summary differs from non-empty clusters")
        _require(all(c.count for c in self.clusters.values()), "empty cluster kept")
        _require(
            self.count == sum(c.count for c in self.clusters.values()),
            "count differs from the sum over clusters",
        )
        for cluster in self.clusters.values():
            cluster.check()
        keys = list(self.iter_keys())
        _require(self.min == keys[0] and self.max == keys[-1], "min/max cache is stale")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantViolation(message)
