"""Exact ordered multiset over an integer universe ``{L, ..., L + size - 1}``.

The skeleton is an ordered, doubly-linked list of buckets plus a
dictionary from key to bucket; together they answer ``minimum``,
``maximum``, ``predecessor`` and ``successor`` in constant time.  The
recursive node tree only serves ``search`` and keeps itself in step
with the bucket list on ``insert``/``delete``.

A ``VebSet`` is single-writer: queries may run concurrently with each
other but never with a mutation.
"""

from __future__ import annotations

from typing import Any, Iterator

from approx_veb.errors import DomainError, InvariantViolation, StaleNameError
from approx_veb.structures.names import Bucket, Name, Occurrence
from approx_veb.structures.node import VebNode, VebStats, tower_level
from approx_veb.word import WordConfig


class VebSet:
    """Exact van Emde Boas multiset with constant-time name-based access.

    Args:
        universe_size: Number of keys the set must accept.  It is padded
            up to the next ``b ** (2 ** j)``.
        low: Smallest accepted key ``L``; keys are stored as ``key - L``.
        word: Word configuration; defaults to ``WordConfig.default()``.
    """

    def __init__(
        self,
        universe_size: int,
        *,
        low: int = 0,
        word: WordConfig | None = None,
    ) -> None:
        if universe_size < 1:
            raise DomainError("universe must hold at least one key")
        self._word = word or WordConfig.default()
        self._low = low
        self._universe_size = universe_size
        self.stats = VebStats()
        self._root = VebNode(tower_level(universe_size, self._word.b), self._word.b, self.stats)
        self._buckets: dict[int, Bucket] = {}
        self._head: Bucket | None = None
        self._tail: Bucket | None = None
        self._size = 0

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def universe_size(self) -> int:
        return self._universe_size

    @property
    def padded_universe(self) -> int:
        return self._root.universe

    @property
    def depth(self) -> int:
        """Tower level ``j`` of the root node."""
        return self._root.level

    @property
    def word(self) -> WordConfig:
        return self._word

    @property
    def distinct(self) -> int:
        return len(self._buckets)

    @property
    def root(self) -> VebNode:
        return self._root

    def allocated(self) -> int:
        """Live recursion nodes plus buckets."""
        return self.stats.nodes_live + len(self._buckets)

    def __len__(self) -> int:
        return self._size

    def __contains__(self, key: object) -> bool:
        return key in self._buckets

    def __iter__(self) -> Iterator[Name]:
        bucket = self._head
        while bucket is not None:
            for occ in bucket:
                yield Name(occ)
            bucket = bucket.next

    def keys(self) -> Iterator[int]:
        """Yield the distinct keys in increasing order."""
        bucket = self._head
        while bucket is not None:
            yield bucket.key
            bucket = bucket.next

    # ------------------------------------------------------------------
    # Updates
    # ------------------------------------------------------------------

    def insert(self, key: int, element: Any = None, datum: Any = None) -> Name:
        """Store a new occurrence of ``key`` and return its name.

        The occurrence goes to the end of its bucket.  A new bucket is
        spliced next to the neighbour reported by the node tree.

        Raises:
            DomainError: If ``key`` is outside the universe.
        """
        local = self._local(key)
        self.stats.begin("insert")
        bucket = self._buckets.get(key)
        if bucket is None:
            bucket = Bucket(key, self)
            neighbor = self._root.insert(local)
            if neighbor is None:
                self._head = self._tail = bucket
            elif neighbor.below:
                self._link_after(self._buckets[neighbor.key + self._low], bucket)
            else:
                self._link_before(self._buckets[neighbor.key + self._low], bucket)
            self._buckets[key] = bucket
        occ = bucket.append(element, datum)
        self._size += 1
        self.stats.end()
        return Name(occ)

    def insert_before(self, anchor: Name, element: Any = None, datum: Any = None) -> Name:
        """Store a new occurrence of ``anchor``'s key just before ``anchor``.

        The bucket already exists, so the node tree is untouched.

        Raises:
            StaleNameError: If the anchor was already consumed.
        """
        occ = self._resolve(anchor)
        self.stats.begin("insert")
        new = occ.bucket.insert_before(occ, element, datum)
        self._size += 1
        self.stats.end()
        return Name(new)

    def delete(self, name: Name) -> None:
        """Remove the occurrence ``name`` refers to.

        Raises:
            StaleNameError: If the name was already consumed.
        """
        occ = self._resolve(name)
        bucket = occ.bucket
        self.stats.begin("delete")
        bucket.remove(occ)
        self._size -= 1
        if bucket.size == 0:
            self._unlink(bucket)
            del self._buckets[bucket.key]
            self._root.delete(bucket.key - self._low)
        self.stats.end()

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def search(self, q: int) -> Name | None:
        """Return the last occurrence of the largest key ``<= q``, or ``None``."""
        self.stats.begin("search")
        bucket = self._locate(q)
        self.stats.end()
        return Name(bucket.last) if bucket is not None else None

    def _locate(self, q: int) -> Bucket | None:
        if self._head is None or q < self._head.key:
            return None
        if q >= self._tail.key:
            return self._tail
        bucket = self._buckets.get(q)
        if bucket is not None:
            return bucket
        found = self._root.search(q - self._low)
        return self._buckets[found + self._low]

    def minimum(self) -> Name | None:
        return Name(self._head.first) if self._head is not None else None

    def maximum(self) -> Name | None:
        return Name(self._tail.last) if self._tail is not None else None

    def predecessor(self, name: Name) -> Name | None:
        """Occurrence just before ``name`` in list order.

        Raises:
            StaleNameError: If the name was already consumed.
        """
        occ = self._resolve(name)
        if occ.prev is not None:
            return Name(occ.prev)
        prev_bucket = occ.bucket.prev
        return Name(prev_bucket.last) if prev_bucket is not None else None

    def successor(self, name: Name) -> Name | None:
        """Occurrence just after ``name`` in list order.

        Raises:
            StaleNameError: If the name was already consumed.
        """
        occ = self._resolve(name)
        if occ.next is not None:
            return Name(occ.next)
        next_bucket = occ.bucket.next
        return Name(next_bucket.first) if next_bucket is not None else None

    def element(self, name: Name) -> Any:
        return self._resolve(name).element

    def data(self, name: Name) -> Any:
        return self._resolve(name).datum

    def key(self, name: Name) -> int:
        return self._resolve(name).bucket.key

    # ------------------------------------------------------------------
    # Self-check
    # ------------------------------------------------------------------

    def check_invariants(self) -> None:
        """Verify list, dictionary and node tree agree.

        Raises:
            InvariantViolation: On the first inconsistency found.
        """
        self._root.check()
        listed: list[int] = []
        occurrences = 0
        prev: Bucket | None = None
        bucket = self._head
        while bucket is not None:
            if bucket.prev is not prev:
                raise InvariantViolation(f"bucket {bucket.key} has a broken back link")
            if bucket.size == 0 or bucket.first is None:
                raise InvariantViolation(f"bucket {bucket.key} is empty")
            if listed and bucket.key <= listed[-1]:
                raise InvariantViolation("bucket list is not strictly increasing")
            if sum(1 for _ in bucket) != bucket.size:
                raise InvariantViolation(f"bucket {bucket.key} size is stale")
            listed.append(bucket.key)
            occurrences += bucket.size
            prev, bucket = bucket, bucket.next
        if prev is not self._tail:
            raise InvariantViolation("tail pointer is stale")
        if sorted(self._buckets) != listed:
            raise InvariantViolation("dictionary differs from bucket list")
        if [k + self._low for k in self._root.iter_keys()] != listed:
            raise InvariantViolation("node tree differs from bucket list")
        if occurrences != self._size:
            raise InvariantViolation("occurrence count is stale")
        if self._root.subtree_nodes() != self.stats.nodes_live:
            raise InvariantViolation("live node counter is stale")

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------

    def _local(self, key: int) -> int:
        local = key - self._low
        if not 0 <= local < self._universe_size:
            raise DomainError(
                f"key {key} outside universe [{self._low}, {self._low + self._universe_size})"
            )
        return local

    def _resolve(self, name: Name) -> Occurrence:
        occ = name.occurrence
        if not name.is_live or occ.bucket is None or occ.bucket.owner is not self:
            raise StaleNameError("name refers to a deleted or foreign occurrence")
        return occ

    def _link_after(self, anchor: Bucket, bucket: Bucket) -> None:
        bucket.prev, bucket.next = anchor, anchor.next
        if anchor.next is not None:
            anchor.next.prev = bucket
        else:
            self._tail = bucket
        anchor.next = bucket

    def _link_before(self, anchor: Bucket, bucket: Bucket) -> None:
        bucket.prev, bucket.next = anchor.prev, anchor
        if anchor.prev is not None:
            anchor.prev.next = bucket
        else:
            self._head = bucket
        anchor.prev = bucket

    def _unlink(self, bucket: Bucket) -> None:
        if bucket.prev is not None:
            bucket.prev.next = bucket.next
        else:
            self._head = bucket.next
        if bucket.next is not None:
            bucket.next.prev = bucket.prev
        else:
            self._tail = bucket.prev
        bucket.prev = bucket.next = None
