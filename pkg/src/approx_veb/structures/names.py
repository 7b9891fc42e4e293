"""Occurrences, buckets and the opaque names handed out by ``insert``.

Every stored occurrence lives in a bucket: a doubly-linked list of the
occurrences that share one key, in insertion order.  Buckets are in turn
linked in increasing key order.  A name is a pointer to one occurrence
plus the generation the occurrence had when the name was issued;
deleting the occurrence bumps its generation, so later use of the name
is detected instead of silently reading freed state.
"""

from __future__ import annotations

from typing import Any


class Occurrence:
    """One stored (element, datum) pair inside a bucket."""

    __slots__ = ("bucket", "element", "datum", "generation", "prev", "next")

    def __init__(self, bucket: Bucket, element: Any, datum: Any) -> None:
        self.bucket: Bucket | None = bucket
        self.element = element
        self.datum = datum
        self.generation = 0
        self.prev: Occurrence | None = None
        self.next: Occurrence | None = None


class Name:
    """Opaque handle to one stored occurrence.

    Two names are equal when they refer to the same occurrence in the
    same generation, so a name returned by ``search`` compares equal to
    the one returned by the ``insert`` that created the occurrence.
    """

    __slots__ = ("_occurrence", "_generation")

    def __init__(self, occurrence: Occurrence) -> None:
        self._occurrence = occurrence
        self._generation = occurrence.generation

    @property
    def occurrence(self) -> Occurrence:
        return self._occurrence

    @property
    def generation(self) -> int:
        return self._generation

    @property
    def is_live(self) -> bool:
        return self._occurrence.generation == self._generation

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Name):
            return NotImplemented
        return (
            self._occurrence is other._occurrence
            and self._generation == other._generation
        )

    def __hash__(self) -> int:
        return hash((id(self._occurrence), self._generation))

    def __repr__(self) -> str:
        state = "live" if self.is_live else "stale"
        return f"Name({self._occurrence.element!r}, {state})"


class Bucket:
    """All occurrences of one key, plus links to the neighbouring buckets."""

    __slots__ = ("key", "owner", "first", "last", "size", "prev", "next")

    def __init__(self, key: int, owner: object) -> None:
        self.key = key
        self.owner = owner
        self.first: Occurrence | None = None
        self.last: Occurrence | None = None
        self.size = 0
        self.prev: Bucket | None = None
        self.next: Bucket | None = None

    def append(self, element: Any, datum: Any) -> Occurrence:
        """Add a new occurrence at the end of the bucket. O(1)."""
        occ = Occurrence(self, element, datum)
        occ.prev = self.last
        if self.last is not None:
            self.last.next = occ
        else:
            self.first = occ
        self.last = occ
        self.size += 1
        return occ

    def insert_before(self, anchor: Occurrence, element: Any, datum: Any) -> Occurrence:
        """Add a new occurrence just before ``anchor``. O(1)."""
        occ = Occurrence(self, element, datum)
        occ.prev, occ.next = anchor.prev, anchor
        if anchor.prev is not None:
            anchor.prev.next = occ
        else:
            self.first = occ
        anchor.prev = occ
        self.size += 1
        return occ

    def remove(self, occ: Occurrence) -> None:
        """Unlink ``occ`` and invalidate every name that points at it. O(1)."""
        if occ.prev is not None:
            occ.prev.next = occ.next
        else:
            self.first = occ.next
        if occ.next is not None:
            occ.next.prev = occ.prev
        else:
            self.last = occ.prev
        occ.prev = occ.next = None
        occ.bucket = None
        occ.generation += 1
        self.size -= 1

    def __iter__(self):
        occ = self.first
        while occ is not None:
            yield occ
            occ = occ.next
