"""Sorted-list reference multiset.

Entries are kept sorted by ``(key, sequence number)``, so occurrences of
one key stay in insertion order.  Tokens are the sequence numbers.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort
from typing import Any

from approx_veb.errors import DomainError, StaleNameError


class OracleMultiset:
    """Obvious-by-construction ordered multiset over integer keys."""

    def __init__(self, universe_size: int | None = None) -> None:
        self.universe_size = universe_size
        self._entries: list[tuple[int, int]] = []
        self._payload: dict[int, tuple[int, Any, Any]] = {}
        self._next_seq = 0

    def __len__(self) -> int:
        return len(self._entries)

    def insert(self, key: int, element: Any = None, datum: Any = None) -> int:
        if key < 0 or (self.universe_size is not None and key >= self.universe_size):
            raise DomainError(f"key {key} outside universe")
        seq = self._next_seq
        self._next_seq += 1
        insort(self._entries, (key, seq))
        self._payload[seq] = (key, element, datum)
        return seq

    def delete(self, token: int) -> None:
        key = self._key(token)
        self._entries.remove((key, token))
        del self._payload[token]

    def search(self, q: int) -> int | None:
        """Token of the last occurrence of the largest key ``<= q``."""
        i = bisect_right(self._entries, (q, float("inf")))
        return self._entries[i - 1][1] if i else None

    def minimum(self) -> int | None:
        return self._entries[0][1] if self._entries else None

    def maximum(self) -> int | None:
        return self._entries[-1][1] if self._entries else None

    def predecessor(self, token: int) -> int | None:
        i = self._index(token)
        return self._entries[i - 1][1] if i > 0 else None

    def successor(self, token: int) -> int | None:
        i = self._index(token)
        return self._entries[i + 1][1] if i + 1 < len(self._entries) else None

    def key(self, token: int) -> int:
        return self._key(token)

    def element(self, token: int) -> Any:
        self._key(token)
        return self._payload[token][1]

    def data(self, token: int) -> Any:
        self._key(token)
        return self._payload[token][2]

    def keys(self) -> list[int]:
        """Distinct keys in increasing order."""
        return sorted({k for k, _ in self._entries})

    def _key(self, token: int) -> int:
        if token not in self._payload:
            raise StaleNameError(f"token {token} is not live")
        return self._payload[token][0]

    def _index(self, token: int) -> int:
        return bisect_left(self._entries, (self._key(token), token))
