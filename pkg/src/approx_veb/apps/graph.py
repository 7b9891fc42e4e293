"""Weighted graphs and the edge-list file format.

The format is one header line ``n m`` followed by ``m`` lines ``u v w``
with 0-indexed vertices and integer weights ``w >= 1``.  Everything
after a ``#`` is a comment; blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from approx_veb.errors import DomainError, InputError


@dataclass(frozen=True, slots=True)
class Edge:
    """One weighted edge; ``u -> v`` when the graph is directed."""

    u: int
    v: int
    weight: int


class Graph:
    """Adjacency-list graph over the vertices ``0 .. n - 1``.

    Undirected edges are stored in both adjacency lists; ``edges`` keeps
    each edge once, in insertion order.
    """

    def __init__(self, n: int, edges: Iterable[Edge] = (), *, directed: bool = False) -> None:
        if n < 1:
            raise DomainError("a graph needs at least one vertex")
        self.n = n
        self.directed = directed
        self.edges: list[Edge] = []
        self.adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for edge in edges:
            self.add_edge(edge.u, edge.v, edge.weight)

    def add_edge(self, u: int, v: int, weight: int) -> Edge:
        """Append an edge and return it.

        Raises:
            DomainError: If a vertex is out of range or ``weight < 1``.
        """
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise DomainError(f"edge ({u}, {v}) has a vertex outside [0, {self.n})")
        if weight < 1:
            raise DomainError(f"edge ({u}, {v}) has weight {weight}; weights must be >= 1")
        edge = Edge(u, v, weight)
        self.edges.append(edge)
        self.adjacency[u].append((v, weight))
        if not self.directed:
            self.adjacency[v].append((u, weight))
        return edge

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_weight(self) -> int:
        """Largest edge weight, or 1 for an edgeless graph."""
        return max((e.weight for e in self.edges), default=1)

    def neighbors(self, u: int) -> list[tuple[int, int]]:
        return self.adjacency[u]

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind})"


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split("#", 1)[0].split()
        if fields:
            yield lineno, fields


def _ints(fields: list[str], lineno: int, expected: str) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise InputError(lineno, expected) from None


def parse_graph(text: str, *, directed: bool = False) -> Graph:
    """Parse the edge-list format into a :class:`Graph`.

    Raises:
        InputError: With the 1-based line number of the first bad line.
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise InputError(1, "n m")
    lineno, fields = header
    if len(fields) != 2:
        raise InputError(lineno, "n m")
    n, m = _ints(fields, lineno, "n m")
    if n < 1 or m < 0:
        raise InputError(lineno, "n m")

    graph = Graph(n, directed=directed)
    last = lineno
    for lineno, fields in lines:
        last = lineno
        if graph.m == m:
            raise InputError(lineno, "end of input")
        if len(fields) != 3:
            raise InputError(lineno, "u v w")
        u, v, w = _ints(fields, lineno, "u v w")
        try:
            graph.add_edge(u, v, w)
        except DomainError:
            raise InputError(lineno, "u v w") from None
    if graph.m != m:
        raise InputError(last + 1, "u v w")
    return graph


def dump_graph(graph: Graph) -> str:
    """Render ``graph`` in the edge-list format."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{e.u} {e.v} {e.weight}" for e in graph.edges)
    return "\n".join(lines) + "\n"
