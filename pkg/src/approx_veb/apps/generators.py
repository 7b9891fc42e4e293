"""Seeded input generators for graphs and point streams."""

from __future__ import annotations

import random

from approx_veb.apps.graph import Graph
from approx_veb.apps.hull import Point, StreamOp
from approx_veb.errors import DomainError


def random_connected_graph(n: int, m: int, max_weight: int, seed: int = 0) -> Graph:
    """Undirected connected graph: a random spanning tree plus extra distinct edges.

    ``m`` is raised to ``n - 1`` and capped at ``n (n - 1) / 2``.
    """
    if max_weight < 1:
        raise DomainError("max_weight must be >= 1")
    rng = random.Random(seed)
    graph = Graph(n)
    seen: set[tuple[int, int]] = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[rng.randrange(i)], order[i]
        seen.add((min(u, v), max(u, v)))
        graph.add_edge(u, v, rng.randint(1, max_weight))
    target = min(max(m, n - 1), n * (n - 1) // 2)
    while graph.m < target:
        u, v = rng.randrange(n), rng.randrange(n)
        pair = (min(u, v), max(u, v))
        if u == v or pair in seen:
            continue
        seen.add(pair)
        graph.add_edge(u, v, rng.randint(1, max_weight))
    return graph


def random_digraph(n: int, m: int, max_weight: int, seed: int = 0) -> Graph:
    """Directed graph with ``m`` random arcs, self-loops excluded."""
    if max_weight < 1:
        raise DomainError("max_weight must be >= 1")
    rng = random.Random(seed)
    graph = Graph(n, directed=True)
    if n < 2:
        return graph
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        graph.add_edge(u, v, rng.randint(1, max_weight))
    return graph


def near_tied_path(n: int, weight: int, *, directed: bool = True) -> Graph:
    """Path ``0 - 1 - ... - n-1`` of equal weights plus near-tied shortcuts.

    Each shortcut ``(0, i)`` weighs one more than the path prefix it
    bypasses, so an approximate queue keeps confusing the two and the
    per-step error has the chance to compound along the path.
    """
    graph = Graph(n, directed=directed)
    for i in range(n - 1):
        graph.add_edge(i, i + 1, weight)
    for i in range(2, n):
        graph.add_edge(0, i, i * weight + 1)
    return graph


def random_points(n: int, radius: int, seed: int = 0) -> list[Point]:
    """``n`` points drawn uniformly from the square ``[-radius, radius]^2``."""
    rng = random.Random(seed)
    return [Point(rng.randint(-radius, radius), rng.randint(-radius, radius)) for _ in range(n)]


def random_point_stream(
    n: int, radius: int, seed: int = 0, queries: int = 0
) -> list[tuple[StreamOp, Point]]:
    """``n`` points with ``queries`` containment queries scattered after the first three."""
    rng = random.Random(seed)
    entries: list[tuple[StreamOp, Point]] = [
        (StreamOp.POINT, Point(rng.randint(-radius, radius), rng.randint(-radius, radius)))
        for _ in range(n)
    ]
    for _ in range(queries):
        q = Point(rng.randint(-radius, radius), rng.randint(-radius, radius))
        entries.insert(rng.randint(min(3, n), len(entries)), (StreamOp.QUERY, q))
    return entries
