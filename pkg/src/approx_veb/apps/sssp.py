"""Dijkstra's single-source shortest paths over a pluggable priority queue.

A vertex is final once extracted.  For a ``(1 + epsilon)`` guarantee the
queue runs with multiplicative error ``epsilon / (2n)``; the error
compounds at most ``n`` times, and ``(1 + epsilon / (2n)) ** n`` stays
below ``1 + epsilon`` for ``epsilon <= 2``.  An additive queue with error
``delta`` overestimates each distance by less than ``n * delta``.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from pydantic import BaseModel

from approx_veb.apps.graph import Graph
from approx_veb.config import settings
from approx_veb.errors import DomainError
from approx_veb.structures import Name, QueueSummary, Variant, make_priority_queue
from approx_veb.word import WordConfig

logger = logging.getLogger(__name__)


class SsspResult(BaseModel):
    """Distances and the shortest-path tree found from ``source``.

    ``dist[v]`` and ``parent[v]`` are ``None`` for vertices the source
    cannot reach.  Every finite ``dist[v]`` is the length of an actual
    path, so it is never below the true distance.
    """

    source: int
    variant: Variant
    epsilon: str | None = None
    delta: str | None = None
    dist: list[int | None]
    parent: list[int | None]
    extracted: list[int]
    queue: QueueSummary

    def distance_bound(self, true_distance: int) -> Fraction:
        """Largest distance the run's guarantee allows for ``true_distance``."""
        match self.variant:
            case Variant.MULTIPLICATIVE:
                return true_distance * (1 + Fraction(self.epsilon))
            case Variant.ADDITIVE:
                return true_distance + len(self.dist) * Fraction(self.delta)
            case _:
                return Fraction(true_distance)


def internal_epsilon(epsilon: Fraction, n: int) -> Fraction:
    """Queue error that yields a ``(1 + epsilon)`` bound over ``n`` vertices."""
    return epsilon / (2 * n)


def dijkstra_sssp(
    graph: Graph,
    source: int,
    variant: Variant = Variant.MULTIPLICATIVE,
    epsilon: Fraction | str | None = None,
    *,
    delta: Fraction | int | None = None,
    word: WordConfig | None = None,
) -> SsspResult:
    """Compute approximate distances from ``source``.

    The queue's universe is ``[1, n * max_weight]``, which bounds every
    simple path length.

    Raises:
        DomainError: If ``source`` is out of range, or if ``epsilon`` is
            outside ``(0, 2]`` for the multiplicative queue.
    """
    n = graph.n
    if not 0 <= source < n:
        raise DomainError(f"source {source} outside [0, {n})")
    eps = Fraction(epsilon if epsilon is not None else settings.default_epsilon)
    if variant is Variant.MULTIPLICATIVE and not 0 < eps <= 2:
        raise DomainError(f"epsilon must lie in (0, 2], got {eps}")
    pq = make_priority_queue(
        variant,
        n * graph.max_weight,
        epsilon=internal_epsilon(eps, n),
        delta=delta,
        word=word,
    )

    dist: list[int | None] = [None] * n
    parent: list[int | None] = [None] * n
    done = [False] * n
    names: dict[int, Name] = {}

    def relax(u: int) -> None:
        done[u] = True
        base = dist[u]
        for v, w in graph.neighbors(u):
            if done[v]:
                continue
            candidate = base + w
            if dist[v] is not None and candidate >= dist[v]:
                continue
            if v in names:
                pq.delete(names[v])
            names[v] = pq.insert(candidate, v)
            dist[v] = candidate
            parent[v] = u

    dist[source] = 0
    extracted: list[int] = []
    relax(source)
    while pq:
        d, u = pq.extract_min()
        del names[u]
        extracted.append(d)
        relax(u)

    logger.info(
        "dijkstra: n=%d m=%d reached=%d queue ops=%d",
        n,
        graph.m,
        sum(done),
        pq.operations,
    )
    return SsspResult(
        source=source,
        variant=variant,
        epsilon=str(eps) if variant is Variant.MULTIPLICATIVE else None,
        delta=str(Fraction(delta)) if variant is Variant.ADDITIVE else None,
        dist=dist,
        parent=parent,
        extracted=extracted,
        queue=pq.summary(),
    )
