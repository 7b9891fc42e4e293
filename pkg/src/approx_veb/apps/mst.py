"""Prim's minimum spanning tree over a pluggable priority queue.

With a ``(1 + epsilon)`` multiplicative queue every extracted edge is
within a factor ``1 + epsilon`` of the lightest edge leaving the tree,
so the tree weighs at most ``(1 + epsilon) * OPT``.  With an additive
queue of error ``delta`` it weighs at most ``OPT + (n - 1) * delta``.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from pydantic import BaseModel

from approx_veb.apps.graph import Edge, Graph
from approx_veb.config import settings
from approx_veb.errors import DisconnectedGraphError, DomainError
from approx_veb.structures import (
    Name,
    QueueSummary,
    Variant,
    VebPriorityQueue,
    make_priority_queue,
)
from approx_veb.word import WordConfig

logger = logging.getLogger(__name__)


class MstResult(BaseModel):
    """A spanning tree and the queue counters of the run that found it."""

    variant: Variant
    epsilon: str | None = None
    delta: str | None = None
    edges: list[tuple[int, int, int]]
    total_weight: int
    extracted: list[int]
    queue: QueueSummary

    def weight_bound(self, optimum: int) -> Fraction:
        """Largest total weight the run's guarantee allows for ``optimum``."""
        match self.variant:
            case Variant.MULTIPLICATIVE:
                return optimum * (1 + Fraction(self.epsilon))
            case Variant.ADDITIVE:
                return optimum + len(self.edges) * Fraction(self.delta)
            case _:
                return Fraction(optimum)


def prim_mst(
    graph: Graph,
    variant: Variant = Variant.MULTIPLICATIVE,
    epsilon: Fraction | str | None = None,
    *,
    delta: Fraction | int | None = None,
    word: WordConfig | None = None,
    root: int = 0,
) -> MstResult:
    """Grow a spanning tree from ``root``, extracting edges from the chosen queue.

    Decrease-key is a ``delete`` of the vertex's old entry followed by an
    ``insert`` with the lighter edge.

    Args:
        graph: An undirected graph with weights ``>= 1``.
        variant: Which queue to use.
        epsilon: Multiplicative error; defaults to ``settings.default_epsilon``.
        delta: Additive error, required for ``Variant.ADDITIVE``.
        word: Word configuration of the queue.
        root: Vertex the tree grows from.

    Raises:
        DomainError: If the graph is directed or ``root`` is out of range.
        DisconnectedGraphError: If some vertex cannot be reached from ``root``.
    """
    if graph.directed:
        raise DomainError("minimum spanning trees need an undirected graph")
    if not 0 <= root < graph.n:
        raise DomainError(f"root {root} outside [0, {graph.n})")
    eps = Fraction(epsilon if epsilon is not None else settings.default_epsilon)
    pq = make_priority_queue(
        variant, graph.max_weight, epsilon=eps, delta=delta, word=word
    )

    n = graph.n
    in_tree = [False] * n
    best: list[int | None] = [None] * n
    parent: list[int] = [-1] * n
    names: dict[int, Name] = {}

    def scan(u: int) -> None:
        in_tree[u] = True
        for v, w in graph.neighbors(u):
            if in_tree[v] or (best[v] is not None and w >= best[v]):
                continue
            if v in names:
                pq.delete(names[v])
            names[v] = pq.insert(w, v)
            best[v] = w
            parent[v] = u

    tree: list[Edge] = []
    extracted: list[int] = []
    scan(root)
    while pq:
        weight, v = pq.extract_min()
        del names[v]
        extracted.append(weight)
        tree.append(Edge(parent[v], v, weight))
        scan(v)

    if len(tree) != n - 1:
        missing = in_tree.index(False)
        raise DisconnectedGraphError(missing)

    result = _result(variant, eps, delta, tree, extracted, pq)
    logger.info(
        "prim: n=%d m=%d weight=%d queue ops=%d",
        n,
        graph.m,
        result.total_weight,
        pq.operations,
    )
    return result


def _result(
    variant: Variant,
    eps: Fraction,
    delta: Fraction | int | None,
    tree: list[Edge],
    extracted: list[int],
    pq: VebPriorityQueue,
) -> MstResult:
    return MstResult(
        variant=variant,
        epsilon=str(eps) if variant is Variant.MULTIPLICATIVE else None,
        delta=str(Fraction(delta)) if variant is Variant.ADDITIVE else None,
        edges=[(e.u, e.v, e.weight) for e in tree],
        total_weight=sum(e.weight for e in tree),
        extracted=extracted,
        queue=pq.summary(),
    )
