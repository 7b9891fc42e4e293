"""Exact graph optima computed with networkx."""

from __future__ import annotations

import networkx as nx

from approx_veb.apps.graph import Graph
from approx_veb.errors import DisconnectedGraphError


def to_networkx(graph: Graph) -> nx.Graph:
    """Convert ``graph``, keeping the lightest of any parallel edges."""
    g: nx.Graph = nx.DiGraph() if graph.directed else nx.Graph()
    g.add_nodes_from(range(graph.n))
    for e in graph.edges:
        if g.has_edge(e.u, e.v) and g[e.u][e.v]["weight"] <= e.weight:
            continue
        g.add_edge(e.u, e.v, weight=e.weight)
    return g


def oracle_mst_weight(graph: Graph) -> int:
    """Weight of a minimum spanning tree (Kruskal).

    Raises:
        DisconnectedGraphError: If the graph is not connected.
    """
    g = to_networkx(graph)
    if graph.n > 1 and not nx.is_connected(g):
        component = nx.node_connected_component(g, 0)
        missing = min(v for v in range(graph.n) if v not in component)
        raise DisconnectedGraphError(missing)
    tree = nx.minimum_spanning_tree(g, algorithm="kruskal")
    return int(tree.size(weight="weight"))


def oracle_sssp(graph: Graph, source: int) -> list[int | None]:
    """Exact shortest-path distances from ``source``; ``None`` when unreachable."""
    lengths = nx.single_source_dijkstra_path_length(to_networkx(graph), source)
    return [lengths.get(v) for v in range(graph.n)]
