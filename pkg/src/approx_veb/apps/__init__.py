"""Applications: approximate MST, shortest paths and the on-line hull."""

from approx_veb.apps.generators import (
    near_tied_path,
    random_connected_graph,
    random_digraph,
    random_point_stream,
    random_points,
)
from approx_veb.apps.graph import Edge, Graph, dump_graph, parse_graph
from approx_veb.apps.hull import (
    HullStats,
    OnlineHull,
    Point,
    StreamOp,
    dump_point_stream,
    orient,
    parse_point_stream,
)
from approx_veb.apps.mst import MstResult, prim_mst
from approx_veb.apps.sssp import SsspResult, dijkstra_sssp, internal_epsilon

__all__ = [
    "Edge",
    "Graph",
    "HullStats",
    "MstResult",
    "OnlineHull",
    "Point",
    "SsspResult",
    "StreamOp",
    "dijkstra_sssp",
    "dump_graph",
    "dump_point_stream",
    "internal_epsilon",
    "near_tied_path",
    "orient",
    "parse_graph",
    "parse_point_stream",
    "prim_mst",
    "random_connected_graph",
    "random_digraph",
    "random_point_stream",
    "random_points",
]
