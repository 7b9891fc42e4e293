"""Exact and approximate van Emde Boas ordered multisets with graph and hull applications."""

from approx_veb.apps import OnlineHull, Point, dijkstra_sssp, prim_mst
from approx_veb.mapping import AdditiveMap, MultiplicativeMap
from approx_veb.structures import ApproxVeb, Name, Variant, VebPriorityQueue, VebSet
from approx_veb.word import FixedPoint, WordConfig

__all__ = [
    "AdditiveMap",
    "ApproxVeb",
    "FixedPoint",
    "MultiplicativeMap",
    "Name",
    "OnlineHull",
    "Point",
    "Variant",
    "VebPriorityQueue",
    "VebSet",
    "WordConfig",
    "dijkstra_sssp",
    "prim_mst",
]
