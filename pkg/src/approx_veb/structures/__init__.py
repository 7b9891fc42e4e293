"""Exact and approximate van Emde Boas multisets and their priority queues."""

from approx_veb.structures.approx import ApproxVeb, Variant
from approx_veb.structures.names import Bucket, Name
from approx_veb.structures.node import Neighbor, VebNode, VebStats, tower_level
from approx_veb.structures.priority_queue import (
    PriorityQueue,
    QueueSummary,
    VebPriorityQueue,
    make_priority_queue,
)
from approx_veb.structures.veb_set import VebSet

__all__ = [
    "ApproxVeb",
    "Bucket",
    "Name",
    "Neighbor",
    "PriorityQueue",
    "QueueSummary",
    "Variant",
    "VebNode",
    "VebPriorityQueue",
    "VebSet",
    "VebStats",
    "make_priority_queue",
    "tower_level",
]
