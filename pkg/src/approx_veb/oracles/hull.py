"""Batch convex hull and the polygon measurements the hull tests rely on."""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable

from approx_veb.apps.hull import Point


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def oracle_hull(points: Iterable[Point]) -> list[Point]:
    """Counterclockwise hull by monotone chain, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def point_in_polygon(polygon: list[Point], p: Point) -> bool:
    """Whether ``p`` is inside or on a counterclockwise convex polygon."""
    n = len(polygon)
    return all(_cross(polygon[i], polygon[(i + 1) % n], p) >= 0 for i in range(n))


def _segment_distance(p: Point, a: Point, b: Point) -> float:
    dx, dy = b.x - a.x, b.y - a.y
    length2 = dx * dx + dy * dy
    if length2 == 0:
        return math.hypot(p.x - a.x, p.y - a.y)
    t = max(0.0, min(1.0, ((p.x - a.x) * dx + (p.y - a.y) * dy) / length2))
    return math.hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy))


def distance_to_polygon(polygon: list[Point], p: Point) -> float:
    """Euclidean distance from ``p`` to a convex polygon; 0 inside."""
    if len(polygon) >= 3 and point_in_polygon(polygon, p):
        return 0.0
    n = len(polygon)
    return min(_segment_distance(p, polygon[i], polygon[(i + 1) % n]) for i in range(n))


def diameter(points: Iterable[Point]) -> float:
    """Largest pairwise distance, taken over the hull vertices."""
    hull = oracle_hull(points)
    return max(
        (math.hypot(a.x - b.x, a.y - b.y) for a, b in combinations(hull, 2)),
        default=0.0,
    )
