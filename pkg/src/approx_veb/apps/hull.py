"""On-line approximate convex hull maintained by Graham local corrections.

Hull vertices live in an additive ``ApproxVeb`` keyed by their angle
about a fixed interior center, so locating a new point is one ``search``
plus neighbour steps.  Each point is inserted at most once and deleted at
most once, which keeps the amortized number of structural operations per
point constant.

All geometric decisions use exact integer arithmetic.  The center is the
centroid of the first usable triple; coordinates relative to it are kept
multiplied by 3 so they stay integral.  Only the angle key is computed in
floating point; vertices sharing a bucket are ordered by exact cross
products about the center.

A farther point replaces the vertex in its bucket only while the polygon
stays strictly convex around the center; otherwise it is inserted next to
that vertex like any other outside point.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import StrEnum
from typing import Iterator

from pydantic import BaseModel

from approx_veb.config import settings
from approx_veb.errors import (
    DomainError,
    HullNotInitializedError,
    InputError,
    InvariantViolation,
)
from approx_veb.mapping import AdditiveMap
from approx_veb.structures import ApproxVeb, Name, Variant
from approx_veb.word import FixedPoint, WordConfig

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi


@dataclass(frozen=True, slots=True, order=True)
class Point:
    """A planar point with integer coordinates."""

    x: int
    y: int

    def check(self, word: WordConfig) -> Point:
        """Validate ``|x|, |y| < 2 ** (b / 2 - 2)`` and return ``self``.

        Raises:
            DomainError: If a coordinate is out of bounds.
        """
        limit = 1 << (word.b // 2 - 2)
        if abs(self.x) >= limit or abs(self.y) >= limit:
            raise DomainError(f"point ({self.x}, {self.y}) outside |x|, |y| < {limit}")
        return self


def orient(a: Point, b: Point, c: Point) -> int:
    """Twice the signed area of ``abc``; positive when ``c`` is left of ``a -> b``."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


class HullStats(BaseModel):
    """Counters of one on-line hull run.

    ``structural_ops`` counts ``search``/``insert``/``delete`` on the
    angular structure; constant-time neighbour and extremum lookups are
    counted apart in ``neighbor_steps``.
    """

    updates: int = 0
    buffered: int = 0
    discarded: int = 0
    structural_ops: int = 0
    neighbor_steps: int = 0
    retired: int = 0
    reinserted: int = 0
    queries: int = 0
    query_ops: int = 0

    @property
    def ops_per_update(self) -> float:
        return self.structural_ops / self.updates if self.updates else 0.0


class OnlineHull:
    """Semi-dynamic approximate hull of a point stream.

    Args:
        delta: Angular bucket width in ``(0, pi/8]``; defaults to
            ``settings.default_hull_delta``.
        word: Word configuration for the angular structure.

    Raises:
        DomainError: If ``delta`` is out of range.
    """

    def __init__(self, delta: float | None = None, word: WordConfig | None = None) -> None:
        self.delta = settings.default_hull_delta if delta is None else delta
        if not 0 < self.delta <= math.pi / 8:
            raise DomainError(f"hull delta must lie in (0, pi/8], got {self.delta}")
        self.word = word or WordConfig.default()
        self.stats = HullStats()
        self.pending: list[Point] = []
        self._ring: ApproxVeb | None = None
        self._sum: tuple[int, int] | None = None
        self._map = AdditiveMap.create(self.delta, TWO_PI, self.word)
        self._retired: set[Point] = set()
        self._name_of: dict[Point, Name] = {}
        self._lo: Point | None = None
        self._hi: Point | None = None
        self._collinear = True

    @property
    def initialized(self) -> bool:
        return self._ring is not None

    @property
    def center(self) -> tuple[float, float]:
        """The interior reference point (centroid of the seed triple)."""
        self._require_init()
        return self._sum[0] / 3, self._sum[1] / 3

    @property
    def ring(self) -> ApproxVeb:
        self._require_init()
        return self._ring

    def __len__(self) -> int:
        return len(self._ring) if self._ring is not None else 0

    # ------------------------------------------------------------------
    # Updates
    # ------------------------------------------------------------------

    def add_point(self, p: Point) -> None:
        """Process the next point of the stream.

        Raises:
            DomainError: If ``p`` violates the coordinate bound.
        """
        p.check(self.word)
        self.stats.updates += 1
        if self._ring is None:
            self._buffer(p)
            return
        self._update(p)

    def _buffer(self, p: Point) -> None:
        seed = self._find_seed(p)
        if seed is None:
            self._hold(p)
            return
        a, b = seed
        self._sum = (a.x + b.x + p.x, a.y + b.y + p.y)
        self._ring = ApproxVeb(self._map, Variant.ADDITIVE)
        for vertex in (a, b, p):
            self._insert(vertex)
        logger.debug(
            "hull initialized from %s %s %s after %d buffered points",
            a,
            b,
            p,
            len(self.pending),
        )
        backlog, self.pending = self.pending, []
        for q in backlog:
            if q is a or q is b:
                continue
            self._update(q)

    def _hold(self, p: Point) -> None:
        """Buffer ``p`` and keep the backlog's extreme points up to date."""
        self.pending.append(p)
        self.stats.buffered += 1
        lo, hi = self._lo, self._hi
        if lo is None or hi is None:
            self._lo = self._hi = p
            return
        if self._collinear and lo != hi and orient(lo, hi, p) != 0:
            self._collinear = False
        self._lo, self._hi = min(lo, p), max(hi, p)

    def _find_seed(self, p: Point) -> tuple[Point, Point] | None:
        """A pending pair forming with ``p`` a triangle usable as seed.

        The three vertices must be non-collinear and fall into distinct
        angular buckets about their centroid.  Only pairs containing one
        of the backlog's two extreme points are tried, so each buffered
        point costs time linear in the backlog, and constant time while
        the backlog and ``p`` are collinear.
        """
        lo, hi = self._lo, self._hi
        if lo is None or hi is None or lo == hi:
            return None
        if self._collinear and orient(lo, hi, p) == 0:
            return None
        for a, b in self._seed_pairs(lo, hi):
            if orient(a, b, p) == 0:
                continue
            total = (a.x + b.x + p.x, a.y + b.y + p.y)
            keys = {self._bucket_of(v, total) for v in (a, b, p)}
            if len(keys) == 3:
                return a, b
        return None

    def _seed_pairs(self, lo: Point, hi: Point) -> Iterator[tuple[Point, Point]]:
        yield lo, hi
        for anchor in (lo, hi):
            for q in self.pending:
                if q != lo and q != hi:
                    yield q, anchor

    def _update(self, p: Point) -> None:
        wedge = self._locate(p)
        if orient(wedge.u_point, wedge.w_point, p) >= 0:
            self.stats.discarded += 1
            return
        occupant = wedge.occupant
        if occupant is not None:
            if self._norm(p) <= self._norm(self._ring.data(occupant)):
                self.stats.discarded += 1
                return
            if self._replace(occupant, p):
                self._correct(p)
                return
        self._insert(p, before=wedge.w)
        self._correct(p)

    def _replace(self, occupant: Name, p: Point) -> bool:
        """Swap ``occupant`` for the farther ``p`` in its bucket.

        Refused, returning ``False``, when the polygon would stop being
        strictly convex at ``p`` or stop holding the center strictly
        inside; the caller then inserts ``p`` next to the occupant.
        """
        ring = self._ring
        z = ring.data(self._prev(occupant))
        after = self._next(occupant)
        n = ring.data(after)
        if self._cross(z, p) <= 0 or self._cross(p, n) <= 0 or orient(z, p, n) <= 0:
            return False
        self._delete(occupant, ring.data(occupant))
        self._insert(p, before=after)
        return True

    def _correct(self, p: Point) -> None:
        """Delete reflex or flat vertices next to ``p`` on both sides."""
        ring = self._ring
        name = self._name_of[p]
        while len(ring) > 3:
            n1 = self._next(name)
            n2 = self._next(n1)
            if orient(p, ring.data(n1), ring.data(n2)) > 0:
                break
            self._delete(n1, ring.data(n1))
        while len(ring) > 3:
            m1 = self._prev(name)
            m2 = self._prev(m1)
            if orient(ring.data(m2), ring.data(m1), p) > 0:
                break
            self._delete(m1, ring.data(m1))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def query_contains(self, q: Point) -> bool:
        """Whether ``q`` lies inside or on the maintained polygon.

        Raises:
            HullNotInitializedError: If no seed triangle exists yet.
            DomainError: If ``q`` violates the coordinate bound.
        """
        self._require_init()
        q.check(self.word)
        self.stats.queries += 1
        before = self.stats.structural_ops + self.stats.neighbor_steps
        try:
            if self._relative(q) == (0, 0):
                return True
            wedge = self._locate(q)
            return orient(wedge.u_point, wedge.w_point, q) >= 0
        finally:
            self.stats.query_ops += self.stats.structural_ops + self.stats.neighbor_steps - before

    def hull_vertices(self) -> list[Point]:
        """Vertices in counterclockwise order, starting from angle key 0.

        Raises:
            HullNotInitializedError: If no seed triangle exists yet.
        """
        self._require_init()
        ring = self._ring
        vertices: list[Point] = []
        name = ring.minimum()
        while name is not None:
            vertices.append(ring.data(name))
            name = ring.successor(name)
        return vertices

    def check_invariants(self) -> None:
        """Verify the ring, the center and the shape of the polygon.

        Every vertex must be stored under the key of its angle, the
        center must lie strictly left of every edge, and three
        consecutive vertices at least two buckets apart pairwise must
        turn strictly left.

        Raises:
            HullNotInitializedError: If no seed triangle exists yet.
            InvariantViolation: On the first violated property.
        """
        ring = self.ring
        ring.check_invariants()
        names = list(ring)
        points = [ring.data(name) for name in names]
        keys = [ring.key(name) for name in names]
        span = ring.reduced_size
        count = len(points)
        for i, (point, key) in enumerate(zip(points, keys)):
            if key != ring.map_key(self._angle(point)):
                raise InvariantViolation(f"vertex {point} is stored under a stale key")
            nxt, after = points[(i + 1) % count], points[(i + 2) % count]
            if self._cross(point, nxt) <= 0:
                raise InvariantViolation(f"center is not strictly inside edge {point} -> {nxt}")
            k1, k2 = keys[(i + 1) % count], keys[(i + 2) % count]
            apart = min(_gap(key, k1, span), _gap(k1, k2, span), _gap(key, k2, span))
            if apart >= 2 and orient(point, nxt, after) <= 0:
                raise InvariantViolation(f"vertices {point} {nxt} {after} do not turn left")

    # ------------------------------------------------------------------
    # Angular structure access
    # ------------------------------------------------------------------

    def _locate(self, p: Point) -> _Wedge:
        """Find the ring edge ``u -> w`` whose angular wedge contains ``p``."""
        ring = self._ring
        angle = self._angle(p)
        key = ring.map_key(angle)
        self.stats.structural_ops += 1
        u = ring.search(angle)
        if u is None:
            u = self._step(ring.maximum())
        if ring.key(u) == key:
            # Inside p's bucket, order by exact cross product about the center.
            while self._cross(ring.data(u), p) < 0:
                z = self._prev(u)
                if ring.key(z) != key:
                    return self._wedge(z, u, key)
                u = z
        return self._wedge(u, self._next(u), key)

    def _wedge(self, u: Name, w: Name, key: int) -> _Wedge:
        ring = self._ring
        if ring.key(w) == key:
            occupant = w
        elif ring.key(u) == key:
            occupant = u
        else:
            occupant = None
        return _Wedge(u, w, ring.data(u), ring.data(w), occupant)

    def _insert(self, p: Point, before: Name | None = None) -> None:
        """Add ``p`` to the ring, just ahead of ``before`` when they share a bucket."""
        ring = self._ring
        angle = self._angle(p)
        if p in self._retired:
            self.stats.reinserted += 1
        self.stats.structural_ops += 1
        if before is not None and ring.key(before) == ring.map_key(angle):
            self._name_of[p] = ring.insert_before(before, angle, p)
        else:
            self._name_of[p] = ring.insert(angle, p)

    def _delete(self, name: Name, p: Point) -> None:
        self.stats.structural_ops += 1
        self._ring.delete(name)
        del self._name_of[p]
        self._retired.add(p)
        self.stats.retired += 1

    def _next(self, name: Name) -> Name:
        succ = self._ring.successor(name)
        return self._step(succ if succ is not None else self._ring.minimum())

    def _prev(self, name: Name) -> Name:
        pred = self._ring.predecessor(name)
        return self._step(pred if pred is not None else self._ring.maximum())

    def _step(self, name: Name | None) -> Name:
        self.stats.neighbor_steps += 1
        assert name is not None  # noqa: S101
        return name

    # ------------------------------------------------------------------
    # Geometry helpers
    # ------------------------------------------------------------------

    def _relative(self, p: Point) -> tuple[int, int]:
        """``3 * (p - center)``, exact."""
        return 3 * p.x - self._sum[0], 3 * p.y - self._sum[1]

    def _cross(self, a: Point, b: Point) -> int:
        """Positive when the center lies strictly left of ``a -> b``."""
        ax, ay = self._relative(a)
        bx, by = self._relative(b)
        return ax * by - ay * bx

    def _norm(self, p: Point) -> int:
        dx, dy = self._relative(p)
        return dx * dx + dy * dy

    def _angle(self, p: Point) -> FixedPoint:
        return _angle_about(p, self._sum, self.word)

    def _bucket_of(self, p: Point, total: tuple[int, int]) -> int:
        return self._map.map(_angle_about(p, total, self.word))

    def _require_init(self) -> None:
        if self._ring is None:
            raise HullNotInitializedError()


@dataclass(frozen=True, slots=True)
class _Wedge:
    """Ring edge ``u -> w`` whose angular wedge about the center holds a point.

    ``occupant`` is the endpoint stored in the point's own bucket, if any.
    """

    u: Name
    w: Name
    u_point: Point
    w_point: Point
    occupant: Name | None


def _gap(a: int, b: int, span: int) -> int:
    """Distance between two bucket keys around the circle."""
    d = abs(a - b)
    return min(d, span - d)


def _angle_about(p: Point, total: tuple[int, int], word: WordConfig) -> FixedPoint:
    """Angle of ``p`` about the centroid ``total / 3`` in ``[0, 2 pi]``, as a fixed-point key."""
    angle = math.atan2(3 * p.y - total[1], 3 * p.x - total[0])
    if angle < 0:
        angle += TWO_PI
    value = FixedPoint.from_value(angle, word)
    top = FixedPoint.from_value(TWO_PI, word)
    return min(value, top)


# ------------------------------------------------------------------
# Point streams
# ------------------------------------------------------------------


class StreamOp(StrEnum):
    """Kind of a point-stream line."""

    POINT = "p"
    QUERY = "q"


def parse_point_stream(text: str) -> list[tuple[StreamOp, Point]]:
    """Parse ``p x y`` / ``q x y`` lines; ``#`` starts a comment.

    Raises:
        InputError: With the 1-based line number of the first bad line.
    """
    entries: list[tuple[StreamOp, Point]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split("#", 1)[0].split()
        if not fields:
            continue
        if len(fields) != 3 or fields[0] not in ("p", "q"):
            raise InputError(lineno, "p x y' or 'q x y")
        try:
            point = Point(int(fields[1]), int(fields[2]))
        except ValueError:
            raise InputError(lineno, "p x y' or 'q x y") from None
        entries.append((StreamOp(fields[0]), point))
    return entries


def dump_point_stream(entries: list[tuple[StreamOp, Point]]) -> str:
    """Render a point stream in the ``p x y`` / ``q x y`` format."""
    return "".join(f"{op} {p.x} {p.y}\n" for op, p in entries)
