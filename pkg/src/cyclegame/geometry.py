"""Plane geometry primitives for straight-line embedded boards.

All predicates are exact enough for desk-scale boards: coordinates are
ordinary floats and tolerances are absolute epsilons around 1e-9.  The
module is dependency-free and purely functional.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

Point = tuple[float, float]

EPS = 1e-9


def cross(o: Point, a: Point, b: Point) -> float:
    """Z-component of the cross product (a - o) x (b - o).

    Positive when o -> a -> b turns counterclockwise.
    """
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def signed_area(points: Sequence[Point]) -> float:
    """Shoelace signed area of a closed polygonal walk.

    Args:
        points: vertex coordinates in walk order (first vertex not repeated).

    Returns:
        Signed area; positive iff the walk is counterclockwise.

    Raises:
        ValueError: fewer than 3 points.
    """
    n = len(points)
    if n < 3:
        raise ValueError(f"signed_area needs at least 3 points, got {n}")
    total = 0.0
    j = n - 1
    for i in range(n):
        xi, yi = points[i]
        xj, yj = points[j]
        total += xj * yi - xi * yj
        j = i
    return total / 2.0


def polygon_centroid(points: Sequence[Point]) -> Point:
    """Area-weighted centroid of a polygonal walk.

    Falls back to the vertex mean when the walk encloses (near) zero area.
    """
    area = signed_area(points)
    if abs(area) < EPS:
        n = len(points)
        return (sum(p[0] for p in points) / n, sum(p[1] for p in points) / n)
    cx = cy = 0.0
    j = len(points) - 1
    for i in range(len(points)):
        xi, yi = points[i]
        xj, yj = points[j]
        w = xj * yi - xi * yj
        cx += (xi + xj) * w
        cy += (yi + yj) * w
        j = i
    return (cx / (6.0 * area), cy / (6.0 * area))


def point_on_segment(p: Point, a: Point, b: Point, eps: float = EPS) -> bool:
    """True iff p lies on the closed segment ab (within eps)."""
    if abs(cross(a, b, p)) > eps * max(1.0, _seg_len(a, b)):
        return False
    lo_x, hi_x = min(a[0], b[0]) - eps, max(a[0], b[0]) + eps
    lo_y, hi_y = min(a[1], b[1]) - eps, max(a[1], b[1]) + eps
    return lo_x <= p[0] <= hi_x and lo_y <= p[1] <= hi_y


def _seg_len(a: Point, b: Point) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


def segments_cross(a: Point, b: Point, c: Point, d: Point, eps: float = EPS) -> bool:
    """True iff closed segments ab and cd intersect.

    Shared endpoints do not count as intersections, but any further
    contact (proper crossing, endpoint in the other segment's interior,
    collinear overlap) does.
    """
    shared = [
        p
        for p in (a, b)
        for q in (c, d)
        if math.hypot(p[0] - q[0], p[1] - q[1]) <= eps
    ]
    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    d3 = cross(a, b, c)
    d4 = cross(a, b, d)
    scale_cd = eps * max(1.0, _seg_len(c, d))
    scale_ab = eps * max(1.0, _seg_len(a, b))
    if ((d1 > scale_cd and d2 < -scale_cd) or (d1 < -scale_cd and d2 > scale_cd)) and (
        (d3 > scale_ab and d4 < -scale_ab) or (d3 < -scale_ab and d4 > scale_ab)
    ):
        return True
    # Touching / collinear configurations: every containment that is not a
    # shared endpoint is an intersection.
    for p, s, t in ((a, c, d), (b, c, d), (c, a, b), (d, a, b)):
        if point_on_segment(p, s, t, eps) and not any(
            math.hypot(p[0] - q[0], p[1] - q[1]) <= eps for q in shared
        ):
            return True
    return False


def point_in_polygon(p: Point, poly: Sequence[Point]) -> bool:
    """Strict interior test by ray casting (half-open crossing rule).

    Points on the boundary are the caller's responsibility; use
    point_on_polygon to exclude them first.  Works on non-simple walks:
    a doubled (spur) edge contributes two crossings and cancels.
    """
    x, y = p
    inside = False
    n = len(poly)
    j = n - 1
    for i in range(n):
        xi, yi = poly[i]
        xj, yj = poly[j]
        if (yi > y) != (yj > y):
            x_cross = xi + (y - yi) * (xj - xi) / (yj - yi)
            if x_cross > x:
                inside = not inside
        j = i
    return inside


def point_on_polygon(p: Point, poly: Sequence[Point], eps: float = EPS) -> bool:
    """True iff p lies on some edge of the polygonal walk."""
    n = len(poly)
    j = n - 1
    for i in range(n):
        if point_on_segment(p, poly[j], poly[i], eps):
            return True
        j = i
    return False


def dist_point_segment(p: Point, a: Point, b: Point) -> float:
    """Euclidean distance from p to the closed segment ab."""
    ax, ay = a
    bx, by = b
    px, py = p
    dx, dy = bx - ax, by - ay
    seg_sq = dx * dx + dy * dy
    if seg_sq == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / seg_sq
    t = max(0.0, min(1.0, t))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def angular_order(center: Point, others: Sequence[tuple[int, Point]]) -> list[int]:
    """Sort neighbor points counterclockwise around a center.

    Args:
        center: the pivot point.
        others: (key, point) pairs to order.

    Returns:
        Keys sorted by increasing atan2 angle (counterclockwise).

    Raises:
        ValueError: two neighbors at indistinguishable angles (ambiguous
            rotation).
    """
    with_angles = [
        (math.atan2(p[1] - center[1], p[0] - center[0]), key) for key, p in others
    ]
    with_angles.sort()
    for (ang1, k1), (ang2, k2) in zip(with_angles, with_angles[1:] + with_angles[:1]):
        delta = abs(ang2 - ang1)
        delta = min(delta, abs(delta - 2 * math.pi))
        if len(with_angles) > 1 and delta < 1e-9:
            raise ValueError(
                f"ambiguous angular order at {center}: neighbors {k1} and {k2} "
                "are collinear"
            )
    return [key for _, key in with_angles]
