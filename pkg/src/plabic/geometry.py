"""Exact rational plane geometry: points, polygons, winding numbers, overlap tests.

Everything here works over fractions.Fraction; there are no epsilons.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidInputError

Point = tuple[Fraction, Fraction]

POLYGON_VERSION = "1"
_TANGENT_DENOMINATOR = 10**4


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def cross(p: Point, q: Point) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def orient(a: Point, b: Point, c: Point) -> Fraction:
    """Positive when a, b, c make a counterclockwise turn (y axis up)."""
    return cross(sub(b, a), sub(c, a))


@lru_cache(maxsize=128)
def default_polygon(n: int) -> tuple[Point, ...]:
    """The versioned default strictly convex clockwise rational n-gon.

    Vertices sit exactly on the unit circle via the tangent half-angle
    map t -> ((1-t^2)/(1+t^2), -2t/(1+t^2)) at n rational tangents that
    approximate evenly spaced directions; the y-flip makes the order
    clockwise in the y-up plane.
    """
    if n < 1:
        raise InvalidInputError("polygon needs at least one vertex")
    pts = []
    for i in range(1, n + 1):
        half_angle = (-math.pi + (2 * i - 1) * math.pi / n) / 2
        t = Fraction(math.tan(half_angle)).limit_denominator(_TANGENT_DENOMINATOR)
        den = 1 + t * t
        pts.append(((1 - t * t) / den, -2 * t / den))
    if len(set(pts)) != n:
        raise InvalidInputError(f"default polygon degenerate for n={n}")
    return tuple(pts)


def signed_area(poly: tuple[Point, ...]) -> Fraction:
    """Shoelace area; positive for counterclockwise boundaries (y axis up)."""
    total = Fraction(0)
    m = len(poly)
    for i in range(m):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % m]
        total += x0 * y1 - x1 * y0
    return total / 2


def is_strictly_convex_clockwise(poly: tuple[Point, ...]) -> bool:
    m = len(poly)
    if m < 3:
        return False
    if len(set(poly)) != m:
        return False
    for i in range(m):
        if orient(poly[i], poly[(i + 1) % m], poly[(i + 2) % m]) >= 0:
            return False
    return True


def check_polygon(poly: tuple[Point, ...], n: int) -> None:
    if len(poly) != n:
        raise InvalidInputError(f"polygon needs {n} vertices, got {len(poly)}")
    if n >= 3 and not is_strictly_convex_clockwise(poly):
        raise InvalidInputError("polygon must be strictly convex with clockwise vertices")


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """Whether p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_cross_interior(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Whether open segments ab and cd share a point that is interior to both."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if ((o1 > 0) != (o2 > 0)) and ((o3 > 0) != (o4 > 0)) and o1 and o2 and o3 and o4:
        return True
    # Collinear overlap longer than a point also counts.
    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        return lo < hi
    return False


def segment_hits_open(a: Point, b: Point, p: Point) -> bool:
    """Whether p lies strictly inside the open segment ab."""
    return p != a and p != b and on_segment(p, a, b)


def winding_number(poly: tuple[Point, ...], p: Point) -> int:
    """Exact winding number of a closed polygonal curve around p.

    Raises if p lies on the curve itself.
    """
    w = 0
    m = len(poly)
    for i in range(m):
        a, b = poly[i], poly[(i + 1) % m]
        if on_segment(p, a, b):
            raise InvalidInputError("point lies on the curve; winding number undefined")
        if a[1] <= p[1] < b[1] and orient(a, b, p) > 0:
            w += 1
        elif b[1] <= p[1] < a[1] and orient(a, b, p) < 0:
            w -= 1
    return w


def _axis_separates(normal: Point, P: tuple[Point, ...], Q: tuple[Point, ...]) -> bool:
    dots_p = [normal[0] * x + normal[1] * y for x, y in P]
    dots_q = [normal[0] * x + normal[1] * y for x, y in Q]
    return max(dots_p) <= min(dots_q) or max(dots_q) <= min(dots_p)


def convex_interiors_overlap(P: tuple[Point, ...], Q: tuple[Point, ...]) -> bool:
    """Whether two convex polygons share interior area (touching is fine).

    Separating-axis test over the edge normals of both polygons; exact.
    """
    for poly in (P, Q):
        m = len(poly)
        for i in range(m):
            d = sub(poly[(i + 1) % m], poly[i])
            if d == (0, 0):
                continue
            if _axis_separates((-d[1], d[0]), P, Q):
                return False
    return True


def centroid(points: tuple[Point, ...]) -> Point:
    m = len(points)
    sx = sum((p[0] for p in points), Fraction(0))
    sy = sum((p[1] for p in points), Fraction(0))
    return (sx / m, sy / m)
