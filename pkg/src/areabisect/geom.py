"""Plain 2D vector and convex polygon primitives.

Everything here is an immutable value and every function is pure. The
perpendicular is the counterclockwise rotation ``(x, y) -> (-y, x)``, so
``dot(u, perp(v))`` equals ``-cross(u, v)`` in the usual right-handed sense.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DegenerateDirection, DegeneratePolygon, NonFiniteCoordinate

# Relative size under which a vector counts as zero.
ZERO_VECTOR_RTOL = 1e-12


@dataclass(frozen=True, slots=True)
class Vec2:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFiniteCoordinate(f"non-finite vector component in ({self.x}, {self.y})")

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> Vec2:
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Vec2:
        return Vec2(self.x / s, self.y / s)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def max_norm(self) -> float:
        return max(abs(self.x), abs(self.y))


def perp(v: Vec2) -> Vec2:
    """Rotate ``v`` by 90 degrees counterclockwise."""
    return Vec2(-v.y, v.x)


def dot(u: Vec2, v: Vec2) -> float:
    return u.x * v.x + u.y * v.y


def is_zero_vector(v: Vec2, scale: float = 0.0) -> bool:
    """Test ``v`` against the scale-relative zero threshold.

    ``scale`` is the largest coordinate magnitude of the surrounding context;
    the vector's own magnitude is always included.
    """
    mag = v.max_norm()
    return mag < ZERO_VECTOR_RTOL * (1.0 + max(scale, mag))


def require_direction(v: Vec2, what: str = "direction") -> Vec2:
    if is_zero_vector(v):
        raise DegenerateDirection(f"{what} ({v.x}, {v.y}) is zero")
    return v


@dataclass(frozen=True, slots=True)
class ParamLine:
    """The line ``base + s * dir`` for real ``s``."""

    base: Vec2
    dir: Vec2

    def __post_init__(self) -> None:
        require_direction(self.dir, "line direction")

    def point_at(self, s: float) -> Vec2:
        return self.base + self.dir * s

    def normal_offset(self) -> float:
        """Signed offset ``dot(base, perp(unit dir))``; constant along the line."""
        n = perp(self.dir)
        return dot(self.base, n) / n.norm()

    def side(self, p: Vec2) -> float:
        """Positive left of the line, negative right, in units of ``|dir|``."""
        return dot(p - self.base, perp(self.dir))

    def distance_to(self, p: Vec2) -> float:
        return abs(self.side(p)) / self.dir.norm()


@dataclass(frozen=True)
class ConvexPoly:
    vertices: Tuple[Vec2, ...]

    def __init__(self, vertices: Iterable[Vec2]) -> None:
        object.__setattr__(self, "vertices", tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def is_empty(self) -> bool:
        return len(self.vertices) < 3


EMPTY = ConvexPoly(())


def signed_area(points: Sequence[Vec2]) -> float:
    n = len(points)
    s = 0.0
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        s += p.x * q.y - q.x * p.y
    return 0.5 * s


def shoelace_area(poly: ConvexPoly | Sequence[Vec2]) -> float:
    pts = poly.vertices if isinstance(poly, ConvexPoly) else tuple(poly)
    if len(pts) < 3:
        raise DegeneratePolygon(f"polygon needs at least 3 vertices, got {len(pts)}")
    return abs(signed_area(pts))


def _area_or_zero(poly: ConvexPoly) -> float:
    return 0.0 if poly.is_empty else shoelace_area(poly)


def clip_by_line(poly: ConvexPoly, line: ParamLine) -> Tuple[ConvexPoly, ConvexPoly]:
    """Split a convex polygon into its parts left and right of ``line``.

    Vertices lying on the line go to the left part. A side the line does not
    reach comes back as an empty polygon.
    """
    pts = poly.vertices
    if len(pts) < 3:
        raise DegeneratePolygon(f"polygon needs at least 3 vertices, got {len(pts)}")
    require_direction(line.dir, "clip line direction")

    n = perp(line.dir)
    c = dot(line.base, n)
    sides = [dot(p, n) - c for p in pts]
    left: list[Vec2] = []
    right: list[Vec2] = []
    count = len(pts)
    for i in range(count):
        p, sp = pts[i], sides[i]
        q, sq = pts[(i + 1) % count], sides[(i + 1) % count]
        if sp >= 0.0:
            left.append(p)
        else:
            right.append(p)
        if (sp > 0.0 and sq < 0.0) or (sp < 0.0 and sq > 0.0):
            r = sp / (sp - sq)
            x = Vec2(p.x + (q.x - p.x) * r, p.y + (q.y - p.y) * r)
            left.append(x)
            right.append(x)
        elif sp < 0.0 and sq == 0.0:
            # q is on the line and belongs to the left part; the right part
            # still needs it to close up.
            right.append(q)
        elif sp == 0.0 and sq < 0.0:
            right.append(p)
    lp = ConvexPoly(left) if len(left) >= 3 else EMPTY
    rp = ConvexPoly(right) if len(right) >= 3 else EMPTY
    return lp, rp


def split_areas(poly: ConvexPoly, line: ParamLine) -> Tuple[float, float]:
    left, right = clip_by_line(poly, line)
    return _area_or_zero(left), _area_or_zero(right)


def y_intercept(line: ParamLine) -> Optional[float]:
    """The y value where ``line`` crosses x = 0, or None for vertical lines."""
    d = line.dir
    if abs(d.x) <= ZERO_VECTOR_RTOL * d.max_norm():
        return None
    return line.base.y - line.base.x * d.y / d.x
