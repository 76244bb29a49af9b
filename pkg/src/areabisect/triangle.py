"""Triangles labelled the way the bisector construction expects.

Vertices are ``A, B, C``; edge vectors are ``a = C - B``, ``b = A - C`` and
``c = B - A`` so that ``a + b + c = 0``. Edge ``a`` is opposite vertex ``A``
and likewise for the others.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import DegenerateTriangle
from .geom import ConvexPoly, ParamLine, Vec2, dot, perp, shoelace_area

# Similarity ratio that cuts off half the area of a triangle.
M = 1.0 / math.sqrt(2.0)

# Twice-area below this fraction of the squared bounding-box diagonal is
# rejected as degenerate.
DEGENERATE_AREA_RTOL = 1e-10


class EdgeCase(enum.Enum):
    A = "A"
    B = "B"
    C = "C"

    def __str__(self) -> str:
        return self.value

    @property
    def index(self) -> int:
        return "ABC".index(self.value)

    def next(self) -> EdgeCase:
        return CASES[(self.index + 1) % 3]

    def prev(self) -> EdgeCase:
        return CASES[(self.index - 1) % 3]


CASES: Tuple[EdgeCase, EdgeCase, EdgeCase] = (EdgeCase.A, EdgeCase.B, EdgeCase.C)


def twice_signed_area(A: Vec2, B: Vec2, C: Vec2) -> float:
    # dot(c, perp(-b)) with c = B - A and -b = C - A
    return -dot(B - A, perp(C - A))


@dataclass(frozen=True)
class Triangle:
    A: Vec2
    B: Vec2
    C: Vec2

    def __post_init__(self) -> None:
        twice = abs(twice_signed_area(self.A, self.B, self.C))
        diag2 = self.bbox_diagonal() ** 2
        if not twice > DEGENERATE_AREA_RTOL * diag2:
            raise DegenerateTriangle(
                f"triangle {self.describe()} is degenerate "
                f"(twice-area {twice:.3g}, bbox diagonal^2 {diag2:.3g})"
            )

    @classmethod
    def from_points(cls, points: Iterable[Tuple[float, float]]) -> Triangle:
        pts = [Vec2(float(x), float(y)) for x, y in points]
        if len(pts) != 3:
            raise DegenerateTriangle(f"a triangle needs 3 vertices, got {len(pts)}")
        return cls(*pts)

    @property
    def vertices(self) -> Tuple[Vec2, Vec2, Vec2]:
        return (self.A, self.B, self.C)

    def reversed(self) -> Triangle:
        """Same point set, opposite winding (A and C swapped)."""
        return Triangle(self.C, self.B, self.A)

    def translated(self, d: Vec2) -> Triangle:
        return Triangle(self.A + d, self.B + d, self.C + d)

    def polygon(self) -> ConvexPoly:
        return ConvexPoly(self.vertices)

    def bbox_diagonal(self) -> float:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return math.hypot(max(xs) - min(xs), max(ys) - min(ys))

    def diameter(self) -> float:
        A, B, C = self.vertices
        return max((B - A).norm(), (C - B).norm(), (A - C).norm())

    def scale(self) -> float:
        return max(v.max_norm() for v in self.vertices)

    def describe(self) -> str:
        return " ".join(f"({p.x:g},{p.y:g})" for p in self.vertices)


def edges(t: Triangle) -> Tuple[Vec2, Vec2, Vec2]:
    return t.C - t.B, t.A - t.C, t.B - t.A


def medians(t: Triangle) -> Tuple[Vec2, Vec2, Vec2]:
    """Median directions ``(b - a, c - b, a - c)``.

    These run along the medians from C, A and B respectively (up to a factor
    of 3 and orientation).
    """
    a, b, c = edges(t)
    return b - a, c - b, a - c


def area(t: Triangle) -> float:
    return shoelace_area(t.polygon())


def edge_vector(t: Triangle, case: EdgeCase) -> Vec2:
    return edges(t)[case.index]


def opposite_vertex(t: Triangle, case: EdgeCase) -> Vec2:
    return t.vertices[case.index]


def edge_bisect(t: Triangle, case: EdgeCase) -> ParamLine:
    """The area-bisecting line parallel to the edge selected by ``case``.

    It joins the points a fraction ``M`` of the way from the opposite vertex
    towards each of the other two vertices.
    """
    i = case.index
    V = t.vertices[i]
    P = t.vertices[(i + 1) % 3]
    return ParamLine(V + (P - V) * M, edge_vector(t, case))
