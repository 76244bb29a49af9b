"""Ground truth for area bisection that never touches the solver's algebra.

``check_bisection`` clips the triangle and compares areas directly;
``brute_force_bisector`` bisects on the line's offset until the two sides
balance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geom import ParamLine, Vec2, dot, perp, require_direction, split_areas
from .triangle import Triangle

MAX_ITERATIONS = 200
AREA_GAP_RTOL = 1e-12


@dataclass(frozen=True)
class AuditRecord:
    area_left: float
    area_right: float
    total: float
    relative_gap: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "area_left": self.area_left,
            "area_right": self.area_right,
            "total": self.total,
            "relative_gap": self.relative_gap,
            "passed": self.passed,
        }


def check_bisection(t: Triangle, line: ParamLine, tol: float) -> AuditRecord:
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    require_direction(line.dir)
    poly = t.polygon()
    left, right = split_areas(poly, line)
    total = left + right
    gap = abs(left - right) / total
    return AuditRecord(left, right, total, gap, gap <= tol)


def offset_line(u: Vec2, offset: float) -> ParamLine:
    """The line ``{p : dot(p, perp(u)) = offset}`` with direction ``u``."""
    n = perp(u)
    return ParamLine(n * (offset / dot(n, n)), u)


def left_area(t: Triangle, u: Vec2, offset: float) -> float:
    return split_areas(t.polygon(), offset_line(u, offset))[0]


def brute_force_bisector(t: Triangle, u: Vec2) -> ParamLine:
    """Find the bisector with direction ``u`` by bisection on the offset.

    The area left of the line falls monotonically from the whole triangle to
    zero as the offset sweeps from the lowest to the highest vertex offset.
    """
    require_direction(u, "query direction")
    n = perp(u)
    poly = t.polygon()
    offsets = [dot(p, n) for p in t.vertices]
    lo, hi = min(offsets), max(offsets)
    total = sum(split_areas(poly, offset_line(u, lo)))
    target = 0.5 * total
    mid = 0.5 * (lo + hi)
    for _ in range(MAX_ITERATIONS):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        left, right = split_areas(poly, offset_line(u, mid))
        if abs(left - right) <= AREA_GAP_RTOL * total:
            break
        if left > target:
            lo = mid
        else:
            hi = mid
    return offset_line(u, mid)


def line_offset_gap(first: ParamLine, second: ParamLine) -> float:
    """Distance between two lines assumed parallel, measured along the normal
    of ``first``."""
    n = perp(first.dir)
    n = n / n.norm()
    return abs(dot(first.base, n) - dot(second.base, n))
