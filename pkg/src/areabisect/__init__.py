"""Area-bisecting lines of triangles in a prescribed direction."""

from .errors import (
    DegenerateDirection,
    DegeneratePolygon,
    DegenerateTriangle,
    DomainError,
    GeometryError,
    NoCaseSelected,
    NonFiniteCoordinate,
)
from .geom import ConvexPoly, ParamLine, Vec2, clip_by_line, dot, perp, shoelace_area, y_intercept
from .oracle import AuditRecord, brute_force_bisector, check_bisection
from .solver import (
    BisectorResult,
    CaseSolution,
    bisecting_line,
    case_systems,
    sample_family,
    select_case,
    solve_P,
    t_from_w,
)
from .triangle import M, EdgeCase, Triangle, area, edge_bisect, edges, medians

__all__ = [
    "AuditRecord",
    "BisectorResult",
    "CaseSolution",
    "ConvexPoly",
    "DegenerateDirection",
    "DegeneratePolygon",
    "DegenerateTriangle",
    "DomainError",
    "EdgeCase",
    "GeometryError",
    "M",
    "NoCaseSelected",
    "NonFiniteCoordinate",
    "ParamLine",
    "Triangle",
    "Vec2",
    "area",
    "bisecting_line",
    "brute_force_bisector",
    "case_systems",
    "check_bisection",
    "clip_by_line",
    "dot",
    "edge_bisect",
    "edges",
    "medians",
    "perp",
    "sample_family",
    "select_case",
    "shoelace_area",
    "solve_P",
    "t_from_w",
    "y_intercept",
]
