"""Area bisector of a triangle with a prescribed direction.

Every bisecting line is reached by tilting one of the three edge-parallel
bisectors ("edge-bisects") about a pivot on it. The directions obtainable
from the edge-bisect parallel to edge ``a`` are

    u_a(w) = (a - c) + w (c - b),   w in [0, 1]

and cyclically for ``b`` and ``c``; the endpoints are median directions.
Writing the query direction ``u`` as ``u x = u_k(w)`` gives a 2x2 linear
system per case. The case whose ``w`` lands in [0, 1] names the edge-bisect
to pivot on, and ``w`` fixes the pivot's position ``t`` along it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .errors import DegenerateDirection, DomainError, NoCaseSelected
from .geom import ParamLine, Vec2, dot, is_zero_vector, perp
from .triangle import CASES, M, EdgeCase, Triangle, edges

log = logging.getLogger(__name__)

W_TOL = 1e-9
PARALLEL_RTOL = 1e-12
T_MIN = math.sqrt(2.0) - 1.0
T_MAX = 2.0 - math.sqrt(2.0)
# Tolerance on the two selected lines agreeing in the median case, as a
# fraction of the triangle diameter.
MEDIAN_AGREEMENT_RTOL = 1e-9


@dataclass(frozen=True)
class CaseSolution:
    case: EdgeCase
    x: float
    w: float


# A case system either solves or is undefined (None).
SolveOutcome = Optional[CaseSolution]


@dataclass(frozen=True)
class BisectorResult:
    selected: Tuple[CaseSolution, ...]
    t: float
    line: ParamLine
    degenerate_median: bool
    all_outcomes: Tuple[SolveOutcome, SolveOutcome, SolveOutcome]

    @property
    def case(self) -> EdgeCase:
        return self.selected[0].case

    @property
    def w(self) -> float:
        return self.selected[0].w

    @property
    def x(self) -> float:
        return self.selected[0].x


def solve_P(x: Vec2, y: Vec2, z: Vec2) -> Optional[Tuple[float, float]]:
    """Solve ``x * s = z + w * y`` for ``(s, w)``.

    Returns None when ``x`` is parallel to ``y`` (the system is singular).
    """
    den = dot(x, perp(y))
    if abs(den) <= PARALLEL_RTOL * x.norm() * y.norm():
        return None
    return dot(z, perp(y)) / den, dot(z, perp(x)) / den


def case_arguments(t: Triangle, case: EdgeCase) -> Tuple[Vec2, Vec2]:
    """``(w-coefficient, constant)`` of the direction range for ``case``."""
    a, b, c = edges(t)
    if case is EdgeCase.A:
        return c - b, a - c
    if case is EdgeCase.B:
        return a - c, b - a
    return b - a, c - b


def case_direction(t: Triangle, case: EdgeCase, w: float) -> Vec2:
    slope_vec, const = case_arguments(t, case)
    return const + slope_vec * w


def case_systems(t: Triangle, u: Vec2) -> Tuple[SolveOutcome, SolveOutcome, SolveOutcome]:
    if is_zero_vector(u):
        raise DegenerateDirection(f"query direction ({u.x}, {u.y}) is zero")
    out = []
    for case in CASES:
        y, z = case_arguments(t, case)
        sol = solve_P(u, y, z)
        out.append(None if sol is None else CaseSolution(case, sol[0], sol[1]))
    return out[0], out[1], out[2]


def _clamp01(w: float) -> float:
    return min(1.0, max(0.0, w))


def select_case(
    outcomes: Sequence[SolveOutcome],
) -> Tuple[Tuple[CaseSolution, ...], bool]:
    """Pick the case solution(s) whose tilt parameter lies in [0, 1].

    Returns the selected solutions (w clamped into [0, 1]) in A, B, C order
    and whether the query runs along a median.
    """
    undefined = [i for i, o in enumerate(outcomes) if o is None]
    if len(undefined) > 1:
        raise NoCaseSelected("more than one case system is singular")
    if undefined:
        # Parallel to the median shared by the neighbouring cases: it is the
        # w = 0 end of the previous case's range and the w = 1 end of the next.
        k = undefined[0]
        prev_sol = outcomes[(k - 1) % 3]
        next_sol = outcomes[(k + 1) % 3]
        chosen = [
            CaseSolution(prev_sol.case, prev_sol.x, 0.0),
            CaseSolution(next_sol.case, next_sol.x, 1.0),
        ]
        chosen.sort(key=lambda s: s.case.index)
        return tuple(chosen), True

    chosen = [
        CaseSolution(o.case, o.x, _clamp01(o.w))
        for o in outcomes
        if -W_TOL <= o.w <= 1.0 + W_TOL
    ]
    if not chosen:
        ws = ", ".join(f"{o.case}: {o.w:.6g}" for o in outcomes)
        raise NoCaseSelected(f"no tilt parameter in [0, 1] ({ws})")
    if len(chosen) > 2:
        # Only reachable for near-degenerate input; keep the two nearest the
        # median pair pattern (w closest to an endpoint).
        chosen.sort(key=lambda s: min(s.w, 1.0 - s.w))
        chosen = sorted(chosen[:2], key=lambda s: s.case.index)
    return tuple(chosen), len(chosen) == 2


def t_from_w(w: float) -> float:
    """Fraction along the edge-bisect of the pivot for tilt parameter ``w``.

    Decreases from 2 - sqrt(2) at w = 0 to sqrt(2) - 1 at w = 1.
    """
    if not -W_TOL <= w <= 1.0 + W_TOL:
        raise DomainError(f"tilt parameter w={w} outside [0, 1]")
    w = _clamp01(w)
    return 1.0 / (1.0 + math.sqrt((1.0 + w) / (2.0 - w)))


def pivot_point(t: Triangle, case: EdgeCase, tt: float) -> Vec2:
    a, b, c = edges(t)
    if case is EdgeCase.A:
        return t.C + b * (1.0 - M) - a * (tt * M)
    if case is EdgeCase.B:
        return t.A + c * (1.0 - M) - b * (tt * M)
    return t.B + a * (1.0 - M) - c * (tt * M)


def bisecting_line(
    t: Triangle, u: Vec2, prefer: Optional[EdgeCase] = None
) -> BisectorResult:
    """Line with direction ``u`` splitting ``t`` into two equal areas.

    When ``u`` runs along a median two cases qualify and give the same line;
    the first in A, B, C order is reported unless ``prefer`` names the other.
    """
    outcomes = case_systems(t, u)
    selected, degenerate = select_case(outcomes)
    if degenerate and prefer is not None and selected[1].case is prefer:
        selected = (selected[1], selected[0])

    primary = selected[0]
    tt = t_from_w(primary.w)
    line = ParamLine(pivot_point(t, primary.case, tt), u)

    if degenerate:
        other = selected[1]
        other_base = pivot_point(t, other.case, t_from_w(other.w))
        gap = line.distance_to(other_base)
        if gap > MEDIAN_AGREEMENT_RTOL * t.diameter():
            log.warning(
                "median-direction cases %s and %s disagree by %.3g",
                primary.case, other.case, gap,
            )
    return BisectorResult(selected, tt, line, degenerate, outcomes)


def sample_family(t: Triangle, n: int) -> List[BisectorResult]:
    """Bisectors for ``n`` evenly spaced tilt parameters in each case.

    Results are ordered by case then ascending ``w``; ``3 n`` in total.
    """
    if n < 2:
        raise ValueError(f"sample count must be at least 2, got {n}")
    out: List[BisectorResult] = []
    for case in CASES:
        for i in range(n):
            w = i / (n - 1)
            out.append(bisecting_line(t, case_direction(t, case, w), prefer=case))
    return out


def parse_slope(value: Union[str, float]) -> Vec2:
    """Direction vector for a scalar slope, or ``(0, 1)`` for ``"vertical"``."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("vertical", "inf", "infinity"):
            return Vec2(0.0, 1.0)
        value = float(text)
    if not math.isfinite(value):
        raise DegenerateDirection(f"slope {value} is not finite")
    return Vec2(1.0, float(value))
