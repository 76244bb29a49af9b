import math
import random

import pytest

from areabisect import DegenerateTriangle, Triangle, Vec2

PAPER_POINTS = [(4.0, 2.0), (1.0, 9.0), (10.0, 1.0)]

# Filled by test_acceptance; printed at the end of the run.
ACCEPTANCE_RESULTS = {}


@pytest.fixture
def paper_triangle():
    return Triangle.from_points(PAPER_POINTS)


@pytest.fixture
def unit_right():
    return Triangle.from_points([(0, 0), (0, 1), (1, 0)])


def random_triangle(rng, lo=-100.0, hi=100.0):
    while True:
        pts = [(rng.uniform(lo, hi), rng.uniform(lo, hi)) for _ in range(3)]
        try:
            return Triangle.from_points(pts)
        except DegenerateTriangle:
            continue


def random_direction(rng):
    a = rng.uniform(0.0, 2.0 * math.pi)
    return Vec2(math.cos(a), math.sin(a))


def corpus(seed, n_triangles, n_dirs):
    rng = random.Random(seed)
    out = []
    for _ in range(n_triangles):
        t = random_triangle(rng)
        out.append((t, [random_direction(rng) for _ in range(n_dirs)]))
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.split("/")[0]), k)):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key:<12} {'PASS' if ok else 'FAIL'}  {detail}")
