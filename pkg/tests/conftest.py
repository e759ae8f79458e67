from fractions import Fraction

import numpy as np
import pytest

from hullkit import Point


def exact_orient(a, b, c):
    """Rational sign of (b-a) x (c-a); shares no code with the package."""
    ax, ay, bx, by, cx, cy = (Fraction(float(v)) for v in (*a, *b, *c))
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def exact_cross(a, b, c, d):
    """Rational sign of (b-a) x (d-c)."""
    ax, ay, bx, by, cx, cy, dx, dy = (Fraction(float(v)) for v in (*a, *b, *c, *d))
    v = (bx - ax) * (dy - cy) - (by - ay) * (dx - cx)
    return (v > 0) - (v < 0)


def exact_along(p, r, u):
    px, py, rx, ry, ux, uy = (Fraction(float(v)) for v in (*p, *r, *u))
    return (ux - px) * (rx - px) + (uy - py) * (ry - py)


def valid_bridges(p, r, pts, q):
    """Every answer a ray shoot from q may legally return, by brute force.

    (s, t) qualifies when it straddles q along the frame, nothing lies
    strictly above the line s->t, and no point collinear with it lies
    outside the segment.  An edge lying along the ray itself counts.  (q, q) qualifies when q is the unique top point.
    """
    allpts = list(dict.fromkeys([tuple(q)] + [tuple(u) for u in pts]))
    aq = exact_along(p, r, q)
    out = set()
    for s in allpts:
        for t in allpts:
            if s == t:
                continue
            as_, at = exact_along(p, r, s), exact_along(p, r, t)
            if not as_ <= aq <= at:
                continue
            ok = True
            for u in allpts:
                o = exact_orient(s, t, u)
                au = exact_along(p, r, u)
                if o > 0 or (o == 0 and not as_ <= au <= at):
                    ok = False
                    break
            if ok:
                out.add((Point(*s), Point(*t)))
    top = True
    for u in allpts:
        o = exact_cross(p, r, q, u)
        if o > 0 or (o == 0 and exact_along(p, r, u) != aq):
            top = False
    if top:
        out.add((Point(*q), Point(*q)))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# one verdict line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
