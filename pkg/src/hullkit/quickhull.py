"""Deterministic Quickhull with operation counting and an optional call log."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from hullkit import _kernels as K
from hullkit.errors import EmptyInput
from hullkit.geom import Frame, Point, Stats, as_points
from hullkit.validation import check_points, split_xy


class Hull:
    """Strict extreme points, counter-clockwise from the lexicographic minimum.

    ``coords`` holds the vertices as an (h, 2) array and ``indices`` their
    rows in the input, when known; ``vertices`` builds Points on demand.
    """

    def __init__(self, vertices=(), indices=None, *, coords=None):
        if coords is None:
            coords = np.array([tuple(v) for v in vertices], dtype=np.float64).reshape(-1, 2)
        self.coords = coords
        self.indices = indices

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        return tuple(Point(x, y) for x, y in self.coords.tolist())

    def __len__(self):
        return self.coords.shape[0]

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Hull):
            return NotImplemented
        return np.array_equal(self.coords, other.coords)

    __hash__ = None

    def __repr__(self):
        return f"Hull({list(self.vertices)!r})"

    def edges(self):
        h = len(self)
        verts = self.vertices
        if h < 2:
            return []
        if h == 2:
            a, b = verts
            return [(a, b), (b, a)]
        return [(verts[i], verts[(i + 1) % h]) for i in range(h)]


@dataclass(frozen=True)
class CallRecord:
    """One recursive call: its base edge a->b, the chosen point and the split.

    For deterministic Quickhull ``pivot``, ``s`` and ``t`` all name the
    farthest point.  ``side`` is "upper" for calls descending from the
    initial p->r subproblem and "lower" for r->p.
    """

    a: Point
    b: Point
    pivot: Point
    s: Point
    t: Point
    size: int
    depth: int
    side: str


def _hull_from_indices(arr, idx):
    idx = np.asarray(idx, dtype=np.int64)
    return Hull(indices=idx, coords=arr[idx])


def _records(arr, log, nlog, p_index):
    out = []
    side = None
    for row in log[:nlog]:
        a, b, piv, s, t, size, depth = (int(v) for v in row)
        if depth == 1:
            side = "upper" if a == p_index else "lower"
        pt = lambda i: Point(arr[i, 0], arr[i, 1])  # noqa: E731
        out.append(CallRecord(pt(a), pt(b), pt(piv), pt(s), pt(t), size, depth, side))
    return out


def run_driver(points, *, randomized, seed=0, shuffle=True, validate=False,
               stats=None, trace=None):
    """Shared entry for both Quickhull variants; returns a :class:`Hull`."""
    arr = check_points(points)
    xs, ys = split_xy(arr)
    n = arr.shape[0]
    counters = Stats.counters()
    log = np.empty((n + 1, 7), np.int64)
    idx, nlog = K.quickhull_kernel(
        xs, ys, randomized, np.uint64(seed), shuffle, validate, counters, log
    )
    if stats is not None:
        stats.absorb(counters)
    if trace is not None:
        p_index = int(idx[0])
        trace.extend(_records(arr, log, nlog, p_index))
    return _hull_from_indices(arr, idx)


def farthest_point(frame: Frame, points, stats: Stats | None = None) -> Point:
    """Point of ``points`` farthest from the line through the frame.

    Distances are compared exactly as doubled triangle areas over the fixed
    base; ties go to the lexicographically smaller point.
    """
    points = as_points(points)
    if not points:
        raise EmptyInput("farthest_point needs at least one point")
    pts = points + [frame.p, frame.r]
    xs = np.array([p.x for p in pts])
    ys = np.array([p.y for p in pts])
    m = len(points)
    work = np.arange(m, dtype=np.int64)
    counters = Stats.counters()
    f = K.farthest_scan(xs, ys, work, 0, m, m, m + 1, counters)
    if stats is not None:
        stats.absorb(counters)
    return pts[f]


def quickhull(points, stats: Stats | None = None, *, trace: list | None = None) -> Hull:
    """Convex hull by deterministic Quickhull.

    ``points`` is an (n, 2) array or a sequence of pairs/Points; duplicates
    are allowed.  When ``trace`` is a list, one :class:`CallRecord` per
    recursive call is appended in execution order.
    """
    return run_driver(points, randomized=False, stats=stats, trace=trace)
