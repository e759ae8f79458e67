"""Independent hull oracles: Andrew's monotone chain and brute-force edges."""
from __future__ import annotations

import numpy as np

from hullkit import _kernels as K
from hullkit.errors import TooLarge
from hullkit.geom import Point, Stats
from hullkit.quickhull import Hull, _hull_from_indices
from hullkit.validation import check_points, split_xy

BRUTE_FORCE_LIMIT = 64


def monotone_chain(points, stats: Stats | None = None) -> Hull:
    """O(n log n) hull with the same conventions as the Quickhull variants."""
    arr = check_points(points)
    xs, ys = split_xy(arr)
    order = np.lexsort((ys, xs)).astype(np.int64)
    counters = Stats.counters()
    idx = K.monotone_chain_kernel(xs, ys, order, counters)
    if stats is not None:
        stats.absorb(counters)
    return _hull_from_indices(arr, idx)


def brute_force_hull_edges(points) -> set[tuple[Point, Point]]:
    """All ordered pairs (a, b) with every point on or to the right of a->b.

    Only maximal edges qualify: points collinear with a and b must lie on
    the closed segment between them.  These are the hull edges directed
    clockwise; a hull of two points yields both directions.
    """
    arr = check_points(points)
    arr = np.unique(arr, axis=0)
    if arr.shape[0] > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force is limited to {BRUTE_FORCE_LIMIT} points, got {arr.shape[0]}")
    xs, ys = split_xy(arr)
    pairs = K.hull_edges_kernel(xs, ys)
    pt = lambda i: Point(arr[i, 0], arr[i, 1])  # noqa: E731
    return {(pt(a), pt(b)) for a, b in pairs}


def same_cycle(a, b) -> bool:
    """Do two vertex sequences describe the same cyclic order?"""
    a = list(a)
    b = list(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        k = b.index(a[0])
    except ValueError:
        return False
    return a == b[k:] + b[:k]


def hull_problems(hull: Hull, points) -> list[str]:
    """Describe every violated hull invariant; an empty list means valid."""
    arr = check_points(points)
    verts = list(hull.vertices)
    problems = []
    members = {tuple(p) for p in arr.tolist()}
    for v in verts:
        if (v.x, v.y) not in members:
            problems.append(f"vertex {v} is not an input point")
    if len(set(verts)) != len(verts):
        problems.append("repeated vertices")
    h = len(verts)
    if h >= 3:
        for i in range(h):
            a, b, c = verts[i], verts[(i + 1) % h], verts[(i + 2) % h]
            if K.cross_sign(a.x, a.y, b.x, b.y, a.x, a.y, c.x, c.y) <= 0:
                problems.append(f"turn at {b} is not strictly left")
    if verts and verts[0] != min(verts):
        problems.append("hull does not start at the lexicographic minimum")
    hx = np.array([v.x for v in verts])
    hy = np.array([v.y for v in verts])
    if h:
        inside = K.contains_kernel(hx, hy, *split_xy(arr))
        if not inside.all():
            bad = arr[~inside][0]
            problems.append(f"input point ({bad[0]!r}, {bad[1]!r}) lies outside the hull")
    return problems
