"""Bridge finding by randomized incremental ray shooting.

Given a frame p->r, a point set strictly left of it and a pivot q, find the
edge of the upper hull (relative to the frame) that the ray from q along
the frame normal crosses.  Points are processed one at a time while the
current candidate bridge is maintained; a point above the candidate forces
a tangent scan over the processed points on the opposite side of the ray.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from hullkit import _kernels as K
from hullkit.errors import EmptyInput
from hullkit.geom import Frame, Point, Stats
from hullkit.validation import check_points, split_xy


@dataclass(frozen=True)
class Bridge:
    s: Point
    t: Point

    @property
    def degenerate(self):
        return self.s == self.t


def _pack(points, extra):
    arr = check_points(points, min_points=0)
    arr = np.vstack((arr, [tuple(e) for e in extra]))
    xs, ys = split_xy(arr)
    return arr, xs, ys


def _pt(arr, i):
    return Point(arr[i, 0], arr[i, 1])


def ray_shoot(
    frame: Frame,
    points,
    q: Point | None = None,
    *,
    shuffle: bool = True,
    rng=None,
    stats: Stats | None = None,
    validate: bool = False,
) -> Bridge:
    """Bridge of the upper hull of ``points`` plus ``q`` crossed by the ray from q.

    ``points`` is an (m, 2) array or a sequence of pairs/Points, all strictly
    left of the frame; ``q`` is not expected to appear among them.  If it is
    omitted, a pivot is drawn uniformly from ``points`` and removed from the
    processing order.  ``rng`` is anything :func:`numpy.random.default_rng`
    accepts; it drives the pivot draw and the processing permutation.  With
    ``shuffle=False`` points are processed in the order given.

    ``validate=True`` checks afterwards that no point lies above the
    returned bridge (not counted in ``stats``).
    """
    arr = check_points(points, min_points=0)
    gen = None
    if shuffle or q is None:
        gen = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    if q is None:
        if arr.shape[0] == 0:
            raise EmptyInput("ray_shoot needs a pivot or at least one point")
        k = int(gen.integers(arr.shape[0]))
        q = _pt(arr, k)
        arr = np.delete(arr, k, axis=0)
    m = arr.shape[0]
    allpts, xs, ys = _pack(arr, (q, frame.p, frame.r))
    order = gen.permutation(m) if shuffle else np.arange(m)
    counters = Stats.counters()
    s, t = K.ray_shoot_indices(
        xs, ys, order.astype(np.int64), m, m + 1, m + 2, validate, counters
    )
    if stats is not None:
        stats.absorb(counters)
    return Bridge(_pt(allpts, s), _pt(allpts, t))


def tangent_scan(
    anchor: Point,
    side_set,
    side: Literal["right", "left"],
    frame: Frame,
    stats: Stats | None = None,
) -> Point:
    """Point of ``side_set`` whose line to ``anchor`` has nothing above it.

    ``side="right"`` means the set lies on the far side of the ray from the
    anchor (the anchor is the left bridge end); ``"left"`` is the mirror
    case.  Collinear candidates resolve to the one farther along the frame.
    One orientation test is charged per member of the set.
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    arr = check_points(side_set, min_points=0)
    if arr.shape[0] == 0:
        raise EmptyInput("tangent_scan needs a non-empty side set")
    m = arr.shape[0]
    allpts, xs, ys = _pack(arr, (anchor, frame.p, frame.r))
    idx = np.arange(m, dtype=np.int64)
    counters = Stats.counters()
    scan = K.tangent_right if side == "right" else K.tangent_left
    best = scan(xs, ys, m, idx, m, m + 1, m + 2, counters)
    if stats is not None:
        stats.absorb(counters)
    return _pt(allpts, best)
