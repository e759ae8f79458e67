"""Points, frames, operation counters and the exact sign predicates."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, fields

import numpy as np

from hullkit import _kernels as K


@dataclass(frozen=True, order=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        x = float(self.x)
        y = float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Point({self.x!r}, {self.y!r})"


class Orient(enum.IntEnum):
    RIGHT = -1
    COLLINEAR = 0
    LEFT = 1


@dataclass
class Stats:
    """Operation counters for one algorithm run.

    ``orientation_tests`` is the machine-independent cost measure; the rest
    describe the shape of the recursion.
    """

    orientation_tests: int = 0
    ray_shoot_calls: int = 0
    recursive_calls: int = 0
    points_pruned: int = 0
    max_depth: int = 0

    @staticmethod
    def counters():
        return np.zeros(K.N_COUNTERS, np.int64)

    def absorb(self, counters):
        """Fold a kernel counter array into this accumulator."""
        self.orientation_tests += int(counters[K.ORIENT])
        self.ray_shoot_calls += int(counters[K.RAYSHOOT])
        self.recursive_calls += int(counters[K.CALLS])
        self.points_pruned += int(counters[K.PRUNED])
        self.max_depth = max(self.max_depth, int(counters[K.DEPTH]))
        return self

    def merge(self, other: Stats) -> Stats:
        """Combine counters from an independent run or branch."""
        return Stats(
            self.orientation_tests + other.orientation_tests,
            self.ray_shoot_calls + other.ray_shoot_calls,
            self.recursive_calls + other.recursive_calls,
            self.points_pruned + other.points_pruned,
            max(self.max_depth, other.max_depth),
        )

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class Frame:
    """Directed base segment p->r; its subproblem lies strictly to the left."""

    p: Point
    r: Point

    def __post_init__(self):
        if self.p == self.r:
            raise ValueError("frame endpoints must differ")


def _count(stats):
    if stats is not None:
        stats.orientation_tests += 1


def orientation(a: Point, b: Point, c: Point, stats: Stats | None = None) -> Orient:
    """Exact turn direction of a->b->c."""
    _count(stats)
    return Orient(K.cross_sign(a.x, a.y, b.x, b.y, a.x, a.y, c.x, c.y))


def along(f: Frame, u: Point) -> float:
    """Scalar projection (u - p).(r - p), rounded as a float.

    The algorithms never compare these floats directly; they use the exact
    comparison in :func:`along_sign`.
    """
    dx = f.r.x - f.p.x
    dy = f.r.y - f.p.y
    return (u.x - f.p.x) * dx + (u.y - f.p.y) * dy


def along_sign(f: Frame, u: Point, v: Point) -> int:
    """Exact sign of along(f, u) - along(f, v)."""
    return int(K.dot_sign(v.x, v.y, u.x, u.y, f.p.x, f.p.y, f.r.x, f.r.y))


def above_line(a: Point, b: Point, u: Point, stats: Stats | None = None) -> bool:
    # strict: collinear is not above
    return orientation(a, b, u, stats) is Orient.LEFT


def above_degenerate(f: Frame, q: Point, u: Point, stats: Stats | None = None) -> bool:
    """Is u strictly left of the line through q parallel to p->r?"""
    _count(stats)
    p, r = f.p, f.r
    return K.cross_sign(p.x, p.y, r.x, r.y, q.x, q.y, u.x, u.y) > 0


def as_points(data) -> list[Point]:
    """Coerce an (n, 2) array or an iterable of pairs into Points."""
    return [p if isinstance(p, Point) else Point(*p) for p in data]
