"""Seeded point distributions for the hull experiments.

All randomness comes from numpy's PCG64 generator seeded with the caller's
seed, so (distribution, n, seed) always yields the same points.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from hullkit import _kernels as K
from hullkit.errors import CapExceeded, InvalidH

PRNG_NAME = "numpy.PCG64"
# exponents 2**i and 2**(2i) above this push determinant terms past binary64
EXPONENT_CAP = 300

# interior region for the adversarial filler; it lies inside the hull of
# the parabola points, so it adds no vertices
FILL_TRIANGLE = ((0.0, 0.0), (2.0, 4.0), (4.0, 16.0))


class Kind(enum.Enum):
    SQUARE = "square"
    CIRCLE = "circle"
    ONCIRCLE = "oncircle"
    QUAD = "quad"
    WORST = "worst"
    ADVERSARIAL = "adversarial"


@dataclass(frozen=True)
class Distribution:
    kind: Kind
    h: int | None = None

    @classmethod
    def parse(cls, name: str, h: int | None = None) -> Distribution:
        try:
            kind = Kind(name.lower().replace("-", "").replace("_", ""))
        except ValueError:
            names = ", ".join(k.value for k in Kind)
            raise ValueError(f"unknown distribution {name!r}; choose from {names}") from None
        if kind is Kind.ADVERSARIAL and h is None:
            raise InvalidH("the adversarial distribution needs a hull size h")
        return cls(kind, h if kind is Kind.ADVERSARIAL else None)

    @property
    def name(self):
        if self.kind is Kind.ADVERSARIAL:
            return f"adversarial-h{self.h}"
        return self.kind.value


def _rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def _square(n, rng):
    return rng.random((n, 2))


def _circle(n, rng):
    out = np.empty((n, 2))
    filled = 0
    while filled < n:
        want = n - filled
        batch = rng.uniform(-1.0, 1.0, size=(int(want * 1.3) + 16, 2))
        keep = batch[(batch * batch).sum(axis=1) <= 1.0][:want]
        out[filled:filled + keep.shape[0]] = keep
        filled += keep.shape[0]
    return out


def _oncircle(n, rng):
    theta = rng.uniform(0.0, 2.0 * np.pi, size=n)
    return np.column_stack((np.cos(theta), np.sin(theta)))


def _quad(n, rng):
    x = rng.random(n)
    return np.column_stack((x, x * x))


def parabola_points(k):
    """(2**i, 2**(2i)) for i = 1..k, exact in binary64."""
    i = np.arange(1, k + 1, dtype=np.float64)
    return np.column_stack((np.exp2(i), np.exp2(2.0 * i)))


def _worst(n, rng):
    if n > EXPONENT_CAP:
        raise CapExceeded(f"worst distribution is capped at n <= {EXPONENT_CAP}, got {n}")
    return rng.permutation(parabola_points(n))


def _strictly_inside(tri, pts):
    (ax, ay), (bx, by), (cx, cy) = tri
    ok = np.ones(pts.shape[0], bool)
    for i, (x, y) in enumerate(pts):
        ok[i] = (
            K.cross_sign(ax, ay, bx, by, ax, ay, x, y) > 0
            and K.cross_sign(bx, by, cx, cy, bx, by, x, y) > 0
            and K.cross_sign(cx, cy, ax, ay, cx, cy, x, y) > 0
        )
    return ok


def triangle_fill(k, rng, tri=FILL_TRIANGLE):
    """k uniform points strictly inside ``tri`` (boundary hits are redrawn)."""
    a, b, c = (np.asarray(v) for v in tri)
    out = np.empty((k, 2))
    filled = 0
    while filled < k:
        want = k - filled
        u = rng.random((want, 2))
        flip = u.sum(axis=1) > 1.0
        u[flip] = 1.0 - u[flip]
        pts = a + u[:, :1] * (b - a) + u[:, 1:] * (c - a)
        pts = pts[_strictly_inside(tri, pts)]
        out[filled:filled + pts.shape[0]] = pts
        filled += pts.shape[0]
    return out


def adversarial(n, h, rng):
    """Hull of h points that drives deterministic Quickhull to h - 2 nested calls.

    The origin and (2**i, 2**(2i)) for i = 1..h-1 are the hull; the other
    n - h points sit strictly inside the triangle (0,0), (2,4), (4,16), so
    every nested call keeps carrying them.
    """
    if not 3 <= h <= n:
        raise InvalidH(f"adversarial hull size must satisfy 3 <= h <= n, got h={h}, n={n}")
    if h > EXPONENT_CAP:
        raise CapExceeded(f"adversarial hull size is capped at h <= {EXPONENT_CAP}, got {h}")
    hull = np.vstack(([0.0, 0.0], parabola_points(h - 1)))
    pts = np.vstack((hull, triangle_fill(n - h, rng)))
    return rng.permutation(pts)


def generate(dist: Distribution | str, n: int, seed: int) -> np.ndarray:
    """Exactly n points of the named distribution as an (n, 2) array."""
    if isinstance(dist, str):
        dist = Distribution.parse(dist)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = _rng(seed)
    kind = dist.kind
    if kind is Kind.SQUARE:
        return _square(n, rng)
    if kind is Kind.CIRCLE:
        return _circle(n, rng)
    if kind is Kind.ONCIRCLE:
        return _oncircle(n, rng)
    if kind is Kind.QUAD:
        return _quad(n, rng)
    if kind is Kind.WORST:
        return _worst(n, rng)
    return adversarial(n, dist.h, rng)
