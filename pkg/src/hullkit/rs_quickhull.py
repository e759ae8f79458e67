"""Randomized Ray-shooting Quickhull.

Each call picks its pivot uniformly from the call's points, shoots a ray
from it along the base normal to find the hull bridge (s, t) above it, and
discards everything inside the polygon (p, s, t, r) before recursing on the
points outside p->s and t->r.

Randomness is derived per call from ``(seed, call id)``, where a call id
hashes the path from the root, so a given seed fixes the whole trace
independent of the order in which subproblems are visited.

The base endpoints p and r are fed to the ray shoot along with the call's
points.  Without them the bridge is only an edge of the hull of the call's
points, which need not lie on the hull of the input when the hull angle at
p or r is acute.
"""
from __future__ import annotations

from hullkit.geom import Stats
from hullkit.quickhull import Hull, run_driver
from hullkit.validation import check_seed


def rs_quickhull(
    points,
    seed: int | None = None,
    shuffle_rayshoot: bool = True,
    stats: Stats | None = None,
    *,
    trace: list | None = None,
    validate: bool = False,
) -> Hull:
    """Convex hull by randomized Ray-shooting Quickhull.

    The output never depends on ``seed``; only the operation counts do.
    ``shuffle_rayshoot=False`` processes each call's points in their
    current order instead of a random permutation.  ``validate=True``
    re-checks every bridge and every pruned point with uncounted exact
    tests and raises ``AssertionError`` on a violation.
    """
    return run_driver(
        points,
        randomized=True,
        seed=check_seed(seed),
        shuffle=shuffle_rayshoot,
        validate=validate,
        stats=stats,
        trace=trace,
    )
