"""Input checks shared by the functional API and the estimators."""
import numpy as np

from hullkit.errors import EmptyInput
from hullkit.geom import Point


def check_points(X, *, min_points=1):
    """Return X as a C-contiguous (n, 2) float64 array of finite values.

    Accepts arrays, sequences of pairs, and sequences of :class:`Point`.
    """
    if isinstance(X, np.ndarray):
        arr = X
    else:
        X = list(X)
        arr = [tuple(p) if isinstance(p, Point) else p for p in X]
    arr = np.asarray(arr, dtype=np.float64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("point coordinates must be finite")
    if arr.shape[0] < min_points:
        raise EmptyInput(f"need at least {min_points} point(s), got {arr.shape[0]}")
    return np.ascontiguousarray(arr)


def split_xy(arr):
    return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])


def check_seed(seed):
    """Normalize a user seed to an unsigned 64-bit integer."""
    if seed is None:
        return int(np.random.SeedSequence().generate_state(1, np.uint64)[0])
    seed = int(seed)
    return seed & 0xFFFFFFFFFFFFFFFF
