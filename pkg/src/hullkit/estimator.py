"""scikit-learn style wrapper around the hull algorithms."""
import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils import check_random_state
from sklearn.utils.validation import check_is_fitted

from hullkit import _kernels as K
from hullkit.geom import Stats
from hullkit.quickhull import quickhull
from hullkit.reference import monotone_chain
from hullkit.rs_quickhull import rs_quickhull
from hullkit.validation import check_points, split_xy


class ConvexHull(BaseEstimator):
    """Fit the convex hull of a 2-D point cloud.

    Parameters
    ----------
    algorithm : {"rs", "det", "reference"}, default="rs"
        Randomized Ray-shooting Quickhull, deterministic Quickhull, or the
        monotone-chain reference.
    random_state : int, RandomState instance or None, default=None
        Seeds the pivot choices of ``algorithm="rs"``.  The hull itself
        never depends on it.
    shuffle_rayshoot : bool, default=True
        Randomly permute each ray-shooting query's points.

    Attributes
    ----------
    vertices_ : ndarray of shape (h, 2)
        Hull vertices counter-clockwise from the lexicographic minimum.
    vertex_indices_ : ndarray of shape (h,)
        Row of each vertex in the training data.
    stats_ : Stats
        Operation counters of the fit.
    seed_ : int
        Seed actually used by the randomized algorithm.
    """

    def __init__(self, algorithm="rs", random_state=None, shuffle_rayshoot=True):
        self.algorithm = algorithm
        self.random_state = random_state
        self.shuffle_rayshoot = shuffle_rayshoot

    def fit(self, X, y=None):
        X = check_points(X)
        stats = Stats()
        self.seed_ = int(check_random_state(self.random_state).randint(2**63 - 1, dtype=np.int64))
        if self.algorithm == "rs":
            hull = rs_quickhull(X, self.seed_, self.shuffle_rayshoot, stats)
        elif self.algorithm == "det":
            hull = quickhull(X, stats)
        elif self.algorithm == "reference":
            hull = monotone_chain(X, stats)
        else:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        self.vertex_indices_ = hull.indices
        self.vertices_ = X[hull.indices]
        self.stats_ = stats
        self.n_features_in_ = 2
        return self

    def predict(self, X):
        """Boolean mask: does each point lie in the closed hull?"""
        check_is_fitted(self, "vertices_")
        X = check_points(X, min_points=0)
        hx, hy = split_xy(self.vertices_)
        return K.contains_kernel(hx, hy, *split_xy(X))

    def fit_predict(self, X, y=None):
        return self.fit(X).predict(X)
