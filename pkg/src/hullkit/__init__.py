"""Convex hulls in the plane by deterministic and Ray-shooting Quickhull."""
from hullkit.errors import CapExceeded, EmptyInput, HullkitError, InvalidH, PointParseError, TooLarge
from hullkit.generators import Distribution, generate
from hullkit.geom import Frame, Orient, Point, Stats, above_degenerate, above_line, along, orientation
from hullkit.quickhull import CallRecord, Hull, farthest_point, quickhull
from hullkit.ray_shoot import Bridge, ray_shoot, tangent_scan
from hullkit.reference import brute_force_hull_edges, monotone_chain, same_cycle
from hullkit.rs_quickhull import rs_quickhull

__version__ = "0.1.0"

__all__ = [
    "Bridge",
    "CallRecord",
    "CapExceeded",
    "Distribution",
    "EmptyInput",
    "Frame",
    "Hull",
    "HullkitError",
    "InvalidH",
    "Orient",
    "Point",
    "PointParseError",
    "Stats",
    "TooLarge",
    "above_degenerate",
    "above_line",
    "along",
    "brute_force_hull_edges",
    "farthest_point",
    "generate",
    "monotone_chain",
    "orientation",
    "quickhull",
    "ray_shoot",
    "rs_quickhull",
    "same_cycle",
    "tangent_scan",
]
