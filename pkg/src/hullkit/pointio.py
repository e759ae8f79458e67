"""Plain-text point lists: one ``x y`` pair per line, ``#`` comments.

Coordinates are written with ``repr`` (shortest round-trip decimal), so a
write/read cycle reproduces every binary64 value bit for bit.
"""
from __future__ import annotations

import math

import numpy as np

from hullkit.errors import PointParseError


def format_points(points) -> str:
    return "".join(f"{float(x)!r} {float(y)!r}\n" for x, y in points)


def write_points(points, fh):
    fh.write(format_points(points))


def parse_points(lines) -> np.ndarray:
    rows = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PointParseError(f"expected 2 coordinates, got {len(parts)}", lineno)
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError:
            raise PointParseError(f"not a number: {line!r}", lineno) from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise PointParseError(f"non-finite coordinate: {line!r}", lineno)
        rows.append((x, y))
    return np.array(rows, dtype=np.float64).reshape(-1, 2)


def read_points(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return parse_points(fh)
