"""Batch timing and operation-count runs over the seeded distributions."""
from __future__ import annotations

import csv
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass, fields

import numpy as np

from hullkit.generators import PRNG_NAME, Distribution, generate
from hullkit.geom import Stats
from hullkit.quickhull import quickhull
from hullkit.reference import monotone_chain
from hullkit.rs_quickhull import rs_quickhull

log = logging.getLogger(__name__)

ALGORITHMS = ("det", "rs", "reference")
CSV_HEADER = [
    "distribution", "n", "algorithm", "trials", "mean_ms", "stddev_ms",
    "mean_orientation_tests", "mean_hull_size", "seed",
]


@dataclass(frozen=True)
class BenchConfig:
    distribution: Distribution
    sizes: tuple[int, ...]
    algorithms: tuple[str, ...] = ("det", "rs")
    trials: int = 10
    base_seed: int = 0
    shuffle_rayshoot: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not self.sizes:
            raise ValueError("sizes must be non-empty")
        if any(n < 1 for n in self.sizes):
            raise ValueError("sizes must be positive")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown or not self.algorithms:
            raise ValueError(f"algorithms must be a non-empty subset of {ALGORITHMS}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass(frozen=True)
class BenchRecord:
    distribution: str
    n: int
    algorithm: str
    trials: int
    mean_ms: float
    stddev_ms: float
    mean_orientation_tests: float
    mean_hull_size: float
    seed: int


def run_algorithm(name, points, seed, shuffle_rayshoot, stats):
    if name == "det":
        return quickhull(points, stats)
    if name == "rs":
        return rs_quickhull(points, seed, shuffle_rayshoot, stats)
    if name == "reference":
        return monotone_chain(points, stats)
    raise ValueError(f"unknown algorithm {name!r}")


def run_bench(cfg: BenchConfig) -> list[BenchRecord]:
    """One record per (size, algorithm).

    Trial k of every size uses a fresh point set generated with seed
    ``base_seed + k``; every algorithm sees the same sets.  Only the hull
    computation is timed, and timed runs never overlap: extra workers only
    generate point sets ahead of time.
    """
    log.info("bench %s sizes=%s algos=%s trials=%d seed=%d prng=%s",
             cfg.distribution.name, ",".join(map(str, cfg.sizes)),
             ",".join(cfg.algorithms), cfg.trials, cfg.base_seed, PRNG_NAME)
    records = []
    for n in cfg.sizes:
        # raises generator cap errors before any work is done
        first = generate(cfg.distribution, n, cfg.base_seed)
        for algo in cfg.algorithms:
            run_algorithm(algo, first, cfg.base_seed, cfg.shuffle_rayshoot, Stats())
        times = {a: [] for a in cfg.algorithms}
        tests = {a: [] for a in cfg.algorithms}
        sizes = {a: [] for a in cfg.algorithms}

        def make(k, n=n):
            return generate(cfg.distribution, n, cfg.base_seed + k)

        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            for k, pts in enumerate(pool.map(make, range(cfg.trials))):
                for algo in cfg.algorithms:
                    stats = Stats()
                    t0 = time.perf_counter()
                    hull = run_algorithm(algo, pts, cfg.base_seed + k, cfg.shuffle_rayshoot, stats)
                    times[algo].append((time.perf_counter() - t0) * 1e3)
                    tests[algo].append(stats.orientation_tests)
                    sizes[algo].append(len(hull))
        for algo in cfg.algorithms:
            ms = np.array(times[algo])
            rec = BenchRecord(
                distribution=cfg.distribution.name,
                n=n,
                algorithm=algo,
                trials=cfg.trials,
                mean_ms=float(ms.mean()),
                stddev_ms=float(ms.std(ddof=1)) if cfg.trials > 1 else 0.0,
                mean_orientation_tests=float(np.mean(tests[algo])),
                mean_hull_size=float(np.mean(sizes[algo])),
                seed=cfg.base_seed,
            )
            log.info("n=%d %s: %.3f ms, %.1f tests, h=%.1f", n, algo,
                     rec.mean_ms, rec.mean_orientation_tests, rec.mean_hull_size)
            records.append(rec)
    return records


def _write(records, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rec in records:
        w.writerow(repr(v) if isinstance(v, float) else v for v in astuple(rec))


def write_csv(records, destination):
    """Write records to a path or an open text stream."""
    if hasattr(destination, "write"):
        _write(records, destination)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            _write(records, fh)
    except OSError as exc:
        raise OSError(f"cannot write benchmark CSV to {destination}: {exc.strerror}") from exc


def read_csv(source) -> list[BenchRecord]:
    """Inverse of :func:`write_csv`."""
    with open(source, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != CSV_HEADER:
        raise ValueError(f"{source}: missing or unexpected CSV header")
    types = [f.type for f in fields(BenchRecord)]
    conv = {"str": str, "int": int, "float": float}
    return [BenchRecord(*(conv[t](v) for t, v in zip(types, row))) for row in rows[1:]]
