"""Acceptance criteria 1-7.

Each test records one PASS/FAIL line, printed in the terminal summary.
Assertions run on operation counters only; wall-clock numbers are
reported, never asserted.
"""
import contextlib
import math

import numpy as np
import pytest
from conftest import ACCEPTANCE, exact_orient
from hypothesis import given, settings
from hypothesis import strategies as st

from hullkit import (
    Distribution,
    Frame,
    Point,
    Stats,
    brute_force_hull_edges,
    generate,
    monotone_chain,
    orientation,
    quickhull,
    ray_shoot,
    rs_quickhull,
)
from hullkit.bench import BenchConfig, read_csv, run_bench, write_csv
from hullkit.reference import hull_problems

pytestmark = pytest.mark.acceptance


@contextlib.contextmanager
def criterion(k, title):
    notes = []
    try:
        yield notes
    except BaseException as exc:
        why = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        ACCEPTANCE[k] = f"criterion {k} FAIL  {title}: " + "; ".join(notes + [why])
        print(ACCEPTANCE[k])
        raise
    ACCEPTANCE[k] = f"criterion {k} PASS  {title}: " + "; ".join(notes)
    print(ACCEPTANCE[k])


def cyclic_equal(a, b):
    """Same vertex coordinates in the same cyclic order."""
    if a.shape != b.shape:
        return False
    if a.shape[0] == 0:
        return True
    hits = np.flatnonzero((b == a[0]).all(axis=1))
    return any(np.array_equal(a, np.roll(b, -int(k), axis=0)) for k in hits)


def bench(name, sizes, algos, trials, seed, h=None):
    return run_bench(BenchConfig(Distribution.parse(name, h), tuple(sizes), tuple(algos), trials, seed))


def spread(values):
    return (max(values) - min(values)) / min(values)


# --- 1 -------------------------------------------------------------------------

def _agree(pts, seed):
    ref = monotone_chain(pts).coords
    runs = {
        "det": quickhull(pts),
        "rs": rs_quickhull(pts, seed),
        "rs-noshuffle": rs_quickhull(pts, seed, shuffle_rayshoot=False),
    }
    return [name for name, hull in runs.items() if not cyclic_equal(hull.coords, ref)]


def test_criterion_1_oracle_equivalence():
    with criterion(1, "det and rs hulls equal the reference") as notes:
        failures = []
        count = 0
        for name in ("square", "circle", "oncircle", "quad"):
            for n in (10, 100, 1000, 10_000):
                for k in range(100):
                    pts = generate(name, n, k)
                    failures += [(name, n, k, a) for a in _agree(pts, k)]
                    count += 1
        for n in (3, 10, 50, 100, 200, 256, 300):
            for k in range(100):
                failures += [("worst", n, k, a) for a in _agree(generate("worst", n, k), k)]
                count += 1
        for h in (3, 10, 50, 100, 200, 300):
            for k in range(10):
                pts = generate(Distribution.parse("adversarial", h), 5000, k)
                failures += [(f"adversarial-h{h}", 5000, k, a) for a in _agree(pts, k)]
                count += 1
        notes.append(f"{count} point sets x 3 runs, {len(failures)} mismatches")
        assert not failures, failures[:5]


# --- 2 -------------------------------------------------------------------------

def test_criterion_2_rayshoot_expected_tests():
    base = Frame(Point(0.0, 0.0), Point(1.0, 0.0))
    with criterion(2, "ray_shoot mean orientation tests <= 2n") as notes:
        over = []
        for n in (1000, 10_000, 100_000):
            counts = np.empty(1000)
            for k in range(1000):
                gen = np.random.default_rng([k, n])
                S = gen.random((n, 2))
                q = Point(*gen.random(2))
                stats = Stats()
                ray_shoot(base, S, q, rng=np.random.default_rng([k, n, 1]), stats=stats)
                counts[k] = stats.orientation_tests
            mean = counts.mean() / n
            err = counts.std(ddof=1) / math.sqrt(len(counts)) / n
            scans = mean - 1.0  # everything beyond one "above" test per point
            notes.append(f"n={n}: {mean:.4f}n +- {err:.4f}n (tangent scans {scans:.4f}n)")
            if mean > 2.0:
                over.append(f"n={n}")
        assert not over, "mean above 2n at " + ", ".join(over)


# --- 3 -------------------------------------------------------------------------

def test_criterion_3_oncircle_n_log_h():
    with criterion(3, "rs tests / (n ln n) on OnCircle within 50%") as notes:
        sizes = [2**10, 2**12, 2**14, 2**16]
        recs = bench("oncircle", sizes, ["rs"], 100, 0)
        ratios = []
        for r in recs:
            assert r.mean_hull_size == r.n
            ratios.append(r.mean_orientation_tests / (r.n * math.log(r.n)))
            notes.append(f"n=2^{int(math.log2(r.n))}: {ratios[-1]:.3f} ({r.mean_ms:.1f} ms)")
        notes.append(f"spread {spread(ratios):.1%}")
        assert spread(ratios) <= 0.5


# --- 4 -------------------------------------------------------------------------

def test_criterion_4_uniform_linear():
    with criterion(4, "rs tests / n on Square and Circle within 25%") as notes:
        for name in ("square", "circle"):
            recs = bench(name, [10_000, 100_000, 1_000_000], ["rs"], 20, 0)
            ratios = [r.mean_orientation_tests / r.n for r in recs]
            notes.append(f"{name} " + ", ".join(f"{x:.3f}" for x in ratios)
                         + f" (spread {spread(ratios):.1%})")
            assert spread(ratios) <= 0.25, (name, ratios)


# --- 5 -------------------------------------------------------------------------

def par(i):
    return Point(2.0**i, 2.0 ** (2 * i))


def test_criterion_5_adversarial_lower_bound():
    with criterion(5, "det on Adversarial doubles with h, exact call trace") as notes:
        n = 5000
        means = []
        for h in (50, 100, 200):
            counts = []
            for k in range(10):
                pts = generate(Distribution.parse("adversarial", h), n, k)
                stats, trace = Stats(), []
                quickhull(pts, stats, trace=trace)
                counts.append(stats.orientation_tests)
                # every point sits below the origin-to-top chord: one nested chain
                assert len(trace) == h - 2
                for j, call in enumerate(trace, start=1):
                    assert {call.a, call.b} == {Point(0, 0), par(h - j)}, (h, k, j)
                    assert call.pivot == par(h - j - 1), (h, k, j)
            means.append(float(np.mean(counts)))
        growth = [means[1] / means[0], means[2] / means[1]]
        notes.append("means " + ", ".join(f"{m:.0f}" for m in means)
                     + "; growth per doubling " + ", ".join(f"{g:.3f}" for g in growth)
                     + "; trace exact for 30 runs")
        assert all(1.6 <= g <= 2.4 for g in growth), growth


# --- 6 -------------------------------------------------------------------------

def test_criterion_6_worst_head_to_head():
    with criterion(6, "Worst n=256: det tests / rs tests > 4") as notes:
        det, rs = bench("worst", [256], ["det", "rs"], 20, 0)
        ratio = det.mean_orientation_tests / rs.mean_orientation_tests
        notes.append(f"ratio {ratio:.2f} ({det.mean_orientation_tests:.0f} vs "
                     f"{rs.mean_orientation_tests:.0f}); wall clock det {det.mean_ms:.3f} ms, "
                     f"rs {rs.mean_ms:.3f} ms")
        assert ratio > 4


# --- 7 -------------------------------------------------------------------------

DISTS = ["square", "circle", "oncircle", "quad", "worst", "adversarial"]
grid = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=64)
unit = st.lists(st.tuples(st.floats(-1, 1, allow_nan=False), st.floats(-1, 1, allow_nan=False)),
                min_size=1, max_size=64)
expo = st.integers(-300, 300).map(lambda e: 2.0**e)
coord = st.one_of(st.floats(-1e9, 1e9, allow_nan=False), expo)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(DISTS), st.integers(3, 300), st.integers(0, 2**63), st.integers(0, 2**64 - 1))
def _hull_invariants(name, n, gseed, seed):
    pts = generate(Distribution.parse(name, max(3, n // 5)), n, gseed)
    for hull in (quickhull(pts), rs_quickhull(pts, seed, validate=True)):
        assert hull_problems(hull, pts) == []


@settings(max_examples=200, deadline=None)
@given(st.one_of(grid, unit), st.integers(0, 2**64 - 1))
def _cross_oracle(pts, seed):
    hull = monotone_chain(pts)
    assert hull_problems(hull, pts) == []
    assert brute_force_hull_edges(pts) == {(b, a) for a, b in hull.edges()}
    assert rs_quickhull(pts, seed, validate=True) == hull == quickhull(pts)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 8), st.integers(1, 8)), min_size=1, max_size=20),
       st.integers(0, 2**32))
def _bridge_validity(pts, seed):
    b = ray_shoot(Frame(Point(0, 0), Point(1, 0)), pts, rng=seed, validate=True)
    for u in pts:
        if b.s == b.t:
            assert u[1] <= b.s.y
        else:
            assert exact_orient(b.s, b.t, u) <= 0


@settings(max_examples=300, deadline=None)
@given(st.tuples(coord, coord), st.tuples(coord, coord), st.tuples(coord, coord))
def _predicate_symmetry(a, b, c):
    a, b, c = Point(*a), Point(*b), Point(*c)
    o = orientation(a, b, c)
    assert o == exact_orient(a, b, c)
    assert orientation(b, c, a) == o == orientation(c, a, b) == -orientation(a, c, b)


def test_criterion_7_property_suite(tmp_path):
    with criterion(7, "property suite") as notes:
        _hull_invariants()
        notes.append("hull invariants")
        _bridge_validity()
        notes.append("bridge validity")
        _cross_oracle()
        notes.append("cross-oracle agreement")
        _predicate_symmetry()
        for i, j, k in [(1, 2, 3), (298, 299, 300), (150, 1, 300)]:
            assert orientation(par(i), par(j), par(k)) == exact_orient(par(i), par(j), par(k))
        notes.append("predicate symmetry")
        recs = bench("circle", [500, 1000], ["det", "rs", "reference"], 5, 3)
        path = tmp_path / "bench.csv"
        write_csv(recs, path)
        assert read_csv(path) == recs
        notes.append("CSV round trip")
        again = bench("circle", [500, 1000], ["det", "rs", "reference"], 5, 3)
        key = [(r.mean_orientation_tests, r.mean_hull_size) for r in recs]
        assert key == [(r.mean_orientation_tests, r.mean_hull_size) for r in again]
        pts = generate("square", 5000, 1)
        runs = []
        for _ in range(2):
            stats, trace = Stats(), []
            rs_quickhull(pts, 99, stats=stats, trace=trace)
            runs.append((stats, trace))
        assert runs[0] == runs[1]
        notes.append("seeded reproducibility")
