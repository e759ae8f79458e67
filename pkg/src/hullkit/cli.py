"""Command-line entry point: ``hullkit {gen,hull,verify,bench}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys

from hullkit.bench import ALGORITHMS, BenchConfig, run_bench, write_csv
from hullkit.errors import HullkitError
from hullkit.generators import Distribution, generate
from hullkit.geom import Stats
from hullkit.pointio import parse_points, read_points, write_points
from hullkit.quickhull import quickhull
from hullkit.reference import hull_problems, monotone_chain, same_cycle
from hullkit.rs_quickhull import rs_quickhull

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _default_seed():
    raw = os.environ.get("HULLKIT_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HULLKIT_SEED must be an integer, got {raw!r}") from None


def _load(path):
    if path == "-":
        return parse_points(sys.stdin)
    return read_points(path)


def _int_list(text):
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("expected at least one size")
    return vals


def _algo_list(text):
    vals = [v.strip() for v in text.split(",") if v.strip()]
    bad = [v for v in vals if v not in ALGORITHMS]
    if bad or not vals:
        raise argparse.ArgumentTypeError(f"algorithms must be drawn from {','.join(ALGORITHMS)}")
    return vals


def cmd_gen(args):
    dist = Distribution.parse(args.dist, args.h)
    pts = generate(dist, args.n, args.seed)
    if args.output in (None, "-"):
        write_points(pts, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            write_points(pts, fh)
    return EXIT_OK


def _run(algo, pts, seed, shuffle, stats):
    if algo == "det":
        return quickhull(pts, stats)
    if algo == "rs":
        return rs_quickhull(pts, seed, shuffle, stats)
    return monotone_chain(pts, stats)


def cmd_hull(args):
    pts = _load(args.input)
    stats = Stats()
    hull = _run(args.algo, pts, args.seed, not args.no_shuffle_rayshoot, stats)
    write_points(hull.coords, sys.stdout)
    if args.stats:
        for key, value in stats.as_dict().items():
            print(f"{key}={value}", file=sys.stderr)
        print(f"hull_size={len(hull)}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args):
    pts = _load(args.input)
    ref = monotone_chain(pts)
    runs = [("reference", None, ref), ("det", None, quickhull(pts))]
    for k in range(args.trials):
        seed = args.seed + k
        runs.append(("rs", seed, rs_quickhull(pts, seed, validate=True)))
        runs.append(("rs-noshuffle", seed, rs_quickhull(pts, seed, False, validate=True)))
    for name, seed, hull in runs:
        tag = name if seed is None else f"{name} (seed {seed})"
        problems = hull_problems(hull, pts)
        if problems:
            print(f"FAIL {tag}: {problems[0]}", file=sys.stderr)
            return EXIT_MISMATCH
        if not same_cycle(hull.vertices, ref.vertices):
            print(f"FAIL {tag}: hull differs from the reference "
                  f"({len(hull)} vs {len(ref)} vertices)", file=sys.stderr)
            return EXIT_MISMATCH
    print(f"ok: {len(pts)} points, {len(ref)} hull vertices, {len(runs)} runs agree")
    return EXIT_OK


def cmd_bench(args):
    cfg = BenchConfig(
        distribution=Distribution.parse(args.dist, args.h),
        sizes=tuple(args.sizes),
        algorithms=tuple(args.algos),
        trials=args.trials,
        base_seed=args.seed,
        shuffle_rayshoot=args.shuffle_rayshoot,
        workers=args.workers,
    )
    records = run_bench(cfg)
    if args.output in (None, "-"):
        write_csv(records, sys.stdout)
    else:
        write_csv(records, args.output)
    return EXIT_OK


def build_parser(default_seed):
    parser = argparse.ArgumentParser(prog="hullkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a seeded point set")
    p.add_argument("--dist", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, help="hull size for the adversarial distribution")
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hull", help="print hull vertices counter-clockwise")
    p.add_argument("input", help="point file, or - for stdin")
    p.add_argument("--algo", choices=ALGORITHMS, default="rs")
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--no-shuffle-rayshoot", action="store_true")
    p.add_argument("--stats", action="store_true", help="print counters to stderr")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("verify", help="cross-check all algorithms on one input")
    p.add_argument("input")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=default_seed)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run timed trials and write CSV")
    p.add_argument("--dist", required=True)
    p.add_argument("--h", type=int)
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--algos", type=_algo_list, default=["det", "rs"])
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--shuffle-rayshoot", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    # progress log to stderr, independent of any root logging setup
    log = logging.getLogger("hullkit")
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO)
    try:
        parser = build_parser(_default_seed())
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"hullkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (HullkitError, ValueError, OSError) as exc:
        print(f"hullkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        log.removeHandler(handler)


if __name__ == "__main__":
    sys.exit(main())
