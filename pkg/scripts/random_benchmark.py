#!/usr/bin/env python3
"""Compare both pass flavors on generated instances and emit the usual CSVs.

Instances are synthesized in memory (uniform or clustered), so this gives a
quick read on relative cut quality without any benchmark files.

Example:
    python scripts/random_benchmark.py --instances 30 --family clustered \
        --seeds 10 --csv rows.csv --summary summary.csv
"""

import argparse
import random
import sys

from fmpart.cli import parse_seed_spec, run_experiment, write_rows_csv, write_summary_csv
from fmpart.fm import FmConfig
from fmpart.synth import clustered_hypergraph, random_hypergraph


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--instances", type=int, default=30)
    ap.add_argument("--family", choices=("uniform", "clustered"), default="clustered")
    ap.add_argument("--cells", type=int, nargs=2, default=(60, 200), metavar=("LO", "HI"))
    ap.add_argument("--nets", type=int, nargs=2, default=(80, 300), metavar=("LO", "HI"))
    ap.add_argument("--cross-fraction", type=float, default=0.4)
    ap.add_argument("--master-seed", type=int, default=9, help="instance generator seed")
    ap.add_argument("--seeds", type=parse_seed_spec, default=list(range(1, 11)))
    ap.add_argument("--max-passes", type=int, default=100)
    ap.add_argument("--tie", choices=("random", "fifo", "lifo"), default="random")
    ap.add_argument("--csv", default=None)
    ap.add_argument("--summary", default=None)
    args = ap.parse_args(argv)

    rng = random.Random(args.master_seed)
    entries = []
    for i in range(args.instances):
        n = rng.randint(*args.cells)
        nets = rng.randint(*args.nets)
        if args.family == "clustered":
            h = clustered_hypergraph(rng, n, nets, cross_fraction=args.cross_fraction)
        else:
            h = random_hypergraph(rng, n, nets)
        entries.append((f"rand{i:03d}(n={n},e={nets})", h))

    cfg = FmConfig(seed=1, tie_policy=args.tie, max_passes=args.max_passes)
    rows, summary = run_experiment(entries, ["fm", "fm_variant"], args.seeds, cfg)

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_rows_csv(rows, fh)
    else:
        write_rows_csv(rows, sys.stdout)
    if args.summary:
        with open(args.summary, "w", newline="") as fh:
            write_summary_csv(summary, args.seeds, fh)
    else:
        write_summary_csv(summary, args.seeds, sys.stdout)

    fm_mean = sum(r.optimal_cut for r in rows if r.algorithm == "fm") / max(len(args.seeds) * len(entries), 1)
    var_mean = sum(r.optimal_cut for r in rows if r.algorithm == "fm_variant") / max(len(args.seeds) * len(entries), 1)
    print(f"# per-run mean cut: fm={fm_mean:.3f} fm_variant={var_mean:.3f}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
