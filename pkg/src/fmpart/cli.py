"""Benchmark harness. Subcommands: run, verify, stats.

All randomness flows from the seed list; result rows come out in
(file, algorithm, seed) order regardless of worker scheduling.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, ROUND_DOWN
from typing import Optional, Sequence

from .fm import FmConfig, RunResult, fm_run
from .hypergraph import Hypergraph
from .netlist_io import NetlistDocument, NetlistFormatError, parse_hgr, parse_ibm_net
from .oracle import MAX_ORACLE_CELLS, exact_min_cut_balanced
from .pairwise import variant_run

ROW_FIELDS = ("file", "algorithm", "seed", "initial_cut", "optimal_cut", "passes", "elapsed_ms")
SUMMARY_FIELDS = ("file", "fm_best", "variant_best", "gain_mu")
JOBS_ENV_VAR = "PARTITION_JOBS"
DEFAULT_SEED_COUNT = 10


def gain_mu(fm_cut: int, variant_cut: int) -> float:
    """Percentage cut improvement of the pairwise variant over plain moves."""
    if fm_cut <= 0:
        raise ValueError("gain is undefined when the reference cut is 0")
    return (fm_cut - variant_cut) / fm_cut * 100.0


def format_gain_mu(value: float, decimals: int = 2) -> str:
    """Fixed-point display, truncated toward zero (44.0678 -> "44.06")."""
    q = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(value)).quantize(q, rounding=ROUND_DOWN))


@dataclass(frozen=True)
class ExperimentRow:
    """Per-file summary: best cut per algorithm across seeds, plus the gain.

    gain_mu is None when undefined (reference cut 0) or an algorithm did
    not run; the CSV writer flags such rows instead of computing a value.
    """

    label: str
    fm_best: Optional[int]
    variant_best: Optional[int]
    gain_mu: Optional[float]


def _execute(task):
    label, algo, h, cfg = task
    runner = fm_run if algo == "fm" else variant_run
    return runner(h, cfg, label=label)


def run_experiment(
    entries: Sequence[tuple[str, Hypergraph]],
    algorithms: Sequence[str],
    seeds: Sequence[int],
    cfg: FmConfig,
    jobs: int = 1,
) -> tuple[list[RunResult], list[ExperimentRow]]:
    """Cross product of entries x algorithms x seeds with deterministic row order.

    entries are (label, hypergraph) pairs; algorithms use the row names
    "fm" and "fm_variant". The summary takes the best (minimum) optimal cut
    per algorithm across seeds for each entry.
    """
    tasks = []
    for label, h in entries:
        for algo in algorithms:
            for seed in seeds:
                tasks.append(
                    (label, algo, h, FmConfig(seed=seed, tie_policy=cfg.tie_policy, max_passes=cfg.max_passes))
                )
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_execute, tasks))
    else:
        rows = [_execute(t) for t in tasks]
    summary = []
    for label, _h in entries:
        best: dict[str, int] = {}
        for r in rows:
            if r.label == label:
                cur = best.get(r.algorithm)
                best[r.algorithm] = r.optimal_cut if cur is None else min(cur, r.optimal_cut)
        fm_best = best.get("fm")
        variant_best = best.get("fm_variant")
        value = None
        if fm_best is not None and variant_best is not None and fm_best > 0:
            value = gain_mu(fm_best, variant_best)
        summary.append(ExperimentRow(label, fm_best, variant_best, value))
    return rows, summary


def write_rows_csv(rows: Sequence[RunResult], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(ROW_FIELDS)
    for r in rows:
        w.writerow(
            [r.label, r.algorithm, r.seed, r.initial_cut, r.optimal_cut, r.passes, f"{r.elapsed_ms:.3f}"]
        )


def write_summary_csv(summary: Sequence[ExperimentRow], seeds: Sequence[int], fh) -> None:
    fh.write(f"# best optimal_cut per algorithm over seeds {','.join(map(str, seeds))}\n")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SUMMARY_FIELDS)
    for row in summary:
        w.writerow(
            [
                row.label,
                "" if row.fm_best is None else row.fm_best,
                "" if row.variant_best is None else row.variant_best,
                "undefined" if row.gain_mu is None else format_gain_mu(row.gain_mu),
            ]
        )


def load_document(path: str, fmt: str = "auto") -> NetlistDocument:
    """Read and parse one netlist file; fmt 'auto' keys off the extension."""
    if fmt == "auto":
        suffix = os.path.splitext(path)[1].lower()
        fmt = {".netd": "netd", ".net": "net", ".hgr": "hgr"}.get(suffix, "")
        if not fmt:
            raise NetlistFormatError(f"cannot infer format from {path!r}; pass --format")
    with open(path, "rb") as fh:
        data = fh.read()
    if fmt == "hgr":
        return parse_hgr(data)
    if fmt == "netd":
        return parse_ibm_net(data, dialect="netD")
    if fmt == "net":
        return parse_ibm_net(data, dialect="net")
    raise ValueError(f"unknown format {fmt!r}")


def parse_seed_spec(text: str) -> list[int]:
    """Either "1,5,9" (explicit list) or "10" (meaning seeds 1..10)."""
    if "," in text:
        seeds = [int(t) for t in text.split(",") if t.strip()]
        if not seeds:
            raise ValueError("empty seed list")
        return seeds
    return list(range(1, int(text) + 1))


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="partition",
        description="Hypergraph bipartitioning benchmark harness.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run algorithms over netlists and emit CSV results")
    run.add_argument("--input", nargs="+", required=True, help="netlist files")
    run.add_argument("--format", choices=("netd", "net", "hgr", "auto"), default="auto")
    run.add_argument("--algo", choices=("fm", "variant", "both"), default="both")
    run.add_argument(
        "--seeds", type=parse_seed_spec, default=list(range(1, DEFAULT_SEED_COUNT + 1)),
        help="comma-separated seed list, or a count N meaning seeds 1..N (default 10)",
    )
    run.add_argument("--max-passes", type=int, default=100)
    run.add_argument("--tie", choices=("random", "fifo", "lifo"), default="random")
    run.add_argument(
        "--jobs", type=int, default=None,
        help=f"parallel workers (default ${JOBS_ENV_VAR} or 1)",
    )
    run.add_argument("--csv", default=None, help="per-run rows (default: stdout)")
    run.add_argument("--summary", default=None, help="per-file best-of-seeds summary")

    ver = sub.add_parser("verify", help="cross-check both algorithms against the exact oracle")
    ver.add_argument("--input", nargs="+", required=True)
    ver.add_argument("--format", choices=("netd", "net", "hgr", "auto"), default="auto")
    ver.add_argument("--seeds", type=parse_seed_spec, default=list(range(1, DEFAULT_SEED_COUNT + 1)))
    ver.add_argument("--max-passes", type=int, default=100)
    ver.add_argument("--tie", choices=("random", "fifo", "lifo"), default="random")

    st = sub.add_parser("stats", help="print cells, nets, pins and max degree")
    st.add_argument("--input", required=True)
    st.add_argument("--format", choices=("netd", "net", "hgr", "auto"), default="auto")
    return ap


def _load_entries(paths, fmt):
    entries = []
    failed = False
    for path in paths:
        try:
            doc = load_document(path, fmt)
            entries.append((path, doc.to_hypergraph()))
        except (OSError, ValueError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            failed = True
    return entries, failed


def _cmd_run(args) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    entries, failed = _load_entries(args.input, args.format)
    algorithms = {"fm": ["fm"], "variant": ["fm_variant"], "both": ["fm", "fm_variant"]}[args.algo]
    cfg = FmConfig(seed=1, tie_policy=args.tie, max_passes=args.max_passes)
    rows, summary = run_experiment(entries, algorithms, args.seeds, cfg, jobs=jobs)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_rows_csv(rows, fh)
    else:
        write_rows_csv(rows, sys.stdout)
    if args.summary:
        with open(args.summary, "w", newline="") as fh:
            write_summary_csv(summary, args.seeds, fh)
    if not entries:
        print("error: nothing to do, no readable inputs", file=sys.stderr)
        return 1
    return 1 if failed else 0


def _cmd_verify(args) -> int:
    entries, failed = _load_entries(args.input, args.format)
    if not entries:
        print("error: nothing to do, no readable inputs", file=sys.stderr)
        return 1
    for label, h in entries:
        if h.cell_count > MAX_ORACLE_CELLS:
            print(f"error: {label}: too large for the oracle ({h.cell_count} cells)", file=sys.stderr)
            failed = True
            continue
        optimum = exact_min_cut_balanced(h, "off_by_one").optimum_cut
        fm_best = None
        var_best = None
        for seed in args.seeds:
            cfg = FmConfig(seed=seed, tie_policy=args.tie, max_passes=args.max_passes)
            fm_cut = fm_run(h, cfg, label=label).optimal_cut
            var_cut = variant_run(h, cfg, label=label).optimal_cut
            fm_best = fm_cut if fm_best is None else min(fm_best, fm_cut)
            var_best = var_cut if var_best is None else min(var_best, var_cut)
        match = "yes" if fm_best == optimum and var_best == optimum else "no"
        print(f"{label}: fm={fm_best} variant={var_best} oracle={optimum} match={match}")
    return 1 if failed else 0


def _cmd_stats(args) -> int:
    try:
        doc = load_document(args.input, args.format)
        h = doc.to_hypergraph()
    except (OSError, ValueError) as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return 1
    print(
        f"{args.input}: cells={h.cell_count} nets={h.net_count} "
        f"pins={h.pin_count} max_degree={h.max_cell_degree}"
    )
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_stats(args)


if __name__ == "__main__":
    raise SystemExit(main())
