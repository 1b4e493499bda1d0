"""Move-based bipartitioning pass and the multi-pass driver.

A pass moves every cell exactly once, highest stored gain first, with the
source block gated by a gain/size dominance rule, then rolls the partition
back to the best balanced prefix of the move sequence. The driver repeats
passes while they keep improving the cut.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .gains import GainState, TIE_POLICIES, init, move_and_update, select_max
from .hypergraph import B1, B2, Hypergraph, Partition, apply_move

StepHook = Callable[[GainState, Partition, list], None]


@dataclass(frozen=True)
class FmConfig:
    """Knobs shared by both pass flavors. max_passes=None means unbounded."""

    seed: int = 1
    tie_policy: str = "random"
    max_passes: Optional[int] = 100

    def __post_init__(self):
        if self.tie_policy not in TIE_POLICIES:
            raise ValueError(f"tie_policy must be one of {TIE_POLICIES}")
        if self.max_passes is not None and self.max_passes < 1:
            raise ValueError("max_passes must be positive when bounded")


@dataclass(frozen=True)
class PassStep:
    cells: tuple[int, ...]
    gain: int
    cum_gain: int
    cut_after: int
    size_diff: int


@dataclass
class PassTrace:
    """Ordered move log of one pass plus the prefix the pass settled on."""

    initial_cut: int
    initial_size_diff: int
    steps: list[PassStep]
    best_prefix: int
    pair_gain_evals: int = 0

    def prefix_cut(self, t: int) -> int:
        return self.initial_cut if t == 0 else self.steps[t - 1].cut_after

    @property
    def best_cut(self) -> int:
        return self.prefix_cut(self.best_prefix)

    @property
    def best_gain(self) -> int:
        return self.initial_cut - self.best_cut


@dataclass
class RunResult:
    """One experiment row: a single (instance, algorithm, seed) execution."""

    label: str
    algorithm: str
    seed: int
    initial_cut: int
    optimal_cut: int
    passes: int
    elapsed_ms: float
    final_side: tuple[int, ...] = ()


def random_initial_partition(h: Hypergraph, rng: random.Random) -> Partition:
    """Uniformly random assignment with block sizes differing by at most one."""
    n = h.cell_count
    ids = list(range(n))
    rng.shuffle(ids)
    b1 = n // 2
    if n % 2:
        b1 += rng.randrange(2)
    side = [B2] * n
    for c in ids[:b1]:
        side[c] = B1
    return Partition.from_sides(h, side)


def _source_block(state: GainState, p: Partition) -> Optional[int]:
    """Pick the block to move from: B1 when its max gain and size both
    dominate, else B2 when it is at least as large, else B1."""
    g1 = state.buckets[B1].max_gain()
    g2 = state.buckets[B2].max_gain()
    if g1 is None and g2 is None:
        return None
    if g1 is None:
        return B2
    if g2 is None:
        return B1
    s1, s2 = p.block_size
    if g1 >= g2 and s1 >= s2:
        return B1
    if s2 >= s1:
        return B2
    return B1


def best_prefix_index(initial_cut: int, initial_diff: int, steps: list[PassStep]) -> int:
    """Earliest prefix minimizing cut among prefixes with |S(B1)-S(B2)| <= 1.

    Falls back to prefix 0 (no moves) when no prefix is balanced, which can
    only happen for an unbalanced starting partition.
    """
    best_t = None
    best_cut = None
    if abs(initial_diff) <= 1:
        best_t, best_cut = 0, initial_cut
    for t, st in enumerate(steps, start=1):
        if abs(st.size_diff) <= 1 and (best_cut is None or st.cut_after < best_cut):
            best_t, best_cut = t, st.cut_after
    return 0 if best_t is None else best_t


def rollback_to_prefix(h: Hypergraph, p: Partition, steps: list[PassStep], keep: int) -> None:
    """Undo every step after the kept prefix by re-flipping its cells."""
    for st in reversed(steps[keep:]):
        for c in st.cells:
            apply_move(p, h, c)


def fm_pass(
    h: Hypergraph,
    p: Partition,
    cfg: FmConfig,
    rng: random.Random,
    on_step: Optional[StepHook] = None,
) -> PassTrace:
    """Move every cell once under locking, then roll back to the best prefix.

    On return p sits at the minimum-cut balanced configuration seen during
    the pass (or where it started, when nothing better appeared).
    """
    state = init(h, p)
    initial_cut = p.cut_count
    initial_diff = p.block_size[B1] - p.block_size[B2]
    steps: list[PassStep] = []
    cum = 0
    while True:
        blk = _source_block(state, p)
        if blk is None:
            break
        c = select_max(state, blk, cfg.tie_policy, rng)
        g = state.gain[c]
        move_and_update(state, h, p, c)
        cum += g
        steps.append(PassStep((c,), g, cum, p.cut_count, p.block_size[B1] - p.block_size[B2]))
        if on_step is not None:
            on_step(state, p, steps)
    best = best_prefix_index(initial_cut, initial_diff, steps)
    rollback_to_prefix(h, p, steps, best)
    return PassTrace(initial_cut, initial_diff, steps, best)


def fm_run(
    h: Hypergraph,
    cfg: FmConfig,
    label: str = "",
    on_step: Optional[StepHook] = None,
) -> RunResult:
    """Random balanced start, then passes while they improve the cut."""
    rng = random.Random(cfg.seed)
    started = time.perf_counter()
    p = random_initial_partition(h, rng)
    initial_cut = p.cut_count
    passes = 0
    while cfg.max_passes is None or passes < cfg.max_passes:
        before = p.cut_count
        fm_pass(h, p, cfg, rng, on_step=on_step)
        passes += 1
        if p.cut_count >= before:
            break
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return RunResult(label, "fm", cfg.seed, initial_cut, p.cut_count, passes, elapsed_ms, tuple(p.side))
