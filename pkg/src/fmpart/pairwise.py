"""Pairwise-swap refinement: one cell from each block trades places per step,
so the blocks keep exactly equal sizes throughout a pass.

Swap gains are exact: the sum of the two single-cell gains minus a
correction for shared cut nets that both member gains claim but the joint
swap cannot uncut.
"""

from __future__ import annotations

import heapq
import random
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .fm import FmConfig, PassStep, PassTrace, RunResult, StepHook, best_prefix_index, rollback_to_prefix
from .gains import GainState, init, move_and_update
from .hypergraph import B1, B2, Hypergraph, Partition, build


@dataclass(frozen=True)
class PaddedHypergraph:
    """Working graph with an isolated filler cell appended when |V| is odd."""

    graph: Hypergraph
    dummy: Optional[int]

    @property
    def half_size(self) -> int:
        return self.graph.cell_count // 2


def pad_dummy(h: Hypergraph) -> PaddedHypergraph:
    """Append a degree-zero cell when the cell count is odd.

    The filler lies on no net, so any assignment scores the same cut on the
    padded graph as on the original cells; it is stripped from reported
    partitions.
    """
    if h.cell_count % 2 == 0:
        return PaddedHypergraph(h, None)
    padded = build(h.nets, h.cell_count + 1)
    return PaddedHypergraph(padded, h.cell_count)


def correct_term(h: Hypergraph, p: Partition, u: int, v: int) -> int:
    """Overcount carried by shared cut nets that stay cut after swapping u and v.

    A net containing both endpoints keeps its block occupancy under the
    swap, so it remains cut. It was credited by each endpoint whose side
    holds it as the lone pin: twice for a two-pin net, once otherwise.
    """
    su = p.side[u]
    sv = p.side[v]
    if su == sv:
        raise ValueError("pair endpoints must lie in opposite blocks")
    nets_small = h.cell_nets[u]
    other_sets = h.cell_net_sets[v]
    if len(nets_small) > len(h.cell_nets[v]):
        nets_small = h.cell_nets[v]
        other_sets = h.cell_net_sets[u]
    occ_of = p.net_occupancy
    pins_of = h.nets
    total = 0
    for n in nets_small:
        if n in other_sets:
            occ = occ_of[n]
            if occ[su] == 1 or occ[sv] == 1:
                total += 2 if len(pins_of[n]) == 2 else 1
    return total


def pair_gain(h: Hypergraph, p: Partition, gains: Sequence[int], u: int, v: int) -> int:
    """Exact cut reduction of swapping u and v simultaneously."""
    return gains[u] + gains[v] - correct_term(h, p, u, v)


@dataclass
class PairSelectionState:
    """Unlocked cells of each block in nonincreasing stored-gain order."""

    ordered: tuple[list[int], list[int]]
    m: int
    pair_gain_evals: int = 0


def selection_state(state: GainState, m: int) -> PairSelectionState:
    """Materialize both gain orderings by walking the buckets downward."""
    return PairSelectionState(
        (list(state.buckets[B1].iter_descending()), list(state.buckets[B2].iter_descending())),
        m,
    )


def best_pair(
    state: PairSelectionState,
    h: Hypergraph,
    p: Partition,
    gains: Sequence[int],
    rng: random.Random,
) -> tuple[int, int]:
    """Cross-block pair with the highest exact swap gain.

    Candidates come off a max-heap keyed by the bound gains[u] + gains[v],
    which dominates the exact pair gain because the correction term is
    nonnegative; the search stops once the next bound drops below the best
    exact gain already seen. Ties break uniformly among evaluated maximizers.
    """
    us, vs = state.ordered
    if not us or not vs:
        raise ValueError("a block has no unlocked cells")
    best_g: Optional[int] = None
    best: list[tuple[int, int]] = []
    heap = [(-(gains[us[0]] + gains[vs[0]]), 0, 0)]
    seen = {(0, 0)}
    while heap:
        negb, i, j = heapq.heappop(heap)
        if best_g is not None and -negb < best_g:
            break
        u, v = us[i], vs[j]
        g = pair_gain(h, p, gains, u, v)
        state.pair_gain_evals += 1
        if best_g is None or g > best_g:
            best_g = g
            best = [(u, v)]
        elif g == best_g:
            best.append((u, v))
        if i + 1 < len(us) and (i + 1, j) not in seen:
            seen.add((i + 1, j))
            heapq.heappush(heap, (-(gains[us[i + 1]] + gains[vs[j]]), i + 1, j))
        if j + 1 < len(vs) and (i, j + 1) not in seen:
            seen.add((i, j + 1))
            heapq.heappush(heap, (-(gains[us[i]] + gains[vs[j + 1]]), i, j + 1))
    if len(best) == 1:
        return best[0]
    return rng.choice(best)


def variant_pass(
    ph: PaddedHypergraph,
    p: Partition,
    cfg: FmConfig,
    rng: random.Random,
    on_step: Optional[StepHook] = None,
) -> PassTrace:
    """Swap-and-lock one best pair per step until every cell is locked,
    then roll back to the earliest minimum-cut prefix.

    Every step moves one cell each way, so all prefixes are balanced and
    eligible for rollback.
    """
    h = ph.graph
    m = ph.half_size
    if p.block_size[B1] != m or p.block_size[B2] != m:
        raise ValueError("pairwise pass needs equal block sizes")
    state = init(h, p)
    initial_cut = p.cut_count
    steps: list[PassStep] = []
    cum = 0
    evals = 0
    for _ in range(m):
        sel = selection_state(state, m)
        u, v = best_pair(sel, h, p, state.gain, rng)
        evals += sel.pair_gain_evals
        g = pair_gain(h, p, state.gain, u, v)
        move_and_update(state, h, p, u)
        move_and_update(state, h, p, v)
        cum += g
        steps.append(PassStep((u, v), g, cum, p.cut_count, p.block_size[B1] - p.block_size[B2]))
        if on_step is not None:
            on_step(state, p, steps)
    best = best_prefix_index(initial_cut, 0, steps)
    rollback_to_prefix(h, p, steps, best)
    trace = PassTrace(initial_cut, 0, steps, best)
    trace.pair_gain_evals = evals
    return trace


def variant_run(
    h: Hypergraph,
    cfg: FmConfig,
    label: str = "",
    on_step: Optional[StepHook] = None,
) -> RunResult:
    """Pad to an even cell count, start from a random equal split, and run
    swap passes while they improve the cut. Cuts are reported on the
    original cells; the filler never touches a net, so the numbers agree."""
    rng = random.Random(cfg.seed)
    started = time.perf_counter()
    ph = pad_dummy(h)
    g = ph.graph
    ids = list(range(g.cell_count))
    rng.shuffle(ids)
    side = [B2] * g.cell_count
    for c in ids[: ph.half_size]:
        side[c] = B1
    p = Partition.from_sides(g, side)
    initial_cut = p.cut_count
    passes = 0
    while cfg.max_passes is None or passes < cfg.max_passes:
        before = p.cut_count
        variant_pass(ph, p, cfg, rng, on_step=on_step)
        passes += 1
        if p.cut_count >= before:
            break
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    final = tuple(p.side[: h.cell_count])
    return RunResult(label, "fm_variant", cfg.seed, initial_cut, p.cut_count, passes, elapsed_ms, final)
