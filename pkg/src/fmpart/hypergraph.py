"""Hypergraph pin structure and mutable bipartition state with exact cut accounting.

Cells are dense integer ids. A net is the set of cells sharing one signal,
stored as a sorted tuple. Blocks are the two integers B1 = 0 and B2 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

B1 = 0
B2 = 1


@dataclass(frozen=True)
class Hypergraph:
    """Immutable pin structure; safe to share between runs and threads."""

    cell_count: int
    nets: tuple[tuple[int, ...], ...]
    cell_nets: tuple[tuple[int, ...], ...]
    cell_net_sets: tuple[frozenset[int], ...]
    max_cell_degree: int
    net_count: int

    @property
    def pin_count(self) -> int:
        return sum(len(pins) for pins in self.nets)


def build(net_pin_lists: Iterable[Sequence[int]], cell_count: int) -> Hypergraph:
    """Assemble a hypergraph from per-net pin lists.

    Pins are sorted within each net. Empty and single-pin nets are retained
    but can never be cut. A net listing the same cell twice is rejected;
    parsers that tolerate duplicate pins must deduplicate before building.
    """
    if cell_count < 0:
        raise ValueError("cell_count must be nonnegative")
    nets = []
    cell_nets: list[list[int]] = [[] for _ in range(cell_count)]
    for net_id, raw in enumerate(net_pin_lists):
        pins = sorted(raw)
        for i, c in enumerate(pins):
            if not 0 <= c < cell_count:
                raise ValueError(f"net {net_id}: cell id {c} out of range 0..{cell_count - 1}")
            if i and pins[i - 1] == c:
                raise ValueError(f"net {net_id}: duplicate pin {c}")
            cell_nets[c].append(net_id)
        nets.append(tuple(pins))
    return Hypergraph(
        cell_count=cell_count,
        nets=tuple(nets),
        cell_nets=tuple(tuple(ns) for ns in cell_nets),
        cell_net_sets=tuple(frozenset(ns) for ns in cell_nets),
        max_cell_degree=max((len(ns) for ns in cell_nets), default=0),
        net_count=len(nets),
    )


@dataclass
class Partition:
    """Mutable block assignment with per-net occupancy and a maintained cut count.

    Single-writer state: a partition belongs to one run at a time, though it
    may be handed to another thread between runs.
    """

    side: list[int]
    block_size: list[int]
    net_occupancy: list[list[int]]
    cut_count: int

    @classmethod
    def from_sides(cls, h: Hypergraph, sides: Iterable[int]) -> "Partition":
        side = list(sides)
        if len(side) != h.cell_count:
            raise ValueError(f"expected {h.cell_count} side entries, got {len(side)}")
        if any(s not in (B1, B2) for s in side):
            raise ValueError("side entries must be 0 or 1")
        occupancy = []
        cut = 0
        for pins in h.nets:
            a = sum(1 for c in pins if side[c] == B1)
            occ = [a, len(pins) - a]
            occupancy.append(occ)
            if occ[B1] > 0 and occ[B2] > 0:
                cut += 1
        return cls(side, [side.count(B1), side.count(B2)], occupancy, cut)

    def clone(self) -> "Partition":
        return Partition(
            list(self.side),
            list(self.block_size),
            [list(o) for o in self.net_occupancy],
            self.cut_count,
        )


def cut_count(h: Hypergraph, p: Partition) -> int:
    """Number of nets with pins in both blocks, recomputed from the side vector."""
    side = p.side
    total = 0
    for pins in h.nets:
        if len(pins) < 2:
            continue
        first = side[pins[0]]
        for c in pins[1:]:
            if side[c] != first:
                total += 1
                break
    return total


def neighbors(h: Hypergraph, c: int) -> set[int]:
    """Cells sharing at least one net with c, excluding c itself."""
    if not 0 <= c < h.cell_count:
        raise ValueError(f"cell id {c} out of range")
    out: set[int] = set()
    for n in h.cell_nets[c]:
        out.update(h.nets[n])
    out.discard(c)
    return out


def apply_move(p: Partition, h: Hypergraph, c: int) -> None:
    """Flip c's block, updating sizes, occupancy and cut in O(degree of c)."""
    f = p.side[c]
    t = 1 - f
    p.side[c] = t
    p.block_size[f] -= 1
    p.block_size[t] += 1
    occ_of = p.net_occupancy
    for n in h.cell_nets[c]:
        occ = occ_of[n]
        # with c still counted on f: cut before iff occ[t] > 0, after iff occ[f] > 1
        was_cut = occ[t] > 0
        now_cut = occ[f] > 1
        if was_cut != now_cut:
            p.cut_count += 1 if now_cut else -1
        occ[f] -= 1
        occ[t] += 1
