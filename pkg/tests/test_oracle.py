import itertools
import random

import pytest

from conftest import C1, C4, C5, balanced_partition
from fmpart.hypergraph import Partition, apply_move, build, cut_count
from fmpart.oracle import delta_cut_move, delta_cut_swap, exact_min_cut_balanced
from fmpart.synth import random_hypergraph


def brute_force_minimum(h, balance):
    """Pure-itertools reference, independent of the vectorized enumeration."""
    n = h.cell_count
    best = None
    best_side = None
    for bits in itertools.product((0, 1), repeat=n):
        sizes = (bits.count(0), bits.count(1))
        if balance == "exact_halves" and sizes[0] != sizes[1]:
            continue
        if abs(sizes[0] - sizes[1]) > 1:
            continue
        c = cut_count(h, Partition.from_sides(h, list(bits)))
        if best is None or c < best:
            best, best_side = c, bits
    return best, best_side


class TestExactMinCut:
    def test_five_cell_optimum_is_one(self, h_star):
        res = exact_min_cut_balanced(h_star, "off_by_one")
        assert res.optimum_cut == 1
        assert res.witness.cut_count == 1
        assert abs(res.witness.block_size[0] - res.witness.block_size[1]) <= 1

    def test_disjoint_pairs_reach_zero(self, h4):
        res = exact_min_cut_balanced(h4, "exact_halves")
        assert res.optimum_cut == 0
        assert res.witness.block_size == [2, 2]

    def test_single_isolated_cell(self):
        h = build([], 1)
        assert exact_min_cut_balanced(h, "off_by_one").optimum_cut == 0

    def test_empty(self):
        h = build([], 0)
        assert exact_min_cut_balanced(h, "off_by_one").optimum_cut == 0

    def test_size_guard(self):
        h = build([], 25)
        with pytest.raises(ValueError, match="too large"):
            exact_min_cut_balanced(h, "off_by_one")

    def test_exact_halves_rejects_odd(self, h_star):
        with pytest.raises(ValueError):
            exact_min_cut_balanced(h_star, "exact_halves")

    def test_matches_pure_python_enumeration(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randint(1, 8)
            h = random_hypergraph(rng, n, rng.randint(0, 10), 1, 5)
            for balance in ("off_by_one",) + (("exact_halves",) if n % 2 == 0 else ()):
                want, _ = brute_force_minimum(h, balance)
                assert exact_min_cut_balanced(h, balance).optimum_cut == want

    def test_witness_is_lexicographically_first(self):
        rng = random.Random(6)
        for _ in range(25):
            n = rng.randint(2, 8)
            h = random_hypergraph(rng, n, rng.randint(1, 10), 1, 4)
            res = exact_min_cut_balanced(h, "off_by_one")
            want_cut, _ = brute_force_minimum(h, "off_by_one")
            candidates = [
                bits
                for bits in itertools.product((0, 1), repeat=n)
                if abs(2 * bits.count(0) - n) <= 1
                and cut_count(h, Partition.from_sides(h, list(bits))) == want_cut
            ]
            assert tuple(res.witness.side) == min(candidates)

    def test_deterministic(self, h_star):
        a = exact_min_cut_balanced(h_star, "off_by_one")
        b = exact_min_cut_balanced(h_star, "off_by_one")
        assert a.optimum_cut == b.optimum_cut
        assert a.witness == b.witness

    def test_off_by_one_never_exceeds_exact_halves(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.choice([2, 4, 6, 8, 10])
            h = random_hypergraph(rng, n, rng.randint(0, 12), 1, 5)
            loose = exact_min_cut_balanced(h, "off_by_one").optimum_cut
            tight = exact_min_cut_balanced(h, "exact_halves").optimum_cut
            assert loose == tight  # |diff| <= 1 forces equal halves when n is even


class TestDeltas:
    def test_move_fixtures(self, h_star, p_star):
        assert delta_cut_move(h_star, p_star, C5) == -1
        assert delta_cut_move(h_star, p_star, C1) == 0

    def test_move_isolated(self):
        h = build([[0, 1]], 3)
        p = Partition.from_sides(h, [0, 1, 0])
        assert delta_cut_move(h, p, 2) == 0

    def test_swap_fixtures(self, h_star, p_star):
        assert delta_cut_swap(h_star, p_star, C5, C1) == -2
        assert delta_cut_swap(h_star, p_star, C4, C1) == -1

    def test_swap_isolated_pair(self):
        h = build([[0, 1]], 4)
        p = Partition.from_sides(h, [0, 0, 0, 1])
        assert delta_cut_swap(h, p, 2, 3) == 0

    def test_swap_same_block_rejected(self, h_star, p_star):
        with pytest.raises(ValueError):
            delta_cut_swap(h_star, p_star, C4, C5)

    def test_move_antisymmetry(self):
        rng = random.Random(8)
        for _ in range(200):
            n = rng.randint(1, 10)
            h = random_hypergraph(rng, n, rng.randint(0, 14), 1, 5)
            p = balanced_partition(h, rng)
            c = rng.randrange(n)
            before = delta_cut_move(h, p, c)
            apply_move(p, h, c)
            assert delta_cut_move(h, p, c) == -before
