#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 粒子曲面测试
"""

import math
import random
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from src.center import ShiftedSymPoly, psi, psi_sub
from src.surface import (InterlacedArray, Schedule, apply_ring, check_interlacing,
                         densely_packed, dimension, estimate, gibbs_kernel, interlaces,
                         mc_expectation, run, sample_snapshots, snapshots_frame)
from src.ugln import apply_pt, bell_polynomial, state
from src.utils.errors import InterlacingError, ParseError, RankMismatchError, ScheduleError

SEED = 20240607


def p(k, rank):
    return ShiftedSymPoly.power_sum(k, rank)


class TestState:

    def test_densely_packed(self):
        assert densely_packed(1).levels == ((0,),)
        assert densely_packed(2).levels == ((0,), (0, -1))
        assert densely_packed(3).levels == ((0,), (0, -1), (0, -1, -2))

    def test_interlacing_violation(self):
        with pytest.raises(InterlacingError):
            InterlacedArray.from_lists([[1], [0, -1]])
        with pytest.raises(InterlacingError):
            InterlacedArray.from_lists([[0], [0, 0]])
        with pytest.raises(InterlacingError):
            check_interlacing([[0], [0]])

    def test_parse_levels(self):
        array = InterlacedArray.parse('0;1,-1')
        assert array.levels == ((0,), (1, -1))
        assert str(array) == '0;1,-1'
        with pytest.raises(ParseError):
            InterlacedArray.parse('0;a,b')

    def test_schedule_times_must_not_decrease(self):
        with pytest.raises(ScheduleError):
            Schedule.parse('(2,1);(1,1/2)')
        with pytest.raises(ScheduleError):
            Schedule.of([(1, -1.0)])
        assert len(Schedule.of([(1, 1.0), (2, 1.0)])) == 2

    def test_schedule_parse(self):
        schedule = Schedule.parse('(2,0.5); (1,3/2)')
        assert schedule.points == ((2, 0.5), (1, 1.5))
        assert schedule.horizon == 1.5
        with pytest.raises(ParseError):
            Schedule.parse('2,1')
        with pytest.raises(ScheduleError):
            Schedule.of([(0, 1.0)])

    def test_schedule_level_above_depth(self):
        with pytest.raises(ScheduleError):
            run(densely_packed(2), Schedule.of([(3, 1.0)]), SEED)


class TestDynamics:

    def test_push_from_densely_packed(self):
        levels = densely_packed(2).to_lists()
        assert apply_ring(levels, 1, 1)
        assert levels == [[1], [1, -1]]

    def test_push_cascade(self):
        levels = densely_packed(3).to_lists()
        apply_ring(levels, 1, 1)
        assert levels == [[1], [1, -1], [1, -1, -2]]

    def test_blocked_by_lower_level(self):
        levels = [[0], [1, -1]]
        assert not apply_ring(levels, 2, 2)
        assert levels == [[0], [1, -1]]

    def test_top_level_never_blocks(self):
        levels = [[0], [0, -1]]
        assert apply_ring(levels, 2, 1)
        assert levels == [[0], [1, -1]]

    def test_random_rings_keep_interlacing(self):
        rng = random.Random(7)
        depth = 5
        levels = densely_packed(depth).to_lists()
        for _ in range(20000):
            n = rng.randint(1, depth)
            apply_ring(levels, n, rng.randint(1, n))
            check_interlacing(levels)

    def test_run_with_checks(self):
        schedule = Schedule.of([(5, 5.0), (5, 20.0)])
        first, second = run(densely_packed(5), schedule, SEED, check=True)
        assert len(first) == len(second) == 5
        assert all(b >= a for a, b in zip(first, second))

    def test_deterministic(self):
        schedule = Schedule.of([(3, 1.0), (2, 2.0)])
        initial = densely_packed(3)
        assert run(initial, schedule, SEED, replica=4) == run(initial, schedule, SEED, replica=4)
        outcomes = {tuple(run(initial, schedule, SEED, replica=r)) for r in range(30)}
        assert len(outcomes) > 1

    def test_parallel_matches_serial(self):
        schedule = Schedule.of([(2, 1.0), (1, 1.5)])
        initial = densely_packed(2)
        serial = sample_snapshots(initial, schedule, 300, SEED, chunk_size=64)
        parallel = sample_snapshots(initial, schedule, 300, SEED, workers=2, chunk_size=64)
        for a, b in zip(serial, parallel):
            assert np.array_equal(a, b)

    def test_snapshot_frame(self):
        schedule = Schedule.of([(2, 1.0), (1, 1.0)])
        snapshots = sample_snapshots(densely_packed(2), schedule, 10, SEED)
        frame = snapshots_frame(snapshots, schedule, limit=3)
        assert list(frame.columns) == ['replica', 'point', 'level', 'time', 'index', 'position']
        assert len(frame) == 3 * 2 + 3 * 1


class TestMonteCarlo:

    def test_charlier_mean(self):
        result = mc_expectation(densely_packed(1), Schedule.of([(1, 2.0)]), [p(1, 1)], 20000, SEED)
        assert result.replicas == 20000 and result.seed == SEED
        assert result.within(2.0)

    def test_level1_moments_are_bell_numbers(self):
        schedule = Schedule.of([(1, 2.0)])
        snapshots = sample_snapshots(densely_packed(1), schedule, 20000, SEED)
        for k in range(1, 5):
            expected = bell_polynomial(k, 2).to_constant()
            assert estimate(snapshots, [p(k, 1)], SEED).within(float(expected))

    def test_mean_of_p1(self):
        result = mc_expectation(densely_packed(3), Schedule.of([(3, 2.0)]), [p(1, 3)], 20000, SEED)
        assert result.within(3.0)

    def test_space_like_pair_matches_state(self):
        t1, t2 = 1, 2
        expected = state(psi(1, 2) * apply_pt(psi_sub(1, 1, 2), t2 - t1), t1).to_constant()
        result = mc_expectation(densely_packed(2), Schedule.of([(2, t1), (1, t2)]),
                                [p(1, 2), p(1, 1)], 20000, SEED)
        assert result.within(float(expected))

    def test_time_like_pair_differs_from_pt_prediction(self):
        initial = InterlacedArray.parse('0;1,-1')
        result = mc_expectation(initial, Schedule.of([(2, 1.0), (1, 1.0)]),
                                [p(1, 2), p(1, 1)], 40000, SEED)
        assert abs(result.mean - 2.37) < 4 * result.stderr + 0.01
        assert result.mean < 3 - 0.4

    def test_stderr_single_replica(self):
        result = mc_expectation(densely_packed(1), Schedule.of([(1, 1.0)]), [p(1, 1)], 1, SEED)
        assert result.stderr == 0.0

    def test_observable_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            mc_expectation(densely_packed(2), Schedule.of([(2, 1.0)]), [p(1, 1)], 10, SEED)


class TestGibbs:

    def test_dimension(self):
        assert dimension((0,)) == 1
        assert dimension((1, -1)) == 2
        assert dimension((2, 0, -2)) == Fraction(2 * 4 * 2, 2)

    def test_kernel_rows_sum_to_one(self):
        for top in [(1, -1), (3, 0), (2, 0, -1), (4, 1, 0)]:
            total = Fraction(0)
            n = len(top)
            ranges = [range(top[i + 1] + 1, top[i] + 1) for i in range(n - 1)]
            for lower in _product(ranges):
                total += gibbs_kernel(top, lower)
            assert total == 1

    def test_non_interlacing(self):
        assert not interlaces((1, -1), (-1,))
        assert gibbs_kernel((1, -1), (2,)) == 0

    def test_conditional_law_from_densely_packed(self):
        schedule = Schedule.of([(2, 1.0), (1, 1.0)])
        top, lower = sample_snapshots(densely_packed(2), schedule, 20000, SEED)
        counts = Counter(tuple(row) for row in top)
        joint = Counter((tuple(a), tuple(b)) for a, b in zip(top, lower))
        for x, count in counts.items():
            if count < 1000:
                continue
            for y in range(x[1] + 1, x[0] + 1):
                expected = float(gibbs_kernel(x, (y,)))
                observed = joint[(x, (y,))] / count
                sigma = math.sqrt(expected * (1 - expected) / count)
                assert abs(observed - expected) <= 4 * sigma + 1e-9


def _product(ranges):
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for tail in _product(ranges[1:]):
            yield (head,) + tail
