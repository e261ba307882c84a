#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 对照计算测试
"""

import random
from fractions import Fraction

import pytest

from src.center import ShiftedSymPoly, evaluate_at, psi, psi_sub
from src.oracle import (DetFormQuery, TruncatedCtmc, ctmc_distribution, ctmc_expectation,
                        detform_exact, detform_n2, inverse_factorial, state_diff_oracle)
from src.surface import InterlacedArray, Schedule, densely_packed, gibbs_kernel, mc_expectation
from src.ugln import NCElement, apply_pt, state
from src.exactalg import MultiPoly
from src.utils.errors import DegreeLimitError, TruncationError

t = MultiPoly.symbol('t')


def p(k, rank):
    return ShiftedSymPoly.power_sum(k, rank)


class TestDeterminantalFormula:

    def test_value_5453(self):
        assert abs(detform_n2(DetFormQuery(4, 2, Fraction(3), 4, 50)) - 5453) < 1e-6
        assert abs(detform_n2(DetFormQuery(4, 2, Fraction(3), 4, 80)) - 5453) < 1e-9

    def test_first_order_matches_centre(self):
        expected = evaluate_at(apply_pt(psi(1, 2), 3), (4, 2))
        assert expected == 11
        assert abs(detform_n2(DetFormQuery(4, 2, Fraction(3), 1, 50)) - 11) < 1e-9

    def test_small_time_gives_initial_value(self):
        value = detform_exact(DetFormQuery(4, 2, Fraction(1, 10 ** 6), 4, 4))
        assert abs(float(value) - (4 ** 4 + 1 ** 4)) < 1e-2

    def test_inverse_factorial(self):
        assert inverse_factorial(-1) == 0
        assert inverse_factorial(0) == 1
        assert inverse_factorial(4) == Fraction(1, 24)

    def test_invalid_query(self):
        with pytest.raises(ValueError):
            DetFormQuery(1, 2, Fraction(1), 1)
        with pytest.raises(ValueError):
            DetFormQuery(4, 2, Fraction(1), 1, b_max=3)


class TestDiffState:

    def test_examples(self):
        assert state_diff_oracle(((2, 1), (1, 2), (2, 1), (1, 2)), t) == 2 * t ** 2 + t
        assert state_diff_oracle(((1, 1), (1, 2)), t).is_zero()
        assert state_diff_oracle((), t) == 1

    def test_matches_partition_state(self):
        rng = random.Random(31)
        for _ in range(200):
            degree = rng.randint(1, 5)
            word = tuple((rng.randint(1, 3), rng.randint(1, 3)) for _ in range(degree))
            assert state_diff_oracle(word, t) == state(NCElement.word(3, word), t)

    def test_degree_limit(self):
        with pytest.raises(DegreeLimitError):
            state_diff_oracle(((1, 1),) * 9, t)


class TestCtmc:

    def test_poisson_mean(self):
        value, bound = ctmc_expectation(TruncatedCtmc(), densely_packed(1),
                                        Schedule.of([(1, 2.0)]), [p(1, 1)])
        assert bound <= 1e-6
        assert abs(value - 2) <= bound + 1e-9

    def test_mean_of_p1_at_level_two(self):
        value, bound = ctmc_expectation(TruncatedCtmc(), densely_packed(2),
                                        Schedule.of([(2, 1.0)]), [p(1, 2)])
        assert abs(value - 1) <= bound + 1e-9

    def test_space_like_pair_matches_state(self):
        expected = float(state(psi(1, 2) * apply_pt(psi_sub(1, 1, 2), 1), 1).to_constant())
        value, bound = ctmc_expectation(TruncatedCtmc(), densely_packed(2),
                                        Schedule.of([(2, 1.0), (1, 2.0)]), [p(1, 2), p(1, 1)])
        assert abs(value - expected) <= bound + 1e-9

    def test_time_like_value(self):
        initial = InterlacedArray.parse('0;1,-1')
        value, bound = ctmc_expectation(TruncatedCtmc(), initial,
                                        Schedule.of([(2, 1.0), (1, 1.0)]), [p(1, 2), p(1, 1)])
        assert bound < 0.01
        assert abs(value - 2.37) < 0.02

    def test_agrees_with_monte_carlo(self):
        initial = InterlacedArray.parse('0;1,-1')
        schedule = Schedule.of([(2, 1.0), (1, 1.0)])
        observables = [p(1, 2), p(1, 1)]
        value, bound = ctmc_expectation(TruncatedCtmc(), initial, schedule, observables)
        result = mc_expectation(initial, schedule, observables, 20000, 7)
        assert abs(result.mean - value) <= bound + 4 * result.stderr

    def test_distribution_is_gibbs(self):
        distribution, tail = ctmc_distribution(TruncatedCtmc(horizon=1.0), densely_packed(2))
        assert abs(sum(distribution.values()) - 1) <= tail + 1e-9
        marginal = {}
        for levels, prob in distribution.items():
            marginal[levels[1]] = marginal.get(levels[1], 0.0) + prob
        for levels, prob in distribution.items():
            top, lower = levels[1], levels[0]
            expected = marginal[top] * float(gibbs_kernel(top, lower))
            assert abs(prob - expected) <= 2 * tail + 1e-12

    def test_depth_limit(self):
        with pytest.raises(TruncationError):
            ctmc_expectation(TruncatedCtmc(), densely_packed(4), Schedule.of([(4, 1.0)]), [p(1, 4)])

    def test_unreachable_bound(self):
        with pytest.raises(TruncationError):
            ctmc_expectation(TruncatedCtmc(max_events=2), densely_packed(2),
                             Schedule.of([(2, 3.0)]), [p(2, 2)])
