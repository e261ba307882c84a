#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 协方差测试
"""

import random
from fractions import Fraction

import pytest

from src.covariance import (SPACELIKE, TIMELIKE, PathPoint, ckl_from_asymptotics,
                            cov_spacelike, cov_timelike, covariance,
                            heuristic_product_covariance, ou_branch_values, ou_display,
                            ou_rescale_compare, product_covariance_limit, product_replacement,
                            residue_pair, solve_ckl, spacelike_decomposition, state_covariance,
                            verify_spacelike_decomposition, verify_timelike_identity)
from src.exactalg import LaurentPoly, MultiPoly
from src.utils.errors import (BranchOrderError, DecompositionError, ParseError,
                              SingularSystemError)

tau = MultiPoly.symbol('tau')
eta = MultiPoly.symbol('eta')
tau1 = MultiPoly.symbol('tau1')
tau2 = MultiPoly.symbol('tau2')
t = MultiPoly.symbol('t')
N = MultiPoly.symbol('N')

PSI4_COEFFS = {
    (4,): MultiPoly.one(),
    (3,): 4 * tau,
    (2,): 6 * tau ** 2 + 4 * tau * eta,
    (1,): 4 * tau ** 3 + 12 * tau ** 2 * eta + 2 * tau * eta ** 2,
    (1, 1): 2 * tau,
}


def rational(rng, low=1, high=9):
    return Fraction(rng.randint(low, high), rng.randint(1, 4))


class TestResiduePair:

    def test_direct_example(self):
        f = LaurentPoly('z', {1: 1, 2: 1})
        g = LaurentPoly('w', {-1: 1, -2: 2})
        assert residue_pair(f, g) == 5

    def test_no_positive_powers(self):
        f = LaurentPoly('z', {0: 3, -1: 2})
        g = LaurentPoly('w', {-1: 1})
        assert residue_pair(f, g).is_zero()

    def test_bilinear(self):
        rng = random.Random(11)
        for _ in range(10):
            f1, f2 = (LaurentPoly('z', {e: rng.randint(-3, 3) for e in range(-2, 4)}) for _ in range(2))
            g = LaurentPoly('w', {e: rng.randint(-3, 3) for e in range(-3, 2)})
            assert residue_pair(f1 + f2, g) == residue_pair(f1, g) + residue_pair(f2, g)
            assert residue_pair(f1, g * 3) == residue_pair(f1, g) * 3


class TestBranches:

    def test_first_order_is_time_times_min_eta(self):
        a, b = PathPoint(1, 3, 2), PathPoint(1, 1, 2)
        assert cov_spacelike(a, b) == 2 * 1
        c, d = PathPoint(1, 1, 2), PathPoint(1, 3, 5)
        assert cov_timelike(c, d) == 2 * 1
        assert cov_timelike(PathPoint(1, 1, 3), PathPoint(1, 2, 3)) == 3

    def test_second_order_equal_points(self):
        for e, t in [(1, 1), (2, 3), (Fraction(1, 2), Fraction(5, 3))]:
            point = PathPoint(2, e, t)
            e, t = Fraction(e), Fraction(t)
            assert cov_spacelike(point, point) == 4 * e * t ** 3 + 2 * e ** 2 * t ** 2

    def test_symbolic_parameters(self):
        point = PathPoint(2, eta, tau)
        assert cov_spacelike(point, point) == 4 * eta * tau ** 3 + 2 * eta ** 2 * tau ** 2

    def test_degenerate_level(self):
        assert cov_spacelike(PathPoint(2, 1, 1), PathPoint(2, 0, 2)) == 0

    def test_timelike_hand_expansion(self):
        assert cov_timelike(PathPoint(1, 1, 1), PathPoint(2, 2, 2)) == 4

    @pytest.mark.parametrize('k', range(1, 5))
    def test_variance_positive(self, k):
        rng = random.Random(k)
        for _ in range(5):
            point = PathPoint(k, rational(rng), rational(rng))
            assert cov_spacelike(point, point) > 0

    def test_order_violations(self):
        with pytest.raises(BranchOrderError):
            cov_spacelike(PathPoint(1, 1, 1), PathPoint(1, 2, 2))
        with pytest.raises(BranchOrderError):
            cov_spacelike(PathPoint(1, 2, 3), PathPoint(1, 1, 2))
        with pytest.raises(BranchOrderError):
            cov_timelike(PathPoint(1, 2, 1), PathPoint(1, 2, 2))

    def test_auto_dispatch(self):
        early, late = PathPoint(1, 1, 1), PathPoint(1, 3, 2)
        assert covariance(early, late) == (TIMELIKE, 1)
        assert covariance(late, early) == (TIMELIKE, 1)
        assert covariance(PathPoint(1, 2, 1), PathPoint(1, 2, 2)) == (SPACELIKE, 2)
        assert covariance(late, PathPoint(1, 1, 3)) == (SPACELIKE, 2)

    def test_parse_point(self):
        assert PathPoint.parse('2,1/2,3') == PathPoint(2, Fraction(1, 2), 3)
        with pytest.raises(ParseError):
            PathPoint.parse('2,0.5,3')
        with pytest.raises(ParseError):
            PathPoint.parse('2,1')
        with pytest.raises(ValueError):
            PathPoint(1, 1, 0)


class TestCkl:

    def test_k1(self):
        assert solve_ckl(1, 2, 5, 3) == [1]

    def test_k3_symbolic_times(self):
        e = Fraction(3, 2)
        d = tau2 - tau1
        assert solve_ckl(3, tau1, tau2, e) == [3 * (d * d + d * e), 3 * d, MultiPoly.one()]

    @pytest.mark.parametrize('k', range(1, 7))
    def test_leading_coefficient(self, k):
        assert solve_ckl(k, 1, 2, Fraction(1, 3))[-1] == 1

    def test_spacelike_identity_k3(self):
        t1, t2, e = Fraction(2), Fraction(7, 2), Fraction(5, 3)
        c1, c2, c3 = solve_ckl(3, t1, t2, e)
        lhs = (c3 * (3 * e ** 2 * t1 + 3 * e * t1 ** 2) + c2 * 2 * e * t1 + c1 * e)
        assert lhs == 3 * e ** 2 * t2 + 3 * e * t2 ** 2

    def test_timelike_identity_k3_r1(self):
        t1, t2, e = Fraction(2), Fraction(7, 2), Fraction(5, 3)
        c1, c2, c3 = solve_ckl(3, t1, t2, e)
        lhs = c3 * (3 * e * t1 ** 2 + 3 * t1 ** 3) + c2 * 2 * t1 ** 2 + c1 * t1
        assert lhs == 3 * e * t1 * t2 + 3 * t1 * t2 ** 2

    @pytest.mark.parametrize('k', range(1, 7))
    def test_timelike_identity_random(self, k):
        rng = random.Random(100 + k)
        for _ in range(20):
            t1 = rational(rng)
            t2 = t1 + rational(rng, 0, 5)
            assert verify_timelike_identity(k, t1, t2, rational(rng))

    def test_singular(self):
        with pytest.raises(SingularSystemError):
            solve_ckl(2, 1, 2, 0)

    def test_product_replacement(self):
        assert product_replacement(tau, eta) == 2 * tau * eta - eta ** 2

    def test_k4_replacement_rule(self):
        coeffs = {
            (4,): MultiPoly.one(),
            (3,): 4 * tau,
            (2,): 6 * tau ** 2 + 4 * tau * eta,
            (1,): 4 * tau ** 3 + 12 * tau ** 2 * eta + 2 * tau * eta ** 2,
            (1, 1): 2 * tau,
        }
        t1, t2, e = Fraction(3, 2), Fraction(4), Fraction(2, 3)
        assert ckl_from_asymptotics(4, t1, t2, e, coeffs) == solve_ckl(4, t1, t2, e)

    def test_consistency_with_asymptotics_k2(self):
        t1, t2, e = Fraction(1), Fraction(5, 2), Fraction(3)
        assert ckl_from_asymptotics(2, t1, t2, e) == solve_ckl(2, t1, t2, e)

    @pytest.mark.slow
    def test_consistency_with_asymptotics_k3(self):
        t1, t2, e = Fraction(1, 2), Fraction(2), Fraction(7, 3)
        assert ckl_from_asymptotics(3, t1, t2, e) == solve_ckl(3, t1, t2, e)


class TestOrnsteinUhlenbeck:

    def test_first_order(self):
        assert ou_rescale_compare(PathPoint(1, 2, 1), PathPoint(1, 1, 2))
        assert ou_rescale_compare(PathPoint(1, 1, 1), PathPoint(1, 2, 2))

    def test_random_orders(self):
        rng = random.Random(5)
        for _ in range(12):
            ki, kj = rng.randint(1, 3), rng.randint(1, 3)
            i = PathPoint(ki, rational(rng), 1)
            j = PathPoint(kj, rational(rng), 2)
            assert ou_rescale_compare(i, j)

    def test_equal_eta_boundary(self):
        i, j = PathPoint(2, 2, 1), PathPoint(3, 2, 2)
        assert ou_rescale_compare(i, j)
        rescaled, display = ou_branch_values(i, j, TIMELIKE)
        assert rescaled.symbols() and display.symbols()

    def test_one_display_for_both_branches(self):
        low, high = Fraction(1), Fraction(3)
        i, j = PathPoint(2, low, 1), PathPoint(3, high, 2)
        _, timelike = ou_branch_values(i, j, TIMELIKE)
        assert timelike == ou_display(i, j)
        # η 下标互换后成为类空点对，仍由同一展示式给出
        i, j = PathPoint(2, high, 1), PathPoint(3, low, 2)
        _, spacelike = ou_branch_values(i, j, SPACELIKE)
        assert spacelike == ou_display(i, j)
        assert spacelike != timelike


def k3_k4_rows(e1, e2, t1, t2):
    d = t2 - t1
    return {
        (4,): 12 * e2 * t1 ** 3 * (e2 ** 2 * t1 + t1 * (3 * e2 * t1 + 2 * e2 ** 2)
                                   + t1 * (t1 + 3 * e2) * (t1 + e1)),
        (3,): 4 * d * 3 * e2 * t1 ** 2 * (e2 ** 2 * t1 + 6 * e2 * t1 ** 2
                                          + 3 * t1 * (e2 + t1) * (e1 + t1)),
        (2,): (6 * d ** 2 + 4 * d * e2) * 6 * e2 * t1 ** 2 * (t1 * (t1 + e1) + e2 * t1),
        (1,): (4 * d ** 3 + 12 * d ** 2 * e2 + 2 * d * e2 ** 2) * 3 * e2 * t1 ** 2 * (t1 + e1),
        (1, 1): 2 * d * (2 * t1 * e2 - e2 ** 2) * 3 * e2 * t1 ** 2 * (t1 + e1),
    }


class TestProductReplacement:

    def test_psi1_variance(self):
        assert state_covariance((1,), (1,)) == N * t

    def test_product_covariance_exact(self):
        expected = N * t + 2 * N ** 2 * t ** 2 - N ** 3 * t + N ** 2 * t
        assert state_covariance((1,), (1, 1)) == expected

    def test_product_covariance_limit(self):
        order, coeff = product_covariance_limit()
        assert order == 4
        assert coeff == (2 * tau * eta - eta ** 2) * eta * tau
        assert coeff == heuristic_product_covariance(tau, eta)

    def test_k3_k4_closed_form(self):
        e1, e2 = MultiPoly.symbol('eta1'), MultiPoly.symbol('eta2')
        value = cov_spacelike(PathPoint(3, e1, tau1), PathPoint(4, e2, tau2))
        assert value == 12 * e2 * tau1 ** 2 * tau2 * (
            e2 ** 2 * tau1 + tau1 * (3 * e2 * tau2 + 2 * e2 ** 2)
            + tau2 * (tau2 + 3 * e2) * (tau1 + e1))

    def test_k3_k4_rows(self):
        e1, e2 = MultiPoly.symbol('eta1'), MultiPoly.symbol('eta2')
        i, j = PathPoint(3, e1, tau1), PathPoint(4, e2, tau2)
        assert spacelike_decomposition(i, j, PSI4_COEFFS) == k3_k4_rows(e1, e2, tau1, tau2)
        assert verify_spacelike_decomposition(i, j, PSI4_COEFFS)

    def test_k3_k4_numeric(self):
        i, j = PathPoint(3, 2, 1), PathPoint(4, 1, 2)
        parts = spacelike_decomposition(i, j, PSI4_COEFFS)
        assert cov_spacelike(i, j) == 936
        assert {rho: value.to_constant() for rho, value in parts.items()} == {
            (4,): 216, (3,): 300, (2,): 240, (1,): 162, (1, 1): 18}

    def test_random_points(self):
        rng = random.Random(11)
        for _ in range(10):
            lower = rational(rng)
            i = PathPoint(rng.randint(1, 4), lower + rational(rng, 0, 3), rational(rng))
            j = PathPoint(4, lower, i.tau + rational(rng, 0, 3))
            assert verify_spacelike_decomposition(i, j, PSI4_COEFFS)

    def test_computed_coefficients(self):
        i, j = PathPoint(2, 3, Fraction(1, 2)), PathPoint(2, 1, 2)
        assert verify_spacelike_decomposition(i, j)

    def test_other_products_rejected(self):
        with pytest.raises(DecompositionError):
            spacelike_decomposition(PathPoint(1, 2, 1), PathPoint(3, 1, 2),
                                    {(2, 1): MultiPoly.one()})
