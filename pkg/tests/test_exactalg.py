#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 精确算术测试
"""

import random
from fractions import Fraction

import pytest

from src.exactalg import (MultiPoly, LaurentPoly, format_fraction, lagrange_interpolate,
                          laurent_coeff, leading_order_in, parse_poly, poly_add, poly_mul,
                          poly_pow, solve_linear, to_fraction)
from src.utils.errors import ParseError, PolynomialError, SingularSystemError

t = MultiPoly.symbol('t')
s = MultiPoly.symbol('s')
N = MultiPoly.symbol('N')
tau = MultiPoly.symbol('tau')
eta = MultiPoly.symbol('eta')
L = MultiPoly.symbol('L')


def random_poly(rng, symbols=('t', 's', 'N'), max_terms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = {}
        for sym in symbols:
            exp = rng.randint(0, max_exp)
            if exp:
                mono[sym] = exp
        terms[tuple(sorted(mono.items()))] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return MultiPoly(terms)


def random_laurent(rng, variable='w'):
    return LaurentPoly(variable, {e: random_poly(rng, ('tau', 'eta'), 2, 2)
                                  for e in range(rng.randint(-3, 0), rng.randint(0, 3) + 1)})


class TestRational:

    def test_parse_and_format(self):
        assert to_fraction('6/4') == Fraction(3, 2)
        assert to_fraction(-3) == Fraction(-3)
        assert format_fraction(Fraction(3, 2)) == '3/2'
        assert format_fraction(Fraction(4, 2)) == '2'

    def test_float_rejected(self):
        with pytest.raises(ParseError):
            to_fraction('1.5')
        with pytest.raises(ParseError):
            to_fraction(1.5)


class TestMultiPoly:

    def test_difference_of_squares(self):
        assert (t + 1) * (t - 1) == t ** 2 - 1

    def test_binomial_coefficient(self):
        cube = (t + s) ** 3
        assert cube.coefficient('t', 1).coefficient('s', 2) == 3

    def test_negative_power_rejected(self):
        with pytest.raises(PolynomialError):
            t ** -1

    def test_function_forms(self):
        assert poly_add(t, 1) == t + 1
        assert poly_mul(t + 1, t - 1) == t ** 2 - 1
        assert poly_pow(t + s, 3).coefficient('t', 1).coefficient('s', 2) == 3
        assert poly_pow(t, 0) == MultiPoly.one()
        with pytest.raises(PolynomialError):
            poly_pow(t, -2)

    def test_zero_coefficients_dropped(self):
        assert (t - t).is_zero()
        assert len(t + s - t) == 1

    def test_canonical_text(self):
        assert str(2 * t ** 2 + t) == '2*t^2 + t'
        assert str(t ** 2 - 1) == 't^2 - 1'
        assert str(MultiPoly.zero()) == '0'
        assert str(Fraction(1, 2) * eta ** 2 - tau) == '1/2*eta^2 - tau'

    def test_text_parses_back(self):
        rng = random.Random(7)
        for _ in range(30):
            p = random_poly(rng)
            assert parse_poly(str(p)) == p

    def test_substitution_examples(self):
        p = t ** 2 + N * t
        assert p.substitute({'t': tau * L, 'N': eta * L}) == tau ** 2 * L ** 2 + eta * tau * L ** 2
        assert (2 * t ** 2 + t).substitute({'t': 0}) == 0
        p4 = 2 * t ** 4 + 24 * t ** 3 + 38 * t ** 2 + 6 * t
        assert p4.substitute({'t': 3}) == 1170

    def test_leading_order(self):
        assert leading_order_in(tau ** 2 * L ** 2 + eta * tau * L ** 2, 'L') == (2, tau ** 2 + eta * tau)
        assert leading_order_in(3 * tau * L, 'L') == (1, 3 * tau)
        assert leading_order_in(tau ** 3 * L ** 3 + tau * L, 'L') == (3, tau ** 3)
        with pytest.raises(PolynomialError):
            leading_order_in(MultiPoly.zero(), 'L')

    def test_ring_axioms(self):
        rng = random.Random(11)
        for _ in range(40):
            a, b, c = (random_poly(rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
            assert a + b == b + a

    def test_substitute_is_ring_morphism(self):
        rng = random.Random(13)
        for _ in range(30):
            a, b = random_poly(rng), random_poly(rng)
            bindings = {'t': random_poly(rng, ('tau', 'L'), 2, 2), 'N': eta * L}
            assert (a * b).substitute(bindings) == a.substitute(bindings) * b.substitute(bindings)

    def test_evaluate(self):
        assert (t ** 2 + s).evaluate({'t': 3, 's': Fraction(1, 2)}) == Fraction(19, 2)
        with pytest.raises(PolynomialError):
            t.evaluate({})

    def test_split_by_main_symbols(self):
        p = 3 * t * MultiPoly.symbol('x1') ** 2 + t + 1
        parts = p.split(['x1'])
        assert parts[(('x1', 2),)] == 3 * t
        assert parts[()] == t + 1


class TestLaurent:

    def test_coefficients(self):
        base = LaurentPoly.from_linear('w', eta, tau, tau)
        assert laurent_coeff(base, -1) == eta
        assert laurent_coeff(base ** 2, -1) == 2 * eta * tau
        assert laurent_coeff(base ** 2, -3).is_zero()

    def test_linearity_and_cauchy_product(self):
        rng = random.Random(17)
        for _ in range(20):
            p, q = random_laurent(rng), random_laurent(rng)
            product = p * q
            for r in range(-6, 7):
                expected = MultiPoly.zero()
                for e in p.exponents():
                    expected = expected + p.coeff(e) * q.coeff(r - e)
                assert laurent_coeff(product, r) == expected
                assert laurent_coeff(p + q, r) == p.coeff(r) + q.coeff(r)

    def test_variable_mismatch(self):
        with pytest.raises(PolynomialError):
            LaurentPoly.monomial('z', 1) * LaurentPoly.monomial('w', 1)


class TestLinearAlgebra:

    def test_overdetermined_solve(self):
        matrix = [[1, 1], [1, -1], [2, 0]]
        rhs = [t + s, t - s, 2 * t]
        assert solve_linear(matrix, rhs) == [t, s]

    def test_inconsistent_system(self):
        with pytest.raises(SingularSystemError):
            solve_linear([[1], [1]], [t, s])

    def test_singular_system(self):
        with pytest.raises(SingularSystemError):
            solve_linear([[1, 1], [2, 2]], [t, t])

    def test_interpolation_recovers_polynomial(self):
        target = N ** 3 * t - Fraction(1, 2) * N + t ** 2
        points = [(n, target.substitute({'N': n})) for n in range(2, 7)]
        assert lagrange_interpolate(points, 'N') == target

    def test_interpolation_duplicate_nodes(self):
        with pytest.raises(SingularSystemError):
            lagrange_interpolate([(1, t), (Fraction(2, 2), s)], 'N')


class TestParser:

    def test_implicit_multiplication_and_division(self):
        assert parse_poly('2t^2 + t') == 2 * t ** 2 + t
        assert parse_poly('(t+1)(t-1)') == t ** 2 - 1
        assert parse_poly('3/2*eta') == Fraction(3, 2) * eta
        assert parse_poly('t**3') == t ** 3

    @pytest.mark.parametrize('text', ['', 't +', '(t', 't / s', '1.5*t', 'E[1,2]', 't $'])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_poly(text)
