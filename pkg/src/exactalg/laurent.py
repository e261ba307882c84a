#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 单变量 Laurent 多项式
系数是 MultiPoly，指数可以为负；用于协方差公式中的 (η z^-1 + τ + τ z)^k
"""

from fractions import Fraction
from typing import Dict, Mapping, Optional, Union

from src.exactalg.poly import MultiPoly, SYMBOL_RE
from src.utils.errors import PolynomialError

Coefficient = Union[MultiPoly, int, Fraction]


class LaurentPoly:
    """以 variable 为变量的 Laurent 多项式（不可变）"""

    __slots__ = ('variable', '_terms')

    def __init__(self, variable: str, terms: Optional[Mapping[int, Coefficient]] = None):
        if not SYMBOL_RE.match(variable):
            raise PolynomialError(f"非法的变量名: {variable!r}")
        self.variable = variable
        cleaned: Dict[int, MultiPoly] = {}
        for exponent, coeff in (terms or {}).items():
            coeff = MultiPoly.coerce(coeff)
            if variable in coeff.symbols():
                raise PolynomialError(f"系数中不能出现变量 {variable}")
            if coeff:
                cleaned[int(exponent)] = coeff
        self._terms = cleaned

    @classmethod
    def monomial(cls, variable: str, exponent: int, coeff: Coefficient = 1) -> 'LaurentPoly':
        return cls(variable, {exponent: coeff})

    @classmethod
    def from_linear(cls, variable: str, lower: Coefficient, middle: Coefficient,
                    upper: Coefficient) -> 'LaurentPoly':
        """lower * v^-1 + middle + upper * v"""
        return cls(variable, {-1: lower, 0: middle, 1: upper})

    def _check_same(self, other: 'LaurentPoly') -> None:
        if other.variable != self.variable:
            raise PolynomialError(f"变量不一致: {self.variable} 与 {other.variable}")

    def coeff(self, exponent: int) -> MultiPoly:
        return self._terms.get(exponent, MultiPoly.zero())

    def exponents(self):
        return sorted(self._terms)

    def min_exponent(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def max_exponent(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly(self.variable, {0: MultiPoly.coerce(other)})
            except TypeError:
                return NotImplemented
        self._check_same(other)
        result = dict(self._terms)
        for exponent, coeff in other._terms.items():
            result[exponent] = result.get(exponent, MultiPoly.zero()) + coeff
        return LaurentPoly(self.variable, result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variable, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                factor = MultiPoly.coerce(other)
            except TypeError:
                return NotImplemented
            return LaurentPoly(self.variable, {e: c * factor for e, c in self._terms.items()})
        self._check_same(other)
        result: Dict[int, MultiPoly] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exponent = ea + eb
                result[exponent] = result.get(exponent, MultiPoly.zero()) + ca * cb
        return LaurentPoly(self.variable, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise PolynomialError(f"Laurent 多项式只支持非负整数幂: {exponent}")
        result = LaurentPoly(self.variable, {0: 1})
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variable == other.variable and self._terms == other._terms

    def __hash__(self):
        return hash((self.variable, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for exponent in sorted(self._terms):
            coeff = self._terms[exponent]
            if exponent == 0:
                power = ''
            elif exponent == 1:
                power = self.variable
            else:
                power = f"{self.variable}^{exponent}"
            if not power:
                text = str(coeff)
                if len(coeff) > 1:
                    text = f"({text})"
            elif coeff == 1:
                text = power
            elif coeff == -1:
                text = '-' + power
            elif len(coeff) == 1 and not str(coeff).startswith('-'):
                text = f"{coeff}*{power}"
            else:
                text = f"({coeff})*{power}"
            parts.append(text)
        return ' + '.join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.variable!r}, '{self}')"


def laurent_coeff(p: LaurentPoly, r: int) -> MultiPoly:
    """p 中 variable^r 的系数，不存在时为零多项式"""
    return p.coeff(r)
