#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 精确算术模块
有理数、多元多项式、Laurent 多项式、线性方程组和表达式解析
"""

from .rational import to_fraction, format_fraction
from .poly import (MultiPoly, poly_add, poly_mul, poly_pow, substitute,
                   leading_order_in)
from .laurent import LaurentPoly, laurent_coeff
from .linalg import solve_linear, lagrange_interpolate
from .parsing import ExpressionParser, parse_poly

__all__ = [
    'to_fraction', 'format_fraction',
    'MultiPoly', 'poly_add', 'poly_mul', 'poly_pow', 'substitute', 'leading_order_in',
    'LaurentPoly', 'laurent_coeff',
    'solve_linear', 'lagrange_interpolate',
    'ExpressionParser', 'parse_poly',
]
