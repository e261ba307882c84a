#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - N=2 行列式公式
两个截断二重和之比，权为 (b^k + (a-1)^k)；1/n! 在 n < 0 时取 0。
全程用有理数累加，最后才转成浮点数
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from src.utils.errors import SingularSystemError

logger = logging.getLogger('oracle')


@dataclass(frozen=True)
class DetFormQuery:
    """(x, y) 按公式原样使用；(4, 2) 对应移位坐标 (4, 1)，即 λ = (4, 2)"""

    x: int
    y: int
    t: Fraction
    k: int
    b_max: int = 50

    def __post_init__(self):
        if self.x < self.y:
            raise ValueError(f"需要 x ≥ y: x={self.x}, y={self.y}")
        if self.b_max < self.x:
            raise ValueError(f"需要 b_max ≥ x: b_max={self.b_max}, x={self.x}")
        if self.k < 0:
            raise ValueError(f"需要 k ≥ 0: k={self.k}")


@lru_cache(maxsize=None)
def inverse_factorial(n: int) -> Fraction:
    """1/n!，n < 0 时为 0"""
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def _determinant(x: int, y: int, a: int, b: int) -> Fraction:
    return (inverse_factorial(b - x) * inverse_factorial(a - y)
            - inverse_factorial(b - y + 1) * inverse_factorial(a - 1 - x))


def detform_exact(query: DetFormQuery) -> Fraction:
    """
    截断到 b ≤ b_max 的精确比值

    Raises:
        SingularSystemError: 分母为零
    """
    t = Fraction(query.t)
    numerator = Fraction(0)
    denominator = Fraction(0)
    for b in range(query.x, query.b_max + 1):
        for a in range(query.y, b + 1):
            det = _determinant(query.x, query.y, a, b)
            if not det:
                continue
            base = (b - a + 1) * t ** (b + a) * det
            numerator += (b ** query.k + (a - 1) ** query.k) * base
            denominator += base
    if denominator == 0:
        raise SingularSystemError(f"行列式公式的分母为零: {query}")
    return numerator / denominator


def detform_n2(query: DetFormQuery) -> float:
    """行列式公式的浮点值（内部精确累加）"""
    value = detform_exact(query)
    logger.debug(f"detform {query} = {float(value)!r}")
    return float(value)
