#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - Gibbs 核
Λ(x, y) = h(y)/h(x)，y 与 x 交错；h 是最高权 x_i + i - 1 对应表示的维数
"""

from fractions import Fraction
from typing import Sequence


def dimension(xs: Sequence[int]) -> Fraction:
    """h(x) = ∏_{i<j} (x_i - x_j)/(j - i)"""
    value = Fraction(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            value *= Fraction(xs[i] - xs[j], j - i)
    return value


def interlaces(top: Sequence[int], lower: Sequence[int]) -> bool:
    """lower 是否与 top 交错：top_{i+1} < lower_i ≤ top_i"""
    if len(lower) + 1 != len(top):
        return False
    return all(top[i + 1] < lower[i] <= top[i] for i in range(len(lower)))


def gibbs_kernel(top: Sequence[int], lower: Sequence[int]) -> Fraction:
    """
    从第 n 层构型 top 到第 n-1 层构型 lower 的转移概率

    Args:
        top: 第 n 层位置（严格递减）
        lower: 第 n-1 层位置

    Returns:
        Fraction: Λ(top, lower)；不交错时为 0
    """
    if not interlaces(top, lower):
        return Fraction(0)
    return dimension(lower) / dimension(top)
