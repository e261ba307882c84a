#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 微分形式的状态
⟨E_{i_1 j_1}⋯E_{i_m j_m}⟩_t 等于 exp(tY) 中 x_1⋯x_m 的系数，
Y = Tr(∏_b (Id + x_b E_{i_b j_b}) - Id) 按多重线性展开，迹用矩阵单位直接计算
"""

import logging
from math import factorial
from typing import Dict, Optional

import numpy as np

from src.exactalg.poly import MultiPoly
from src.ugln.element import Word
from src.utils.errors import DegreeLimitError

logger = logging.getLogger('oracle')

DEFAULT_MAX_DEGREE = 8


def _matrix_unit(rank: int, i: int, j: int) -> np.ndarray:
    unit = np.zeros((rank, rank), dtype=np.int64)
    unit[i - 1, j - 1] = 1
    return unit


def multilinear_trace(word: Word, rank: Optional[int] = None) -> Dict[int, int]:
    """Y 的多重线性系数：非空子集（位掩码）-> Tr(按原顺序相乘的矩阵单位)"""
    size = len(word)
    rank = rank or max((max(g) for g in word), default=1)
    units = [_matrix_unit(rank, i, j) for i, j in word]
    coeffs = {}
    for mask in range(1, 1 << size):
        product = np.eye(rank, dtype=np.int64)
        for b in range(size):
            if mask >> b & 1:
                product = product @ units[b]
        trace = int(np.trace(product))
        if trace:
            coeffs[mask] = trace
    return coeffs


def state_diff_oracle(word: Word, t, rank: Optional[int] = None,
                      max_degree: int = DEFAULT_MAX_DEGREE) -> MultiPoly:
    """
    用指数级数计算状态（与集合划分枚举相互独立）

    Args:
        word: 单项式 E_{i_1 j_1}⋯E_{i_m j_m}
        t: 时间（多项式，可含符号）
        rank: 迹所在矩阵的阶，默认取出现的最大指标
        max_degree: 允许的最大次数

    Raises:
        DegreeLimitError: 次数超过上限
    """
    size = len(word)
    if size > max_degree:
        raise DegreeLimitError(f"单项式次数 {size} 超过上限 {max_degree}")
    t = MultiPoly.coerce(t)
    if size == 0:
        return MultiPoly.one()

    full = (1 << size) - 1
    y = multilinear_trace(word, rank)
    power = dict(y)
    result = MultiPoly.zero()
    for n in range(1, size + 1):
        if n > 1:
            # Y^n 只保留两两不交的掩码乘积
            nxt: Dict[int, int] = {}
            for mask, value in power.items():
                rest = full ^ mask
                sub = rest
                while sub:
                    if sub in y:
                        key = mask | sub
                        nxt[key] = nxt.get(key, 0) + value * y[sub]
                    sub = (sub - 1) & rest
            power = nxt
        top = power.get(full, 0)
        if top:
            result = result + (t ** n).scale(top) / factorial(n)
    logger.debug(f"diff-state 共 {len(y)} 个非零迹")
    return result
