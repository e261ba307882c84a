#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 余乘与马尔可夫算子 P_t
P_t = (id ⊗ κ_t)∘Δ，逐词为 Σ_{S⊆K} ⟨E_{K∖S}⟩_t E_S
"""

import logging
from typing import Dict, List, Tuple

from src.exactalg.poly import MultiPoly
from src.ugln.element import ElementAccumulator, NCElement, Word
from src.ugln.partitions import MAX_STATE_DEGREE, word_state
from src.ugln.pbw import normal_form

logger = logging.getLogger('ugln')


def _split(word: Word, mask: int) -> Tuple[Word, Word]:
    left = tuple(g for pos, g in enumerate(word) if mask >> pos & 1)
    right = tuple(g for pos, g in enumerate(word) if not mask >> pos & 1)
    return left, right


def coproduct(word: Word) -> List[Tuple[Word, Word]]:
    """
    Δ(E_K) = Σ_S E_S ⊗ E_{K∖S}，两个因子都保持原来的相对顺序

    Returns:
        list: 2^len 个 (左因子, 右因子)，从 S=K 开始
    """
    word = tuple(word)
    full = (1 << len(word)) - 1
    return [_split(word, mask) for mask in range(full, -1, -1)]


def apply_pt(x: NCElement, time, max_degree: int = MAX_STATE_DEGREE) -> NCElement:
    """
    马尔可夫算子 P_time（输出不做正规化）

    Args:
        x: 元素
        time: 时间（多项式，可含符号）
        max_degree: 状态计算允许的最大词长

    Returns:
        NCElement: Σ_S ⟨E_{K∖S}⟩_time · E_S 的线性延拓
    """
    time = MultiPoly.coerce(time)
    powers: Dict[int, MultiPoly] = {}
    states: Dict[Word, MultiPoly] = {}
    acc = ElementAccumulator(x.rank)

    for word, coeff in x.items():
        for left, right in coproduct(word):
            if right not in states:
                states[right] = word_state(right, time, max_degree, powers)
            value = states[right]
            if value:
                acc.add(left, coeff * value)
    return acc.build()


def is_central(x: NCElement) -> bool:
    """
    x 是否属于中心：对所有生成元 E_ij 检查 normal_form(x E_ij - E_ij x) = 0
    """
    rank = x.rank
    for i in range(1, rank + 1):
        for j in range(1, rank + 1):
            g = NCElement.gen(rank, i, j)
            if not normal_form(x * g - g * x).is_zero():
                logger.debug(f"与 E[{i},{j}] 不交换")
                return False
    return True
