#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 集合划分与状态
⟨E_{i_1 j_1}⋯E_{i_m j_m}⟩_t = Σ_π t^{|π|} ∏_块 [块内按位置顺序首尾相接成环]
"""

import logging
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Tuple

from src.exactalg.poly import MultiPoly
from src.ugln.element import NCElement, Word
from src.utils.errors import DegreeLimitError

logger = logging.getLogger('ugln')

MAX_STATE_DEGREE = 12


def set_partitions(m: int) -> Iterator[Tuple[int, ...]]:
    """
    按字典序枚举 {0..m-1} 的集合划分（限制增长串）

    Yields:
        tuple: 限制增长串 a，a[k] 为元素 k 所在块的编号
    """
    if m == 0:
        yield ()
        return
    rgs = [0] * m

    def extend(pos: int, blocks: int):
        if pos == m:
            yield tuple(rgs)
            return
        for b in range(blocks + 1):
            rgs[pos] = b
            yield from extend(pos + 1, max(blocks, b + 1))

    yield from extend(1, 1)


def blocks_of(rgs: Tuple[int, ...]) -> List[List[int]]:
    blocks: List[List[int]] = []
    for pos, b in enumerate(rgs):
        if b == len(blocks):
            blocks.append([])
        blocks[b].append(pos)
    return blocks


def _canonical(word: Word) -> Word:
    # 指示函数只依赖指标的相等关系，按首次出现重新编号
    labels: Dict[int, int] = {}
    out = []
    for i, j in word:
        a = labels.setdefault(i, len(labels) + 1)
        b = labels.setdefault(j, len(labels) + 1)
        out.append((a, b))
    return tuple(out)


@lru_cache(maxsize=None)
def _block_counts(word: Word) -> Tuple[int, ...]:
    """counts[b] = 使每个块都成环的 b 块划分数

    按限制增长串的字典序构造划分，只在新元素能接在块尾时才放入已有块
    """
    m = len(word)
    counts = [0] * (m + 1)
    if m == 0:
        counts[0] = 1
        return tuple(counts)

    # 每个块记录 (首元素的 i, 末元素的 j)
    firsts: List[int] = []
    lasts: List[int] = []

    def extend(pos: int):
        if pos == m:
            if all(first == last for first, last in zip(firsts, lasts)):
                counts[len(firsts)] += 1
            return
        i, j = word[pos]
        for b in range(len(firsts)):
            if lasts[b] == i:
                lasts[b] = j
                extend(pos + 1)
                lasts[b] = i
        firsts.append(i)
        lasts.append(j)
        extend(pos + 1)
        firsts.pop()
        lasts.pop()

    extend(0)
    return tuple(counts)


def block_counts(word: Word, max_degree: int = MAX_STATE_DEGREE) -> Tuple[int, ...]:
    """
    单个词的按块数分组的划分计数

    Raises:
        DegreeLimitError: 词长超过 max_degree
    """
    if len(word) > max_degree:
        raise DegreeLimitError(
            f"单项式次数 {len(word)} 超过上限 {max_degree}（可通过 limits.max_state_degree 调整）"
        )
    return _block_counts(_canonical(word))


def word_state(word: Word, time: MultiPoly, max_degree: int = MAX_STATE_DEGREE,
               powers: Dict[int, MultiPoly] = None) -> MultiPoly:
    """单个词的状态值"""
    counts = block_counts(word, max_degree)
    if powers is None:
        powers = {}
    result = MultiPoly.zero()
    for b, count in enumerate(counts):
        if not count:
            continue
        if b not in powers:
            powers[b] = time ** b
        result = result + powers[b].scale(count)
    return result


def state(x: NCElement, time, max_degree: int = MAX_STATE_DEGREE) -> MultiPoly:
    """
    状态 ⟨x⟩_time

    Args:
        x: 元素
        time: 时间（多项式，可含符号）
        max_degree: 允许的最大词长

    Returns:
        MultiPoly: 状态值
    """
    time = MultiPoly.coerce(time)
    powers: Dict[int, MultiPoly] = {}
    acc: Dict = {}
    for word, coeff in x.items():
        value = word_state(word, time, max_degree, powers)
        if value:
            (coeff * value).accumulate(acc)
    return MultiPoly.from_accumulated(acc)


def bell_polynomial(m: int, t) -> MultiPoly:
    """
    Bell（Touchard）多项式 B_m(t)，由递推 B_{m+1}(t) = t·Σ_k C(m,k) B_k(t) 计算

    与集合划分枚举无关，作为状态公式的独立对照
    """
    t = MultiPoly.coerce(t)
    bells = [MultiPoly.one()]
    for n in range(m):
        total = MultiPoly.zero()
        for k in range(n + 1):
            total = total + bells[k].scale(comb(n, k))
        bells.append(t * total)
    return bells[m]
