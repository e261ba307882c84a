#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - PBW 正规序
利用 E_ij E_kl - E_kl E_ij = δ_jk E_il - δ_li E_kj 把词排成规范顺序：
严格下三角 (i>j) 在前，对角居中，严格上三角 (i<j) 在后，同类内按 (i, j) 字典序
"""

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from src.ugln.element import ElementAccumulator, Gen, NCElement, Word

logger = logging.getLogger('ugln')

# 一个词的正规形：(规范词, 整数系数) 的元组
WordForm = Tuple[Tuple[Word, int], ...]


def gen_key(g: Gen) -> Tuple[int, int, int]:
    """生成元的排序键：(类别, i, j)，类别 0=下三角，1=对角，2=上三角"""
    i, j = g
    if i > j:
        cls = 0
    elif i == j:
        cls = 1
    else:
        cls = 2
    return (cls, i, j)


def is_ordered(word: Word) -> bool:
    return all(gen_key(a) <= gen_key(b) for a, b in zip(word, word[1:]))


def commutator(a: Gen, b: Gen) -> List[Tuple[Gen, int]]:
    """[E_ij, E_kl] 展开为 [(生成元, 符号)]"""
    i, j = a
    k, l = b
    terms = []
    if j == k:
        terms.append(((i, l), 1))
    if l == i:
        terms.append(((k, j), -1))
    return terms


def _merge(target: Dict[Word, int], form: WordForm, factor: int) -> None:
    for word, coeff in form:
        value = target.get(word, 0) + coeff * factor
        if value:
            target[word] = value
        else:
            target.pop(word, None)


@lru_cache(maxsize=None)
def _insert(sorted_word: Word, g: Gen) -> WordForm:
    """规范词右乘一个生成元后的正规形"""
    if not sorted_word or gen_key(sorted_word[-1]) <= gen_key(g):
        return ((sorted_word + (g,), 1),)

    prefix, h = sorted_word[:-1], sorted_word[-1]
    result: Dict[Word, int] = {}
    # prefix·h·g = prefix·g·h + prefix·[h, g]
    for word, coeff in _insert(prefix, g):
        _merge(result, _insert(word, h), coeff)
    for gen, sign in commutator(h, g):
        _merge(result, _insert(prefix, gen), sign)
    return tuple(result.items())


@lru_cache(maxsize=None)
def word_normal_form(word: Word) -> WordForm:
    """单个词的正规形（整数系数，与秩无关）"""
    if not word:
        return (((), 1),)
    result: Dict[Word, int] = {}
    for prefix_word, coeff in word_normal_form(word[:-1]):
        _merge(result, _insert(prefix_word, word[-1]), coeff)
    return tuple(result.items())


def normal_form(x: NCElement) -> NCElement:
    """
    PBW 正规形

    Args:
        x: 任意元素

    Returns:
        NCElement: 所有词都按规范顺序排列的等价元素
    """
    acc = ElementAccumulator(x.rank)
    for word, coeff in x.items():
        if is_ordered(word):
            acc.add(word, coeff)
            continue
        for sorted_word, factor in word_normal_form(word):
            acc.add(sorted_word, coeff, factor)
    return acc.build()


def equal_in_algebra(a: NCElement, b: NCElement) -> bool:
    """两个元素在 U(gl_N) 中是否相等"""
    return normal_form(a - b).is_zero()


def clear_caches() -> None:
    """清空正规形缓存"""
    info = word_normal_form.cache_info()
    logger.debug(f"清空正规形缓存: {info.currsize} 个词")
    word_normal_form.cache_clear()
    _insert.cache_clear()
