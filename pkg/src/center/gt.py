#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - Gelfand-Tsetlin 子代数
把 x 写成 ∏_M Ψ^{(M)}_{ρ_M} 的线性组合，再在各层的最高权上求值
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple, Union

from src.center.harish import ShiftedSymPoly, shifted_coordinates
from src.center.paths import psi_product
from src.center.powersum import Partition, integer_partitions
from src.exactalg.linalg import solve_linear
from src.exactalg.poly import MultiPoly
from src.ugln.element import NCElement
from src.ugln.pbw import normal_form
from src.utils.errors import DecompositionError, RankMismatchError, SingularSystemError

logger = logging.getLogger('center')

# 每层一个划分，顺序与 levels（从大到小）一致
LevelKey = Tuple[Partition, ...]


def _normalize_levels(levels: Sequence[int], rank: int) -> List[int]:
    ordered = sorted(set(levels), reverse=True)
    if not ordered:
        raise DecompositionError("至少需要一层")
    if ordered[0] > rank or ordered[-1] < 1:
        raise RankMismatchError(f"层 {ordered} 超出 1..{rank}")
    return ordered


def _partitions_up_to(budget: int, max_part: int) -> Iterator[Partition]:
    for size in range(budget + 1):
        yield from integer_partitions(size, max_part)


def _level_combinations(levels: List[int], budget: int) -> Iterator[LevelKey]:
    if not levels:
        yield ()
        return
    head, rest = levels[0], levels[1:]
    for rho in _partitions_up_to(budget, head):
        for tail in _level_combinations(rest, budget - sum(rho)):
            yield (rho,) + tail


def _basis_element(key: LevelKey, levels: List[int], rank: int) -> NCElement:
    element = NCElement.one(rank)
    for rho, level in zip(key, levels):
        element = element * psi_product(rho, rank, sub_rank=level)
    return normal_form(element)


def gt_decompose(x: NCElement, levels: Sequence[int]) -> Dict[LevelKey, MultiPoly]:
    """
    在 Gelfand-Tsetlin 子代数中展开

    Args:
        x: 元素
        levels: 参与的层 M（≤ N），按从大到小排列

    Returns:
        dict: 每层划分组成的元组 -> 系数

    Raises:
        DecompositionError: x 不在这些层生成的子代数中
    """
    levels = _normalize_levels(levels, x.rank)
    target = normal_form(x)
    budget = max(target.degree(), 0)

    keys = list(_level_combinations(levels, budget))
    columns = [_basis_element(key, levels, x.rank) for key in keys]

    words = set(target.words())
    for column in columns:
        words.update(column.words())
    rows = sorted(words, key=lambda w: (-len(w), w))

    matrix = []
    for word in rows:
        row = []
        for column in columns:
            coeff = column.coefficient(word).to_constant()
            if coeff is None:
                raise DecompositionError(f"基元素系数不是常数: {word}")
            row.append(coeff)
        matrix.append(row)
    rhs = [target.coefficient(word) for word in rows]

    logger.debug(f"GT 展开: {len(keys)} 个基元素, {len(rows)} 个词")
    try:
        solution = solve_linear(matrix, rhs)
    except SingularSystemError as e:
        raise DecompositionError(f"元素不在层 {levels} 生成的子代数中: {e}") from e
    return {key: c for key, c in zip(keys, solution) if c}


def evaluate_gt(x: NCElement, lambdas: Mapping[int, Sequence[int]]) -> Union[Fraction, MultiPoly]:
    """
    在一串交错的最高权 λ^{(M)} 上求值（x^{(M)}_m = λ^{(M)}_m - m + 1）

    Args:
        x: Gelfand-Tsetlin 子代数中的元素
        lambdas: 层 M -> 长度 M 的最高权

    Raises:
        RankMismatchError: λ^{(M)} 的长度不等于 M
        DecompositionError: x 不在子代数中
    """
    levels = _normalize_levels(list(lambdas), x.rank)
    coords = {}
    for level in levels:
        lam = lambdas[level]
        if len(lam) != level:
            raise RankMismatchError(f"第 {level} 层的最高权长度为 {len(lam)}")
        coords[level] = shifted_coordinates(lam)

    total = MultiPoly.zero()
    for key, coeff in gt_decompose(x, levels).items():
        term = coeff
        for rho, level in zip(key, levels):
            for part in rho:
                term = term * ShiftedSymPoly.power_sum(part, level).evaluate_x(coords[level])
        total = total + term
    constant = total.to_constant()
    return total if constant is None else constant
