#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 路径生成的中心元 Ψ_k
Ψ_k = Σ_{m=1}^N Σ_{π ∈ Π_k^{(m)}} r(π)·∏_边 标签，
其中非环边 (i,j) 标 E_ij，环边 (i,i) 标 E_ii - m + 1，r(π) 为首次回到 m 的步数
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from src.ugln.element import ElementAccumulator, NCElement
from src.utils.errors import RankMismatchError

logger = logging.getLogger('center')


@dataclass(frozen=True)
class PathSpec:
    """闭合路径 v_0, …, v_k，v_0 = v_k = m"""

    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    def first_return(self) -> int:
        """首次回到起点的步数 r(π)"""
        m = self.vertices[0]
        for step, v in enumerate(self.vertices[1:], start=1):
            if v == m:
                return step
        raise ValueError(f"路径没有回到起点: {self.vertices}")

    def is_valid_for(self, m: int) -> bool:
        return (len(self.vertices) >= 2 and self.vertices[0] == m and self.vertices[-1] == m
                and all(1 <= v <= m for v in self.vertices))


def enum_paths(m: int, k: int) -> List[PathSpec]:
    """
    完全有向图（带环）{1..m} 中从 m 出发、长度 k 的全部 m^{k-1} 条闭合路径

    Args:
        m: 起点（同时是顶点数）
        k: 路径长度
    """
    if m < 1 or k < 1:
        raise ValueError(f"需要 m ≥ 1 且 k ≥ 1: m={m}, k={k}")
    return [PathSpec((m,) + middle + (m,))
            for middle in itertools.product(range(1, m + 1), repeat=k - 1)]


def e_of_path(path: PathSpec, m: int, rank: Optional[int] = None) -> NCElement:
    """
    路径对应的元素 r(π)·∏ 标签

    Args:
        path: 以 m 为起点的闭合路径
        m: 起点
        rank: 所在代数的秩，默认为 m
    """
    rank = rank or m
    if not path.is_valid_for(m):
        raise ValueError(f"路径 {path.vertices} 不是以 {m} 为起点的闭合路径")
    result = NCElement.scalar(rank, path.first_return())
    for a, b in zip(path.vertices, path.vertices[1:]):
        label = NCElement.gen(rank, a, b)
        if a == b:
            label = label - (m - 1)
        result = result * label
    return result


@lru_cache(maxsize=None)
def psi(k: int, rank: int) -> NCElement:
    """
    中心元 Ψ_k^{(N)}

    Args:
        k: 次数
        rank: 秩 N

    Returns:
        NCElement: 按路径展开的词表示（未正规化）
    """
    if k < 1 or rank < 1:
        raise ValueError(f"需要 k ≥ 1 且 N ≥ 1: k={k}, N={rank}")
    acc = ElementAccumulator(rank)
    for m in range(1, rank + 1):
        for path in enum_paths(m, k):
            for word, coeff in e_of_path(path, m, rank).items():
                acc.add(word, coeff)
    element = acc.build()
    logger.debug(f"Ψ_{k}^({rank}) 共 {len(element)} 个词")
    return element


def psi_sub(k: int, sub_rank: int, rank: int) -> NCElement:
    """
    Ψ_k^{(M)} 经包含映射嵌入 U(gl_N)（M < N 时一般不在 U(gl_N) 的中心里）

    Raises:
        RankMismatchError: M > N
    """
    if sub_rank > rank:
        raise RankMismatchError(f"子代数秩 M={sub_rank} 大于秩 N={rank}")
    return psi(k, sub_rank).with_rank(rank)


def psi_product(rho: Tuple[int, ...], rank: int, sub_rank: Optional[int] = None) -> NCElement:
    """Ψ_ρ = ∏ Ψ_{ρ_i}（空划分为单位元）"""
    sub_rank = sub_rank or rank
    result = NCElement.one(rank)
    for part in rho:
        result = result * psi_sub(part, sub_rank, rank)
    return result
