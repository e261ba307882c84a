#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - Harish-Chandra 投影
正规序下只保留纯对角词，E_mm -> λ_m = x_m + m - 1，得到移位变量 x 的对称多项式
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Union

import numpy as np

from src.exactalg.poly import MultiPoly
from src.ugln.element import NCElement
from src.ugln.markov import is_central
from src.ugln.pbw import normal_form
from src.utils.errors import (NotCentralError, PolynomialError, RankMismatchError,
                              SymmetryError)

logger = logging.getLogger('center')


def x_symbol(m: int) -> str:
    return f"x{m}"


def shifted_coordinates(lam: Sequence[int]) -> list:
    """λ -> x，x_m = λ_m - m + 1"""
    return [Fraction(value) - m for m, value in enumerate(lam)]


@dataclass(frozen=True)
class ShiftedSymPoly:
    """秩 N 的移位对称多项式，变量为 x1..xN（系数可以含 t 等符号）"""

    rank: int
    poly: MultiPoly

    @classmethod
    def power_sum(cls, k: int, rank: int) -> 'ShiftedSymPoly':
        """p_k(x) = Σ x_m^k"""
        total = MultiPoly.zero()
        for m in range(1, rank + 1):
            total = total + MultiPoly.symbol(x_symbol(m)) ** k
        return cls(rank, total)

    def variables(self):
        return [x_symbol(m) for m in range(1, self.rank + 1)]

    def is_symmetric(self) -> bool:
        """用对换 (1 2) 和轮换 (1 2 … N) 两个生成元检验对称性"""
        if self.rank < 2:
            return True
        names = self.variables()
        swap = {names[0]: names[1], names[1]: names[0]}
        cycle = {names[m]: names[(m + 1) % self.rank] for m in range(self.rank)}
        return self.poly.rename(swap) == self.poly and self.poly.rename(cycle) == self.poly

    def x_degree(self) -> int:
        """只按 x 变量计的次数"""
        parts = self.poly.split(self.variables())
        if not parts:
            return -1
        return max(sum(e for _, e in mono) for mono in parts)

    def evaluate_x(self, xs: Sequence) -> Union[Fraction, MultiPoly]:
        """在移位坐标 x 处求值；结果不含其它符号时返回 Fraction"""
        if len(xs) != self.rank:
            raise RankMismatchError(f"需要 {self.rank} 个坐标，得到 {len(xs)} 个")
        value = self.poly.substitute({x_symbol(m + 1): Fraction(v) for m, v in enumerate(xs)})
        constant = value.to_constant()
        return value if constant is None else constant

    def evaluate(self, lam: Sequence[int]) -> Union[Fraction, MultiPoly]:
        """在最高权 λ 处求值（x_m = λ_m - m + 1）"""
        return self.evaluate_x(shifted_coordinates(lam))

    def evaluate_array(self, positions: np.ndarray) -> np.ndarray:
        """
        对一批粒子位置向量化求值

        Args:
            positions: 形状 (R, N) 的整数数组，粒子位置即移位坐标

        Returns:
            np.ndarray: 长度 R 的浮点数组
        """
        positions = np.asarray(positions, dtype=np.float64)
        if positions.ndim != 2 or positions.shape[1] != self.rank:
            raise RankMismatchError(f"位置数组形状应为 (R, {self.rank})，得到 {positions.shape}")
        index = {x_symbol(m + 1): m for m in range(self.rank)}
        result = np.zeros(positions.shape[0], dtype=np.float64)
        for mono, coeff in self.poly.items():
            term = np.full(positions.shape[0], float(coeff))
            for sym, exp in mono:
                if sym not in index:
                    raise PolynomialError(f"观测量含有非坐标符号 {sym}: {self.poly}")
                term *= positions[:, index[sym]] ** exp
            result += term
        return result

    def __str__(self) -> str:
        return str(self.poly)


def _diagonal_images(rank: int) -> Dict[int, MultiPoly]:
    return {m: MultiPoly.symbol(x_symbol(m)) + (m - 1) for m in range(1, rank + 1)}


def harish_chandra(x: NCElement, check_central: bool = True) -> ShiftedSymPoly:
    """
    Harish-Chandra 投影

    Args:
        x: 中心元
        check_central: 是否先检验中心性（大秩渐近计算时可以跳过）

    Returns:
        ShiftedSymPoly: 移位对称多项式

    Raises:
        NotCentralError: x 不在中心里
        SymmetryError: 像不对称（内部一致性错误）
    """
    if check_central and not is_central(x):
        raise NotCentralError(f"元素不在 Z(U(gl_{x.rank})) 中")

    images = _diagonal_images(x.rank)
    cache: Dict[tuple, MultiPoly] = {}
    acc: Dict = {}
    for word, coeff in normal_form(x).items():
        if any(i != j for i, j in word):
            continue
        if word not in cache:
            value = MultiPoly.one()
            for i, _ in word:
                value = value * images[i]
            cache[word] = value
        (coeff * cache[word]).accumulate(acc)

    image = ShiftedSymPoly(x.rank, MultiPoly.from_accumulated(acc))
    if not image.is_symmetric():
        raise SymmetryError(f"Harish-Chandra 像不对称: {image.poly}")
    return image


def evaluate_at(x: NCElement, lam: Sequence[int], check_central: bool = True) -> Union[Fraction, MultiPoly]:
    """
    中心元在最高权 λ 的表示上作用的常数

    Raises:
        RankMismatchError: λ 的长度不等于秩
        NotCentralError: x 不在中心里
    """
    if len(lam) != x.rank:
        raise RankMismatchError(f"λ 的长度 {len(lam)} 与秩 {x.rank} 不一致")
    return harish_chandra(x, check_central).evaluate(lam)

