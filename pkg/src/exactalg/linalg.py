#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 精确线性代数
有理系数矩阵、多项式右端的高斯消元，以及多项式值的 Lagrange 插值
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from src.exactalg.poly import MultiPoly
from src.utils.errors import SingularSystemError


def solve_linear(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[MultiPoly]) -> List[MultiPoly]:
    """
    解 matrix · c = rhs（行数可以多于列数）

    Args:
        matrix: m×n 有理数矩阵，m ≥ n
        rhs: 长度 m 的多项式右端

    Returns:
        list: 长度 n 的唯一解

    Raises:
        SingularSystemError: 列秩不足或方程组不相容
    """
    rows = len(matrix)
    if rows != len(rhs):
        raise SingularSystemError(f"矩阵行数 {rows} 与右端长度 {len(rhs)} 不一致")
    cols = len(matrix[0]) if rows else 0

    a = [[Fraction(v) for v in row] for row in matrix]
    b = [MultiPoly.coerce(v) for v in rhs]

    for col in range(cols):
        pivot = next((r for r in range(col, rows) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularSystemError(f"第 {col + 1} 列没有主元，方程组奇异")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]

        inverse = 1 / a[col][col]
        a[col] = [v * inverse for v in a[col]]
        b[col] = b[col].scale(inverse)

        for r in range(rows):
            factor = a[r][col]
            if r == col or factor == 0:
                continue
            a[r] = [v - factor * p for v, p in zip(a[r], a[col])]
            b[r] = b[r] - b[col].scale(factor)

    for r in range(cols, rows):
        if not b[r].is_zero():
            raise SingularSystemError(f"方程组不相容（第 {r + 1} 行残差 {b[r]}）")

    return b[:cols]


def lagrange_interpolate(points: Sequence[Tuple[Fraction, MultiPoly]], symbol: str) -> MultiPoly:
    """
    过给定点的最低次插值多项式

    Args:
        points: (节点, 多项式值) 列表，节点互不相同
        symbol: 插值变量名

    Returns:
        MultiPoly: 关于 symbol 次数 ≤ len(points) - 1 的多项式
    """
    nodes = [Fraction(x) for x, _ in points]
    if len(set(nodes)) != len(nodes):
        raise SingularSystemError(f"插值节点重复: {nodes}")

    var = MultiPoly.symbol(symbol)
    result = MultiPoly.zero()
    for i, (xi, yi) in enumerate(points):
        yi = MultiPoly.coerce(yi)
        if yi.is_zero():
            continue
        basis = MultiPoly.one()
        denominator = Fraction(1)
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            basis = basis * (var - xj)
            denominator *= nodes[i] - xj
        result = result + yi * basis.scale(1 / denominator)
    return result
