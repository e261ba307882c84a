#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 与 Ornstein-Uhlenbeck 形式的比较
τ → e^{2τ} 代换并乘以 e^{-τ_i k_i} e^{-τ_j k_j} 后，两个分支都化为
Σ_r r·q^{-r}·F1[u^r]·G1[v^{-r}]，其中 a = e^{τ_i}、q = e^{τ_j - τ_i}、b = q·a。
所有量都写成 a, q 的多项式：两边同乘 q^{k_i} 消去负幂
"""

import logging
from typing import Tuple

from src.covariance.residues import SPACELIKE, TIMELIKE, PathPoint, residue_pair
from src.exactalg.laurent import LaurentPoly
from src.exactalg.poly import MultiPoly

logger = logging.getLogger('covariance')

A = MultiPoly.symbol('a')
Q = MultiPoly.symbol('q')


def _display_sum(f1: LaurentPoly, g1: LaurentPoly, total_degree: int) -> MultiPoly:
    """Σ_r r·q^{total_degree - r}·F1[u^r]·G1[v^{-r}]"""
    result = MultiPoly.zero()
    top = f1.max_exponent() or 0
    for r in range(1, top + 1):
        a, b = f1.coeff(r), g1.coeff(-r)
        if a and b:
            result = result + a * b * Q ** (total_degree - r) * r
    return result


def _display(outer: PathPoint, outer_time: MultiPoly, inner: PathPoint, inner_time: MultiPoly) -> MultiPoly:
    total = outer.k + inner.k
    f1 = LaurentPoly.from_linear('u', outer.eta, outer_time, 1) ** outer.k
    g1 = LaurentPoly.from_linear('v', inner.eta, inner_time, 1) ** inner.k
    return A ** total * _display_sum(f1, g1, total)


def ou_display(i: PathPoint, j: PathPoint) -> MultiPoly:
    """
    两个分支共用的 OU 展示式：η 较大的一层放在外层围道 u 上

    i 的时间记为 a，j 的时间记为 q·a；η_i = η_j 时 i 在外层
    """
    if i.eta >= j.eta:
        return _display(i, A, j, Q * A)
    return _display(j, Q * A, i, A)


def ou_branch_values(i: PathPoint, j: PathPoint, branch: str) -> Tuple[MultiPoly, MultiPoly]:
    """
    某一分支的 (重标度后的留数公式值, OU 展示式的值)，均为 a, q 的多项式

    Args:
        i: 较早的观测点（τ 不参与，由 a 表示）
        j: 较晚的观测点（τ_j 由 q·a 表示）
        branch: spacelike 或 timelike
    """
    b = Q * A
    if branch == SPACELIKE:
        f = LaurentPoly.from_linear('z', i.eta, A * A, A * A) ** i.k
        g = LaurentPoly.from_linear('w', j.eta, b * b, b * b) ** j.k
        display = _display(i, A, j, b)
    elif branch == TIMELIKE:
        # τ_j/τ_i 在代换后变为 q^2
        f = LaurentPoly.from_linear('z', MultiPoly.coerce(j.eta) * Q * Q, b * b, A * A) ** j.k
        g = LaurentPoly.from_linear('w', i.eta, A * A, A * A) ** i.k
        display = _display(j, b, i, A)
    else:
        raise ValueError(f"未知分支: {branch}")

    rescaled = residue_pair(f, g) * Q ** i.k
    return rescaled, display


def ou_rescale_compare(i: PathPoint, j: PathPoint) -> bool:
    """
    重标度后的分支公式是否与共用的 OU 展示式 ou_display 一致

    η_i ≥ η_j 时检查类空分支，否则检查类时分支；η_i = η_j 时两支都计算，只断言类空分支
    """
    branch = SPACELIKE if i.eta >= j.eta else TIMELIKE
    rescaled, _ = ou_branch_values(i, j, branch)
    if i.eta == j.eta:
        other, other_display = ou_branch_values(i, j, TIMELIKE)
        logger.debug(f"η_i = η_j 边界：类时分支仅计算不断言，相等={other == other_display}")
    return rescaled == ou_display(i, j)
