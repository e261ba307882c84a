#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - Ψ_1^2 替换规则的精确推论
大秩下 Ψ_1^2 - ⟨Ψ_1^2⟩ 与 (2τη - η²)(Ψ_1 - ⟨Ψ_1⟩) 的协方差结构一致；
这里给出两个可以精确检验的推论：
1. L^{-4}⟨(Ψ_1 - ⟨Ψ_1⟩)(Ψ_1^2 - ⟨Ψ_1^2⟩)⟩ 的极限等于 (2τη - η²)·ητ
2. 类空协方差按 P_{τ_j-τ_i}Ψ_{k_j} 的渐近展开拆成同一时刻的协方差之和
"""

import logging
from typing import Dict, Optional, Tuple

from src.center.asymptotics import asymptotic_coeffs, interpolate_state, scale_time_rank
from src.center.powersum import Partition, weight
from src.covariance.ckl import product_replacement
from src.covariance.residues import PathPoint, cov_spacelike
from src.exactalg.poly import MultiPoly, leading_order_in
from src.utils.errors import DecompositionError

logger = logging.getLogger('covariance')


def state_covariance(first: Partition, second: Partition, witnesses: int = 1) -> MultiPoly:
    """
    ⟨Ψ_a Ψ_b⟩_t - ⟨Ψ_a⟩_t ⟨Ψ_b⟩_t，作为 (t, N) 的多项式

    Ψ_a、Ψ_b 都在中心里，乘积与顺序无关
    """
    first, second = tuple(first), tuple(second)
    joint = tuple(sorted(first + second, reverse=True))
    values = [interpolate_state(rho, weight(rho) + 1, witnesses) for rho in (joint, first, second)]
    return values[0] - values[1] * values[2]


def product_covariance_limit(witnesses: int = 1) -> Tuple[int, MultiPoly]:
    """
    ⟨(Ψ_1 - ⟨Ψ_1⟩)(Ψ_1^2 - ⟨Ψ_1^2⟩)⟩ 在 t = τL、N = ηL 下的主阶

    Returns:
        tuple: (L 的最高幂次, 主阶系数)，应为 (4, (2τη - η²)·ητ)
    """
    poly = state_covariance((1,), (1, 1), witnesses)
    order, coeff = leading_order_in(scale_time_rank(poly), 'L')
    logger.info(f"Cov(Ψ_1, Ψ_1^2) 的主阶 L^{order}: {coeff}")
    return order, coeff


def heuristic_product_covariance(tau, eta) -> MultiPoly:
    """替换规则给出的极限：Ψ_1 方差的极限 ητ 乘以 product_replacement(τ, η)"""
    tau, eta = MultiPoly.coerce(tau), MultiPoly.coerce(eta)
    return product_replacement(tau, eta) * eta * tau


def spacelike_decomposition(i: PathPoint, j: PathPoint,
                            coeffs: Optional[Dict[Partition, MultiPoly]] = None) -> Dict[Partition, MultiPoly]:
    """
    把类空顺序下的 Cov(ξ_i, ξ_j) 拆成时刻 τ_i 上的协方差之和

    P_{τ_j-τ_i}Ψ_{k_j} 展开为 Σ_ρ c'_{k_j,ρ}(τ_j-τ_i, η_j)·Ψ_ρ，
    单项 Ψ_l 贡献 c'·Cov(ξ_i, (l, η_j, τ_i))，
    Ψ_1^2 先按 product_replacement(τ_i, η_j) 折合成 Ψ_1，常数项没有贡献

    Args:
        i: 类空顺序中的前一个点（η_i ≥ η_j, τ_i ≤ τ_j）
        j: 后一个点
        coeffs: asymptotic_coeffs(k_j) 的结果，缺省时现算

    Returns:
        dict: ρ -> 该项的贡献，各项之和等于 cov_spacelike(i, j)

    Raises:
        DecompositionError: 展开中出现 Ψ_1^2 以外的乘积项
    """
    if coeffs is None:
        coeffs = asymptotic_coeffs(j.k)
    gap = MultiPoly.coerce(j.tau) - MultiPoly.coerce(i.tau)
    bindings = {'tau': gap, 'eta': MultiPoly.coerce(j.eta)}
    parts = {}
    for rho, coeff in coeffs.items():
        if not rho:
            continue
        factor = MultiPoly.coerce(coeff).substitute(bindings)
        if len(rho) == 1:
            level = rho[0]
        elif rho == (1, 1):
            factor = factor * product_replacement(i.tau, j.eta)
            level = 1
        else:
            raise DecompositionError(f"不支持乘积项 Ψ_{rho} 的替换")
        same_time = cov_spacelike(i, PathPoint(level, j.eta, i.tau))
        parts[rho] = factor * MultiPoly.coerce(same_time)
    return parts


def verify_spacelike_decomposition(i: PathPoint, j: PathPoint,
                                   coeffs: Optional[Dict[Partition, MultiPoly]] = None) -> bool:
    """spacelike_decomposition 各项之和是否等于 cov_spacelike(i, j)"""
    parts = spacelike_decomposition(i, j, coeffs)
    total = MultiPoly.zero()
    for value in parts.values():
        total = total + value
    direct = MultiPoly.coerce(cov_spacelike(i, j))
    if total != direct:
        logger.warning(f"类空协方差的展开之和 {total} 与直接计算 {direct} 不符: {i} {j}")
        return False
    return True
