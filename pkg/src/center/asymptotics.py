#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 大秩渐近
P_t Ψ_ρ^{(N)} 的幂和系数是 (t, N) 的多项式；在 t = τL、N = ηL 下取 L 的主阶，
得到与 N 无关的极限系数 c_{ρ0,ρ}(τ, η)。ρ0 可以是单个 Ψ_k，也可以是乘积，例如 Ψ_1^2
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from src.center.harish import harish_chandra
from src.center.paths import psi, psi_product
from src.center.powersum import Partition, powersum_decompose, weight
from src.exactalg.linalg import lagrange_interpolate
from src.exactalg.poly import MultiPoly, leading_order_in
from src.ugln.markov import apply_pt
from src.ugln.partitions import state
from src.utils.errors import InterpolationError

logger = logging.getLogger('center')

TIME = MultiPoly.symbol('t')
TAU = MultiPoly.symbol('tau')
ETA = MultiPoly.symbol('eta')
SCALE = MultiPoly.symbol('L')


def as_partition(source: Union[int, Partition]) -> Partition:
    """整数 k 视为单行划分 (k,)"""
    rho = (source,) if isinstance(source, int) else tuple(source)
    if not rho or any(part < 1 for part in rho):
        raise ValueError(f"需要 k ≥ 1 或非空的正整数划分: {source}")
    return rho


def pt_expansion(source: Union[int, Partition], rank: int) -> Dict[Partition, MultiPoly]:
    """P_t Ψ_ρ^{(N)} 的 Harish-Chandra 像的幂和展开，系数是 t 的多项式；整数 k 即 Ψ_k"""
    rho = as_partition(source)
    element = psi(rho[0], rank) if len(rho) == 1 else psi_product(rho, rank)
    evolved = apply_pt(element, TIME)
    return powersum_decompose(harish_chandra(evolved, check_central=False))


def _interpolate_in_rank(samples: List[Tuple[int, Dict[Partition, MultiPoly]]],
                         depth: int, label: str) -> Dict[Partition, MultiPoly]:
    """前 depth 个秩做插值，其余秩作为见证点"""
    keys = set()
    for _, values in samples:
        keys.update(values)

    fitted, witnesses = samples[:depth], samples[depth:]
    result = {}
    for rho in keys:
        points = [(Fraction(n), values.get(rho, MultiPoly.zero())) for n, values in fitted]
        poly = lagrange_interpolate(points, 'N')
        for n, values in witnesses:
            expected = values.get(rho, MultiPoly.zero())
            if poly.substitute({'N': n}) != expected:
                raise InterpolationError(
                    f"{label} 中 ρ={rho} 的系数在 N={n} 处与插值多项式不符，需要更大的深度"
                )
        if poly:
            result[rho] = poly
    return result


def scale_time_rank(poly: MultiPoly) -> MultiPoly:
    """代入 t = τL、N = ηL"""
    return poly.substitute({'t': TAU * SCALE, 'N': ETA * SCALE})


def asymptotic_coeffs(source: Union[int, Partition], depth: Optional[int] = None,
                      witnesses: int = 1) -> Dict[Partition, MultiPoly]:
    """
    极限系数 c_{ρ0,ρ}(τ, η)，ρ 取遍 wt(ρ) ≤ wt(ρ0) 的划分

    Args:
        source: 整数 k 表示 Ψ_k；划分 ρ0 表示乘积 Ψ_{ρ0}，例如 (1, 1) 即 Ψ_1^2
        depth: 插值所用的秩个数，默认 wt(ρ0)+1
        witnesses: 插值之外再算的见证秩个数

    Returns:
        dict: 划分 ρ -> τ, η 的多项式（只含非零项）

    Raises:
        InterpolationError: 见证秩不符，或出现高于 L^{wt(ρ0)-wt(ρ)} 的阶
    """
    rho0 = as_partition(source)
    if witnesses < 0:
        raise ValueError(f"见证秩个数不能为负: {witnesses}")
    top = weight(rho0)
    depth = depth or top + 1
    label = f"P_t Ψ_{rho0}"
    # 秩从 |ρ0|+1 起保证幂和展开唯一
    first = sum(rho0) + 1
    samples = []
    for rank in range(first, first + depth + witnesses):
        logger.info(f"计算 P_t Ψ_{rho0}^({rank}) 的幂和展开")
        samples.append((rank, pt_expansion(rho0, rank)))

    fitted = _interpolate_in_rank(samples, depth, label)

    result = {}
    for rho, poly in fitted.items():
        scaled = scale_time_rank(poly)
        order = top - weight(rho)
        if scaled.degree_in('L') > max(order, 0) or (order < 0 and scaled):
            raise InterpolationError(
                f"{label} 中 ρ={rho} 的系数出现 L^{scaled.degree_in('L')}，超过预期阶 L^{order}"
            )
        if order < 0:
            continue
        coeff = scaled.coefficient('L', order)
        if coeff:
            result[rho] = coeff
    return result


def interpolate_state(rho: Partition, depth: int, witnesses: int = 1) -> MultiPoly:
    """⟨Ψ_ρ^{(N)}⟩_t 作为 (t, N) 的多项式，秩从 1 起"""
    samples = []
    for rank in range(1, depth + witnesses + 1):
        samples.append((rank, {rho: state(psi_product(rho, rank), TIME)}))
    fitted = _interpolate_in_rank(samples, depth, f"⟨Ψ_{rho}⟩")
    return fitted.get(rho, MultiPoly.zero())


def mean_asymptotics(rho: Partition, depth: Optional[int] = None,
                     witnesses: int = 1) -> Tuple[int, MultiPoly]:
    """
    ⟨Ψ_ρ^{(N)}⟩_t 在 t = τL、N = ηL 下的主阶

    Args:
        rho: 划分
        depth: 插值所用的秩个数，默认 wt(ρ)+1
        witnesses: 见证秩个数

    Returns:
        tuple: (L 的最高幂次, 主阶系数)
    """
    rho = tuple(rho)
    if not rho or any(part < 1 for part in rho):
        raise ValueError(f"需要非空的正整数划分: {rho}")
    poly = interpolate_state(rho, depth or weight(rho) + 1, witnesses)
    return leading_order_in(scale_time_rank(poly), 'L')


def format_coeffs(coeffs: Dict[Partition, MultiPoly]) -> List[dict]:
    """按权从高到低输出"""
    rows = []
    for rho in sorted(coeffs, key=lambda r: (-weight(r), -sum(r), r)):
        rows.append({'partition': list(rho), 'weight': weight(rho), 'coefficient': str(coeffs[rho])})
    return rows
