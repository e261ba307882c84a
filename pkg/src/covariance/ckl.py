#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 系数 c_{kl} 与类时恒等式
c_{kl}(τ_2, τ_1, η) 由
Σ_l c_{kl}·(η w^{-1} + τ_1 + τ_1 w)^l [w^r] = (η w^{-1} + τ_2 + τ_2 w)^k [w^r]，r = -1..-k
确定；第 l 列的最低次项是 η^l w^{-l}，方程组是三角的
"""

import logging
from typing import Dict, List, Optional

from src.center.asymptotics import asymptotic_coeffs
from src.exactalg.laurent import LaurentPoly
from src.exactalg.poly import MultiPoly
from src.utils.errors import SingularSystemError

logger = logging.getLogger('covariance')


def _powers(var: str, lower, middle, upper, k: int) -> List[LaurentPoly]:
    base = LaurentPoly.from_linear(var, lower, middle, upper)
    powers = [LaurentPoly(var, {0: 1})]
    for _ in range(k):
        powers.append(powers[-1] * base)
    return powers


def solve_ckl(k: int, tau1, tau2, eta) -> List[MultiPoly]:
    """
    解三角方程组得到 c_{k1}, …, c_{kk}

    Args:
        k: 次数
        tau1: 较早的时间（τ 可以是符号）
        tau2: 较晚的时间
        eta: 层参数，必须是非零有理数

    Returns:
        list: [c_{k1}, …, c_{kk}]

    Raises:
        SingularSystemError: η = 0 时对角元为零
    """
    if k < 1:
        raise ValueError(f"需要 k ≥ 1: k={k}")
    eta_value = MultiPoly.coerce(eta).to_constant()
    if eta_value is None:
        raise SingularSystemError("η 必须是数值，对角元 η^l 才能求逆")
    if eta_value == 0:
        raise SingularSystemError("η = 0 时对角元 η^l 为零，方程组奇异")

    columns = _powers('w', eta, tau1, tau1, k)
    target = LaurentPoly.from_linear('w', eta, tau2, tau2) ** k

    coeffs: Dict[int, MultiPoly] = {}
    for m in range(k, 0, -1):
        residual = target.coeff(-m)
        for l in range(m + 1, k + 1):
            residual = residual - coeffs[l] * columns[l].coeff(-m)
        coeffs[m] = residual / (eta_value ** m)
    return [coeffs[l] for l in range(1, k + 1)]


def verify_timelike_identity(k: int, tau1, tau2, eta) -> bool:
    """
    检查 Σ_l c_{kl}·(η z^{-1} + τ_1 + τ_1 z)^l [z^r] = (η (τ_2/τ_1) z^{-1} + τ_2 + τ_1 z)^k [z^r]，r = 1..k

    c_{kl} 取自 solve_ckl(k, τ_1, τ_2, η)；τ_1 必须是非零数值
    """
    coeffs = solve_ckl(k, tau1, tau2, eta)
    columns = _powers('z', eta, tau1, tau1, k)
    ratio = MultiPoly.coerce(tau2) / MultiPoly.coerce(tau1)
    target = LaurentPoly.from_linear('z', MultiPoly.coerce(eta) * ratio, tau2, tau1) ** k
    for r in range(1, k + 1):
        lhs = MultiPoly.zero()
        for l, c in enumerate(coeffs, start=1):
            lhs = lhs + c * columns[l].coeff(r)
        if lhs != target.coeff(r):
            logger.warning(f"类时恒等式在 k={k}, r={r} 处不成立: {lhs} ≠ {target.coeff(r)}")
            return False
    return True


def product_replacement(tau, eta) -> MultiPoly:
    """启发式替换 Ψ_1^2 → (2τη - η²)·Ψ_1 中的因子"""
    tau, eta = MultiPoly.coerce(tau), MultiPoly.coerce(eta)
    return 2 * tau * eta - eta * eta


def ckl_from_asymptotics(k: int, tau1, tau2, eta,
                         coeffs: Optional[Dict[tuple, MultiPoly]] = None) -> List[MultiPoly]:
    """
    由大秩渐近系数 c'_{k,ρ}(τ, η)（τ = τ_2 - τ_1）拼出 c_{k1}, …, c_{kk}

    单项 Ψ_l 的系数直接取 c'_{k,(l)}；Ψ_1^2 按 product_replacement(τ_1, η) 折合到 Ψ_1

    Args:
        coeffs: asymptotic_coeffs(k) 的结果，缺省时现算
    """
    if coeffs is None:
        coeffs = asymptotic_coeffs(k)
    tau1, tau2, eta = (MultiPoly.coerce(v) for v in (tau1, tau2, eta))
    bindings = {'tau': tau2 - tau1, 'eta': eta}
    result = []
    for l in range(1, k + 1):
        value = MultiPoly.coerce(coeffs.get((l,), MultiPoly.zero())).substitute(bindings)
        if l == 1 and (1, 1) in coeffs:
            value = value + coeffs[(1, 1)].substitute(bindings) * product_replacement(tau1, eta)
        result.append(value)
    return result
