#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 协方差的留数计算
|z| > |w| 上的二重围道积分 ∮∮ F(z) G(w) (z-w)^{-2} 展开为 Σ_{r≥1} r·F[z^r]·G[w^{-r}]
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from src.exactalg.laurent import LaurentPoly
from src.exactalg.poly import MultiPoly
from src.exactalg.rational import to_fraction
from src.utils.errors import BranchOrderError, ParseError

logger = logging.getLogger('covariance')

Value = Union[Fraction, MultiPoly]

SPACELIKE = 'spacelike'
TIMELIKE = 'timelike'
AUTO = 'auto'
BRANCHES = (AUTO, SPACELIKE, TIMELIKE)


@dataclass(frozen=True)
class PathPoint:
    """观测点 (k, η, τ)：Ψ_k 在 N = ηL、t = τL 处"""

    k: int
    eta: Value
    tau: Value

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"需要 k ≥ 1: k={self.k}")
        eta, tau = _numeric(self.eta), _numeric(self.tau)
        if eta is not None and eta < 0:
            raise ValueError(f"需要 η ≥ 0: η={eta}")
        if tau is not None and tau <= 0:
            raise ValueError(f"需要 τ > 0: τ={tau}")

    @classmethod
    def parse(cls, text: str) -> 'PathPoint':
        """解析 "k,eta,tau"，η 与 τ 写成整数或 p/q"""
        parts = [part.strip() for part in text.split(',')]
        if len(parts) != 3:
            raise ParseError(f"观测点应为 k,eta,tau: '{text}'")
        try:
            k = int(parts[0])
        except ValueError as e:
            raise ParseError(f"k 不是整数: '{parts[0]}'") from e
        return cls(k, to_fraction(parts[1]), to_fraction(parts[2]))

    def __str__(self) -> str:
        return f"(k={self.k}, η={self.eta}, τ={self.tau})"


def _numeric(value) -> Fraction:
    if isinstance(value, MultiPoly):
        return value.to_constant()
    return Fraction(value)


def residue_pair(f: LaurentPoly, g: LaurentPoly) -> MultiPoly:
    """
    Σ_{r≥1} r·F[z^r]·G[w^{-r}]

    Args:
        f: z 的 Laurent 多项式（外层围道）
        g: w 的 Laurent 多项式（内层围道）

    Returns:
        MultiPoly: 精确值
    """
    top = f.max_exponent()
    total = MultiPoly.zero()
    if top is None or top < 1:
        return total
    for r in range(1, top + 1):
        a, b = f.coeff(r), g.coeff(-r)
        if a and b:
            total = total + a * b * r
    return total


def _as_result(value: MultiPoly) -> Value:
    constant = value.to_constant()
    return value if constant is None else constant


def spacelike_integrands(i: PathPoint, j: PathPoint) -> Tuple[LaurentPoly, LaurentPoly]:
    """(η_i z^{-1} + τ_i + τ_i z)^{k_i} 和 (η_j w^{-1} + τ_j + τ_j w)^{k_j}"""
    f = LaurentPoly.from_linear('z', i.eta, i.tau, i.tau) ** i.k
    g = LaurentPoly.from_linear('w', j.eta, j.tau, j.tau) ** j.k
    return f, g


def timelike_integrands(i: PathPoint, j: PathPoint) -> Tuple[LaurentPoly, LaurentPoly]:
    """(η_j (τ_j/τ_i) z^{-1} + τ_j + τ_i z)^{k_j} 和 (η_i w^{-1} + τ_i + τ_i w)^{k_i}"""
    ratio = MultiPoly.coerce(j.tau) / MultiPoly.coerce(i.tau)
    f = LaurentPoly.from_linear('z', MultiPoly.coerce(j.eta) * ratio, j.tau, i.tau) ** j.k
    g = LaurentPoly.from_linear('w', i.eta, i.tau, i.tau) ** i.k
    return f, g


def _check_order(i: PathPoint, j: PathPoint, branch: str) -> None:
    eta_i, eta_j = _numeric(i.eta), _numeric(j.eta)
    tau_i, tau_j = _numeric(i.tau), _numeric(j.tau)
    if tau_i is not None and tau_j is not None and tau_i > tau_j:
        raise BranchOrderError(f"{branch} 分支要求 τ_i ≤ τ_j: {i} {j}")
    if eta_i is None or eta_j is None:
        return
    if branch == SPACELIKE and eta_i < eta_j:
        raise BranchOrderError(f"类空分支要求 η_i ≥ η_j: {i} {j}")
    if branch == TIMELIKE and eta_i >= eta_j:
        raise BranchOrderError(f"类时分支要求 η_i < η_j（边界 η_i = η_j 属于类空分支）: {i} {j}")


def cov_spacelike(i: PathPoint, j: PathPoint) -> Value:
    """
    类空顺序（η_i ≥ η_j, τ_i ≤ τ_j）下的协方差

    Raises:
        BranchOrderError: 顺序条件不满足（只检查数值参数）
    """
    _check_order(i, j, SPACELIKE)
    return _as_result(residue_pair(*spacelike_integrands(i, j)))


def cov_timelike(i: PathPoint, j: PathPoint) -> Value:
    """
    类时顺序（η_i < η_j, τ_i ≤ τ_j）下的协方差

    Raises:
        BranchOrderError: 顺序条件不满足（只检查数值参数）
    """
    _check_order(i, j, TIMELIKE)
    return _as_result(residue_pair(*timelike_integrands(i, j)))


def covariance(i: PathPoint, j: PathPoint, branch: str = AUTO) -> Tuple[str, Value]:
    """
    按分支计算协方差

    Args:
        i: 第一个观测点
        j: 第二个观测点
        branch: auto/spacelike/timelike；auto 时先按 τ 排序，再按 η 选分支

    Returns:
        tuple: (实际使用的分支, 值)
    """
    if branch not in BRANCHES:
        raise ValueError(f"未知分支: {branch}")
    if branch == AUTO:
        tau_i, tau_j = _numeric(i.tau), _numeric(j.tau)
        if tau_i is None or tau_j is None:
            raise BranchOrderError("auto 分支需要数值 τ")
        if tau_i > tau_j:
            i, j = j, i
        eta_i, eta_j = _numeric(i.eta), _numeric(j.eta)
        if eta_i is None or eta_j is None:
            raise BranchOrderError("auto 分支需要数值 η")
        branch = SPACELIKE if eta_i >= eta_j else TIMELIKE
    logger.debug(f"协方差分支 {branch}: {i} {j}")
    if branch == SPACELIKE:
        return branch, cov_spacelike(i, j)
    return branch, cov_timelike(i, j)
