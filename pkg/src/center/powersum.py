#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 幂和基展开
对称多项式 p(x_1..x_N) = Σ_ρ c_ρ ∏ p_{ρ_i}(x)，要求 x 次数 ≤ N
"""

import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from src.center.harish import ShiftedSymPoly, x_symbol
from src.exactalg.linalg import solve_linear
from src.exactalg.poly import MultiPoly
from src.utils.errors import DecompositionError, SingularSystemError

logger = logging.getLogger('center')

Partition = Tuple[int, ...]


def integer_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """n 的全部划分（非增），可限制最大分部"""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def weight(rho: Partition) -> int:
    """权 wt(ρ) = |ρ| + len(ρ)"""
    return sum(rho) + len(rho)


@lru_cache(maxsize=None)
def _assignment_count(rho: Partition, lam: Partition) -> int:
    """∏ p_{ρ_i} 中单项式 x^λ 的系数：把 ρ 的各分部分给变量使指数恰为 λ 的方法数"""
    if not rho:
        return 1 if not any(lam) else 0
    first, rest = rho[0], rho[1:]
    total = 0
    for v, exp in enumerate(lam):
        if exp >= first:
            remaining = lam[:v] + (exp - first,) + lam[v + 1:]
            total += _assignment_count(rest, remaining)
    return total


def _monomial_of(lam: Partition) -> tuple:
    return tuple(sorted((x_symbol(m + 1), e) for m, e in enumerate(lam) if e))


def powersum_decompose(p: ShiftedSymPoly) -> Dict[Partition, MultiPoly]:
    """
    幂和基展开

    Args:
        p: 对称多项式

    Returns:
        dict: 划分 ρ -> 系数（空划分对应常数项），只含非零系数

    Raises:
        DecompositionError: x 次数超过秩，或多项式不对称
    """
    degree = p.x_degree()
    if degree > p.rank:
        raise DecompositionError(
            f"次数 {degree} 超过秩 N={p.rank}，p_1..p_N 之外的幂和不再独立"
        )
    if not p.is_symmetric():
        raise DecompositionError(f"多项式不对称，无法展开为幂和: {p.poly}")

    parts = p.poly.split(p.variables())
    expansion: Dict[Partition, MultiPoly] = {}
    for d in range(0, degree + 1):
        shapes: List[Partition] = list(integer_partitions(d))
        rhs = [parts.get(_monomial_of(lam), MultiPoly.zero()) for lam in shapes]
        if all(v.is_zero() for v in rhs):
            continue
        matrix = [[_assignment_count(rho, lam) for rho in shapes] for lam in shapes]
        try:
            coeffs = solve_linear(matrix, rhs)
        except SingularSystemError as e:
            raise DecompositionError(f"幂和展开失败（次数 {d}）: {e}") from e
        for rho, c in zip(shapes, coeffs):
            if c:
                expansion[rho] = c
    return expansion


@lru_cache(maxsize=None)
def _power_sum(k: int, rank: int) -> MultiPoly:
    return ShiftedSymPoly.power_sum(k, rank).poly


def reconstruct(expansion: Dict[Partition, MultiPoly], rank: int) -> ShiftedSymPoly:
    """由幂和系数还原对称多项式"""
    total = MultiPoly.zero()
    for rho, coeff in expansion.items():
        term = MultiPoly.coerce(coeff)
        for part in rho:
            term = term * _power_sum(part, rank)
        total = total + term
    return ShiftedSymPoly(rank, total)


def format_expansion(expansion: Dict[Partition, MultiPoly]) -> List[dict]:
    """展开式的可序列化形式，按次数从高到低"""
    rows = []
    for rho in sorted(expansion, key=lambda r: (-sum(r), -len(r), r)):
        rows.append({'partition': list(rho), 'coefficient': str(expansion[rho])})
    return rows
