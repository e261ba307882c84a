#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 截断的连续时间马尔可夫链
均匀化：总速率 P = N(N+1)/2，每个事件等概率选一个粒子响铃（被挡住即自环），
事件数服从 Poisson(P·t)。截断到 n_max 个事件，尾部用 Poisson 生存函数给出严格上界
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import poisson

from src.center.harish import ShiftedSymPoly
from src.surface.engine import apply_ring
from src.surface.state import InterlacedArray, Schedule
from src.utils.errors import RankMismatchError, TruncationError

logger = logging.getLogger('oracle')

MAX_DEPTH = 3

State = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class TruncatedCtmc:
    """截断参数；horizon 只用于 ctmc_distribution，期望值按时间表的终点计算"""

    horizon: float = 1.0
    tail_bound: float = 1e-6
    max_events: int = 400


class _Transitions:
    """状态 -> 均匀化一步后的后继列表（缓存）"""

    def __init__(self, depth: int):
        self.depth = depth
        self.particles = [(n, i) for n in range(1, depth + 1) for i in range(1, n + 1)]
        self._cache: Dict[State, List[State]] = {}

    @property
    def rate(self) -> int:
        return len(self.particles)

    def successors(self, state: State) -> List[State]:
        if state not in self._cache:
            result = []
            for n, i in self.particles:
                levels = [list(level) for level in state]
                apply_ring(levels, n, i)
                result.append(tuple(tuple(level) for level in levels))
            self._cache[state] = result
        return self._cache[state]

    def step(self, measure: Dict[State, float]) -> Dict[State, float]:
        share = 1.0 / self.rate
        result: Dict[State, float] = {}
        for state, weight in measure.items():
            part = weight * share
            for target in self.successors(state):
                result[target] = result.get(target, 0.0) + part
        return result


def _check_depth(depth: int) -> None:
    if depth > MAX_DEPTH:
        raise TruncationError(f"CTMC 只支持 N ≤ {MAX_DEPTH}（状态数增长过快）: N={depth}")


def _evolve(chain: _Transitions, measure: Dict[State, float], duration: float,
            n_max: int) -> Dict[State, float]:
    """Σ_{n ≤ n_max} Poisson(n; P·duration)·(跳链 n 步后的测度)"""
    if duration <= 0:
        return dict(measure)
    weights = poisson.pmf(np.arange(n_max + 1), chain.rate * duration)
    result: Dict[State, float] = {}
    current = measure
    for n in range(n_max + 1):
        if n:
            current = chain.step(current)
        for state, value in current.items():
            result[state] = result.get(state, 0.0) + weights[n] * value
    return result


def _growth_bound(observables: Sequence[ShiftedSymPoly], radius: np.ndarray) -> np.ndarray:
    """|∏ p_j| 在 |位置| ≤ radius 时的上界 Σ|c|·radius^deg 之积"""
    bound = np.ones_like(radius, dtype=np.float64)
    for observable in observables:
        total = np.zeros_like(radius, dtype=np.float64)
        for mono, coeff in observable.poly.items():
            degree = sum(e for _, e in mono)
            total += abs(float(coeff)) * radius ** degree
        bound *= total
    return bound


def _choose_events(rate_time: float, tail_bound: float, max_events: int,
                   start_radius: int, observables: Sequence[ShiftedSymPoly]) -> Tuple[int, float]:
    """最小的 n_max 使 Σ_{n>n_max} P(K=n)·G(n) ≤ tail_bound"""
    extra = int(rate_time + 40 * np.sqrt(rate_time + 1) + 200)
    counts = np.arange(0, max_events + extra + 1)
    masses = poisson.pmf(counts, rate_time) * _growth_bound(observables, start_radius + counts.astype(np.float64))
    # tails[n] = Σ_{m > n} masses[m]
    tails = np.concatenate([np.cumsum(masses[::-1])[::-1][1:], [0.0]])
    for n_max in range(0, max_events + 1):
        if tails[n_max] <= tail_bound:
            return n_max, float(tails[n_max])
    raise TruncationError(
        f"在 {max_events} 个事件内无法把截断误差压到 {tail_bound}（剩余 {tails[max_events]:.3g}）"
    )


def ctmc_expectation(cfg: TruncatedCtmc, initial: InterlacedArray, schedule: Schedule,
                     observables: Sequence[ShiftedSymPoly]) -> Tuple[float, float]:
    """
    E[∏_j p_j(X^{(n_j)}(t_j))] 的截断精确值

    Args:
        cfg: 截断参数
        initial: 初始构型（N ≤ 3）
        schedule: 观测时间表
        observables: 每个观测点一个对称多项式

    Returns:
        tuple: (值, 截断误差上界)

    Raises:
        TruncationError: N > 3 或误差界达不到
    """
    depth = initial.depth
    _check_depth(depth)
    schedule.validate_for(depth)
    if len(observables) != len(schedule):
        raise RankMismatchError(f"观测量个数 {len(observables)} 与观测点个数 {len(schedule)} 不一致")
    for observable, (n, _) in zip(observables, schedule.points):
        if observable.rank != n:
            raise RankMismatchError(f"观测量的秩 {observable.rank} 与观测层 {n} 不一致")

    chain = _Transitions(depth)
    radius = max(abs(v) for level in initial.levels for v in level)
    n_max, bound = _choose_events(chain.rate * schedule.horizon, cfg.tail_bound, cfg.max_events,
                                  radius, observables)
    logger.info(f"CTMC 截断到 {n_max} 个事件（位置上界 {radius + n_max}），误差界 {bound:.3g}")

    measure: Dict[State, float] = {initial.levels: 1.0}
    previous = 0.0
    for observable, (level, time) in zip(observables, schedule.points):
        measure = _evolve(chain, measure, time - previous, n_max)
        previous = time
        states = list(measure)
        if not states:
            break
        positions = np.array([state[level - 1] for state in states], dtype=np.int64)
        values = observable.evaluate_array(positions)
        measure = {state: measure[state] * value for state, value in zip(states, values) if value}
    return float(sum(measure.values())), bound


def ctmc_distribution(cfg: TruncatedCtmc, initial: InterlacedArray,
                      horizon: Optional[float] = None) -> Tuple[Dict[State, float], float]:
    """
    时刻 horizon 的截断分布

    Returns:
        tuple: (状态 -> 概率, 丢弃的概率质量上界)
    """
    _check_depth(initial.depth)
    horizon = cfg.horizon if horizon is None else horizon
    chain = _Transitions(initial.depth)
    rate_time = chain.rate * horizon
    n_max = next((n for n in range(cfg.max_events + 1)
                  if poisson.sf(n, rate_time) <= cfg.tail_bound), None)
    if n_max is None:
        raise TruncationError(f"在 {cfg.max_events} 个事件内无法把丢弃质量压到 {cfg.tail_bound}")
    tail = float(poisson.sf(n_max, rate_time))
    logger.info(f"CTMC 分布截断到 {n_max} 个事件，丢弃质量 {tail:.3g}")
    return _evolve(chain, {initial.levels: 1.0}, horizon, n_max), tail
