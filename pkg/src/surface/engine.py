#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 推/挡粒子动力学的事件驱动模拟
每个粒子带独立的速率 1 指数钟；按最早响铃时间处理事件，响铃后重新抽取该粒子的下一次响铃
"""

import heapq
import logging
from typing import List, Tuple

import numpy as np

from src.surface.state import InterlacedArray, Schedule, check_interlacing
from src.utils.errors import InterlacingError

logger = logging.getLogger('surface')


def replica_rng(seed: int, replica: int) -> np.random.Generator:
    """按 (种子, 副本编号) 取计数器型随机流，副本之间互不相关且可并行复现"""
    key = (int(seed) % (1 << 64)) * (1 << 64) + int(replica)
    return np.random.Generator(np.random.Philox(key=key))


class ExponentialClock:
    """成批抽取的速率 1 指数随机数"""

    def __init__(self, rng: np.random.Generator, batch: int = 256):
        self.rng = rng
        self.batch = max(int(batch), 16)
        self._buffer = rng.standard_exponential(self.batch)
        self._index = 0

    def draw(self) -> float:
        if self._index == self.batch:
            self._buffer = self.rng.standard_exponential(self.batch)
            self._index = 0
        value = self._buffer[self._index]
        self._index += 1
        return float(value)


def apply_ring(levels: List[List[int]], n: int, i: int) -> bool:
    """
    处理 X^(n)_i 的一次响铃（原地修改）

    Args:
        levels: levels[n-1][i-1] = X^(n)_i
        n: 层
        i: 粒子编号

    Returns:
        bool: 粒子是否移动（被下一层挡住时返回 False）
    """
    position = levels[n - 1][i - 1]
    if i >= 2 and position + 1 == levels[n - 2][i - 2]:
        return False
    levels[n - 1][i - 1] = position + 1
    for m in range(n + 1, len(levels) + 1):
        below = levels[m - 2][i - 1]
        if levels[m - 1][i - 1] < below:
            levels[m - 1][i - 1] = below
        else:
            break
    return True


def run(initial: InterlacedArray, schedule: Schedule, seed: int, replica: int = 0,
        check: bool = False) -> List[Tuple[int, ...]]:
    """
    模拟一个副本

    Args:
        initial: 初始构型
        schedule: 观测时间表
        seed: 种子
        replica: 副本编号
        check: 每个事件后检查交错条件

    Returns:
        list: 每个观测点对应层的位置快照

    Raises:
        InterlacingError: 事件后交错条件失败（动力学实现错误）
    """
    depth = initial.depth
    schedule.validate_for(depth)
    levels = initial.to_lists()
    particles = depth * (depth + 1) // 2
    clock = ExponentialClock(replica_rng(seed, replica),
                             batch=int(particles * (schedule.horizon + 1)) + particles)

    queue = []
    for n in range(1, depth + 1):
        for i in range(1, n + 1):
            queue.append((clock.draw(), n, i))
    heapq.heapify(queue)

    snapshots = []
    for level, time in schedule.points:
        while queue[0][0] <= time:
            now, n, i = queue[0]
            apply_ring(levels, n, i)
            heapq.heapreplace(queue, (now + clock.draw(), n, i))
            if check:
                try:
                    check_interlacing(levels)
                except InterlacingError as e:
                    logger.error(f"第 {replica} 个副本在 t={now:.6f} 的事件 ({n},{i}) 后失去交错: {e}")
                    raise
        snapshots.append(tuple(levels[level - 1]))
    return snapshots
