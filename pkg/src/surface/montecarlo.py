#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - Monte Carlo 估计
E[∏_j p_j(X^{(n_j)}(t_j))]，副本按编号分块，可用进程池并行，结果按副本顺序拼接
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from src.center.harish import ShiftedSymPoly
from src.surface.engine import run
from src.surface.state import InterlacedArray, Schedule
from src.utils.errors import RankMismatchError

logger = logging.getLogger('surface')

DEFAULT_CHUNK_SIZE = 10000


@dataclass(frozen=True)
class McResult:
    """Monte Carlo 结果；stderr 为样本标准差除以 √replicas"""

    mean: float
    stderr: float
    replicas: int
    seed: int

    def to_dict(self) -> dict:
        return asdict(self)

    def within(self, expected: float, sigmas: float = 4.0) -> bool:
        """期望值是否落在 mean ± sigmas·stderr 内"""
        return abs(self.mean - float(expected)) <= sigmas * self.stderr


def _run_chunk(initial: InterlacedArray, schedule: Schedule, seed: int, start: int,
               count: int, check: bool) -> List[np.ndarray]:
    columns = [np.empty((count, n), dtype=np.int64) for n, _ in schedule.points]
    for offset in range(count):
        snapshots = run(initial, schedule, seed, replica=start + offset, check=check)
        for j, snapshot in enumerate(snapshots):
            columns[j][offset] = snapshot
    return columns


def _chunks(replicas: int, chunk_size: int) -> List[Tuple[int, int]]:
    chunk_size = max(int(chunk_size), 1)
    return [(start, min(chunk_size, replicas - start)) for start in range(0, replicas, chunk_size)]


def sample_snapshots(initial: InterlacedArray, schedule: Schedule, replicas: int, seed: int,
                     workers: Optional[int] = None, chunk_size: int = DEFAULT_CHUNK_SIZE,
                     progress: bool = False, check_interlacing: bool = False) -> List[np.ndarray]:
    """
    模拟全部副本

    Args:
        initial: 初始构型
        schedule: 观测时间表
        replicas: 副本数
        seed: 种子
        workers: 进程数，None 或 1 时在当前进程中运行
        chunk_size: 每块副本数
        progress: 是否显示进度条
        check_interlacing: 每个事件后检查交错条件

    Returns:
        list: 每个观测点一个 (replicas, n_j) 整数数组，行按副本编号排列
    """
    if replicas < 1:
        raise ValueError(f"副本数必须 ≥ 1: {replicas}")
    schedule.validate_for(initial.depth)
    chunks = _chunks(replicas, chunk_size)
    logger.info(f"模拟 {replicas} 个副本（{len(chunks)} 块），时间表 {schedule}")

    results = []
    progress_bar = tqdm(total=replicas, desc="模拟进度", disable=not progress)
    if workers and workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_run_chunk, initial, schedule, seed, start, count,
                                       check_interlacing)
                       for start, count in chunks]
            # 按提交顺序收集，保证与单进程结果逐位相同
            for future, (_, count) in zip(futures, chunks):
                results.append(future.result())
                progress_bar.update(count)
    else:
        for start, count in chunks:
            results.append(_run_chunk(initial, schedule, seed, start, count, check_interlacing))
            progress_bar.update(count)
    progress_bar.close()

    return [np.concatenate([chunk[j] for chunk in results]) for j in range(len(schedule))]


def estimate(snapshots: Sequence[np.ndarray], observables: Sequence[ShiftedSymPoly],
             seed: int) -> McResult:
    """由快照计算观测量乘积的均值和标准误差"""
    if len(observables) != len(snapshots):
        raise RankMismatchError(f"观测量个数 {len(observables)} 与观测点个数 {len(snapshots)} 不一致")
    values = None
    for observable, snapshot in zip(observables, snapshots):
        if observable.rank != snapshot.shape[1]:
            raise RankMismatchError(f"观测量的秩 {observable.rank} 与观测层 {snapshot.shape[1]} 不一致")
        current = observable.evaluate_array(snapshot)
        values = current if values is None else values * current
    replicas = len(values)
    mean = float(np.mean(values))
    stderr = float(np.std(values, ddof=1) / math.sqrt(replicas)) if replicas > 1 else 0.0
    return McResult(mean=mean, stderr=stderr, replicas=replicas, seed=int(seed))


def mc_expectation(initial: InterlacedArray, schedule: Schedule,
                   observables: Sequence[ShiftedSymPoly], replicas: int, seed: int,
                   **options) -> McResult:
    """
    Monte Carlo 估计 E[∏_j p_j(X^{(n_j)}(t_j))]

    Args:
        initial: 初始构型
        schedule: 观测时间表
        observables: 每个观测点一个对称多项式，秩等于该点的层
        replicas: 副本数
        seed: 种子
        **options: 传给 sample_snapshots 的 workers/chunk_size/progress/check_interlacing

    Returns:
        McResult: 均值与标准误差
    """
    if len(observables) != len(schedule):
        raise RankMismatchError(f"观测量个数 {len(observables)} 与观测点个数 {len(schedule)} 不一致")
    for observable, (n, _) in zip(observables, schedule.points):
        if observable.rank != n:
            raise RankMismatchError(f"观测量的秩 {observable.rank} 与观测层 {n} 不一致")
    snapshots = sample_snapshots(initial, schedule, replicas, seed, **options)
    result = estimate(snapshots, observables, seed)
    logger.info(f"均值 {result.mean:.6f} ± {result.stderr:.6f}（{replicas} 个副本）")
    return result


def snapshots_frame(snapshots: Sequence[np.ndarray], schedule: Schedule,
                    limit: Optional[int] = None) -> pd.DataFrame:
    """前 limit 个副本的快照，长表格式：replica, point, level, time, index, position"""
    records = []
    for j, ((level, time), snapshot) in enumerate(zip(schedule.points, snapshots)):
        rows = snapshot if limit is None else snapshot[:limit]
        for replica, positions in enumerate(rows):
            for index, position in enumerate(positions, start=1):
                records.append({
                    'replica': replica,
                    'point': j + 1,
                    'level': level,
                    'time': time,
                    'index': index,
                    'position': int(position),
                })
    return pd.DataFrame.from_records(
        records, columns=['replica', 'point', 'level', 'time', 'index', 'position'])
