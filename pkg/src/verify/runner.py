#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 验证套件运行器
按套件参数实例化检查，顺序或并发运行，汇总成报告
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional

from tqdm import tqdm

from src.ugln.pbw import clear_caches
from src.utils.config import ConfigManager
from src.verify.base import PARTIAL, BaseCheck, CheckResult
from src.verify.checks import ALL_CHECKS

logger = logging.getLogger('verify')

SUITES = ('quick', 'full')


def suite_params(config: ConfigManager, suite: str) -> dict:
    """套件参数：verify.suites.<suite> 加上模拟、CTMC 和渐近插值的公共设置"""
    if suite not in SUITES:
        raise ValueError(f"未知的验证套件: {suite}，可选: {', '.join(SUITES)}")
    params = dict(config.get(f'verify.suites.{suite}', {}))
    params.setdefault('workers', config.get('simulation.workers', 1))
    params.setdefault('chunk_size', config.get('simulation.chunk_size', 20000))
    params.setdefault('tail_bound', config.get('ctmc.tail_bound', 0.005))
    params.setdefault('max_events', config.get('ctmc.max_events', 200))
    params.setdefault('witness_ranks', config.get('asymptotics.witness_ranks', 1))
    return params


def build_checks(suite: str, config: Optional[ConfigManager] = None,
                 names: Optional[Iterable[str]] = None, seed: Optional[int] = None) -> List[BaseCheck]:
    """
    实例化检查

    Args:
        suite: quick 或 full
        config: 配置管理器
        names: 只保留这些检查（按 name 或 criterion 匹配）
        seed: 覆盖配置中的种子

    Raises:
        ValueError: 套件未知或 names 中有不存在的检查
    """
    config = config or ConfigManager()
    params = suite_params(config, suite)
    seed = config.seed if seed is None else seed
    checks = [cls(params, seed) for cls in ALL_CHECKS]
    if names:
        wanted = set(names)
        checks = [c for c in checks if c.name in wanted or c.criterion in wanted]
        known = {c.name for c in checks} | {c.criterion for c in checks}
        unknown = wanted - known
        if unknown:
            raise ValueError(f"未知的检查: {', '.join(sorted(unknown))}")
    return checks


def run_checks(suite: str = 'quick', threads: int = 1, config: Optional[ConfigManager] = None,
               names: Optional[Iterable[str]] = None, seed: Optional[int] = None,
               progress: bool = False) -> dict:
    """
    运行验证套件

    Args:
        suite: quick 或 full
        threads: 并发线程数，1 表示顺序运行
        config: 配置管理器
        names: 只运行指定检查
        seed: 覆盖默认种子
        progress: 显示进度条

    Returns:
        dict: 报告，checks 按检查定义顺序排列；partial 列出参数低于验收标准要求的检查
    """
    checks = build_checks(suite, config, names, seed)
    logger.info(f"运行 {suite} 套件的 {len(checks)} 项检查，线程数 {threads}")
    start = time.perf_counter()

    results: List[CheckResult] = []
    with tqdm(total=len(checks), desc="验证进度", disable=not progress) as bar:
        if threads > 1 and len(checks) > 1:
            with ThreadPoolExecutor(max_workers=min(threads, len(checks))) as executor:
                futures = [executor.submit(check.run) for check in checks]
                for future in futures:
                    results.append(future.result())
                    bar.update(1)
        else:
            for check in checks:
                results.append(check.run())
                bar.update(1)

    clear_caches()
    failed = [r['name'] for r in results if not r['passed']]
    partial = [r['name'] for r in results if r['status'] == PARTIAL]
    report = {
        'suite': suite,
        'seed': checks[0].seed if checks else seed,
        'passed': not failed,
        'total': len(results),
        'failed': failed,
        'partial': partial,
        'runtime_s': round(time.perf_counter() - start, 3),
        'checks': results,
    }
    if failed:
        logger.warning(f"{len(failed)} 项检查未通过: {', '.join(failed)}")
    if partial:
        logger.warning(f"{len(partial)} 项检查的参数低于验收标准要求，只算部分通过: {', '.join(partial)}")
    if not failed and not partial:
        logger.info(f"全部 {len(results)} 项检查通过")
    return report
