#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 基础检查
定义验证检查的基类，每项检查对应一条验收标准
"""

import time
from typing import Any, Dict, Optional

import psutil

from src.storage.json_storage import to_jsonable
from src.utils.logger import ContextLogger

CheckResult = Dict[str, Any]

PASSED = 'passed'
PARTIAL = 'partial'
FAILED = 'failed'


class BaseCheck:
    """检查基类，定义通用运行逻辑"""

    #: 对应的验收标准编号或补充项名称
    criterion = ''
    #: 一句话说明
    description = ''
    #: 验收标准要求的参数下限，套件参数低于下限时结果记为 partial
    required_scope: Dict[str, int] = {}

    def __init__(self, params: Optional[Dict[str, Any]] = None, seed: int = 0):
        """
        初始化检查

        Args:
            params (dict): 套件参数（重复次数、次数上限等）
            seed (int): 随机种子
        """
        self.params = params or {}
        self.seed = seed
        self.name = self._snake_name(self.__class__.__name__.replace('Check', ''))
        self.logger = ContextLogger('verify', self.name)

    @staticmethod
    def _snake_name(name: str) -> str:
        out = []
        for ch in name:
            if ch.isupper() and out:
                out.append('_')
            out.append(ch.lower())
        return ''.join(out)

    def execute(self) -> Dict[str, Any]:
        """
        执行检查，子类必须实现此方法

        Returns:
            dict: 至少包含 passed；可选 measured、expected、tolerance、details
        """
        raise NotImplementedError("子类必须实现execute方法")

    def scope(self) -> Dict[str, Dict[str, int]]:
        """实际使用的参数与验收标准要求的下限"""
        return {key: {'used': self.params.get(key, required), 'required': required}
                for key, required in self.required_scope.items()}

    def run(self) -> CheckResult:
        """
        运行检查并记录耗时和内存

        Returns:
            dict: CheckResult，异常被记为失败而不是抛出
        """
        self.logger.info(f"开始检查: {self.description or self.name}")
        process = psutil.Process()
        start = time.perf_counter()
        try:
            outcome = self.execute()
        except Exception as e:
            self.logger.error(f"检查出错: {type(e).__name__}: {e}")
            outcome = {'passed': False, 'details': {'error': str(e), 'type': type(e).__name__}}
        runtime = time.perf_counter() - start

        passed = bool(outcome.get('passed'))
        scope = self.scope()
        reduced = any(entry['used'] < entry['required'] for entry in scope.values())
        result: CheckResult = {
            'name': self.name,
            'criterion': self.criterion,
            'passed': passed,
            'status': PARTIAL if passed and reduced else (PASSED if passed else FAILED),
            'scope': scope,
            'measured': to_jsonable(outcome.get('measured')),
            'expected': to_jsonable(outcome.get('expected')),
            'tolerance': to_jsonable(outcome.get('tolerance')),
            'runtime_s': round(runtime, 3),
            'rss_mb': round(process.memory_info().rss / 2 ** 20, 1),
            'details': to_jsonable(outcome.get('details', {})),
        }
        if result['status'] == PARTIAL:
            self.logger.warning(f"检查在缩减的参数下通过，未达到验收标准的范围: {scope}")
        elif passed:
            self.logger.info(f"检查通过，用时 {runtime:.2f}s")
        else:
            self.logger.warning(f"检查未通过: measured={result['measured']} expected={result['expected']}")
        return result


def mismatch(label: str, measured, expected) -> Dict[str, str]:
    """失败时记录的精确差异"""
    entry = {'case': label, 'measured': str(measured), 'expected': str(expected)}
    try:
        entry['difference'] = str(measured - expected)
    except TypeError:
        pass
    return entry
