#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 交错粒子构型与观测时间表
第 n 层有 n 个粒子 X^(n)_1 > … > X^(n)_n，满足 X^(n+1)_{i+1} < X^(n)_i ≤ X^(n+1)_i
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.utils.errors import InterlacingError, ParseError, ScheduleError

Levels = Tuple[Tuple[int, ...], ...]

POINT_RE = re.compile(r'^\(\s*(\d+)\s*,\s*([^()]+?)\s*\)$')


def check_interlacing(levels: Sequence[Sequence[int]]) -> None:
    """
    检查各层粒子数与交错条件

    Raises:
        InterlacingError: 指出第一处违反的位置
    """
    for n, level in enumerate(levels, start=1):
        if len(level) != n:
            raise InterlacingError(f"第 {n} 层应有 {n} 个粒子，实际 {len(level)} 个")
        for i in range(1, n):
            if not level[i] < level[i - 1]:
                raise InterlacingError(f"第 {n} 层不严格递减: {tuple(level)}")
    for n in range(1, len(levels)):
        lower, upper = levels[n - 1], levels[n]
        for i in range(n):
            if not upper[i + 1] < lower[i] <= upper[i]:
                raise InterlacingError(
                    f"交错条件失败: X^({n + 1})_{i + 2}={upper[i + 1]}, "
                    f"X^({n})_{i + 1}={lower[i]}, X^({n + 1})_{i + 1}={upper[i]}"
                )


@dataclass(frozen=True)
class InterlacedArray:
    """N 层交错粒子构型，位置即移位坐标 x_i = λ_i - i + 1"""

    levels: Levels

    def __post_init__(self):
        check_interlacing(self.levels)

    @classmethod
    def from_lists(cls, levels: Sequence[Sequence[int]]) -> 'InterlacedArray':
        return cls(tuple(tuple(int(v) for v in level) for level in levels))

    @classmethod
    def parse(cls, text: str) -> 'InterlacedArray':
        """解析 "0;0,-1;0,-1,-2" 形式（分号分层，逗号分隔位置）"""
        try:
            levels = [[int(v) for v in part.split(',')] for part in text.split(';') if part.strip()]
        except ValueError as e:
            raise ParseError(f"无法解析粒子构型 '{text}': {e}") from e
        return cls.from_lists(levels)

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level(self, n: int) -> Tuple[int, ...]:
        return self.levels[n - 1]

    def to_lists(self) -> List[List[int]]:
        return [list(level) for level in self.levels]

    def __str__(self) -> str:
        return ';'.join(','.join(str(v) for v in level) for level in self.levels)


def densely_packed(depth: int) -> InterlacedArray:
    """密排初始条件 X^(n)_i = -i + 1"""
    if depth < 1:
        raise ValueError(f"需要 N ≥ 1: N={depth}")
    return InterlacedArray(tuple(tuple(-i for i in range(n)) for n in range(1, depth + 1)))


@dataclass(frozen=True)
class Schedule:
    """观测点 (层 n_j, 时间 t_j)，时间弱递增；层的顺序不受限制"""

    points: Tuple[Tuple[int, float], ...]

    def __post_init__(self):
        if not self.points:
            raise ScheduleError("时间表为空")
        previous = 0.0
        for n, time in self.points:
            if n < 1:
                raise ScheduleError(f"层号必须 ≥ 1: {n}")
            if time < previous:
                raise ScheduleError(f"时间必须非负且弱递增: {time} < {previous}")
            previous = time

    @classmethod
    def of(cls, points: Sequence[Tuple[int, float]]) -> 'Schedule':
        return cls(tuple((int(n), float(t)) for n, t in points))

    @classmethod
    def parse(cls, text: str) -> 'Schedule':
        """解析 "(2,1);(1,2)"，时间可以写成小数或 p/q"""
        points = []
        for part in text.split(';'):
            part = part.strip()
            if not part:
                continue
            match = POINT_RE.match(part)
            if not match:
                raise ParseError(f"无法解析观测点 '{part}'，应为 (n,t)")
            try:
                time = float(Fraction(match.group(2)))
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"无法解析时间 '{match.group(2)}'") from e
            points.append((int(match.group(1)), time))
        return cls.of(points)

    def validate_for(self, depth: int) -> None:
        for n, _ in self.points:
            if n > depth:
                raise ScheduleError(f"观测层 {n} 超过总层数 N={depth}")

    @property
    def horizon(self) -> float:
        return self.points[-1][1]

    def __len__(self) -> int:
        return len(self.points)

    def __str__(self) -> str:
        return ';'.join(f"({n},{t:g})" for n, t in self.points)
