#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 异常定义
所有领域错误都继承自 NcWalkError，命令行据此返回退出码 1
"""


class NcWalkError(Exception):
    """领域错误基类"""
    pass


class ParseError(NcWalkError):
    """表达式文法解析失败"""
    pass


class PolynomialError(NcWalkError):
    """多项式运算前置条件不满足（负指数、零多项式等）"""
    pass


class RankMismatchError(NcWalkError):
    """两个元素的秩 N 不一致"""
    pass


class DegreeLimitError(NcWalkError):
    """单项式次数超过配置上限（集合划分数按 Bell 数增长）"""
    pass


class NotCentralError(NcWalkError):
    """输入元素不在中心 Z(U(gl_N)) 内"""
    pass


class SymmetryError(NcWalkError):
    """Harish-Chandra 像不对称，属于内部一致性错误"""
    pass


class DecompositionError(NcWalkError):
    """基展开失败（次数超过秩，或元素不在张成空间内）"""
    pass


class InterpolationError(NcWalkError):
    """插值次数界被见证点否定，需要加大采样深度"""
    pass


class InterlacingError(NcWalkError):
    """粒子构型违反交错条件"""
    pass


class BranchOrderError(NcWalkError):
    """协方差公式的分支顺序条件不满足"""
    pass


class SingularSystemError(NcWalkError):
    """线性方程组奇异"""
    pass


class TruncationError(NcWalkError):
    """截断误差界无法达到"""
    pass


class ScheduleError(NcWalkError):
    """时间表非法（时间递减或为负）"""
    pass
