#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 有理数工具
所有精确系数都用 fractions.Fraction 表示，这里只负责输入转换和文本格式
"""

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

from src.utils.errors import ParseError

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')


def to_fraction(value: RationalLike) -> Fraction:
    """
    把整数、Fraction 或 "p/q" 字符串转换为 Fraction

    Args:
        value: 输入值，不接受浮点数

    Returns:
        Fraction: 约分后的有理数

    Raises:
        ParseError: 输入不是精确有理数
    """
    if isinstance(value, bool):
        raise ParseError(f"不是有理数: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if not match:
            raise ParseError(f"无法解析有理数: {value!r}（不接受浮点数）")
        numerator = int(match.group(1))
        denominator = int(match.group(2) or 1)
        if denominator == 0:
            raise ParseError(f"分母为零: {value!r}")
        return Fraction(numerator, denominator)
    raise ParseError(f"不是精确有理数: {value!r}")


def format_fraction(value: Fraction) -> str:
    """有理数的规范文本："p/q"，分母为 1 时只写 "p" """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
