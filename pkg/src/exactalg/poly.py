#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 多元多项式
有理系数的交换多项式，项按次数-字典序（graded lex）规范排列，因此相等性就是结构相等
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from src.exactalg.rational import format_fraction
from src.utils.errors import PolynomialError

# 单项式：按符号名排序的 (符号, 指数) 元组，指数均为正
Monomial = Tuple[Tuple[str, int], ...]

SYMBOL_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')

Scalar = Union[int, Fraction]


@lru_cache(maxsize=1 << 16)
def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for sym, exp in b:
        merged[sym] = merged.get(sym, 0) + exp
    return tuple(sorted(merged.items()))


def _mono_degree(mono: Monomial) -> int:
    return sum(exp for _, exp in mono)


def _mono_key(mono: Monomial):
    # 高次在前；同次按字典序，靠前符号指数大者在前
    return (-_mono_degree(mono), tuple((sym, -exp) for sym, exp in mono))


def _mono_str(mono: Monomial) -> str:
    return '*'.join(sym if exp == 1 else f"{sym}^{exp}" for sym, exp in mono)


class MultiPoly:
    """有理系数多元多项式（不可变）

    terms 是 单项式 -> Fraction 的映射，不保存零系数
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    cleaned[tuple(mono)] = coeff
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: Dict[Monomial, Fraction]) -> 'MultiPoly':
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # ---- 构造 ----

    @classmethod
    def zero(cls) -> 'MultiPoly':
        return cls._from_clean({})

    @classmethod
    def one(cls) -> 'MultiPoly':
        return cls._from_clean({(): Fraction(1)})

    @classmethod
    def const(cls, value: Scalar) -> 'MultiPoly':
        value = Fraction(value)
        return cls._from_clean({(): value} if value else {})

    @classmethod
    def symbol(cls, name: str) -> 'MultiPoly':
        if not SYMBOL_RE.match(name):
            raise PolynomialError(f"非法的符号名: {name!r}")
        return cls._from_clean({((name, 1),): Fraction(1)})

    @classmethod
    def coerce(cls, value) -> 'MultiPoly':
        """把整数、Fraction 或 MultiPoly 统一成 MultiPoly"""
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls.const(value)
        raise TypeError(f"无法转换为多项式: {value!r}")

    @classmethod
    def from_accumulated(cls, terms: Dict[Monomial, Fraction]) -> 'MultiPoly':
        """由 accumulate 累加得到的原始字典构造（丢弃零系数）"""
        return cls._from_clean({m: c for m, c in terms.items() if c})

    def accumulate(self, target: Dict[Monomial, Fraction], factor: Scalar = 1) -> None:
        """把 factor * self 原地累加到原始字典 target 中"""
        if factor == 1:
            for mono, coeff in self._terms.items():
                target[mono] = target.get(mono, 0) + coeff
        elif factor:
            for mono, coeff in self._terms.items():
                target[mono] = target.get(mono, 0) + coeff * factor

    # ---- 基本查询 ----

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """按规范顺序遍历 (单项式, 系数)"""
        for mono in sorted(self._terms, key=_mono_key):
            yield mono, self._terms[mono]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def to_constant(self) -> Optional[Fraction]:
        """常数多项式返回其值，否则返回 None"""
        if self.is_constant():
            return self.constant_term()
        return None

    def degree(self) -> int:
        """总次数，零多项式记为 -1"""
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    def degree_in(self, sym: str) -> int:
        if not self._terms:
            return -1
        return max(dict(m).get(sym, 0) for m in self._terms)

    def symbols(self) -> Tuple[str, ...]:
        names = set()
        for mono in self._terms:
            names.update(sym for sym, _ in mono)
        return tuple(sorted(names))

    # ---- 环运算 ----

    def __add__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        result = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = result.get(mono, 0) + coeff
            if value:
                result[mono] = value
            else:
                result.pop(mono, None)
        return MultiPoly._from_clean(result)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return MultiPoly.zero()
        if other.is_constant():
            return self.scale(other.constant_term())
        if self.is_constant():
            return other.scale(self.constant_term())
        result: Dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = _mono_mul(ma, mb)
                result[mono] = result.get(mono, 0) + ca * cb
        return MultiPoly.from_accumulated(result)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> 'MultiPoly':
        factor = Fraction(factor)
        if not factor:
            return MultiPoly.zero()
        if factor == 1:
            return self
        return MultiPoly._from_clean({m: c * factor for m, c in self._terms.items()})

    def __truediv__(self, other):
        """只支持除以非零有理数（或常数多项式）"""
        if isinstance(other, MultiPoly):
            value = other.to_constant()
            if value is None:
                raise PolynomialError(f"不支持除以非常数多项式: {other}")
            other = value
        if not isinstance(other, (int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        if other == 0:
            raise PolynomialError("除数为零")
        return self.scale(Fraction(1) / Fraction(other))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        if exponent < 0:
            raise PolynomialError(f"多项式不支持负指数: {exponent}")
        result = MultiPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ---- 相等与哈希 ----

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ---- 代换与系数提取 ----

    def substitute(self, bindings: Mapping[str, Union['MultiPoly', Scalar]]) -> 'MultiPoly':
        """
        把符号代换为多项式

        Args:
            bindings: 符号名 -> 多项式或有理数，未出现的符号保持不变

        Returns:
            MultiPoly: 代换后的多项式
        """
        if not bindings or not self._terms:
            return self
        targets = {name: MultiPoly.coerce(value) for name, value in bindings.items()}
        powers: Dict[Tuple[str, int], MultiPoly] = {}

        def power(name, exp):
            key = (name, exp)
            if key not in powers:
                powers[key] = targets[name] ** exp
            return powers[key]

        result: Dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            kept = tuple((s, e) for s, e in mono if s not in targets)
            factor = MultiPoly._from_clean({kept: coeff})
            for sym, exp in mono:
                if sym in targets:
                    factor = factor * power(sym, exp)
                    if not factor:
                        break
            factor.accumulate(result)
        return MultiPoly.from_accumulated(result)

    def rename(self, mapping: Mapping[str, str]) -> 'MultiPoly':
        """符号改名（置换变量时使用，比 substitute 快）"""
        result: Dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            merged: Dict[str, int] = {}
            for sym, exp in mono:
                name = mapping.get(sym, sym)
                merged[name] = merged.get(name, 0) + exp
            key = tuple(sorted(merged.items()))
            result[key] = result.get(key, 0) + coeff
        return MultiPoly.from_accumulated(result)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """在有理数点求值，所有符号都必须赋值"""
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for sym, exp in mono:
                if sym not in values:
                    raise PolynomialError(f"符号 {sym} 没有赋值")
                term *= Fraction(values[sym]) ** exp
            total += term
        return total

    def coefficient(self, sym: str, power: int) -> 'MultiPoly':
        """sym^power 的系数（视其它符号为系数环）"""
        result = {}
        for mono, coeff in self._terms.items():
            exps = dict(mono)
            if exps.get(sym, 0) == power:
                exps.pop(sym, None)
                result[tuple(sorted(exps.items()))] = coeff
        return MultiPoly._from_clean(result)

    def as_univariate(self, sym: str) -> Dict[int, 'MultiPoly']:
        """按 sym 的幂次拆开：{幂次: 系数多项式}"""
        buckets: Dict[int, Dict[Monomial, Fraction]] = {}
        for mono, coeff in self._terms.items():
            exps = dict(mono)
            power = exps.pop(sym, 0)
            buckets.setdefault(power, {})[tuple(sorted(exps.items()))] = coeff
        return {p: MultiPoly._from_clean(t) for p, t in buckets.items()}

    def split(self, main_symbols: Iterable[str]) -> Dict[Monomial, 'MultiPoly']:
        """按主变量单项式拆开，返回 {主变量单项式: 其余符号的系数多项式}"""
        main = set(main_symbols)
        buckets: Dict[Monomial, Dict[Monomial, Fraction]] = {}
        for mono, coeff in self._terms.items():
            head = tuple((s, e) for s, e in mono if s in main)
            rest = tuple((s, e) for s, e in mono if s not in main)
            buckets.setdefault(head, {})[rest] = coeff
        return {h: MultiPoly._from_clean(t) for h, t in buckets.items()}

    # ---- 文本 ----

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for mono, coeff in self.items():
            if not mono:
                text = format_fraction(coeff)
            elif coeff == 1:
                text = _mono_str(mono)
            elif coeff == -1:
                text = '-' + _mono_str(mono)
            else:
                text = f"{format_fraction(coeff)}*{_mono_str(mono)}"
            if not parts:
                parts.append(text)
            elif text.startswith('-'):
                parts.append(' - ' + text[1:])
            else:
                parts.append(' + ' + text)
        return ''.join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly('{self}')"


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return MultiPoly.coerce(a) + MultiPoly.coerce(b)


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return MultiPoly.coerce(a) * MultiPoly.coerce(b)


def poly_pow(a: MultiPoly, exponent: int) -> MultiPoly:
    return MultiPoly.coerce(a) ** exponent


def substitute(p: MultiPoly, bindings: Mapping[str, Union[MultiPoly, Scalar]]) -> MultiPoly:
    return MultiPoly.coerce(p).substitute(bindings)


def leading_order_in(p: MultiPoly, sym: str) -> Tuple[int, MultiPoly]:
    """
    sym 的最高幂次及其系数

    Args:
        p: 非零多项式
        sym: 符号名

    Returns:
        tuple: (最高幂次, 系数多项式)

    Raises:
        PolynomialError: p 为零多项式
    """
    p = MultiPoly.coerce(p)
    if p.is_zero():
        raise PolynomialError("零多项式没有首项")
    degree = p.degree_in(sym)
    return degree, p.coefficient(sym, degree)
