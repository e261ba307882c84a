#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - U(gl_N) 元素
生成元 E_ij 组成的词的有限线性组合，系数为 MultiPoly；乘法是自由的词拼接
"""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from src.exactalg.parsing import ExpressionParser
from src.exactalg.poly import Monomial, MultiPoly
from src.utils.errors import PolynomialError, RankMismatchError

# 生成元 (i, j) 和词（生成元元组，空元组为单位元）
Gen = Tuple[int, int]
Word = Tuple[Gen, ...]

Coefficient = Union[MultiPoly, int, Fraction]


def word_str(word: Word) -> str:
    return '*'.join(f"E[{i},{j}]" for i, j in word)


def _word_key(word: Word):
    return (-len(word), word)


class NCElement:
    """U(gl_N) 中的元素（不可变）

    Args:
        rank: 秩 N
        terms: 词 -> 系数
    """

    __slots__ = ('rank', '_terms')

    def __init__(self, rank: int, terms: Optional[Mapping[Word, Coefficient]] = None):
        if rank < 1:
            raise RankMismatchError(f"秩必须为正整数: {rank}")
        self.rank = rank
        cleaned: Dict[Word, MultiPoly] = {}
        for word, coeff in (terms or {}).items():
            word = tuple(tuple(g) for g in word)
            for i, j in word:
                if not (1 <= i <= rank and 1 <= j <= rank):
                    raise RankMismatchError(f"生成元 E[{i},{j}] 超出秩 N={rank}")
            coeff = MultiPoly.coerce(coeff)
            if coeff:
                cleaned[word] = coeff
        self._terms = cleaned

    @classmethod
    def _from_clean(cls, rank: int, terms: Dict[Word, MultiPoly]) -> 'NCElement':
        element = cls.__new__(cls)
        element.rank = rank
        element._terms = terms
        return element

    # ---- 构造 ----

    @classmethod
    def zero(cls, rank: int) -> 'NCElement':
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> 'NCElement':
        return cls(rank, {(): 1})

    @classmethod
    def scalar(cls, rank: int, value: Coefficient) -> 'NCElement':
        return cls(rank, {(): value})

    @classmethod
    def gen(cls, rank: int, i: int, j: int) -> 'NCElement':
        return cls(rank, {((i, j),): 1})

    @classmethod
    def word(cls, rank: int, word: Word, coeff: Coefficient = 1) -> 'NCElement':
        return cls(rank, {tuple(word): coeff})

    # ---- 查询 ----

    def items(self) -> Iterator[Tuple[Word, MultiPoly]]:
        """按规范顺序（长词在前，同长按字典序）遍历"""
        for word in sorted(self._terms, key=_word_key):
            yield word, self._terms[word]

    def words(self):
        return list(self._terms)

    def coefficient(self, word: Word) -> MultiPoly:
        return self._terms.get(tuple(word), MultiPoly.zero())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(len(w) for w in self._terms)

    def to_constant(self) -> Optional[Fraction]:
        """只含单位元且系数为常数时返回该常数"""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) == {()}:
            return self._terms[()].to_constant()
        return None

    def with_rank(self, rank: int) -> 'NCElement':
        """把同一个元素放到秩 rank 的代数里（所有指数必须 ≤ rank）"""
        return NCElement(rank, self._terms)

    # ---- 运算 ----

    def _coerce(self, other) -> Optional['NCElement']:
        if isinstance(other, NCElement):
            if other.rank != self.rank:
                raise RankMismatchError(f"秩不一致: {self.rank} 与 {other.rank}")
            return other
        try:
            return NCElement.scalar(self.rank, MultiPoly.coerce(other))
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for word, coeff in other._terms.items():
            value = result.get(word, MultiPoly.zero()) + coeff
            if value:
                result[word] = value
            else:
                result.pop(word, None)
        return NCElement._from_clean(self.rank, result)

    __radd__ = __add__

    def __neg__(self):
        return NCElement._from_clean(self.rank, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: Coefficient) -> 'NCElement':
        factor = MultiPoly.coerce(factor)
        if factor.is_zero():
            return NCElement.zero(self.rank)
        return NCElement._from_clean(self.rank, {w: c * factor for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (MultiPoly, int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, NCElement):
            return NotImplemented
        return nc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (MultiPoly, int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise PolynomialError(f"元素只支持非负整数幂: {exponent}")
        result = NCElement.one(self.rank)
        for _ in range(exponent):
            result = nc_mul(result, self)
        return result

    def map_coefficients(self, func) -> 'NCElement':
        """对每个系数应用 func（例如代换时间符号）"""
        result = {}
        for word, coeff in self._terms.items():
            value = func(coeff)
            if value:
                result[word] = value
        return NCElement._from_clean(self.rank, result)

    # ---- 相等与文本 ----

    def __eq__(self, other):
        """词表示下的结构相等；代数中的相等请比较 normal_form"""
        if isinstance(other, NCElement):
            return self.rank == other.rank and self._terms == other._terms
        if isinstance(other, (MultiPoly, int, Fraction)) and not isinstance(other, bool):
            return self == NCElement.scalar(self.rank, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for word, coeff in self.items():
            if not word:
                text = str(coeff)
                if len(coeff) > 1:
                    text = f"({text})"
            elif coeff == 1:
                text = word_str(word)
            elif coeff == -1:
                text = '-' + word_str(word)
            elif coeff.is_constant():
                text = f"{coeff}*{word_str(word)}"
            else:
                text = f"({coeff})*{word_str(word)}"
            if not parts:
                parts.append(text)
            elif text.startswith('-'):
                parts.append(' - ' + text[1:])
            else:
                parts.append(' + ' + text)
        return ''.join(parts)

    def __repr__(self) -> str:
        return f"NCElement(N={self.rank}, '{self}')"


class ElementAccumulator:
    """按词累加系数的可变缓冲区，避免逐项构造不可变对象"""

    def __init__(self, rank: int):
        self.rank = rank
        self._terms: Dict[Word, Dict[Monomial, Fraction]] = {}

    def add(self, word: Word, coeff: MultiPoly, factor=1) -> None:
        coeff.accumulate(self._terms.setdefault(word, {}), factor)

    def build(self) -> NCElement:
        result = {}
        for word, raw in self._terms.items():
            poly = MultiPoly.from_accumulated(raw)
            if poly:
                result[word] = poly
        return NCElement._from_clean(self.rank, result)


def nc_mul(a: NCElement, b: NCElement) -> NCElement:
    """
    自由词拼接意义下的乘积（不做正规化）

    Raises:
        RankMismatchError: 两者秩不同
    """
    if a.rank != b.rank:
        raise RankMismatchError(f"秩不一致: {a.rank} 与 {b.rank}")
    acc = ElementAccumulator(a.rank)
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            acc.add(wa + wb, ca * cb)
    return acc.build()


def parse_element(text: str, rank: int) -> NCElement:
    """
    解析元素文法，例如 "E[2,1]E[1,2] + t*E[1,1] - 1"

    Args:
        text: 表达式
        rank: 秩 N

    Returns:
        NCElement: 解析结果（未正规化）
    """
    parser = ExpressionParser(
        make_const=lambda value: NCElement.scalar(rank, value),
        make_symbol=lambda name: NCElement.scalar(rank, MultiPoly.symbol(name)),
        make_generator=lambda i, j: NCElement.gen(rank, i, j),
        as_constant=lambda value: value.to_constant(),
    )
    return parser.parse(text)
