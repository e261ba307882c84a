#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 表达式解析
多项式和 E[i,j] 元素共用一套文法：

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | unary)*      相邻原子之间是隐式乘法
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') INT)?
    atom   := INT | SYMBOL | E[i,j] | '(' expr ')'

除法只允许除以非零有理常数；浮点数一律拒绝
"""

import re
from fractions import Fraction
from typing import Callable, List, NamedTuple, Optional

from src.exactalg.poly import MultiPoly
from src.utils.errors import ParseError

_TOKEN_RE = re.compile(r'''
    (?P<ws>\s+)
  | (?P<float>\d+\.\d*|\.\d+)
  | (?P<number>\d+)
  | (?P<gen>E\[\s*(?P<gi>\d+)\s*,\s*(?P<gj>\d+)\s*\])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\*\*|[-+*/^()])
''', re.VERBOSE)


class Token(NamedTuple):
    kind: str
    value: object
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise ParseError(f"无法识别的字符 {text[pos]!r}（位置 {pos}）: {text!r}")
        kind = match.lastgroup
        if kind == 'ws':
            pass
        elif kind == 'float':
            raise ParseError(f"不接受浮点数 {match.group()!r}，请使用 p/q 形式")
        elif kind == 'number':
            tokens.append(Token('number', int(match.group()), pos))
        elif kind in ('gen', 'gi', 'gj'):
            tokens.append(Token('gen', (int(match.group('gi')), int(match.group('gj'))), pos))
        elif kind == 'ident':
            tokens.append(Token('ident', match.group(), pos))
        else:
            op = '^' if match.group() == '**' else match.group()
            tokens.append(Token('op', op, pos))
        pos = match.end()
    return tokens


class ExpressionParser:
    """递归下降解析器

    环的具体构造由回调提供，因此同一个解析器既能产生 MultiPoly，也能产生非交换元素。

    Args:
        make_const: Fraction -> 值
        make_symbol: 符号名 -> 值
        make_generator: (i, j) -> 值；为 None 时遇到 E[i,j] 报错
        as_constant: 值 -> Fraction 或 None，用于检查除数
    """

    def __init__(self, make_const: Callable, make_symbol: Callable,
                 make_generator: Optional[Callable] = None,
                 as_constant: Optional[Callable] = None):
        self.make_const = make_const
        self.make_symbol = make_symbol
        self.make_generator = make_generator
        self.as_constant = as_constant
        self._tokens: List[Token] = []
        self._index = 0
        self._text = ''

    def parse(self, text: str):
        if not text or not text.strip():
            raise ParseError("表达式为空")
        self._text = text
        self._tokens = tokenize(text)
        self._index = 0
        value = self._expr()
        if self._peek() is not None:
            token = self._peek()
            raise ParseError(f"多余的输入 {token.value!r}（位置 {token.pos}）: {text!r}")
        return value

    def _peek(self) -> Optional[Token]:
        if self._index < len(self._tokens):
            return self._tokens[self._index]
        return None

    def _next(self) -> Token:
        token = self._peek()
        if token is None:
            raise ParseError(f"表达式意外结束: {self._text!r}")
        self._index += 1
        return token

    def _is_op(self, *ops) -> bool:
        token = self._peek()
        return token is not None and token.kind == 'op' and token.value in ops

    def _starts_atom(self) -> bool:
        token = self._peek()
        if token is None:
            return False
        return token.kind in ('ident', 'gen') or (token.kind == 'op' and token.value == '(')

    def _expr(self):
        value = self._term()
        while self._is_op('+', '-'):
            op = self._next().value
            rhs = self._term()
            value = value + rhs if op == '+' else value - rhs
        return value

    def _term(self):
        value = self._unary()
        while True:
            if self._is_op('*'):
                self._next()
                value = value * self._unary()
            elif self._is_op('/'):
                token = self._next()
                divisor = self._unary()
                constant = self.as_constant(divisor) if self.as_constant else None
                if constant is None or constant == 0:
                    raise ParseError(f"只能除以非零有理常数（位置 {token.pos}）: {self._text!r}")
                value = value * self.make_const(Fraction(1) / constant)
            elif self._starts_atom():
                value = value * self._power()
            else:
                return value

    def _unary(self):
        if self._is_op('-'):
            self._next()
            return -self._unary()
        if self._is_op('+'):
            self._next()
            return self._unary()
        return self._power()

    def _power(self):
        base = self._atom()
        if self._is_op('^'):
            self._next()
            token = self._next()
            if token.kind != 'number':
                raise ParseError(f"指数必须是非负整数（位置 {token.pos}）: {self._text!r}")
            return base ** token.value
        return base

    def _atom(self):
        token = self._next()
        if token.kind == 'number':
            return self.make_const(Fraction(token.value))
        if token.kind == 'ident':
            return self.make_symbol(token.value)
        if token.kind == 'gen':
            if self.make_generator is None:
                raise ParseError(f"此处不允许生成元 E[{token.value[0]},{token.value[1]}]: {self._text!r}")
            return self.make_generator(*token.value)
        if token.kind == 'op' and token.value == '(':
            value = self._expr()
            closing = self._next()
            if closing.kind != 'op' or closing.value != ')':
                raise ParseError(f"缺少右括号（位置 {closing.pos}）: {self._text!r}")
            return value
        raise ParseError(f"意外的符号 {token.value!r}（位置 {token.pos}）: {self._text!r}")


def parse_poly(text: str) -> MultiPoly:
    """把文本解析为 MultiPoly，例如 "2*t^2 + t" 或 "3/2*eta" """
    parser = ExpressionParser(
        make_const=MultiPoly.const,
        make_symbol=MultiPoly.symbol,
        as_constant=lambda value: value.to_constant(),
    )
    return parser.parse(text)
