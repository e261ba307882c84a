#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - U(gl_N) 模块
元素、PBW 正规序、余乘、集合划分状态和马尔可夫算子
"""

from .element import NCElement, ElementAccumulator, nc_mul, parse_element, word_str
from .pbw import normal_form, equal_in_algebra, word_normal_form, gen_key
from .partitions import (MAX_STATE_DEGREE, set_partitions, blocks_of, block_counts,
                         state, bell_polynomial)
from .markov import coproduct, apply_pt, is_central

__all__ = [
    'NCElement', 'ElementAccumulator', 'nc_mul', 'parse_element', 'word_str',
    'normal_form', 'equal_in_algebra', 'word_normal_form', 'gen_key',
    'MAX_STATE_DEGREE', 'set_partitions', 'blocks_of', 'block_counts', 'state',
    'bell_polynomial',
    'coproduct', 'apply_pt', 'is_central',
]
