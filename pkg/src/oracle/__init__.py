#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 独立对照模块
N=2 行列式公式、微分形式的状态和截断 CTMC
"""

from .detform import DetFormQuery, detform_exact, detform_n2, inverse_factorial
from .diffstate import DEFAULT_MAX_DEGREE, multilinear_trace, state_diff_oracle
from .ctmc import MAX_DEPTH, TruncatedCtmc, ctmc_distribution, ctmc_expectation

__all__ = [
    'DetFormQuery', 'detform_exact', 'detform_n2', 'inverse_factorial',
    'DEFAULT_MAX_DEGREE', 'multilinear_trace', 'state_diff_oracle',
    'MAX_DEPTH', 'TruncatedCtmc', 'ctmc_distribution', 'ctmc_expectation',
]
