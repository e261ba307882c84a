#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 协方差模块
围道积分的留数求和、c_{kl} 系数、OU 形式比较和 Ψ_1^2 替换规则的推论
"""

from .residues import (AUTO, BRANCHES, SPACELIKE, TIMELIKE, PathPoint, cov_spacelike,
                       cov_timelike, covariance, residue_pair, spacelike_integrands,
                       timelike_integrands)
from .ckl import (ckl_from_asymptotics, product_replacement, solve_ckl,
                  verify_timelike_identity)
from .ou import ou_branch_values, ou_display, ou_rescale_compare
from .heuristics import (heuristic_product_covariance, product_covariance_limit,
                         spacelike_decomposition, state_covariance,
                         verify_spacelike_decomposition)

__all__ = [
    'AUTO', 'BRANCHES', 'SPACELIKE', 'TIMELIKE', 'PathPoint',
    'residue_pair', 'spacelike_integrands', 'timelike_integrands',
    'cov_spacelike', 'cov_timelike', 'covariance',
    'solve_ckl', 'verify_timelike_identity', 'product_replacement', 'ckl_from_asymptotics',
    'ou_branch_values', 'ou_display', 'ou_rescale_compare',
    'state_covariance', 'product_covariance_limit', 'heuristic_product_covariance',
    'spacelike_decomposition', 'verify_spacelike_decomposition',
]
