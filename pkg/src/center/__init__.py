#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 中心与 Gelfand-Tsetlin 模块
路径中心元、Harish-Chandra 投影、幂和展开、GT 展开和大秩渐近
"""

from .paths import PathSpec, enum_paths, e_of_path, psi, psi_sub, psi_product
from .harish import (ShiftedSymPoly, x_symbol, shifted_coordinates, harish_chandra,
                     evaluate_at)
from .powersum import (integer_partitions, weight, powersum_decompose, reconstruct,
                       format_expansion)
from .gt import gt_decompose, evaluate_gt
from .asymptotics import (pt_expansion, asymptotic_coeffs, interpolate_state, mean_asymptotics,
                          scale_time_rank, format_coeffs)

__all__ = [
    'PathSpec', 'enum_paths', 'e_of_path', 'psi', 'psi_sub', 'psi_product',
    'ShiftedSymPoly', 'x_symbol', 'shifted_coordinates', 'harish_chandra', 'evaluate_at',
    'integer_partitions', 'weight', 'powersum_decompose', 'reconstruct', 'format_expansion',
    'gt_decompose', 'evaluate_gt',
    'pt_expansion', 'asymptotic_coeffs', 'interpolate_state', 'mean_asymptotics',
    'scale_time_rank', 'format_coeffs',
]
