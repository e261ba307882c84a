#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 粒子曲面模块
交错构型、推/挡动力学模拟、Monte Carlo 估计和 Gibbs 核
"""

from .state import InterlacedArray, Schedule, check_interlacing, densely_packed
from .engine import ExponentialClock, apply_ring, replica_rng, run
from .montecarlo import (McResult, estimate, mc_expectation, sample_snapshots,
                         snapshots_frame)
from .gibbs import dimension, gibbs_kernel, interlaces

__all__ = [
    'InterlacedArray', 'Schedule', 'check_interlacing', 'densely_packed',
    'ExponentialClock', 'apply_ring', 'replica_rng', 'run',
    'McResult', 'estimate', 'mc_expectation', 'sample_snapshots', 'snapshots_frame',
    'dimension', 'gibbs_kernel', 'interlaces',
]
