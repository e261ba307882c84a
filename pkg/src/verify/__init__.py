#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 验证模块
"""

from .base import BaseCheck, CheckResult
from .checks import ALL_CHECKS
from .runner import SUITES, build_checks, run_checks, suite_params

__all__ = ['BaseCheck', 'CheckResult', 'ALL_CHECKS', 'SUITES', 'build_checks', 'run_checks',
           'suite_params']
