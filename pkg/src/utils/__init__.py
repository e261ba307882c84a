#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 通用工具模块：日志、配置与异常
"""

from .config import DEFAULT_SEED, ConfigError, ConfigManager
from .errors import NcWalkError
from .logger import ContextLogger, exception_handler, setup_logging

__all__ = ['setup_logging', 'exception_handler', 'ContextLogger',
           'ConfigManager', 'ConfigError', 'DEFAULT_SEED', 'NcWalkError']
