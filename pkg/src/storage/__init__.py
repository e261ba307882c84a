#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 结果存储模块
"""

from .json_storage import ResultStorage, dumps, to_jsonable

__all__ = ['ResultStorage', 'dumps', 'to_jsonable']
