#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 运行脚本
用于快速启动命令行程序
"""

import os
import sys

# 确保项目根目录在Python路径中
sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

from src.main import main

if __name__ == "__main__":
    sys.exit(main())
