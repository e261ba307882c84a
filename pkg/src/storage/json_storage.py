#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 本地结果存储
负责把计算结果、快照和验证报告保存到本地文件系统
"""

import os
import re
import json
import logging
from datetime import datetime
from fractions import Fraction
from typing import Any, Optional, Sequence

import numpy as np
import pandas as pd

from src.exactalg.poly import MultiPoly
from src.exactalg.rational import format_fraction


def to_jsonable(value: Any) -> Any:
    """
    转换为可 JSON 序列化的值

    有理数写成 "p/q" 字符串，多项式写成规范文本，numpy 标量转成 Python 数
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, MultiPoly):
        constant = value.to_constant()
        return format_fraction(constant) if constant is not None else str(value)
    if isinstance(value, int):
        return value
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return str(value)


def dumps(data: Any, pretty: bool = True) -> str:
    """规范 JSON 文本（键按插入顺序，结果可逐字节复现）"""
    return json.dumps(to_jsonable(data), ensure_ascii=False, indent=2 if pretty else None)


class ResultStorage:
    """结果存储器类"""

    def __init__(self, output_dir: str, pretty_json: bool = True):
        """初始化存储器

        Args:
            output_dir (str): 输出目录
            pretty_json (bool): 是否缩进 JSON
        """
        self.output_dir = output_dir
        self.pretty_json = pretty_json
        self.logger = logging.getLogger('storage')

    def _path(self, name: str, ext: str, subdir: Optional[str] = None) -> str:
        directory = os.path.join(self.output_dir, subdir) if subdir else self.output_dir
        os.makedirs(directory, exist_ok=True)
        file_name = self._sanitize_filename(name)
        if not file_name.endswith(ext):
            file_name += ext
        return os.path.join(directory, file_name)

    def save_json(self, name: str, data: Any, subdir: Optional[str] = None) -> str:
        """保存 JSON 结果

        Args:
            name (str): 文件名（可不带扩展名）
            data: 结果数据
            subdir (str): 子目录

        Returns:
            str: 保存的文件路径
        """
        path = self._path(name, '.json', subdir)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(dumps(data, self.pretty_json))
            f.write('\n')
        self.logger.info(f"已保存JSON文件: {path}")
        return path

    def save_csv(self, name: str, rows, subdir: Optional[str] = None) -> str:
        """保存表格数据

        Args:
            name (str): 文件名
            rows: DataFrame 或字典列表

        Returns:
            str: 保存的文件路径

        Raises:
            ValueError: rows 不是表格数据
        """
        if isinstance(rows, pd.DataFrame):
            frame = rows
        elif isinstance(rows, Sequence) and all(isinstance(r, dict) for r in rows):
            frame = pd.DataFrame([to_jsonable(r) for r in rows])
        else:
            raise ValueError("CSV数据必须是 DataFrame 或字典列表")
        path = self._path(name, '.csv', subdir)
        frame.to_csv(path, index=False)
        self.logger.info(f"已保存CSV文件: {path}（{len(frame)} 行）")
        return path

    def save_report(self, report: dict, name: Optional[str] = None) -> str:
        """保存验证报告：JSON 全文加一份每项检查一行的 CSV 摘要

        Returns:
            str: JSON 报告路径
        """
        name = name or f"verify_{report.get('suite', 'report')}_{datetime.now():%Y%m%d_%H%M%S}"
        path = self.save_json(name, report, subdir='reports')
        checks = report.get('checks', [])
        if checks:
            summary = [{key: check.get(key) for key in
                        ('name', 'criterion', 'passed', 'status', 'measured', 'expected', 'tolerance',
                         'runtime_s', 'rss_mb')} for check in checks]
            self.save_csv(name, summary, subdir='reports')
        return path

    @staticmethod
    def _sanitize_filename(filename: str) -> str:
        """清理文件名"""
        filename = re.sub(r'[\\/*?:"<>|]', '_', filename).replace(' ', '_')
        return filename[:200]
