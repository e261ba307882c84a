#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 日志工具
负责配置和管理日志
"""

import os
import sys
import logging
import functools
import traceback
from logging.handlers import RotatingFileHandler

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def setup_logging(log_level='INFO', log_file=None, max_size=10485760, backup_count=5, stream=None):
    """
    设置日志

    Args:
        log_level (str): 日志级别，可选值：DEBUG, INFO, WARNING, ERROR, CRITICAL
        log_file (str): 日志文件路径，如果为None则只输出到控制台
        max_size (int): 日志文件最大大小，单位为字节
        backup_count (int): 备份文件数量
        stream: 控制台输出流，命令行传入 sys.stderr 以保证标准输出是干净的 JSON
    """
    level = getattr(logging, str(log_level).upper(), logging.INFO)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # 清除现有的处理器
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    console_handler = logging.StreamHandler(stream or sys.stdout)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)

        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=max_size,
            backupCount=backup_count,
            encoding='utf-8'
        )
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    # pandas 导入时 numexpr 会打印线程数
    logging.getLogger('numexpr').setLevel(logging.WARNING)

    logging.debug(f"日志系统已初始化，级别: {log_level}")
    if log_file:
        logging.debug(f"日志文件: {os.path.abspath(log_file)}")


def exception_handler(func):
    """异常处理装饰器

    记录异常和调用参数后原样抛出，由调用方决定退出码
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        logger = logging.getLogger('ncwalk')
        try:
            return func(*args, **kwargs)
        except Exception as e:
            stack_trace = ''.join(traceback.format_exception(*sys.exc_info()))
            logger.debug(
                f"异常发生在 {func.__name__}: {str(e)}\n"
                f"参数: args={args}, kwargs={kwargs}\n"
                f"堆栈跟踪:\n{stack_trace}"
            )
            logger.error(f"{func.__name__} 失败: {type(e).__name__}: {e}")
            raise

    return wrapper


class ContextLogger:
    """上下文日志记录器

    在日志消息中添加上下文信息

    Example:
        logger = ContextLogger('verify', 'semigroup')
        logger.info('开始检查')  # 输出: [verify:semigroup] 开始检查
    """

    def __init__(self, module_name, component_name=None):
        self.module_name = module_name
        self.component_name = component_name
        self.logger = logging.getLogger(f'ncwalk.{module_name}')

    def _format_message(self, message):
        context = self.module_name
        if self.component_name:
            context += f":{self.component_name}"
        return f"[{context}] {message}"

    def debug(self, message, *args, **kwargs):
        self.logger.debug(self._format_message(message), *args, **kwargs)

    def info(self, message, *args, **kwargs):
        self.logger.info(self._format_message(message), *args, **kwargs)

    def warning(self, message, *args, **kwargs):
        self.logger.warning(self._format_message(message), *args, **kwargs)

    def error(self, message, *args, **kwargs):
        self.logger.error(self._format_message(message), *args, **kwargs)
