#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 验证套件启动脚本
"""

import os
import sys
import argparse
import logging

# 添加项目根目录到Python路径
script_dir = os.path.dirname(os.path.abspath(__file__))
root_dir = os.path.dirname(script_dir)
sys.path.append(root_dir)

from src.storage import ResultStorage
from src.utils.config import ConfigManager
from src.utils.logger import setup_logging
from src.verify import SUITES, run_checks

STATUS_LABELS = {'passed': '通过', 'partial': '部分通过（参数低于验收要求）', 'failed': '未通过'}


def parse_args():
    """解析命令行参数"""
    parser = argparse.ArgumentParser(description='运行验收检查并保存报告')

    parser.add_argument('--suite', choices=SUITES, default='quick', help='验证套件')
    parser.add_argument('--check', type=str, help='要运行的检查，多个检查用逗号分隔，不指定则运行全部')
    parser.add_argument('--output-dir', type=str, help='报告输出目录')
    parser.add_argument('--log-level', type=str, help='日志级别')
    parser.add_argument('--config-file', type=str, help='配置文件路径')
    parser.add_argument('--threads', type=int, help='并发检查线程数')
    parser.add_argument('--workers', type=int, help='Monte Carlo 进程数')

    return parser.parse_args()


def main():
    """主函数"""
    args = parse_args()

    config_manager = ConfigManager(args.config_file)

    log_config = config_manager.get('logging', {})
    setup_logging(
        log_level=args.log_level or 'INFO',
        log_file=log_config.get('file', 'logs/ncwalk.log'),
        max_size=log_config.get('max_size', 10485760),
        backup_count=log_config.get('backup_count', 5)
    )

    if args.workers:
        config_manager.set('simulation.workers', args.workers)

    names = [name.strip() for name in args.check.split(',')] if args.check else None
    threads = args.threads or config_manager.get('verify.threads', 1)
    logging.info(f"运行 {args.suite} 套件，线程数 {threads}")

    report = run_checks(args.suite, threads, config_manager, names=names, progress=True)

    output_dir = args.output_dir or config_manager.get('output.dir', 'output')
    path = ResultStorage(output_dir).save_report(report)

    for check in report['checks']:
        status = STATUS_LABELS.get(check.get('status'), '通过' if check['passed'] else '未通过')
        logging.info(f"[{check['criterion']}] {check['name']}: {status}（{check['runtime_s']}s）")
    logging.info(f"报告已保存到: {path}")

    sys.exit(0 if report['passed'] else 1)


if __name__ == "__main__":
    main()
