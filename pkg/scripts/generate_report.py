#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
把最近一次验证报告整理成 Markdown 摘要
"""

import os
import sys
import json
import argparse
import datetime
from pathlib import Path

import pandas as pd

script_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.append(os.path.dirname(script_dir))

from src.utils.config import ConfigManager


def load_json_file(file_path):
    """加载JSON文件"""
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        print(f"加载文件 {file_path} 时出错: {e}", file=sys.stderr)
        return None


def latest_report(report_dir):
    """按修改时间取最新的 JSON 报告"""
    reports = sorted(Path(report_dir).glob('*.json'), key=lambda p: p.stat().st_mtime)
    return reports[-1] if reports else None


STATUS_LABELS = {'passed': '通过', 'partial': '部分通过', 'failed': '未通过'}


def check_status(check):
    """旧报告没有 status 字段时按 passed 推断"""
    return check.get('status') or ('passed' if check.get('passed') else 'failed')


def render(report, source):
    """生成 Markdown 文本"""
    now = datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S")
    checks = report.get('checks', [])
    partial = [c for c in checks if check_status(c) == 'partial']
    if not report.get('passed'):
        verdict = '存在未通过的检查'
    elif partial:
        verdict = '通过，但部分检查的参数低于验收要求'
    else:
        verdict = '全部通过'
    lines = [
        f"# ncwalk 验证报告（{report.get('suite')} 套件）",
        "",
        f"生成时间: {now}",
        f"来源: {source}",
        f"种子: {report.get('seed')}",
        "",
        f"结果: {verdict}"
        f"（{report.get('total', 0) - len(report.get('failed', []))}/{report.get('total', 0)}），"
        f"总用时 {report.get('runtime_s')}s",
        "",
        "## 检查明细",
        "",
    ]
    frame = pd.DataFrame(checks)
    if not frame.empty:
        frame['status'] = [check_status(c) for c in checks]
        frame = frame[['criterion', 'name', 'status', 'runtime_s', 'rss_mb']]
        lines.append("| 标准 | 检查 | 状态 | 用时 (s) | 内存 (MB) |")
        lines.append("|------|------|------|----------|-----------|")
        for row in frame.itertuples(index=False):
            lines.append(f"| {row.criterion} | {row.name} | {STATUS_LABELS.get(row.status, row.status)} "
                         f"| {row.runtime_s} | {row.rss_mb} |")

    if partial:
        lines += ["", "## 部分通过的检查", "",
                  "以下检查在缩减的参数下通过，没有覆盖验收标准要求的范围：", ""]
        for check in partial:
            reduced = [f"{key} = {entry['used']}（要求 {entry['required']}）"
                       for key, entry in check.get('scope', {}).items()
                       if entry['used'] < entry['required']]
            lines.append(f"- {check['name']}: {'；'.join(reduced)}")

    failed = [c for c in checks if not c.get('passed')]
    if failed:
        lines += ["", "## 未通过的检查", ""]
        for check in failed:
            lines.append(f"### {check['name']}")
            lines.append("")
            lines.append(f"- measured: `{json.dumps(check.get('measured'), ensure_ascii=False)}`")
            lines.append(f"- expected: `{json.dumps(check.get('expected'), ensure_ascii=False)}`")
            lines.append(f"- details: `{json.dumps(check.get('details'), ensure_ascii=False)}`")
            lines.append("")
    return "\n".join(lines) + "\n"


def generate_report():
    """生成验证结果报告"""
    parser = argparse.ArgumentParser(description='生成验证报告摘要')
    parser.add_argument('--report', type=str, help='JSON 报告路径，缺省取最新的一份')
    parser.add_argument('--output', type=str, help='Markdown 输出路径')
    args = parser.parse_args()

    output_dir = Path(ConfigManager().get('output.dir', 'output'))
    source = Path(args.report) if args.report else latest_report(output_dir / 'reports')
    if source is None:
        print("没有找到验证报告，请先运行 scripts/run_verify.py", file=sys.stderr)
        sys.exit(1)
    report = load_json_file(source)
    if report is None:
        sys.exit(1)

    target = Path(args.output) if args.output else output_dir / 'report.md'
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render(report, source), encoding='utf-8')
    print(f"报告已生成: {target}")


if __name__ == "__main__":
    generate_report()
