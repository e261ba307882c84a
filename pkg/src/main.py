#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 命令行入口
U(gl_N) 非交换随机游走的精确计算、推/挡曲面模拟、协方差留数和交叉验证

标准输出只写结果（JSON 或 CSV），日志写到标准错误和轮转日志文件。
退出码：0 成功，1 领域错误或检查未通过，2 用法错误
"""

import os
import re
import sys
import random
import logging
import argparse
from fractions import Fraction
from typing import Dict, List, Optional

import pandas as pd

from src.center import (ShiftedSymPoly, asymptotic_coeffs, evaluate_at, evaluate_gt,
                        format_coeffs, format_expansion, harish_chandra, mean_asymptotics,
                        powersum_decompose, psi, pt_expansion)
from src.covariance import BRANCHES, PathPoint, covariance, solve_ckl, verify_timelike_identity
from src.exactalg import MultiPoly, parse_poly, to_fraction
from src.oracle import (DetFormQuery, TruncatedCtmc, ctmc_distribution, ctmc_expectation,
                        detform_n2, state_diff_oracle)
from src.storage import ResultStorage, dumps, to_jsonable
from src.surface import (InterlacedArray, Schedule, densely_packed, estimate, sample_snapshots,
                         snapshots_frame)
from src.ugln import apply_pt, is_central, normal_form, parse_element, state
from src.utils.config import ConfigError, ConfigManager
from src.utils.errors import NcWalkError, ParseError
from src.utils.logger import exception_handler, setup_logging
from src.verify import SUITES, run_checks

logger = logging.getLogger('ncwalk')

_GEN_RE = re.compile(r'E\[\s*(\d+)\s*,\s*(\d+)\s*\]')
_POWER_SUM_RE = re.compile(r'^p(\d+)$')
_LEVEL_RE = re.compile(r'^\s*(\d+)\s*:\s*([-\d,\s]*)$')


# ---- 参数解析 ----

def _infer_rank(text: str, rank: Optional[int]) -> int:
    """未给出 --N 时取元素中出现的最大指标"""
    if rank:
        return rank
    indices = [int(v) for pair in _GEN_RE.findall(text) for v in pair]
    return max(indices, default=1)


def _parse_int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError as e:
        raise ParseError(f"无法解析整数列表: {text!r}") from e


def _parse_levels(text: str) -> Dict[int, List[int]]:
    """"2:1,0;1:0" -> {2: [1, 0], 1: [0]}"""
    result = {}
    for part in text.split(';'):
        if not part.strip():
            continue
        match = _LEVEL_RE.match(part)
        if not match:
            raise ParseError(f"无法解析层标签 {part!r}，应为 M:λ1,λ2,...")
        result[int(match.group(1))] = _parse_int_list(match.group(2))
    return result


def _parse_observables(text: Optional[str], schedule: Schedule) -> List[ShiftedSymPoly]:
    """每个观测点一个观测量："p<k>" 表示幂和，否则按 x1..xN 的多项式解析"""
    parts = [p.strip() for p in text.split(';')] if text else ['p1'] * len(schedule)
    if len(parts) != len(schedule):
        raise ParseError(f"观测量个数 {len(parts)} 与观测点个数 {len(schedule)} 不一致")
    observables = []
    for part, (level, _) in zip(parts, schedule.points):
        match = _POWER_SUM_RE.match(part)
        if match:
            observables.append(ShiftedSymPoly.power_sum(int(match.group(1)), level))
            continue
        poly = parse_poly(part)
        allowed = {f'x{m}' for m in range(1, level + 1)}
        foreign = set(poly.symbols()) - allowed
        if foreign:
            raise ParseError(f"观测量 {part!r} 含有第 {level} 层以外的变量: {', '.join(sorted(foreign))}")
        observables.append(ShiftedSymPoly(level, poly))
    return observables


def _initial_configuration(args) -> InterlacedArray:
    if args.initial:
        return InterlacedArray.parse(args.initial)
    if not args.levels:
        raise ParseError("需要 --levels 或 --initial")
    return densely_packed(args.levels)


def _schedule(args, depth: int) -> Schedule:
    if args.schedule:
        return Schedule.parse(args.schedule)
    if args.t is None:
        raise ParseError("需要 --schedule 或 --t")
    return Schedule.of([(depth, float(Fraction(args.t)))])


def _value(value) -> dict:
    """精确值的输出形式"""
    payload = {'value': to_jsonable(value)}
    constant = value.to_constant() if isinstance(value, MultiPoly) else value
    if isinstance(constant, (int, Fraction)):
        constant = Fraction(constant)
        payload['numerator'] = str(constant.numerator)
        payload['denominator'] = str(constant.denominator)
    return payload


# ---- 子命令 ----

@exception_handler
def cmd_state(args, config):
    rank = _infer_rank(args.monomial, args.N)
    x = parse_element(args.monomial, rank)
    value = state(x, parse_poly(args.t), config.get('limits.max_state_degree', 12))
    return {'rank': rank, 't': args.t, **_value(value)}


@exception_handler
def cmd_normal_form(args, config):
    rank = _infer_rank(args.element, args.N)
    result = normal_form(parse_element(args.element, rank))
    return {'rank': rank, 'normal_form': str(result), 'terms': len(result)}


@exception_handler
def cmd_apply_pt(args, config):
    rank = _infer_rank(args.element, args.N)
    x = parse_element(args.element, rank)
    result = normal_form(apply_pt(x, parse_poly(args.t), config.get('limits.max_state_degree', 12)))
    return {'rank': rank, 't': args.t, 'result': str(result), 'terms': len(result)}


@exception_handler
def cmd_psi(args, config):
    x = psi(args.k, args.N)
    payload = {'k': args.k, 'rank': args.N, 'element': str(x), 'terms': len(x)}
    if args.check_central:
        payload['central'] = is_central(x)
    return payload


def _centre_element(args):
    if args.psi:
        if not args.N:
            raise ParseError("--psi 需要同时给出 --N")
        return psi(args.psi, args.N)
    if not args.element:
        raise ParseError("需要 --psi 或 --element")
    return parse_element(args.element, _infer_rank(args.element, args.N))


@exception_handler
def cmd_hc(args, config):
    x = _centre_element(args)
    image = harish_chandra(x, check_central=not args.no_check)
    payload = {'rank': image.rank, 'hc': str(image.poly)}
    if image.is_symmetric():
        payload['power_sums'] = format_expansion(powersum_decompose(image))
    return payload


@exception_handler
def cmd_pt_expand(args, config):
    expansion = pt_expansion(args.k, args.N)
    if args.t is not None:
        value = parse_poly(args.t)
        expansion = {rho: coeff.substitute({'t': value}) for rho, coeff in expansion.items()}
    rows = format_expansion(expansion)
    return {'k': args.k, 'rank': args.N, 'rows': rows}


@exception_handler
def cmd_eval(args, config):
    x = _centre_element(args)
    if args.t is not None:
        x = apply_pt(x, parse_poly(args.t), config.get('limits.max_state_degree', 12))
    lam = _parse_int_list(args.lam)
    return {'lambda': lam, **_value(evaluate_at(x, lam, check_central=not args.no_check))}


@exception_handler
def cmd_gt_eval(args, config):
    rank = _infer_rank(args.element, args.N)
    x = parse_element(args.element, rank)
    if args.t is not None:
        x = apply_pt(x, parse_poly(args.t), config.get('limits.max_state_degree', 12))
    lambdas = _parse_levels(args.lam)
    return {'lambdas': {str(k): v for k, v in lambdas.items()}, **_value(evaluate_gt(x, lambdas))}


@exception_handler
def cmd_asymptotics(args, config):
    witnesses = config.get('asymptotics.witness_ranks', 1)
    if args.mean:
        rho = tuple(sorted(_parse_int_list(args.mean), reverse=True))
        degree, coeff = mean_asymptotics(rho, args.depth, witnesses)
        return {'partition': list(rho), 'degree': degree, 'coefficient': str(coeff)}
    if args.product:
        rho = tuple(sorted(_parse_int_list(args.product), reverse=True))
        coeffs = asymptotic_coeffs(rho, args.depth, witnesses)
        return {'product': list(rho), 'rows': format_coeffs(coeffs)}
    if not args.k:
        raise ParseError("需要 --k、--product 或 --mean")
    return {'k': args.k, 'rows': format_coeffs(asymptotic_coeffs(args.k, args.depth, witnesses))}


@exception_handler
def cmd_simulate(args, config):
    initial = _initial_configuration(args)
    schedule = _schedule(args, initial.depth)
    observables = _parse_observables(args.obs, schedule)
    seed = config.seed if args.seed is None else args.seed
    snapshots = sample_snapshots(
        initial, schedule, args.replicas, seed,
        workers=args.workers or config.get('simulation.workers', 1),
        chunk_size=config.get('simulation.chunk_size', 20000),
        progress=args.progress or config.get('simulation.progress', False),
        check_interlacing=args.check_interlacing or config.get('simulation.check_interlacing', False),
    )
    result = estimate(snapshots, observables, seed)
    payload = {'initial': str(initial), 'schedule': str(schedule), **result.to_dict()}
    if args.csv:
        frame = snapshots_frame(snapshots, schedule, args.dump)
        directory, name = os.path.split(os.path.abspath(args.csv))
        payload['csv'] = ResultStorage(directory).save_csv(name, frame)
    return payload


@exception_handler
def cmd_cov(args, config):
    if args.verify_ckl:
        rng = random.Random(config.seed if args.seed is None else args.seed)
        failures = []
        for k in range(1, args.verify_ckl + 1):
            for _ in range(args.draws):
                tau1 = Fraction(rng.randint(1, 9), rng.randint(1, 4))
                tau2 = tau1 + Fraction(rng.randint(0, 9), rng.randint(1, 4))
                eta = Fraction(rng.randint(1, 9), rng.randint(1, 4))
                if not verify_timelike_identity(k, tau1, tau2, eta):
                    failures.append({'k': k, 'tau1': tau1, 'tau2': tau2, 'eta': eta})
        payload = {'k_max': args.verify_ckl, 'draws': args.draws, 'passed': not failures,
                   'failures': failures}
        if args.tau1 is not None:
            payload['ckl'] = solve_ckl(args.verify_ckl, to_fraction(args.tau1),
                                       to_fraction(args.tau2), to_fraction(args.eta))
        return payload
    if not args.i or not args.j:
        raise ParseError("需要 --i 和 --j（或 --verify-ckl）")
    branch, value = covariance(PathPoint.parse(args.i), PathPoint.parse(args.j), args.branch)
    return {'branch': branch, 'i': args.i, 'j': args.j, **_value(value)}


@exception_handler
def cmd_detform(args, config):
    query = DetFormQuery(args.x, args.y, to_fraction(args.t), args.k, args.bmax)
    return {'x': args.x, 'y': args.y, 't': args.t, 'k': args.k, 'b_max': args.bmax,
            'value': detform_n2(query)}


@exception_handler
def cmd_oracle_state(args, config):
    rank = _infer_rank(args.monomial, args.N)
    x = parse_element(args.monomial, rank)
    t = parse_poly(args.t)
    max_degree = args.max_degree or config.get('limits.max_oracle_degree', 8)
    total = MultiPoly.zero()
    for word, coeff in x.items():
        total = total + coeff * state_diff_oracle(word, t, rank, max_degree)
    return {'rank': rank, 't': args.t, **_value(total)}


@exception_handler
def cmd_ctmc(args, config):
    initial = _initial_configuration(args)
    cfg = TruncatedCtmc(
        horizon=float(Fraction(args.t)) if args.t is not None else 1.0,
        tail_bound=args.tail_bound or config.get('ctmc.tail_bound', 0.005),
        max_events=args.max_events or config.get('ctmc.max_events', 200),
    )
    if args.distribution:
        distribution, tail = ctmc_distribution(cfg, initial)
        rows = [{'state': str(InterlacedArray(levels)), 'probability': prob}
                for levels, prob in sorted(distribution.items(), key=lambda item: -item[1])]
        return {'horizon': cfg.horizon, 'tail': tail, 'rows': rows}
    schedule = _schedule(args, initial.depth)
    observables = _parse_observables(args.obs, schedule)
    value, bound = ctmc_expectation(cfg, initial, schedule, observables)
    return {'initial': str(initial), 'schedule': str(schedule), 'value': value, 'bound': bound}


@exception_handler
def cmd_verify(args, config):
    report = run_checks(args.suite, args.threads or config.get('verify.threads', 1), config,
                        names=args.check, seed=args.seed, progress=args.progress)
    if args.save:
        storage = ResultStorage(config.get('output.dir', 'output'))
        report['saved_to'] = storage.save_report(report)
    return report


COMMANDS = {
    'state': cmd_state,
    'normal-form': cmd_normal_form,
    'apply-pt': cmd_apply_pt,
    'psi': cmd_psi,
    'hc': cmd_hc,
    'pt-expand': cmd_pt_expand,
    'eval': cmd_eval,
    'gt-eval': cmd_gt_eval,
    'asymptotics': cmd_asymptotics,
    'simulate': cmd_simulate,
    'cov': cmd_cov,
    'detform': cmd_detform,
    'oracle-state': cmd_oracle_state,
    'ctmc': cmd_ctmc,
    'verify': cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    """构建命令行解析器"""
    parser = argparse.ArgumentParser(prog='ncwalk', description='U(gl_N) 非交换随机游走与推/挡曲面')
    parser.add_argument('--config-file', type=str, help='配置文件路径')
    parser.add_argument('--log-level', type=str, help='日志级别')
    parser.add_argument('--format', choices=['json', 'csv'], help='输出格式')
    parser.add_argument('--compact', action='store_true', help='JSON 不缩进')
    sub = parser.add_subparsers(dest='command', required=True)

    def element_parser(name, help_text, field='element'):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(f'--{field}', type=str, required=True, help='元素，例如 "E[2,1]E[1,2] + t"')
        p.add_argument('--N', type=int, help='秩，缺省取出现的最大指标')
        return p

    p = element_parser('state', '状态 ⟨x⟩_t', field='monomial')
    p.add_argument('--t', type=str, default='t', help='时间（有理数或符号表达式）')

    element_parser('normal-form', 'PBW 正规形式')

    p = element_parser('apply-pt', '马尔可夫算子 P_t')
    p.add_argument('--t', type=str, default='t', help='时间')

    p = sub.add_parser('psi', help='路径中心元 Ψ_k')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--N', type=int, required=True)
    p.add_argument('--check-central', action='store_true', help='同时检查中心性')

    for name, help_text in (('hc', 'Harish-Chandra 像'), ('eval', '在最高权 λ 处求值')):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--psi', type=int, help='使用 Ψ_k')
        p.add_argument('--element', type=str, help='或者给出中心元素')
        p.add_argument('--N', type=int, help='秩')
        p.add_argument('--no-check', action='store_true', help='跳过中心性检查')
        if name == 'eval':
            p.add_argument('--t', type=str, help='先作用 P_t')
            p.add_argument('--lambda', dest='lam', type=str, required=True, help='最高权，例如 4,2')

    p = sub.add_parser('pt-expand', help='P_tΨ_k 的幂和展开')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--N', type=int, required=True)
    p.add_argument('--t', type=str, help='代入时间')

    p = element_parser('gt-eval', '多层 Gelfand-Tsetlin 求值')
    p.add_argument('--t', type=str, help='先作用 P_t')
    p.add_argument('--lambda', dest='lam', type=str, required=True, help='各层最高权，例如 "2:1,0;1:0"')

    p = sub.add_parser('asymptotics', help='大秩渐近系数')
    p.add_argument('--k', type=int)
    p.add_argument('--mean', type=str, help='⟨Ψ_ρ⟩ 的增长阶，ρ 例如 1 或 2,1')
    p.add_argument('--product', type=str, help='乘积 Ψ_ρ 的展开，ρ 例如 1,1 即 Ψ_1^2')
    p.add_argument('--depth', type=int, help='插值用的秩个数')

    def surface_arguments(p):
        p.add_argument('--levels', type=int, help='层数 N（密排初值）')
        p.add_argument('--initial', type=str, help='初始构型，例如 "0;1,-1"（第一层在前）')
        p.add_argument('--schedule', type=str, help='观测点，例如 "(2,1);(1,2)"')
        p.add_argument('--t', type=str, help='没有 --schedule 时在顶层时刻 t 观测')
        p.add_argument('--obs', type=str, help='观测量，例如 "p1;p2"，缺省每点 p1')

    p = sub.add_parser('simulate', help='Monte Carlo 模拟')
    surface_arguments(p)
    p.add_argument('--replicas', type=int, default=10000)
    p.add_argument('--seed', type=int, help='随机种子，缺省取配置（NCWALK_SEED）')
    p.add_argument('--workers', type=int, help='进程数')
    p.add_argument('--progress', action='store_true')
    p.add_argument('--check-interlacing', action='store_true')
    p.add_argument('--csv', type=str, help='快照 CSV 路径')
    p.add_argument('--dump', type=int, default=100, help='写入 CSV 的副本数')

    p = sub.add_parser('cov', help='协方差留数公式')
    p.add_argument('--branch', choices=BRANCHES, default='auto')
    p.add_argument('--i', type=str, help='k,eta,tau')
    p.add_argument('--j', type=str, help='k,eta,tau')
    p.add_argument('--verify-ckl', type=int, metavar='K', help='对 k ≤ K 检查 c_kl 恒等式')
    p.add_argument('--draws', type=int, default=20)
    p.add_argument('--seed', type=int)
    p.add_argument('--tau1', type=str)
    p.add_argument('--tau2', type=str)
    p.add_argument('--eta', type=str)

    p = sub.add_parser('detform', help='N=2 行列式公式（(4,2) 对应移位坐标 (4,1)）')
    p.add_argument('--x', type=int, required=True)
    p.add_argument('--y', type=int, required=True)
    p.add_argument('--t', type=str, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--bmax', type=int, default=50)

    p = element_parser('oracle-state', '微分形式的状态', field='monomial')
    p.add_argument('--t', type=str, default='t')
    p.add_argument('--max-degree', type=int)

    p = sub.add_parser('ctmc', help='截断 CTMC 精确期望')
    surface_arguments(p)
    p.add_argument('--tail-bound', type=float)
    p.add_argument('--max-events', type=int)
    p.add_argument('--distribution', action='store_true', help='输出时刻 t 的分布')

    p = sub.add_parser('verify', help='运行验收检查')
    p.add_argument('--suite', choices=SUITES, default='quick')
    p.add_argument('--threads', type=int)
    p.add_argument('--check', action='append', help='只运行指定检查（名称或标准编号）')
    p.add_argument('--seed', type=int)
    p.add_argument('--save', action='store_true', help='保存报告到输出目录')
    p.add_argument('--progress', action='store_true')

    return parser


def emit(payload: dict, fmt: str, pretty: bool) -> None:
    """写结果到标准输出"""
    if fmt == 'csv':
        rows = payload.get('rows') or payload.get('checks')
        if rows is None:
            rows = [{k: v for k, v in payload.items() if not isinstance(v, (list, dict))}]
        pd.DataFrame(to_jsonable(rows)).to_csv(sys.stdout, index=False)
    else:
        sys.stdout.write(dumps(payload, pretty) + '\n')


def main(argv: Optional[List[str]] = None) -> int:
    """主函数"""
    args = build_parser().parse_args(argv)

    try:
        config = ConfigManager(args.config_file)
    except ConfigError as e:
        sys.stdout.write(dumps({'error': str(e), 'type': 'ConfigError'}) + '\n')
        return 1

    log_config = config.get('logging', {})
    setup_logging(
        log_level=args.log_level or log_config.get('level', 'WARNING'),
        log_file=log_config.get('file') or None,
        max_size=log_config.get('max_size', 10485760),
        backup_count=log_config.get('backup_count', 5),
        stream=sys.stderr,
    )
    fmt = args.format or config.get('output.format', 'json')
    pretty = config.get('output.pretty_json', True) and not args.compact

    try:
        payload = COMMANDS[args.command](args, config)
    except (NcWalkError, ValueError, ConfigError) as e:
        sys.stdout.write(dumps({'error': str(e), 'type': type(e).__name__}, pretty) + '\n')
        return 1

    emit(payload, fmt, pretty)
    return 1 if payload.get('passed') is False else 0


if __name__ == "__main__":
    sys.exit(main())
