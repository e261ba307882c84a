#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 配置、日志和存储测试
"""

import json
import logging
import os
from fractions import Fraction

import pandas as pd
import pytest

from src.exactalg import MultiPoly
from src.storage import ResultStorage, dumps, to_jsonable
from src.utils.config import DEFAULT_SEED, ConfigError, ConfigManager
from src.utils.logger import ContextLogger, exception_handler, setup_logging


@pytest.fixture
def missing_config(tmp_path):
    return str(tmp_path / 'absent.json')


class TestConfig:

    def test_defaults(self, missing_config):
        config = ConfigManager(missing_config)
        assert config.seed == DEFAULT_SEED
        assert config.get('limits.max_state_degree') == 12
        assert config.get('verify.suites.quick.oracle_max_degree') == 4
        assert config.get('asymptotics.witness_ranks') == 1
        assert config.get('no.such.key', 'x') == 'x'

    def test_file_overrides_defaults(self, tmp_path):
        path = tmp_path / 'config.json'
        path.write_text(json.dumps({'simulation': {'workers': 3}}), encoding='utf-8')
        config = ConfigManager(str(path))
        assert config.get('simulation.workers') == 3
        assert config.get('simulation.chunk_size') == 20000

    def test_environment_overrides(self, monkeypatch, missing_config):
        monkeypatch.setenv('NCWALK_SEED', '7')
        monkeypatch.setenv('NCWALK_LIMITS_MAX_STATE_DEGREE', '10')
        monkeypatch.setenv('NCWALK_SIMULATION_PROGRESS', 'true')
        config = ConfigManager(missing_config)
        assert config.seed == 7
        assert config.get('limits.max_state_degree') == 10
        assert config.get('simulation.progress') is True

    def test_witness_ranks_override(self, monkeypatch, missing_config):
        monkeypatch.setenv('NCWALK_ASYMPTOTICS_WITNESS_RANKS', '3')
        config = ConfigManager(missing_config)
        assert config.get('asymptotics.witness_ranks') == 3

    def test_negative_witness_ranks_rejected(self, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text(json.dumps({'asymptotics': {'witness_ranks': -1}}), encoding='utf-8')
        with pytest.raises(ConfigError):
            ConfigManager(str(path), strict=True)

    def test_strict_validation(self, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text(json.dumps({'simulation': {'workers': 0}}), encoding='utf-8')
        with pytest.raises(ConfigError):
            ConfigManager(str(path), strict=True)

    def test_set_and_save(self, tmp_path, missing_config):
        config = ConfigManager(missing_config)
        config.set('ctmc.tail_bound', 0.001)
        target = tmp_path / 'saved' / 'config.json'
        config.save(str(target))
        assert json.loads(target.read_text(encoding='utf-8'))['ctmc']['tail_bound'] == 0.001


class TestLogging:

    def test_rotating_file(self, tmp_path):
        log_file = tmp_path / 'logs' / 'run.log'
        setup_logging('INFO', str(log_file))
        ContextLogger('verify', 'demo').info('开始检查')
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert '[verify:demo] 开始检查' in log_file.read_text(encoding='utf-8')

    def test_exception_handler_reraises(self):
        @exception_handler
        def fail():
            raise ValueError('坏参数')

        with pytest.raises(ValueError):
            fail()


class TestStorage:

    def test_jsonable(self):
        t = MultiPoly.symbol('t')
        data = {'a': Fraction(3, 4), 'b': 2 * t + 1, 'c': MultiPoly.const(5), (1, 2): [Fraction(2)]}
        assert to_jsonable(data) == {'a': '3/4', 'b': '2*t + 1', 'c': '5', '(1, 2)': ['2']}
        assert json.loads(dumps({'x': Fraction(-1, 3)})) == {'x': '-1/3'}

    def test_save_json_and_csv(self, tmp_path):
        storage = ResultStorage(str(tmp_path / 'out'))
        path = storage.save_json('result', {'value': Fraction(1, 2)})
        assert path.endswith('result.json')
        with open(path, encoding='utf-8') as f:
            assert json.load(f) == {'value': '1/2'}

        path = storage.save_csv('rows', [{'k': 1, 'v': Fraction(1, 3)}, {'k': 2, 'v': Fraction(2)}])
        frame = pd.read_csv(path)
        assert list(frame['v'].astype(str)) == ['1/3', '2']

    def test_csv_rejects_non_tabular(self, tmp_path):
        with pytest.raises(ValueError):
            ResultStorage(str(tmp_path)).save_csv('bad', 'text')

    def test_save_report(self, tmp_path):
        storage = ResultStorage(str(tmp_path))
        report = {'suite': 'quick',
                  'checks': [{'name': 'a', 'criterion': '1', 'passed': True, 'status': 'partial'}]}
        path = storage.save_report(report, name='report')
        assert os.path.exists(path)
        frame = pd.read_csv(os.path.join(str(tmp_path), 'reports', 'report.csv'))
        assert list(frame['status']) == ['partial']
