#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 命令行测试
"""

import json

import pandas as pd
import pytest

from src.main import main


@pytest.fixture(autouse=True)
def no_log_file(monkeypatch, tmp_path):
    monkeypatch.setenv('NCWALK_LOGGING_FILE', '')
    monkeypatch.setenv('NCWALK_OUTPUT_DIR', str(tmp_path / 'output'))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestSymbolicCommands:

    def test_eval_5453(self, capsys):
        code, data = run_json(capsys, 'eval', '--psi', '4', '--N', '2', '--t', '3', '--lambda', '4,2')
        assert code == 0
        assert data['value'] == '5453'
        assert data['numerator'] == '5453' and data['denominator'] == '1'

    def test_zero_state(self, capsys):
        code, data = run_json(capsys, 'state', '--monomial', 'E[1,1]E[1,2]', '--t', 't')
        assert code == 0
        assert data['value'] == '0'

    def test_state_at_rational_time(self, capsys):
        _, data = run_json(capsys, 'state', '--monomial', 'E[1,1]E[1,1]', '--t', '2')
        assert data['value'] == '6'
        _, data = run_json(capsys, 'state', '--monomial', 'E[1,1]', '--t', '1/2')
        assert data['value'] == '1/2'

    def test_normal_form_of_commutator(self, capsys):
        code, data = run_json(capsys, 'normal-form', '--element', 'E[1,2]E[2,1] - E[2,1]E[1,2]')
        assert code == 0
        assert data['rank'] == 2
        assert data['terms'] == 2

    def test_apply_pt(self, capsys):
        _, data = run_json(capsys, 'apply-pt', '--element', 'E[1,1]', '--t', '3')
        assert data['terms'] == 2

    def test_psi(self, capsys):
        _, data = run_json(capsys, 'psi', '--k', '1', '--N', '2', '--check-central')
        assert data['central'] is True

    def test_hc(self, capsys):
        _, data = run_json(capsys, 'hc', '--psi', '2', '--N', '2')
        assert data['power_sums'] == [{'partition': [2], 'coefficient': '1'}]

    def test_pt_expand(self, capsys):
        _, data = run_json(capsys, 'pt-expand', '--k', '2', '--N', '2', '--t', '1')
        assert data['rows'] == [
            {'partition': [2], 'coefficient': '1'},
            {'partition': [1], 'coefficient': '2'},
            {'partition': [], 'coefficient': '6'},
        ]

    def test_gt_eval(self, capsys):
        code, data = run_json(capsys, 'gt-eval', '--element', '(E[1,1] + E[2,2] - 1)*E[1,1]',
                              '--N', '2', '--t', '1', '--lambda', '2:1,0;1:0')
        assert code == 0
        assert data['value'] == '3'

    def test_asymptotics(self, capsys):
        _, data = run_json(capsys, 'asymptotics', '--k', '2')
        partitions = [row['partition'] for row in data['rows']]
        assert [2] in partitions and [1] in partitions
        _, data = run_json(capsys, 'asymptotics', '--mean', '1')
        assert data['degree'] == 2

    def test_asymptotics_product(self, capsys):
        _, data = run_json(capsys, 'asymptotics', '--product', '1,1')
        assert data['product'] == [1, 1]
        assert [row['partition'] for row in data['rows']] == [[1, 1], [1], []]
        assert [row['weight'] for row in data['rows']] == [4, 2, 0]

    def test_csv_format(self, capsys):
        code, out = run(capsys, '--format', 'csv', 'pt-expand', '--k', '2', '--N', '2')
        assert code == 0
        assert out.splitlines()[0] == 'partition,coefficient'


class TestNumericCommands:

    def test_cov(self, capsys):
        code, data = run_json(capsys, 'cov', '--i', '1,3,2', '--j', '1,1,2')
        assert code == 0
        assert data['branch'] == 'spacelike'
        assert data['value'] == '2'

    def test_cov_verify_ckl(self, capsys):
        code, data = run_json(capsys, 'cov', '--verify-ckl', '3', '--draws', '3')
        assert code == 0
        assert data['passed'] is True

    def test_detform(self, capsys):
        _, data = run_json(capsys, 'detform', '--x', '4', '--y', '2', '--t', '3', '--k', '4')
        assert abs(data['value'] - 5453) < 1e-6

    def test_oracle_state(self, capsys):
        _, data = run_json(capsys, 'oracle-state', '--monomial', 'E[2,1]E[1,2]')
        assert data['value'] == 't'

    def test_simulate_is_reproducible(self, capsys):
        argv = ('simulate', '--levels', '1', '--t', '2', '--replicas', '2000', '--seed', '5')
        code, first = run(capsys, *argv)
        _, second = run(capsys, *argv)
        assert code == 0
        assert first == second
        data = json.loads(first)
        assert abs(data['mean'] - 2) <= 4 * data['stderr']
        assert data['seed'] == 5

    def test_simulate_csv_dump(self, capsys, tmp_path):
        path = tmp_path / 'snap.csv'
        code, _ = run(capsys, 'simulate', '--levels', '2', '--schedule', '(2,1);(1,2)',
                      '--obs', 'p1;p1', '--replicas', '10', '--csv', str(path), '--dump', '3')
        assert code == 0
        frame = pd.read_csv(path)
        assert len(frame) == 3 * (2 + 1)
        assert set(frame['replica']) == {0, 1, 2}

    def test_ctmc(self, capsys):
        code, data = run_json(capsys, 'ctmc', '--levels', '1', '--t', '2')
        assert code == 0
        assert abs(data['value'] - 2) <= data['bound'] + 1e-9

    def test_ctmc_distribution(self, capsys):
        _, data = run_json(capsys, 'ctmc', '--levels', '1', '--t', '1', '--distribution')
        assert data['rows'][0]['state'] in ('0', '1')


class TestErrors:

    def test_domain_error_exit_code(self, capsys):
        code, data = run_json(capsys, 'cov', '--branch', 'timelike', '--i', '1,3,2', '--j', '1,1,2')
        assert code == 1
        assert data['type'] == 'BranchOrderError'

    def test_parse_error(self, capsys):
        code, data = run_json(capsys, 'state', '--monomial', 'E[1,2', '--t', 't')
        assert code == 1
        assert data['type'] == 'ParseError'

    def test_float_rejected(self, capsys):
        code, data = run_json(capsys, 'detform', '--x', '4', '--y', '2', '--t', '0.5', '--k', '1')
        assert code == 1
        assert data['type'] == 'ParseError'

    def test_ctmc_depth_limit(self, capsys):
        code, data = run_json(capsys, 'ctmc', '--levels', '4', '--t', '1')
        assert code == 1
        assert data['type'] == 'TruncationError'

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(['eval'])
        assert exc.value.code == 2


class TestVerifyCommand:

    def test_selected_checks(self, capsys):
        code, data = run_json(capsys, 'verify', '--check', 'state_examples', '--check', '5')
        assert code == 0
        assert data['total'] == 2
        assert data['passed'] is True

    def test_save_report(self, capsys, tmp_path):
        code, data = run_json(capsys, 'verify', '--check', '4', '--save')
        assert code == 0
        with open(data['saved_to'], encoding='utf-8') as f:
            saved = json.load(f)
        assert saved['checks'][0]['criterion'] == '4'
