#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 验证套件测试
"""

import pytest

from scripts.generate_report import render
from src.utils.config import ConfigManager
from src.utils.errors import SingularSystemError
from src.verify import BaseCheck, build_checks, run_checks
from src.verify.checks import (AsymptoticsCheck, CentralityCheck, CentreEvaluationCheck,
                               CovarianceCheck, GibbsCheck, HeuristicsCheck, MarginalsCheck,
                               MarkovExpansionCheck, MeanAsymptoticsCheck,
                               OracleEquivalenceCheck, SemigroupCheck, SpaceLikeCheck,
                               TimeLikeCheck, expected_pt_psi)

SEED = 20240607


@pytest.fixture
def config(monkeypatch):
    monkeypatch.setenv('NCWALK_LOGGING_FILE', '')
    return ConfigManager()


class BrokenCheck(BaseCheck):
    criterion = 'x'

    def execute(self):
        raise SingularSystemError("奇异")


class TestBaseCheck:

    def test_name_from_class(self):
        assert CentreEvaluationCheck().name == 'centre_evaluation'
        assert BrokenCheck().name == 'broken'

    def test_exception_becomes_failure(self):
        result = BrokenCheck().run()
        assert result['passed'] is False
        assert result['status'] == 'failed'
        assert result['details']['type'] == 'SingularSystemError'
        assert result['runtime_s'] >= 0
        assert result['rss_mb'] > 0

    def test_result_fields(self):
        result = CentreEvaluationCheck().run()
        assert result['passed'] is True
        assert result['measured'] == ['5453', '3']
        assert result['status'] == 'passed'
        assert result['scope'] == {}
        assert set(result) == {'name', 'criterion', 'passed', 'status', 'scope', 'measured', 'expected',
                               'tolerance', 'runtime_s', 'rss_mb', 'details'}

    def test_default_scope_meets_requirement(self):
        assert OracleEquivalenceCheck().scope() == {'oracle_max_degree': {'used': 5, 'required': 5}}
        assert SpaceLikeCheck().scope()['spacelike_replicas']['used'] == 1000000

    def test_reduced_scope_is_partial(self):
        result = SemigroupCheck({'semigroup_max_degree': 2}).run()
        assert result['passed'] is True
        assert result['status'] == 'partial'
        assert result['scope'] == {'semigroup_max_degree': {'used': 2, 'required': 4}}


class TestChecks:

    def test_markov_expansion(self):
        assert MarkovExpansionCheck().run()['passed']

    def test_unknown_expansion(self):
        with pytest.raises(ValueError):
            expected_pt_psi(4, 3)

    def test_oracle_equivalence_small(self):
        result = OracleEquivalenceCheck({'oracle_max_degree': 3}).run()
        assert result['passed']
        assert result['expected'] == 9 + 81 + 729
        assert result['status'] == 'partial'

    def test_semigroup_small(self):
        assert SemigroupCheck({'semigroup_max_degree': 2}).run()['passed']

    def test_covariance(self):
        assert CovarianceCheck(seed=SEED).run()['passed']

    def test_mean_asymptotics(self):
        assert MeanAsymptoticsCheck().run()['passed']

    def test_asymptotics_includes_psi1_squared(self):
        result = AsymptoticsCheck({'asymptotics_max_k': 2}).run()
        assert result['passed'], result
        assert result['details']['products'] == [[1, 1]]
        assert result['status'] == 'partial'

    def test_heuristics(self):
        result = HeuristicsCheck().run()
        assert result['passed'], result
        assert result['details']['product_covariance_order'] == 4

    def test_gibbs(self):
        result = GibbsCheck({'gibbs_max_depth': 2}).run()
        assert result['passed'], result

    @pytest.mark.slow
    def test_centrality(self):
        assert CentralityCheck().run()['passed']

    @pytest.mark.slow
    def test_marginals(self):
        assert MarginalsCheck({'moment_replicas': 20000}, seed=SEED).run()['passed']

    @pytest.mark.slow
    def test_space_like(self):
        assert SpaceLikeCheck({'spacelike_replicas': 20000}, seed=SEED).run()['passed']

    @pytest.mark.slow
    def test_time_like(self):
        result = TimeLikeCheck({'timelike_replicas': 40000}, seed=SEED).run()
        assert result['passed'], result


class TestRunner:

    def test_selected_checks(self, config):
        report = run_checks('quick', 1, config, names=['state_examples', '5'])
        assert report['passed'] is True
        assert [c['name'] for c in report['checks']] == ['state_examples', 'determinantal']
        assert report['seed'] == config.seed

    def test_threads_keep_order(self, config):
        names = ['state_examples', 'centre_evaluation', 'determinantal']
        serial = run_checks('quick', 1, config, names=names)
        threaded = run_checks('quick', 3, config, names=names)
        assert [c['name'] for c in threaded['checks']] == names
        assert [c['measured'] for c in threaded['checks']] == [c['measured'] for c in serial['checks']]

    def test_suite_parameters(self, config):
        quick = {c.name: c for c in build_checks('quick', config)}
        full = {c.name: c for c in build_checks('full', config)}
        assert quick['space_like'].params['spacelike_replicas'] < full['space_like'].params['spacelike_replicas']
        assert full['time_like'].params['timelike_replicas'] == 1000000
        assert len(quick) == 15
        assert quick['asymptotics'].params['witness_ranks'] == 1

    def test_witness_ranks_from_config(self, config):
        config.set('asymptotics.witness_ranks', 2)
        checks = {c.name: c for c in build_checks('full', config)}
        assert checks['heuristics'].params['witness_ranks'] == 2

    def test_reduced_suite_reports_partial(self, config):
        config.set('verify.suites.quick.semigroup_max_degree', 2)
        report = run_checks('quick', 1, config, names=['semigroup', 'state_examples'])
        assert report['passed'] is True
        assert report['failed'] == []
        assert report['partial'] == ['semigroup']

    def test_markdown_lists_partial_checks(self, config):
        config.set('verify.suites.quick.semigroup_max_degree', 2)
        report = run_checks('quick', 1, config, names=['semigroup'])
        text = render(report, 'report.json')
        assert '| 6 | semigroup | 部分通过 |' in text
        assert '## 部分通过的检查' in text
        assert 'semigroup_max_degree = 2（要求 4）' in text

    def test_unknown_names(self, config):
        with pytest.raises(ValueError):
            build_checks('quick', config, names=['no_such_check'])
        with pytest.raises(ValueError):
            build_checks('medium', config)
