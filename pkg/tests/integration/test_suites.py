# tests/integration/test_suites.py
"""
Сквозные прогоны наборов в уменьшенном масштабе
"""

import json

import pytest

from modules.harness import SuiteConfig, load_profile, run_suite


def _read_jsonl(path):
    return [json.loads(line) for line in path.read_text(encoding='utf-8').splitlines() if line]


class TestEqualityFamilies:
    """Семейства, на которых оценки достигаются"""

    def test_equality_streams(self, settings):
        cfg = SuiteConfig.build(
            name='equality_small',
            streams=['matching:r=1/2/3,m=1/2/3', 'star_forest:sizes=2/3/4', 'brouwer_equality:k=1/2/3,b=1/2/3',
                     'complete_partite:r=1,sizes=2/2'],
            bounds='degree_sum_main,brouwer,partite_degree_sum',
        )
        summary = run_suite(cfg, settings)
        assert summary.exit_code == 0
        assert summary.instances == 9 + 1 + 9 + 1
        for bound_id in ('degree_sum_main', 'brouwer', 'partite_degree_sum'):
            stats = summary.stats[bound_id]
            assert stats.violations == 0
            assert stats.min_slack == pytest.approx(0.0, abs=1e-9)

    def test_brouwer_equality_at_own_k(self, tmp_path, settings):
        cfg = SuiteConfig.build(streams=['brouwer_equality:k=1/2/3/4/5,b=1/2/3/4/5/6'], bounds='brouwer',
                                out_dir=str(tmp_path))
        summary = run_suite(cfg, settings)
        assert summary.exit_code == 0
        tight = []
        for report in _read_jsonl(tmp_path / 'reports.jsonl'):
            params = dict(item.split('=') for item in report['instance_id'].split(':', 1)[1].split(','))
            if report['k'] == int(params['k']):
                tight.append(report)
                assert report['slack'] == pytest.approx(0.0, abs=1e-8)
        assert len(tight) == 30

    def test_matching_complex_equality_at_every_k(self, tmp_path, settings):
        cfg = SuiteConfig.build(streams=['matching:r=2,m=4'], bounds='degree_sum_main', r=[2],
                                out_dir=str(tmp_path))
        run_suite(cfg, settings)
        reports = _read_jsonl(tmp_path / 'reports.jsonl')
        assert [r['k'] for r in reports] == [1, 2, 3, 4]
        for report in reports:
            assert report['lhs'] == pytest.approx(3 * report['k'])
            assert report['slack'] == pytest.approx(0.0, abs=1e-8)

    def test_path_gap_profile(self, tmp_path, settings):
        cfg = SuiteConfig.build(**{**load_profile('path_gap').model_dump(), 'out_dir': str(tmp_path)})
        summary = run_suite(cfg, settings)
        assert summary.exit_code == 0
        reports = _read_jsonl(tmp_path / 'reports.jsonl')
        assert [r['instance_id'] for r in reports] == ['path:n=50', 'path:n=100', 'path:n=200']
        slacks = [r['slack'] for r in reports]
        assert slacks == sorted(slacks, reverse=True)
        assert 0 < slacks[-1] < 0.01


class TestExhaustiveSmall:
    """Все графы на 5 вершинах с точностью до изоморфизма"""

    def test_theorem_bounds_hold(self, tmp_path, settings):
        profile = load_profile('exhaustive_quick')
        cfg = SuiteConfig.build(**{**profile.model_dump(), 'streams': ['enumerate:n=5'], 'dedup': True,
                                   'out_dir': str(tmp_path)})
        summary = run_suite(cfg, settings)
        assert summary.instances == 34
        assert summary.theorem_violations == []
        assert summary.exit_code == 0
        assert _read_jsonl(tmp_path / 'violations.jsonl') == []


class TestCheckProfiles:
    """Тождества, структурные проверки и матрицы доказательства"""

    @pytest.mark.parametrize('streams,checks', [
        (['random_graph:n=4/6/8,p=0.5,seed=7,count=5'], 'identities'),
        (['random_complex:n=5/6,r=1/2/3,p=0.3/1.0,seed=2024,count=2'], 'structural'),
        (['random_complex:n=5/6,r=1/2,p=0.5,seed=11,count=4', 'complete_partite:r=2,sizes=1/2/2'], 'gadgets'),
    ])
    def test_checks_hold(self, streams, checks, tmp_path, settings):
        cfg = SuiteConfig.build(streams=streams, checks=checks, out_dir=str(tmp_path))
        summary = run_suite(cfg, settings)
        assert summary.identity_failures == []
        assert summary.exit_code == 0
        records = _read_jsonl(tmp_path / 'identities.jsonl')
        assert len(records) == summary.instances
        assert all(record['holds'] for record in records)

    def test_gadgets_profile_partite_decompositions(self, tmp_path, settings):
        cfg = SuiteConfig.build(**{**load_profile('gadgets').model_dump(), 'out_dir': str(tmp_path)})
        summary = run_suite(cfg, settings)
        assert summary.exit_code == 0
        records = _read_jsonl(tmp_path / 'identities.jsonl')
        residuals = [record['identities']['partite_decomposition'] for record in records
                     if 'partite_decomposition' in record['identities']]
        assert len(residuals) >= 30
        assert all(residual == 0.0 for residual in residuals)


class TestConjecturesAndFamilies:
    def test_conjectures_never_report_theorem_failures(self, settings):
        cfg = SuiteConfig.build(
            streams=['enumerate:n=4', 'random_complex:n=6,r=2,p=0.6,seed=99,count=10'],
            bounds='brouwer,brouwer_plus,duval_reiner,higher_brouwer,signless_aot',
            report_mode='violations',
        )
        summary = run_suite(cfg, settings)
        assert summary.theorem_violations == []
        assert summary.conjecture_violations == []
        assert summary.exit_code == 0
        for bound_id in ('brouwer', 'brouwer_plus', 'duval_reiner', 'higher_brouwer', 'signless_aot'):
            assert summary.stats[bound_id].violations == 0

    def test_forest_bounds(self, settings):
        cfg = SuiteConfig.build(streams=['trees:n=2/3/4/5/6,dedup=1'],
                                bounds='hereditary_f,brouwer,signless_hereditary_f')
        summary = run_suite(cfg, settings)
        assert summary.instances == 1 + 1 + 2 + 3 + 6
        assert summary.exit_code == 0
