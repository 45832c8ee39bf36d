#!/usr/bin/env python3
"""
Тестирование базового функционала ядра: ошибки, настройки, журнал, монитор прогонов
"""

import logging

import pytest

from core import (
    ConfigError,
    ContractViolation,
    HarnessSettings,
    InternalConsistencyError,
    LapBoundError,
    MalformedInputError,
    RunMonitor,
    SystemConfig,
    TheoremViolationError,
    load_settings,
    setup_logging,
)


def write_config(path, text):
    path.mkdir(parents=True, exist_ok=True)
    (path / 'system.yaml').write_text(text, encoding='utf-8')
    return SystemConfig(path)


class TestErrors:
    def test_to_dict(self):
        error = MalformedInputError('плохая грань', {'facet': [1, 1]})
        assert error.to_dict() == {'type': 'MalformedInputError', 'message': 'плохая грань',
                                   'details': {'facet': [1, 1]}}
        assert str(error) == 'плохая грань'

    def test_exit_codes(self):
        assert LapBoundError('x').exit_code == 1
        assert InternalConsistencyError('x').exit_code == 1
        assert TheoremViolationError('x').exit_code == 1
        for cls in (MalformedInputError, ContractViolation, ConfigError):
            assert cls('x').exit_code == 2
            assert issubclass(cls, LapBoundError)


class TestSystemConfig:
    def test_nested_get(self, tmp_path):
        cfg = write_config(tmp_path / 'config', "numerics:\n  tol: 1.0e-6\nlogging:\n  level: DEBUG\n")
        assert cfg.load()
        assert cfg.get('numerics.tol') == 1e-6
        assert cfg.get('numerics.missing', 5) == 5
        assert cfg.get_module_config('harness') == {}

    def test_module_files(self, tmp_path):
        cfg = write_config(tmp_path / 'config', "system:\n  name: t\n")
        (tmp_path / 'config' / 'modules').mkdir()
        (tmp_path / 'config' / 'modules' / 'harness.yaml').write_text(
            "harness:\n  profiles:\n    p: {streams: ['path:n=3']}\n", encoding='utf-8')
        cfg.load()
        assert cfg.get_module_config('harness')['harness']['profiles']['p']['streams'] == ['path:n=3']

    def test_broken_yaml(self, tmp_path):
        cfg = write_config(tmp_path / 'config', "numerics: [unclosed\n")
        assert cfg.load() is False
        assert len(cfg.failed_files) == 1

    def test_missing_directory(self, tmp_path):
        assert SystemConfig(tmp_path / 'absent').load() is False
        with pytest.raises(ConfigError):
            SystemConfig(tmp_path / 'absent').load(required=True)


class TestSettings:
    @pytest.fixture(autouse=True)
    def _clean_env(self, monkeypatch):
        for name in ('LB_TOL', 'LB_PARALLELISM', 'LB_LOG_LEVEL'):
            monkeypatch.delenv(name, raising=False)

    def test_defaults(self):
        settings = HarnessSettings()
        assert settings.tol == 1e-7
        assert settings.max_enumeration_n == 7
        assert settings.hard_enumeration_n == 8

    def test_precedence(self, tmp_path, monkeypatch):
        cfg = write_config(tmp_path / 'config', "numerics:\n  tol: 1.0e-6\nlimits:\n  parallelism: 3\n")
        cfg.load()
        assert load_settings(cfg).tol == 1e-6
        assert load_settings(cfg).parallelism == 3

        monkeypatch.setenv('LB_TOL', '1e-5')
        assert load_settings(cfg).tol == 1e-5
        assert load_settings(cfg, tol=1e-4).tol == 1e-4
        assert load_settings(cfg, tol=None).tol == 1e-5

    def test_invalid_override(self, tmp_path):
        cfg = write_config(tmp_path / 'config', "")
        cfg.load()
        with pytest.raises(ConfigError):
            load_settings(cfg, tol=-1.0)


class TestRuntime:
    def test_setup_logging(self, tmp_path):
        logger = setup_logging('DEBUG', str(tmp_path / 'logs'))
        assert logger.name == 'lapbound'
        logging.getLogger('lapbound.test').info('запись')
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert 'запись' in (tmp_path / 'logs' / 'lapbound.log').read_text(encoding='utf-8')

    def test_run_monitor(self):
        monitor = RunMonitor('t', sample_every=1).start()
        monitor.begin_stage('a')
        monitor.record_instance(3)
        monitor.record_instance(3)
        monitor.end_stage('a')
        metrics = monitor.stop()
        assert metrics.instances == 2
        assert metrics.reports == 6
        assert metrics.wall_time >= 0.0
        assert metrics.peak_rss_mb > 0.0
        data = monitor.as_dict()
        assert set(data['stage_times']) == {'a'}
        assert data['instances'] == 2
