"""
Модуль прогона
Наборы проверок над потоками экземпляров, тождества, запись отчетов и командная строка
"""

from .checks import check_gadgets, check_structure
from .config import SuiteConfig, load_config_file, load_profile, parse_k_spec, parse_r_spec
from .identities import IdentityReport, check_identities, coning_check, extremal_cone_check
from .runner import (
    BoundStats,
    InstanceOutcome,
    RunSummary,
    SlackLeaderboard,
    SuiteRunner,
    min_slack_search,
    run_suite,
)
from .writers import ReportWriter

__all__ = [
    'SuiteConfig',
    'load_config_file',
    'load_profile',
    'parse_k_spec',
    'parse_r_spec',
    'RunSummary',
    'BoundStats',
    'InstanceOutcome',
    'SlackLeaderboard',
    'SuiteRunner',
    'run_suite',
    'min_slack_search',
    'IdentityReport',
    'check_identities',
    'coning_check',
    'extremal_cone_check',
    'check_structure',
    'check_gadgets',
    'ReportWriter',
]
