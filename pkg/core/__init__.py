"""
Ядро LapBound
Конфигурация, журналирование, ошибки и мониторинг прогонов
"""

from .config import HarnessSettings, SystemConfig, load_settings
from .errors import (
    ConfigError,
    ContractViolation,
    DegenerateInstanceError,
    EnumerationLimitError,
    FamilyAssumptionError,
    InapplicableBoundError,
    InternalConsistencyError,
    LapBoundError,
    MalformedInputError,
    TheoremViolationError,
)
from .logging_setup import setup_logging
from .performance_monitor import PerformanceMetrics, RunMonitor

__all__ = [
    'SystemConfig',
    'HarnessSettings',
    'load_settings',
    'setup_logging',
    'RunMonitor',
    'PerformanceMetrics',
    'LapBoundError',
    'MalformedInputError',
    'ContractViolation',
    'InternalConsistencyError',
    'InapplicableBoundError',
    'FamilyAssumptionError',
    'DegenerateInstanceError',
    'EnumerationLimitError',
    'ConfigError',
    'TheoremViolationError',
]

__version__ = "1.0.0"
