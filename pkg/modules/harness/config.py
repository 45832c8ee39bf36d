"""
Конфигурация прогона набора проверок
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from core.config import SystemConfig
from core.errors import ConfigError, LapBoundError
from modules.bounds import BoundId, FamilyAssumptions, resolve_bound_ids

logger = logging.getLogger(__name__)

CHECKS = ('bounds', 'identities', 'structural', 'gadgets')
REPORT_MODES = ('all', 'violations', 'none')
K_KEYWORDS = ('valid', '1..n')


def parse_k_spec(value: Union[str, int, List[int], None]) -> Union[str, List[int]]:
    """
    "valid" | "1..n" | "a..b" | "1,2,5" | список -> нормализованная форма

    Raises:
        ConfigError: при неверном синтаксисе или k < 1
    """
    if value is None:
        return 'valid'
    if isinstance(value, int):
        values = [value]
    elif isinstance(value, str):
        text = value.strip()
        if text in K_KEYWORDS:
            return text
        try:
            if '..' in text:
                start, _, stop = text.partition('..')
                values = list(range(int(start), int(stop) + 1))
            else:
                values = [int(x) for x in text.split(',') if x.strip()]
        except ValueError:
            raise ConfigError(f"Неверная спецификация k: {value!r}")
    else:
        values = [int(x) for x in value]
    if not values or any(k < 1 for k in values):
        raise ConfigError(f"Спецификация k должна задавать k >= 1: {value!r}")
    return sorted(set(values))


def parse_r_spec(value: Union[str, int, List[int], None]) -> Optional[List[int]]:
    """None - все допустимые r для каждой оценки"""
    if value is None or value == 'all':
        return None
    parsed = parse_k_spec(value)
    if isinstance(parsed, str):
        raise ConfigError(f"Неверная спецификация r: {value!r}")
    return parsed


class SuiteConfig(BaseModel):
    """Параметры прогона; JSON-файл --config повторяет эти поля"""

    name: str = "suite"
    streams: List[str] = Field(default_factory=list)
    bounds: List[str] = Field(default_factory=lambda: ['all-applicable'])
    k: Union[str, List[int]] = 'valid'
    r: Optional[List[int]] = None
    checks: List[str] = Field(default_factory=lambda: ['bounds'])
    assume: Optional[str] = None
    tol: Optional[float] = Field(default=None, ge=0.0)
    identity_tol: float = Field(default=1e-8, ge=0.0)
    parallelism: Optional[int] = Field(default=None, ge=1)
    chunk_size: int = Field(default=64, ge=1)
    dedup: bool = False
    strict: bool = False
    connected_only: bool = False
    leaderboard_size: int = Field(default=10, ge=1)
    report_mode: str = 'all'
    out_dir: Optional[str] = None
    seed: int = Field(default=0, ge=0)

    @field_validator('bounds', 'checks', mode='before')
    @classmethod
    def _split_csv(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [item.strip() for item in value.split(',') if item.strip()]
        return value

    @field_validator('streams', mode='before')
    @classmethod
    def _single_stream(cls, value: Any) -> Any:
        # дескрипторы содержат запятые, поэтому строка - один поток
        return [value] if isinstance(value, str) else value

    @field_validator('k', mode='before')
    @classmethod
    def _k(cls, value: Any) -> Any:
        return parse_k_spec(value)

    @field_validator('r', mode='before')
    @classmethod
    def _r(cls, value: Any) -> Any:
        return parse_r_spec(value)

    @field_validator('checks')
    @classmethod
    def _checks(cls, value: List[str]) -> List[str]:
        unknown = [c for c in value if c not in CHECKS]
        if unknown:
            raise ValueError(f"Неизвестные проверки {unknown}; допустимы {list(CHECKS)}")
        return value

    @field_validator('report_mode')
    @classmethod
    def _report_mode(cls, value: str) -> str:
        if value not in REPORT_MODES:
            raise ValueError(f"report_mode должен быть одним из {list(REPORT_MODES)}")
        return value

    @model_validator(mode='after')
    def _resolve(self) -> "SuiteConfig":
        if 'bounds' in self.checks:
            resolve_bound_ids(self.bounds)
        if self.assume:
            FamilyAssumptions.parse(self.assume)
        return self

    @property
    def bound_ids(self) -> List[BoundId]:
        return resolve_bound_ids(self.bounds)

    @property
    def assumptions(self) -> FamilyAssumptions:
        return FamilyAssumptions.parse(self.assume)

    @classmethod
    def build(cls, **values: Any) -> "SuiteConfig":
        """
        Создание с переводом ошибок валидации в ConfigError

        Raises:
            ConfigError: при неверных параметрах
        """
        try:
            return cls.model_validate({k: v for k, v in values.items() if v is not None})
        except ValidationError as e:
            raise ConfigError(f"Некорректная конфигурация набора: {e}") from e
        except LapBoundError as e:
            raise ConfigError(e.message, e.details) from e


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """JSON-файл конфигурации (зеркало флагов CLI)"""
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except FileNotFoundError:
        raise ConfigError(f"Файл конфигурации не найден: {path}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"Некорректный JSON в {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"Файл конфигурации {path} должен содержать JSON-объект")
    return data


def load_profile(name: str, system_config: Optional[SystemConfig] = None) -> SuiteConfig:
    """
    Профиль набора из config/modules/harness.yaml

    Raises:
        ConfigError: если профиль не найден
    """
    if system_config is None:
        system_config = SystemConfig()
        system_config.load()
    module_config = system_config.get_module_config('harness')
    profiles = module_config.get('harness', module_config).get('profiles', {}) or {}
    if name not in profiles:
        raise ConfigError(f"Профиль {name} не найден", {'known': sorted(profiles)})
    values = dict(profiles[name] or {})
    values.setdefault('name', name)
    logger.debug(f"Профиль {name}: {values}")
    return SuiteConfig.build(**values)
