"""
Конфигурация системы
YAML-файлы из config/ и переменные окружения с префиксом LB_
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from .errors import ConfigError

DEFAULT_CONFIG_DIR = Path(__file__).resolve().parent.parent / "config"


class SystemConfig:
    """
    Загрузка и доступ к конфигурации системы из YAML файлов
    """

    def __init__(self, config_path: Optional[Path] = None):
        self.config: Dict[str, Any] = {}
        self.config_path = Path(config_path) if config_path else DEFAULT_CONFIG_DIR
        self.loaded_files: List[str] = []
        self.failed_files: List[Dict[str, str]] = []
        self.logger = logging.getLogger('core.config')

    def load(self, required: bool = False) -> bool:
        """Загрузка system.yaml и всех config/modules/*.yaml"""
        if not self.config_path.exists():
            message = f"Директория конфигурации {self.config_path} не найдена"
            if required:
                raise ConfigError(message)
            self.logger.warning(message)
            return False

        system_file = self.config_path / "system.yaml"
        if system_file.exists():
            data = self._read_yaml(system_file)
            if data:
                self.config.update(data)
        elif required:
            raise ConfigError(f"Отсутствует обязательный файл {system_file}")

        modules_dir = self.config_path / "modules"
        if modules_dir.exists():
            for config_file in sorted(modules_dir.glob("*.yaml")):
                module_config = self._read_yaml(config_file) or {}
                self.config.setdefault('modules', {})[config_file.stem] = module_config

        self.logger.debug(
            f"Конфигурация загружена: {len(self.loaded_files)} файлов, "
            f"{len(self.failed_files)} с ошибками"
        )
        return not self.failed_files

    def _read_yaml(self, path: Path) -> Optional[Dict[str, Any]]:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
            self.loaded_files.append(str(path))
            return data
        except yaml.YAMLError as e:
            self.failed_files.append({'file': str(path), 'error': str(e)})
            self.logger.error(f"Ошибка YAML в {path.name}: {e}")
            return None

    def get(self, key: str, default: Optional[Any] = None) -> Any:
        """Получение значения по ключу (вложенные ключи через '.')"""
        value: Any = self.config
        try:
            for k in key.split('.'):
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def get_module_config(self, module_name: str) -> Dict[str, Any]:
        """Конфигурация конкретного модуля"""
        return self.config.get('modules', {}).get(module_name, {})


class HarnessSettings(BaseSettings):
    """Численные допуски и лимиты; переопределяются через LB_* и .env"""

    model_config = SettingsConfigDict(env_prefix="LB_", env_file=".env", extra="ignore")

    tol: float = Field(default=1e-7, ge=0.0)
    zero_tol_rel: float = Field(default=1e-9, ge=0.0)
    symmetry_tol: float = Field(default=1e-12, ge=0.0)
    parallelism: int = Field(default=1, ge=1)
    log_level: str = "INFO"
    log_dir: str = "logs"
    max_enumeration_n: int = 7
    hard_enumeration_n: int = 8
    induced_exact_n: int = 16
    family_check_n: int = 12
    partite_search_n: int = 24
    witness_bruteforce_faces: int = 12


def load_settings(system_config: Optional[SystemConfig] = None, **overrides: Any) -> HarnessSettings:
    """
    Сборка настроек: YAML по умолчанию < окружение < явные параметры

    Args:
        system_config: Загруженная конфигурация (если None - читается config/)
        overrides: Явные значения (флаги CLI, файл --config)
    """
    if system_config is None:
        system_config = SystemConfig()
        system_config.load()

    yaml_defaults = dict(system_config.get('numerics', {}) or {})
    yaml_defaults.update(system_config.get('limits', {}) or {})
    if system_config.get('logging.level'):
        yaml_defaults.setdefault('log_level', system_config.get('logging.level'))
    if system_config.get('logging.dir'):
        yaml_defaults.setdefault('log_dir', system_config.get('logging.dir'))

    env_settings = HarnessSettings()
    # поля, явно заданные окружением, важнее YAML
    merged = {k: v for k, v in yaml_defaults.items() if k in HarnessSettings.model_fields}
    merged.update(env_settings.model_dump(exclude_unset=True))
    merged.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return HarnessSettings.model_validate(merged)
    except ValueError as e:
        raise ConfigError(f"Некорректные настройки: {e}") from e
