"""
Иерархия исключений LapBound
Единый базовый класс и форматирование ошибок для отчетов и CLI
"""

from typing import Any, Dict, Optional


class LapBoundError(Exception):
    """Базовое исключение инструментария"""

    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Форматирование ошибки для JSON-вывода"""
        return {
            'type': type(self).__name__,
            'message': self.message,
            'details': self.details,
        }


class MalformedInputError(LapBoundError):
    """Некорректные входные данные (файл комплекса, грани с повторами)"""

    exit_code = 2


class ContractViolation(LapBoundError):
    """Нарушено предусловие операции"""

    exit_code = 2


class InternalConsistencyError(LapBoundError):
    """Самопроверка не сошлась: ошибка реализации"""

    exit_code = 1


class InapplicableBoundError(LapBoundError):
    """Оценка неприменима к данному экземпляру или k"""

    exit_code = 2


class FamilyAssumptionError(LapBoundError):
    """Граф не принадлежит заявленному семейству"""

    exit_code = 2


class DegenerateInstanceError(LapBoundError):
    """Вырожденный экземпляр (например, все старшие степени равны нулю)"""

    exit_code = 2


class EnumerationLimitError(LapBoundError):
    """Запрошенный перебор превышает допустимый размер"""

    exit_code = 2


class ConfigError(LapBoundError):
    """Ошибка конфигурации или аргументов командной строки"""

    exit_code = 2


class TheoremViolationError(LapBoundError):
    """Нарушено доказанное неравенство или тождество"""

    exit_code = 1
