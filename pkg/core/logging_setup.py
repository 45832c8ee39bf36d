"""
Настройка системы логирования
"""

import logging
import sys
from pathlib import Path
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: str = "INFO", log_dir: Optional[str] = "logs",
                  log_file: str = "lapbound.log") -> logging.Logger:
    """
    Файловый и потоковый обработчики; поток - stderr, stdout остается для результатов

    Returns:
        Корневой логгер инструментария
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    try:
        if log_dir:
            logs_path = Path(log_dir)
            logs_path.mkdir(parents=True, exist_ok=True)
            handlers.append(logging.FileHandler(logs_path / log_file, encoding='utf-8'))
    except OSError as e:
        print(f"⚠️ Не удалось открыть файл журнала: {e}", file=sys.stderr)

    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
    logger = logging.getLogger("lapbound")
    logger.debug("Система логирования инициализирована")
    return logger
