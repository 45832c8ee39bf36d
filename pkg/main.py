# main.py - ГЛАВНЫЙ ЗАПУСКАЕМЫЙ ФАЙЛ (точка входа)

import os
import sys

# Добавляем корневую директорию в путь для импортов
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

try:
    from modules.harness.cli import main
except ImportError as e:
    print(f"❌ КРИТИЧЕСКАЯ ОШИБКА: Не удалось импортировать модули LapBound: {e}", file=sys.stderr)
    print("💡 Установите зависимости: pip install -r requirements.txt", file=sys.stderr)
    sys.exit(2)


if __name__ == "__main__":
    sys.exit(main())
