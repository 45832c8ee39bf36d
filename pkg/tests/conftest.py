# tests/conftest.py
"""
Общие фикстуры тестов LapBound
"""

import os
import sys

import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.config import HarnessSettings  # noqa: E402
from modules.complex_core import build_complex  # noqa: E402
from modules.generators import gen_complete_graph, gen_path, gen_star  # noqa: E402


@pytest.fixture
def settings(tmp_path):
    """Настройки без чтения окружения; журнал во временный каталог"""
    return HarnessSettings(log_dir=str(tmp_path / "logs"))


@pytest.fixture
def star4():
    return gen_star(4)


@pytest.fixture
def path3():
    return gen_path(3)


@pytest.fixture
def k3():
    return gen_complete_graph(3)


@pytest.fixture
def full_triangle():
    """Заполненный треугольник: f = (3, 3, 1)"""
    return build_complex([[0, 1, 2]])


@pytest.fixture
def hollow_complex():
    """Два треугольника с общим ребром и висячее ребро"""
    return build_complex([[0, 1, 2], [1, 2, 3], [3, 4]])
