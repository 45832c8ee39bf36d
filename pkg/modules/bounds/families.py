"""
Наследственные семейства графов
Утверждения о семействе, переборные проверки для малых n и функции числа ребер f(n)
"""

import logging
import math
from dataclasses import asdict, dataclass, fields
from itertools import combinations
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx

from core.errors import FamilyAssumptionError, MalformedInputError
from modules.complex_core import SimplicialComplex, to_networkx

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyAssumptions:
    """
    Заявленная принадлежность графа наследственным семействам

    Булевы флаги: None - не заявлено. Числовые параметры: None - не заявлено.
    """
    forest: Optional[bool] = None
    planar: Optional[bool] = None
    square_free: Optional[bool] = None
    girth5: Optional[bool] = None
    triangle_free: Optional[bool] = None
    max_degree: Optional[int] = None
    no_path: Optional[int] = None
    max_cycle: Optional[int] = None

    @classmethod
    def parse(cls, spec: Optional[str]) -> "FamilyAssumptions":
        """
        Разбор строки вида "forest,planar,max_degree=3,no_path=4"

        Raises:
            MalformedInputError: при неизвестном семействе или параметре
        """
        if not spec:
            return cls()
        known = {f.name for f in fields(cls)}
        numeric = {'max_degree', 'no_path', 'max_cycle'}
        values: Dict[str, object] = {}
        for token in spec.split(','):
            token = token.strip()
            if not token:
                continue
            name, _, raw = token.partition('=')
            name = name.strip().replace('-', '_')
            if name not in known:
                raise MalformedInputError(f"Неизвестное семейство графов: {name}")
            if name in numeric:
                try:
                    values[name] = int(raw)
                except ValueError:
                    raise MalformedInputError(f"Семейство {name} требует целый параметр: {token}")
            else:
                values[name] = True
        return cls(**values)

    def merge(self, other: "FamilyAssumptions") -> "FamilyAssumptions":
        """Объединение утверждений; заявленные в other значения имеют приоритет"""
        merged = asdict(self)
        merged.update({k: v for k, v in asdict(other).items() if v is not None})
        return FamilyAssumptions(**merged)

    def asserted(self) -> List[str]:
        """Имена заявленных семейств"""
        names = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is True or (f.name in ('max_degree', 'no_path', 'max_cycle') and value is not None):
                names.append(f.name)
        return names

    def to_dict(self) -> Dict[str, object]:
        return {k: v for k, v in asdict(self).items() if v is not None}

    @property
    def any(self) -> bool:
        return bool(self.asserted())


def has_triangle(graph: nx.Graph) -> bool:
    return any(count > 0 for count in nx.triangles(graph).values())


def has_four_cycle(graph: nx.Graph) -> bool:
    """C4 существует тогда и только тогда, когда у двух вершин >= 2 общих соседей"""
    for u, v in combinations(graph.nodes, 2):
        if len(set(graph[u]) & set(graph[v])) >= 2:
            return True
    return False


def _adjacency_masks(graph: nx.Graph) -> Tuple[List, List[int]]:
    nodes = list(graph.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    masks = [0] * len(nodes)
    for u, v in graph.edges:
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]
    return nodes, masks


def longest_path_edges(graph: nx.Graph) -> int:
    """Длина (в ребрах) самого длинного простого пути; динамика по подмножествам"""
    nodes, masks = _adjacency_masks(graph)
    n = len(nodes)
    if n == 0:
        return 0
    reachable = [0] * (1 << n)
    for v in range(n):
        reachable[1 << v] |= 1 << v
    best = 0
    for mask in range(1, 1 << n):
        ends = reachable[mask]
        if not ends:
            continue
        best = max(best, bin(mask).count('1') - 1)
        v = 0
        while ends:
            if ends & 1:
                free = masks[v] & ~mask
                w = 0
                while free:
                    if free & 1:
                        reachable[mask | (1 << w)] |= 1 << w
                    free >>= 1
                    w += 1
            ends >>= 1
            v += 1
    return best


def longest_cycle_length(graph: nx.Graph) -> int:
    """Длина самого длинного простого цикла (0 для леса)"""
    nodes, masks = _adjacency_masks(graph)
    n = len(nodes)
    best = 0
    for start in range(n):
        # пути из start по вершинам с большими номерами; start - минимальная вершина цикла
        allowed = ~((1 << start) - 1)
        reachable: Dict[int, int] = {1 << start: 1 << start}
        frontier = [1 << start]
        while frontier:
            next_frontier = []
            for mask in frontier:
                ends = reachable[mask]
                size = bin(mask).count('1')
                v = 0
                e = ends
                while e:
                    if e & 1:
                        if size >= 3 and masks[v] >> start & 1:
                            best = max(best, size)
                        free = masks[v] & allowed & ~mask
                        w = 0
                        while free:
                            if free & 1:
                                new_mask = mask | (1 << w)
                                if new_mask not in reachable:
                                    reachable[new_mask] = 0
                                    next_frontier.append(new_mask)
                                reachable[new_mask] |= 1 << w
                            free >>= 1
                            w += 1
                    e >>= 1
                    v += 1
            frontier = next_frontier
    return best


def verify_assumptions(G: SimplicialComplex, assumptions: FamilyAssumptions,
                       max_n: int = 12) -> bool:
    """
    Переборная проверка заявленных семейств при n <= max_n

    Планарность не проверяется (принимается как заявлено).

    Returns:
        True, если проверка выполнена; False, если граф слишком велик и утверждения приняты на веру

    Raises:
        FamilyAssumptionError: если граф не принадлежит заявленному семейству
    """
    if not assumptions.any:
        return True
    if G.n > max_n:
        logger.debug(f"n={G.n} > {max_n}: семейства {assumptions.asserted()} приняты без проверки")
        return False

    graph = to_networkx(G)
    failures = []
    if assumptions.forest and not nx.is_forest(graph):
        failures.append('forest')
    if assumptions.max_degree is not None:
        top = max((d for _, d in graph.degree), default=0)
        if top > assumptions.max_degree:
            failures.append(f'max_degree={assumptions.max_degree}')
    if (assumptions.triangle_free or assumptions.girth5) and has_triangle(graph):
        failures.append('triangle_free' if assumptions.triangle_free else 'girth5')
    if (assumptions.square_free or assumptions.girth5) and has_four_cycle(graph):
        failures.append('square_free' if assumptions.square_free else 'girth5')
    if assumptions.no_path is not None and longest_path_edges(graph) >= assumptions.no_path:
        failures.append(f'no_path={assumptions.no_path}')
    if assumptions.max_cycle is not None and longest_cycle_length(graph) > assumptions.max_cycle:
        failures.append(f'max_cycle={assumptions.max_cycle}')

    if failures:
        raise FamilyAssumptionError(f"Граф не принадлежит семействам: {', '.join(failures)}",
                                    {'failed': failures, 'n': G.n})
    return True


def _planar_edges(n: int) -> float:
    return 3 * n - 6 if n >= 3 else comb(n, 2)


# f(n): наибольшее число ребер n-вершинного графа семейства
EDGE_FUNCTIONS: Dict[str, Callable[[FamilyAssumptions, int], float]] = {
    'forest': lambda a, n: max(n - 1, 0),
    'planar': lambda a, n: _planar_edges(n),
    'square_free': lambda a, n: math.floor(n * (1 + math.sqrt(4 * n - 3)) / 4) if n > 0 else 0,
    'girth5': lambda a, n: math.floor(n * math.sqrt(n - 1) / 2) if n > 0 else 0,
    'triangle_free': lambda a, n: n * n // 4,
    'max_degree': lambda a, n: n * a.max_degree / 2,
    'no_path': lambda a, n: math.floor((a.no_path - 1) * n / 2),
    'max_cycle': lambda a, n: math.floor(a.max_cycle * (n - 1) / 2) if n > 0 else 0,
}


def family_term(name: str, assumptions: FamilyAssumptions, k: int, signless: bool = False) -> float:
    """
    Добавка к |E| для семейства: f(2k)

    Для ограниченной степени в знаковом случае добавка k * min(Delta, k).
    """
    if name == 'max_degree' and not signless:
        return k * min(assumptions.max_degree, k)
    return EDGE_FUNCTIONS[name](assumptions, 2 * k)


def validate_parameters(assumptions: FamilyAssumptions):
    if assumptions.max_degree is not None and assumptions.max_degree < 0:
        raise MalformedInputError("max_degree должен быть неотрицательным")
    if assumptions.no_path is not None and assumptions.no_path < 1:
        raise MalformedInputError("no_path требует t >= 1")
    if assumptions.max_cycle is not None and assumptions.max_cycle < 2:
        raise MalformedInputError("max_cycle требует t >= 2")
