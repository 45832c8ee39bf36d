"""
Полный перебор помеченных графов и деревьев
"""

import logging
from itertools import combinations
from typing import Hashable, Iterator, List, Tuple

import networkx as nx
import numpy as np

from core.errors import EnumerationLimitError
from modules.complex_core import SimplicialComplex
from modules.spectra import graph_spectrum

logger = logging.getLogger(__name__)


def graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def check_enumeration_limit(n: int, max_n: int = 7, hard_n: int = 8):
    """
    Raises:
        EnumerationLimitError: n больше рабочего или жесткого предела
    """
    limit = min(max_n, hard_n)
    if n > limit:
        raise EnumerationLimitError(
            f"Перебор графов на n={n} вершинах запрещен (предел {limit}, жесткий предел {hard_n}; "
            f"2^{n * (n - 1) // 2} помеченных графов)",
            {'n': n, 'max_n': max_n, 'hard_n': hard_n},
        )


def graph_from_mask(n: int, mask: int) -> SimplicialComplex:
    """Граф с битовой маской ребер; бит i - i-я пара в лексикографическом порядке"""
    edges = [pair for i, pair in enumerate(combinations(range(n), 2)) if mask >> i & 1]
    return SimplicialComplex.from_edges(range(n), edges)


def invariant_key(G: SimplicialComplex, decimals: int = 6) -> Hashable:
    """
    Дешевый инвариант класса: отсортированные степени + округленный спектр

    Совпадение ключей не означает изоморфизм; фильтр только сокращает работу.
    """
    degrees = sorted(G.vertex_degrees(1).values(), reverse=True)
    spectrum = np.round(graph_spectrum(G).eigenvalues, decimals) + 0.0
    return tuple(degrees), tuple(float(x) for x in spectrum)


def enumerate_graphs(n: int, dedup: bool = False, max_n: int = 7,
                     hard_n: int = 8) -> Iterator[Tuple[int, SimplicialComplex]]:
    """
    Все 2^C(n,2) помеченных графов в порядке масок ребер

    Args:
        n: Число вершин
        dedup: Пропускать повторы инварианта (степени + спектр)
        max_n: Рабочий предел
        hard_n: Жесткий предел

    Yields:
        (маска, граф)
    """
    check_enumeration_limit(n, max_n, hard_n)
    seen = set()
    for mask in range(graph_count(n)):
        G = graph_from_mask(n, mask)
        if dedup:
            key = invariant_key(G)
            if key in seen:
                continue
            seen.add(key)
        yield mask, G


def tree_count(n: int) -> int:
    return 1 if n <= 2 else n ** (n - 2)


def tree_from_index(n: int, index: int) -> SimplicialComplex:
    """Дерево по номеру последовательности Прюфера (цифры по основанию n)"""
    if n == 1:
        return SimplicialComplex.from_edges([0], [])
    if n == 2:
        return SimplicialComplex.from_edges([0, 1], [(0, 1)])
    sequence: List[int] = []
    value = index
    for _ in range(n - 2):
        sequence.append(value % n)
        value //= n
    sequence.reverse()
    tree = nx.from_prufer_sequence(sequence)
    edges = sorted(tuple(sorted(edge)) for edge in tree.edges())
    return SimplicialComplex.from_edges(range(n), edges)


def enumerate_trees(n: int, dedup: bool = False, max_n: int = 8) -> Iterator[Tuple[int, SimplicialComplex]]:
    """Все n^(n-2) помеченных деревьев (декодирование Прюфера)"""
    if n < 1:
        return
    if n > max_n:
        raise EnumerationLimitError(f"Перебор деревьев на n={n} вершинах запрещен (предел {max_n})",
                                    {'n': n, 'max_n': max_n})
    seen = set()
    for index in range(tree_count(n)):
        T = tree_from_index(n, index)
        if dedup:
            key = invariant_key(T)
            if key in seen:
                continue
            seen.add(key)
        yield index, T
