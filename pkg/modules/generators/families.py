"""
Детерминированные семейства графов и комплексов
Вершины нумеруются с нуля; центры звезд идут первыми, путь - по порядку
"""

from itertools import combinations, product
from typing import Sequence, Tuple

from core.errors import ContractViolation, InternalConsistencyError
from modules.complex_core import PartiteStructure, SimplicialComplex, build_complex


def gen_star(n: int) -> SimplicialComplex:
    """Звезда S_n: центр 0, листья 1..n-1"""
    if n < 2:
        raise ContractViolation(f"gen_star: n={n} < 2")
    return SimplicialComplex.from_edges(range(n), [(0, i) for i in range(1, n)])


def gen_path(n: int) -> SimplicialComplex:
    """Путь P_n на вершинах 0..n-1"""
    if n < 2:
        raise ContractViolation(f"gen_path: n={n} < 2")
    return SimplicialComplex.from_edges(range(n), [(i, i + 1) for i in range(n - 1)])


def gen_star_forest(*sizes: int) -> SimplicialComplex:
    """
    Дизъюнктное объединение звезд S_{n_1}, ..., S_{n_k}

    Центры получают номера 0..k-1, листья нумеруются подряд после них.
    """
    if len(sizes) == 1 and isinstance(sizes[0], (list, tuple)):
        sizes = tuple(sizes[0])
    if not sizes or any(s < 2 for s in sizes):
        raise ContractViolation(f"gen_star_forest: размеры звезд должны быть >= 2: {list(sizes)}")
    edges = []
    leaf = len(sizes)
    for center, size in enumerate(sizes):
        for _ in range(size - 1):
            edges.append((center, leaf))
            leaf += 1
    return SimplicialComplex.from_edges(range(leaf), edges)


def gen_complete_graph(n: int) -> SimplicialComplex:
    if n < 1:
        raise ContractViolation(f"gen_complete_graph: n={n} < 1")
    return SimplicialComplex.from_edges(range(n), combinations(range(n), 2))


def gen_matching_complex(r: int, m: int, shared: int = 0) -> SimplicialComplex:
    """
    Грани sigma + tau_i, i = 1..m, |sigma| = shared, |tau_i| = r + 1 - shared

    Каждая (r-1)-грань лежит ровно в одной r-грани; при shared = 0 -
    m непересекающихся r-симплексов (для r = 1 - совершенное паросочетание).
    """
    if r < 1 or m < 1 or not 0 <= shared <= r - 1:
        raise ContractViolation(f"gen_matching_complex: недопустимые параметры r={r}, m={m}, shared={shared}",
                                {'r': r, 'm': m, 'shared': shared})
    sigma = list(range(shared))
    block = r + 1 - shared
    facets = [sigma + list(range(shared + i * block, shared + (i + 1) * block)) for i in range(m)]
    X = build_complex(facets, vertices=list(range(shared + m * block)))
    if X.f(r) * (r + 1) != X.f(r - 1):
        raise InternalConsistencyError("gen_matching_complex: f_r != f_{r-1} / (r+1)",
                                       {'f_r': X.f(r), 'f_r_minus_1': X.f(r - 1)})
    return X


def gen_brouwer_equality(k: int, b: int) -> SimplicialComplex:
    """Клика A = {0..k-1}, полностью соединенная с независимым множеством B = {k..k+b-1}"""
    if k < 1 or b < 0:
        raise ContractViolation(f"gen_brouwer_equality: k={k}, b={b}")
    n = k + b
    edges = [(u, v) for u, v in combinations(range(n), 2) if u < k]
    return SimplicialComplex.from_edges(range(n), edges)


def gen_complete_partite_complex(r: int, sizes: Sequence[int]) -> Tuple[SimplicialComplex, PartiteStructure]:
    """
    Полный (r+1)-дольный r-мерный комплекс: все радужные грани

    Returns:
        (комплекс, разбиение на доли); вершины нумеруются по долям подряд
    """
    sizes = list(sizes)
    if r < 0 or len(sizes) != r + 1 or any(s < 1 for s in sizes):
        raise ContractViolation(f"gen_complete_partite_complex: нужно r+1={r + 1} долей размера >= 1, "
                                f"получено {sizes}")
    classes = []
    start = 0
    for size in sizes:
        classes.append(list(range(start, start + size)))
        start += size
    X = build_complex(product(*classes), vertices=list(range(start)))
    return X, PartiteStructure.from_lists(classes)
