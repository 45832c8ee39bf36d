"""
Случайные графы и комплексы

Генератор: numpy Philox (счетчиковый, 64-битный ключ), ключ выводится из
SeedSequence([seed, index]), поэтому i-й экземпляр потока не зависит от остальных.
"""

from itertools import combinations, product
from math import comb
from typing import Sequence, Tuple

import numpy as np

from core.errors import ContractViolation
from modules.complex_core import PartiteStructure, SimplicialComplex, build_complex

SEED_MASK = (1 << 64) - 1


def make_rng(seed: int, index: int = 0) -> np.random.Generator:
    """Независимый поток для экземпляра index при фиксированном seed"""
    if seed < 0 or index < 0:
        raise ContractViolation(f"seed и index должны быть неотрицательными: {seed}, {index}")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed & SEED_MASK, index])))


def _check_probability(p: float):
    if not 0.0 <= p <= 1.0:
        raise ContractViolation(f"Вероятность вне [0, 1]: {p}")


def gen_random_graph(n: int, p: float, seed: int, index: int = 0) -> SimplicialComplex:
    """G(n, p): каждое ребро независимо с вероятностью p"""
    _check_probability(p)
    pairs = list(combinations(range(n), 2))
    draws = make_rng(seed, index).random(len(pairs))
    return SimplicialComplex.from_edges(range(n), [pair for pair, x in zip(pairs, draws) if x < p])


def gen_random_complex(n: int, r: int, p: float, seed: int, index: int = 0) -> SimplicialComplex:
    """
    Полный (r-1)-остов симплекса на n вершинах плюс каждая r-грань с вероятностью p
    """
    _check_probability(p)
    if r < 1 or r + 1 > max(n, 1):
        raise ContractViolation(f"gen_random_complex: r={r} недопустимо при n={n}")
    skeleton = [face for size in range(2, r + 1) for face in combinations(range(n), size)]
    candidates = combinations(range(n), r + 1)
    draws = make_rng(seed, index).random(comb(n, r + 1))
    chosen = [face for face, x in zip(candidates, draws) if x < p]
    return SimplicialComplex.from_faces(range(n), skeleton + chosen, check_closed=False)


def gen_random_partite_complex(r: int, sizes: Sequence[int], p: float, seed: int,
                               index: int = 0) -> Tuple[SimplicialComplex, PartiteStructure]:
    """
    Случайный (r+1)-дольный r-мерный комплекс

    Каждая радужная r-грань берется с вероятностью p, затем замыкание вниз.
    Если не выбрано ни одной грани, берется грань с наименьшей выборкой,
    поэтому размерность всегда равна r.

    Returns:
        (комплекс, разбиение на доли); вершины нумеруются по долям подряд
    """
    _check_probability(p)
    sizes = list(sizes)
    if r < 1 or len(sizes) != r + 1 or any(s < 1 for s in sizes):
        raise ContractViolation(f"gen_random_partite_complex: нужно r+1={r + 1} долей размера >= 1, "
                                f"получено {sizes}")
    classes = []
    start = 0
    for size in sizes:
        classes.append(list(range(start, start + size)))
        start += size
    rainbow = list(product(*classes))
    draws = make_rng(seed, index).random(len(rainbow))
    chosen = [face for face, x in zip(rainbow, draws) if x < p]
    if not chosen:
        chosen = [rainbow[int(np.argmin(draws))]]
    X = build_complex(chosen, vertices=list(range(start)))
    return X, PartiteStructure.from_lists(classes)
