"""
Комбинаторные свидетели оценок
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple

from modules.complex_core import Face, SimplicialComplex, Vertex
from modules.spectra import DegreeProfile

logger = logging.getLogger(__name__)


@dataclass
class InducedWitness:
    """Множество S из 2k вершин с наибольшим |E(G[S])|"""
    vertices: Tuple[Vertex, ...]
    edges: int
    exact: bool


def _edges_inside(adjacency: List[int], mask: int) -> int:
    total = 0
    m = mask
    v = 0
    while m:
        if m & 1:
            total += bin(adjacency[v] & mask).count('1')
        m >>= 1
        v += 1
    return total // 2


def max_induced_edges(G: SimplicialComplex, size: int, exact_limit: int = 16) -> InducedWitness:
    """
    max |E(G[S])| по |S| = size

    Полный перебор C(n, size) при n <= exact_limit, иначе жадный выбор
    с локальными обменами (результат - нижняя оценка максимума, exact=False).
    """
    n = G.n
    rank = G.rank
    adjacency = [0] * n
    for u, v in G.edges:
        adjacency[rank[u]] |= 1 << rank[v]
        adjacency[rank[v]] |= 1 << rank[u]

    if size <= 0:
        return InducedWitness((), 0, True)
    if size >= n:
        return InducedWitness(tuple(G.vertices), G.f(1), True)

    if n <= exact_limit:
        best_mask, best = 0, -1
        for subset in combinations(range(n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            count = _edges_inside(adjacency, mask)
            if count > best:
                best_mask, best = mask, count
        chosen = [G.vertices[v] for v in range(n) if best_mask >> v & 1]
        return InducedWitness(tuple(chosen), best, True)

    # жадно: вершины по убыванию степени, затем обмены, пока число ребер растет
    order = sorted(range(n), key=lambda v: (-bin(adjacency[v]).count('1'), v))
    mask = 0
    for v in order[:size]:
        mask |= 1 << v
    best = _edges_inside(adjacency, mask)
    improved = True
    while improved:
        improved = False
        for inside in [v for v in range(n) if mask >> v & 1]:
            for outside in [v for v in range(n) if not mask >> v & 1]:
                candidate = (mask & ~(1 << inside)) | (1 << outside)
                count = _edges_inside(adjacency, candidate)
                if count > best:
                    mask, best, improved = candidate, count, True
                    break
            if improved:
                break
    chosen = [G.vertices[v] for v in range(n) if mask >> v & 1]
    logger.debug(f"max_induced_edges: эвристика для n={n}, |S|={size}, ребер {best}")
    return InducedWitness(tuple(chosen), best, False)


def max_degree_subset(profile: DegreeProfile, size: int, faces: Sequence[Face],
                      exhaustive_limit: int = 12) -> Tuple[int, Tuple[Face, ...], bool]:
    """
    max sum_{sigma in A} deg(sigma) по |A| = size

    Returns:
        (максимум, множество A, выполнен ли полный перебор)
    """
    if len(faces) <= exhaustive_limit:
        best, best_set = -1, ()
        for subset in combinations(faces, size):
            total = sum(profile.degree_of[face] for face in subset)
            if total > best:
                best, best_set = total, subset
        return best, tuple(best_set), True
    chosen = profile.ordered_faces[:size]
    return sum(profile.degree_of[face] for face in chosen), tuple(chosen), False
