"""
Графовые и комплексные конструкции: дополнение, конус/джойн, индуцированный подкомплекс
"""

import logging
from itertools import combinations
from typing import Iterable, List, Sequence

import networkx as nx

from core.errors import ContractViolation

from .simplicial_complex import SimplicialComplex, Vertex

logger = logging.getLogger(__name__)


def complement_graph(G: SimplicialComplex) -> SimplicialComplex:
    """
    Дополнение графа: те же вершины, дополнительное множество ребер

    Args:
        G: Граф (комплекс размерности <= 1)
    """
    if G.dim > 1:
        raise ContractViolation(f"complement_graph: ожидается граф, размерность {G.dim}",
                                {'dim': G.dim})
    present = set(G.edges)
    missing = [pair for pair in combinations(G.vertices, 2) if pair not in present]
    return SimplicialComplex.from_edges(G.vertices, missing)


def _ordered_fresh(sigma: Iterable[Vertex]) -> List[Vertex]:
    items = list(sigma)
    if isinstance(sigma, (set, frozenset)):
        try:
            items = sorted(items)
        except TypeError:
            pass
    return list(dict.fromkeys(items))


def join_cone(X: SimplicialComplex, sigma: Iterable[Vertex]) -> SimplicialComplex:
    """
    Джойн X * sigma: все объединения грани X с подмножеством sigma

    Новые вершины идут после всех вершин X (в порядке sigma),
    поэтому грани tau + eta остаются упорядоченными.
    """
    fresh = _ordered_fresh(sigma)
    if not fresh:
        raise ContractViolation("join_cone: множество sigma пусто")
    overlap = [v for v in fresh if v in X.rank]
    if overlap:
        raise ContractViolation(f"join_cone: вершины {overlap} уже есть в комплексе",
                                {'overlap': [repr(v) for v in overlap]})

    eta_subsets = [eta for size in range(len(fresh) + 1)
                   for eta in combinations(fresh, size)]
    faces = [tau + eta for tau in X.all_faces() for eta in eta_subsets]
    joined = SimplicialComplex.from_faces(tuple(X.vertices) + tuple(fresh), faces,
                                          check_closed=False)
    logger.debug(f"Джойн с {len(fresh)} вершинами: f = {joined.f_vector}")
    return joined


def induced_subcomplex(X: SimplicialComplex, S: Iterable[Vertex]) -> SimplicialComplex:
    """Все грани X, содержащиеся в S (порядок вершин наследуется)"""
    keep = set(S)
    unknown = [v for v in keep if v not in X.rank]
    if unknown:
        raise ContractViolation(f"induced_subcomplex: вершины {unknown} не из комплекса")
    vertices = [v for v in X.vertices if v in keep]
    faces = [face for face in X.all_faces() if len(face) > 1 and all(v in keep for v in face)]
    return SimplicialComplex.from_faces(vertices, faces, check_closed=False)


def reorder_vertices(X: SimplicialComplex, order: Sequence[Vertex]) -> SimplicialComplex:
    """Тот же комплекс при другом линейном порядке вершин"""
    if len(order) != X.n or set(order) != set(X.vertices):
        raise ContractViolation("reorder_vertices: order не является перестановкой вершин")
    faces = [face for face in X.all_faces() if len(face) > 1]
    return SimplicialComplex.from_faces(order, faces, check_closed=False)


def to_networkx(X: SimplicialComplex) -> nx.Graph:
    """1-остов комплекса как nx.Graph (вершины в порядке комплекса)"""
    graph = nx.Graph()
    graph.add_nodes_from(X.vertices)
    graph.add_edges_from(X.faces(1))
    return graph


def connected_components(X: SimplicialComplex) -> List[SimplicialComplex]:
    """Компоненты связности 1-остова как индуцированные подкомплексы"""
    graph = to_networkx(X)
    components = sorted(nx.connected_components(graph),
                        key=lambda comp: min(X.rank[v] for v in comp))
    return [induced_subcomplex(X, comp) for comp in components]
