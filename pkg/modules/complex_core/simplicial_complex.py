"""
Симплициальный комплекс
Замыкание вниз, упорядоченные грани по размерностям и знаки инцидентности
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from core.errors import ContractViolation, MalformedInputError

Vertex = Hashable
Face = Tuple[Vertex, ...]

logger = logging.getLogger(__name__)


def incidence_sign(tau: Face, sigma: Face) -> int:
    """
    Знак инцидентности (tau:sigma) = (-1)^{число вершин tau, предшествующих u}

    Обе грани должны быть упорядочены по порядку вершин комплекса;
    u - единственная вершина tau, не входящая в sigma.
    """
    if len(tau) != len(sigma) + 1:
        raise ContractViolation(
            f"Грань {sigma} не является гранью коразмерности 1 в {tau}",
            {'tau': list(tau), 'sigma': list(sigma)},
        )
    position = len(sigma)
    for i, v in enumerate(sigma):
        if tau[i] != v:
            position = i
            break
    if tau[:position] + tau[position + 1:] != tuple(sigma):
        raise ContractViolation(
            f"Грань {sigma} не содержится в {tau}",
            {'tau': list(tau), 'sigma': list(sigma)},
        )
    return 1 if position % 2 == 0 else -1


def boundary_faces(tau: Face) -> List[Face]:
    """Грани коразмерности 1; i-я грань получена удалением i-й вершины"""
    return [tau[:i] + tau[i + 1:] for i in range(len(tau))]


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Замкнутое вниз семейство граней над упорядоченным множеством вершин

    faces_by_dim[i + 1] - лексикографически отсортированные i-грани, i = -1..dim.
    Порядок вершин фиксирует все знаки и порядок строк/столбцов матриц.
    """
    vertices: Tuple[Vertex, ...]
    faces_by_dim: Tuple[Tuple[Face, ...], ...]

    @cached_property
    def rank(self) -> Dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 2

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def is_graph(self) -> bool:
        return self.dim <= 1

    def faces(self, i: int) -> Tuple[Face, ...]:
        """i-мерные грани (пустой кортеж вне диапазона размерностей)"""
        if -1 <= i <= self.dim:
            return self.faces_by_dim[i + 1]
        return ()

    def f(self, i: int) -> int:
        return len(self.faces(i))

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(level) for level in self.faces_by_dim[1:])

    @property
    def edges(self) -> Tuple[Face, ...]:
        return self.faces(1)

    @cached_property
    def _index_cache(self) -> Dict[int, Dict[Face, int]]:
        return {}

    def index_of(self, i: int) -> Dict[Face, int]:
        """Отображение i-грань -> номер строки/столбца"""
        cache = self._index_cache
        if i not in cache:
            cache[i] = {face: pos for pos, face in enumerate(self.faces(i))}
        return cache[i]

    def contains(self, face: Iterable[Vertex]) -> bool:
        try:
            normalized = self.normalize(face)
        except ContractViolation:
            return False
        return normalized in self.index_of(len(normalized) - 1)

    def normalize(self, face: Iterable[Vertex]) -> Face:
        """Упорядочивание вершин грани по порядку комплекса"""
        items = list(face)
        rank = self.rank
        unknown = [v for v in items if v not in rank]
        if unknown:
            raise ContractViolation(f"Вершины {unknown} не принадлежат комплексу")
        if len(set(items)) != len(items):
            raise ContractViolation(f"Повторяющиеся вершины в грани {items}")
        return tuple(sorted(items, key=rank.__getitem__))

    def sign(self, tau: Iterable[Vertex], sigma: Iterable[Vertex]) -> int:
        """incidence_sign с предварительной нормализацией граней"""
        return incidence_sign(self.normalize(tau), self.normalize(sigma))

    def r_degrees(self, r: int) -> Dict[Face, int]:
        """deg^{(r)}(sigma) для всех sigma из X(r-1)"""
        degrees = {face: 0 for face in self.faces(r - 1)}
        for tau in self.faces(r):
            for sigma in boundary_faces(tau):
                degrees[sigma] += 1
        return degrees

    def cofaces(self, r: int) -> Dict[Face, List[Face]]:
        """Для каждой (r-1)-грани - список содержащих ее r-граней в порядке X(r)"""
        result: Dict[Face, List[Face]] = {face: [] for face in self.faces(r - 1)}
        for tau in self.faces(r):
            for sigma in boundary_faces(tau):
                result[sigma].append(tau)
        return result

    def vertex_degrees(self, r: int) -> Dict[Vertex, int]:
        """Число r-граней, содержащих вершину"""
        degrees = {v: 0 for v in self.vertices}
        for tau in self.faces(r):
            for v in tau:
                degrees[v] += 1
        return degrees

    def facets(self) -> List[Face]:
        """Максимальные грани, по возрастанию размерности"""
        result: List[Face] = []
        for i in range(0, self.dim + 1):
            covered = set()
            for tau in self.faces(i + 1):
                covered.update(boundary_faces(tau))
            result.extend(face for face in self.faces(i) if face not in covered)
        return result

    def all_faces(self) -> Iterable[Face]:
        for level in self.faces_by_dim:
            yield from level

    @classmethod
    def from_faces(cls, vertices: Sequence[Vertex], faces: Iterable[Sequence[Vertex]],
                   check_closed: bool = True) -> "SimplicialComplex":
        """
        Сборка из полного списка граней (вершины и пустая грань добавляются сами)

        Args:
            vertices: Упорядоченный список вершин
            faces: Грани (любой порядок, повторы допускаются)
            check_closed: Проверять замкнутость вниз
        """
        vertex_list = tuple(vertices)
        rank = {v: i for i, v in enumerate(vertex_list)}
        if len(rank) != len(vertex_list):
            raise MalformedInputError("Повторяющиеся вершины в списке вершин")

        levels: Dict[int, set] = {-1: {()}, 0: {(v,) for v in vertex_list}}
        for face in faces:
            ordered = tuple(sorted(face, key=rank.__getitem__))
            levels.setdefault(len(ordered) - 1, set()).add(ordered)

        dim = max(i for i, level in levels.items() if level)
        faces_by_dim = []
        for i in range(-1, dim + 1):
            level = levels.get(i, set())
            faces_by_dim.append(tuple(sorted(level, key=lambda t: tuple(rank[v] for v in t))))

        complex_ = cls(vertices=vertex_list, faces_by_dim=tuple(faces_by_dim))
        if check_closed:
            complex_._check_closed()
        return complex_

    @classmethod
    def from_edges(cls, vertices: Sequence[Vertex],
                   edges: Iterable[Sequence[Vertex]]) -> "SimplicialComplex":
        """Быстрая сборка графа (одномерного комплекса)"""
        return cls.from_faces(vertices, edges, check_closed=False)

    def _check_closed(self):
        for i in range(1, self.dim + 1):
            lower = self.index_of(i - 1)
            for tau in self.faces(i):
                for sigma in boundary_faces(tau):
                    if sigma not in lower:
                        raise MalformedInputError(
                            f"Семейство граней не замкнуто вниз: нет {sigma} для {tau}"
                        )

    def summary(self) -> Dict[str, object]:
        return {'n': self.n, 'dim': self.dim, 'f_vector': list(self.f_vector)}


def _vertex_order(facets: Sequence[Sequence[Vertex]],
                  vertices: Optional[Sequence[Vertex]]) -> List[Vertex]:
    order: List[Vertex] = []
    seen = set()
    for v in vertices or ():
        if v in seen:
            raise MalformedInputError(f"Вершина {v!r} повторяется в списке вершин")
        seen.add(v)
        order.append(v)
    for facet in facets:
        try:
            items = sorted(facet)
        except TypeError:
            items = list(facet)
        for v in items:
            if v not in seen:
                seen.add(v)
                order.append(v)
    return order


def build_complex(facets: Iterable[Iterable[Vertex]],
                  vertices: Optional[Sequence[Vertex]] = None) -> SimplicialComplex:
    """
    Замыкание вниз списка граней

    Args:
        facets: Порождающие грани (множества вершин)
        vertices: Явный порядок вершин; иначе - порядок первого появления,
            внутри грани - по возрастанию идентификаторов

    Returns:
        SimplicialComplex с отсортированными гранями по каждой размерности
    """
    facet_list = []
    for facet in facets:
        items = list(facet)
        if len(set(items)) != len(items):
            raise MalformedInputError(f"Повторяющиеся вершины в грани {items}",
                                      {'facet': [repr(v) for v in items]})
        facet_list.append(items)

    order = _vertex_order(facet_list, vertices)
    closure = set()
    rank = {v: i for i, v in enumerate(order)}
    for facet in facet_list:
        ordered = tuple(sorted(facet, key=rank.__getitem__))
        if ordered in closure:
            continue
        for size in range(1, len(ordered) + 1):
            closure.update(combinations(ordered, size))

    complex_ = SimplicialComplex.from_faces(order, closure, check_closed=False)
    logger.debug(f"Построен комплекс: {complex_.summary()}")
    return complex_
