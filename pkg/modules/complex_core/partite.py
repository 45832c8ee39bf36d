"""
(r+1)-дольная структура комплекса
Поиск разбиения вершин, при котором каждая грань радужная
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from core.errors import ContractViolation

from .simplicial_complex import Face, SimplicialComplex, Vertex

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 24


@dataclass(frozen=True)
class PartiteStructure:
    """Разбиение вершин на доли V_1..V_{r+1}"""
    classes: Tuple[FrozenSet[Vertex], ...]

    @cached_property
    def class_of(self) -> Dict[Vertex, int]:
        return {v: j for j, members in enumerate(self.classes) for v in members}

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @classmethod
    def from_lists(cls, classes: Iterable[Iterable[Vertex]]) -> "PartiteStructure":
        return cls(tuple(frozenset(members) for members in classes))

    def validate(self, X: SimplicialComplex, r: Optional[int] = None):
        """
        Проверка разбиения: доли не пересекаются, покрывают V, все грани радужные

        Raises:
            ContractViolation: при нарушении любого условия
        """
        r = X.dim if r is None else r
        if self.num_classes != r + 1:
            raise ContractViolation(
                f"Ожидалось {r + 1} долей, передано {self.num_classes}",
                {'expected': r + 1, 'got': self.num_classes},
            )
        total = sum(len(members) for members in self.classes)
        if total != len(self.class_of):
            raise ContractViolation("Доли разбиения пересекаются")
        if set(self.class_of) != set(X.vertices):
            raise ContractViolation("Доли разбиения не совпадают с множеством вершин")
        for u, v in X.faces(1):
            if self.class_of[u] == self.class_of[v]:
                raise ContractViolation(f"Ребро {(u, v)} лежит внутри одной доли")

    def faces_missing_class(self, X: SimplicialComplex, r: int, j: int) -> Tuple[Face, ...]:
        """X(r-1;j): (r-1)-грани, не пересекающие долю j"""
        members = self.classes[j]
        return tuple(face for face in X.faces(r - 1) if not any(v in members for v in face))

    def to_lists(self, X: SimplicialComplex) -> List[List[Vertex]]:
        return [[v for v in X.vertices if v in members] for members in self.classes]


def _propagation_order(X: SimplicialComplex) -> List[Vertex]:
    adjacency: Dict[Vertex, List[Vertex]] = {v: [] for v in X.vertices}
    for u, v in X.faces(1):
        adjacency[u].append(v)
        adjacency[v].append(u)

    order: List[Vertex] = []
    placed = set()
    remaining = sorted(X.vertices, key=lambda v: (-len(adjacency[v]), X.rank[v]))
    for root in remaining:
        if root in placed:
            continue
        queue = [root]
        placed.add(root)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(adjacency[v], key=X.rank.__getitem__):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    return order


def _color(order: Sequence[Vertex], adjacency: Dict[Vertex, set], colors: int) -> Optional[Dict[Vertex, int]]:
    assignment: Dict[Vertex, int] = {}

    def backtrack(position: int, used: int) -> bool:
        if position == len(order):
            return True
        v = order[position]
        taken = {assignment[w] for w in adjacency[v] if w in assignment}
        # новые цвета перебираются только начиная с первого неиспользованного
        for c in range(min(used + 1, colors)):
            if c in taken:
                continue
            assignment[v] = c
            if backtrack(position + 1, max(used, c + 1)):
                return True
            del assignment[v]
        return False

    return assignment if backtrack(0, 0) else None


def partite_classes(X: SimplicialComplex, r: Optional[int] = None,
                    max_vertices: int = DEFAULT_MAX_VERTICES) -> Optional[PartiteStructure]:
    """
    Поиск (r+1)-раскраски вершин, при которой каждая грань радужная

    Грань радужная тогда и только тогда, когда радужны все ее ребра,
    поэтому достаточно правильной раскраски 1-остова.

    Args:
        X: Комплекс
        r: Число долей минус 1 (по умолчанию dim(X))
        max_vertices: Предел точного перебора

    Returns:
        PartiteStructure или None, если разбиения нет
    """
    r = X.dim if r is None else r
    if X.dim > r or r < 0:
        return None
    if X.n > max_vertices:
        raise ContractViolation(
            f"partite_classes: n={X.n} > {max_vertices}, разбиение должно быть передано явно",
            {'n': X.n, 'max_vertices': max_vertices},
        )

    adjacency: Dict[Vertex, set] = {v: set() for v in X.vertices}
    for u, v in X.faces(1):
        adjacency[u].add(v)
        adjacency[v].add(u)

    assignment = _color(_propagation_order(X), adjacency, r + 1)
    if assignment is None:
        logger.debug(f"Комплекс не является {r + 1}-дольным")
        return None

    buckets: List[List[Vertex]] = [[] for _ in range(r + 1)]
    for v in X.vertices:
        buckets[assignment[v]].append(v)
    buckets.sort(key=lambda members: (not members, X.rank[members[0]] if members else 0))
    return PartiteStructure.from_lists(buckets)
