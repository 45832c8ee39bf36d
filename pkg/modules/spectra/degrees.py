"""
Профили r-степеней и сопряженные последовательности степеней
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import ContractViolation
from modules.complex_core import Face, PartiteStructure, SimplicialComplex, Vertex


def conjugate_sequence(degrees: Sequence[int], length: Optional[int] = None) -> Tuple[int, ...]:
    """
    Сопряженная последовательность: d'_i = |{j : d_j >= i}|, i = 1..length

    Args:
        degrees: Степени (любой порядок)
        length: Длина результата, по умолчанию len(degrees)
    """
    length = len(degrees) if length is None else length
    return tuple(sum(1 for d in degrees if d >= i) for i in range(1, length + 1))


def order_faces(degree_of: Dict[Face, int], faces: Sequence[Face]) -> Tuple[Face, ...]:
    """Грани по убыванию степени; при равенстве - в исходном (лексикографическом) порядке"""
    position = {face: i for i, face in enumerate(faces)}
    return tuple(sorted(faces, key=lambda face: (-degree_of[face], position[face])))


@dataclass(frozen=True, eq=False)
class DegreeProfile:
    """Профиль r-степеней комплекса"""
    r: int
    sorted_degrees: Tuple[int, ...]
    degree_of: Dict[Face, int]
    ordered_faces: Tuple[Face, ...]
    vertex_degrees: Dict[Vertex, int]
    conjugate: Optional[Tuple[int, ...]] = None
    partite_profiles: Optional[Tuple[Tuple[int, ...], ...]] = None
    partite_faces: Optional[Tuple[Tuple[Face, ...], ...]] = None

    def d(self, i: int) -> int:
        """d_i (с единицы); за пределами профиля - 0"""
        return self.sorted_degrees[i - 1] if 1 <= i <= len(self.sorted_degrees) else 0

    def top_sum(self, m: int) -> int:
        """Сумма m наибольших степеней с дополнением нулями"""
        return sum(self.sorted_degrees[:max(0, m)])

    @property
    def max_degree(self) -> int:
        return self.sorted_degrees[0] if self.sorted_degrees else 0

    def conjugate_prefix(self, k: int) -> int:
        """Сумма d'_1..d'_k через тождество sum min(d_i, k)"""
        return sum(min(d, k) for d in self.sorted_degrees)

    def vertex_conjugate_prefix(self, k: int) -> int:
        """sum_{i<=k} |{v : deg^{(r)}(v) >= i}|"""
        return sum(min(d, k) for d in self.vertex_degrees.values())


def degree_profile(X: SimplicialComplex, r: int,
                   partition: Optional[PartiteStructure] = None) -> DegreeProfile:
    """
    Профиль r-степеней граней X(r-1)

    Args:
        X: Комплекс
        r: 1 <= r <= dim(X) + 1
        partition: Разбиение на r+1 долей для профилей по X(r-1;j)

    Returns:
        DegreeProfile; conjugate заполняется при r = 1
    """
    if not 1 <= r <= X.dim + 1:
        raise ContractViolation(f"degree_profile: r={r} вне диапазона 1..{X.dim + 1}",
                                {'r': r, 'dim': X.dim})
    degree_of = X.r_degrees(r)
    faces = X.faces(r - 1)
    ordered = order_faces(degree_of, faces)
    sorted_degrees = tuple(degree_of[face] for face in ordered)

    conjugate = conjugate_sequence(sorted_degrees) if r == 1 else None

    partite_profiles = None
    partite_faces = None
    if partition is not None:
        partition.validate(X, r)
        per_class_faces: List[Tuple[Face, ...]] = []
        per_class_degrees: List[Tuple[int, ...]] = []
        for j in range(partition.num_classes):
            class_faces = order_faces(degree_of, partition.faces_missing_class(X, r, j))
            per_class_faces.append(class_faces)
            per_class_degrees.append(tuple(degree_of[face] for face in class_faces))
        partite_profiles = tuple(per_class_degrees)
        partite_faces = tuple(per_class_faces)

    return DegreeProfile(
        r=r,
        sorted_degrees=sorted_degrees,
        degree_of=degree_of,
        ordered_faces=ordered,
        vertex_degrees=X.vertex_degrees(r),
        conjugate=conjugate,
        partite_profiles=partite_profiles,
        partite_faces=partite_faces,
    )
