"""
Граничные операторы и лапласианы комплекса
Произведения B_r B_r^T / B_r^T B_r со сверкой по прямой комбинаторной формуле
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Dict, Tuple

import numpy as np

from core.errors import ContractViolation, InternalConsistencyError

from .simplicial_complex import Face, SimplicialComplex, boundary_faces, incidence_sign

logger = logging.getLogger(__name__)


class OperatorKind(str, Enum):
    """Тип оператора"""
    BOUNDARY = "boundary"
    SIGNLESS_BOUNDARY = "signless_boundary"
    UPPER = "upper_laplacian"
    LOWER = "lower_laplacian"
    SIGNLESS_UPPER = "signless_upper"
    SIGNLESS_LOWER = "signless_lower"
    GADGET_LA = "gadget_LA"
    GADGET_LI = "gadget_Li"
    GADGET_LPRIME = "gadget_Lprime"

    @property
    def is_upper(self) -> bool:
        return self in (OperatorKind.UPPER, OperatorKind.SIGNLESS_UPPER)

    @property
    def is_lower(self) -> bool:
        return self in (OperatorKind.LOWER, OperatorKind.SIGNLESS_LOWER)

    @property
    def is_signless(self) -> bool:
        return self in (OperatorKind.SIGNLESS_BOUNDARY, OperatorKind.SIGNLESS_UPPER,
                        OperatorKind.SIGNLESS_LOWER)

    @property
    def is_square(self) -> bool:
        return self not in (OperatorKind.BOUNDARY, OperatorKind.SIGNLESS_BOUNDARY)

    @classmethod
    def parse(cls, value: str) -> "OperatorKind":
        """Разбор значения из CLI: upper, lower, signless-upper, signless-lower или полное имя"""
        aliases = {
            'upper': cls.UPPER,
            'lower': cls.LOWER,
            'signless-upper': cls.SIGNLESS_UPPER,
            'signless-lower': cls.SIGNLESS_LOWER,
        }
        key = str(value).strip().lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key.replace('-', '_'))
        except ValueError:
            raise ContractViolation(f"Неизвестный тип оператора: {value}")


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """
    Плотная матрица оператора с индексами граней

    Строки и столбцы идут в порядке граней комплекса-владельца;
    массив entries доступен только для чтения.
    """
    kind: OperatorKind
    r: int
    row_faces: Tuple[Face, ...]
    col_faces: Tuple[Face, ...]
    entries: np.ndarray

    def __post_init__(self):
        array = np.array(self.entries, dtype=float)
        array.setflags(write=False)
        object.__setattr__(self, 'entries', array)
        if array.shape != (len(self.row_faces), len(self.col_faces)):
            raise InternalConsistencyError(
                f"Размер матрицы {array.shape} не совпадает с числом граней "
                f"({len(self.row_faces)}, {len(self.col_faces)})"
            )

    @cached_property
    def row_index(self) -> Dict[Face, int]:
        return {face: i for i, face in enumerate(self.row_faces)}

    @cached_property
    def col_index(self) -> Dict[Face, int]:
        return {face: i for i, face in enumerate(self.col_faces)}

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def entry(self, row_face: Face, col_face: Face) -> float:
        return float(self.entries[self.row_index[row_face], self.col_index[col_face]])

    def is_symmetric(self, atol: float = 0.0) -> bool:
        if self.entries.shape[0] != self.entries.shape[1]:
            return False
        return bool(np.all(np.abs(self.entries - self.entries.T) <= atol))


def _boundary_entries(X: SimplicialComplex, r: int, signed: bool) -> np.ndarray:
    rows = X.index_of(r - 1)
    cols = X.faces(r)
    matrix = np.zeros((len(rows), len(cols)))
    for j, tau in enumerate(cols):
        for i, sigma in enumerate(boundary_faces(tau)):
            matrix[rows[sigma], j] = (1.0 if i % 2 == 0 else -1.0) if signed else 1.0
    return matrix


def boundary_matrix(X: SimplicialComplex, r: int, signed: bool = True) -> OperatorMatrix:
    """
    Граничный оператор B_r (или N_r при signed=False)

    Args:
        X: Комплекс
        r: Размерность столбцов, 0 <= r <= dim(X)
        signed: Знаковые инцидентности

    Returns:
        OperatorMatrix со строками X(r-1) и столбцами X(r)
    """
    if not 0 <= r <= X.dim:
        raise ContractViolation(f"boundary_matrix: r={r} вне диапазона 0..{X.dim}",
                                {'r': r, 'dim': X.dim})
    kind = OperatorKind.BOUNDARY if signed else OperatorKind.SIGNLESS_BOUNDARY
    return OperatorMatrix(kind, r, X.faces(r - 1), X.faces(r), _boundary_entries(X, r, signed))


def _direct_upper(X: SimplicialComplex, r: int, signed: bool) -> np.ndarray:
    index = X.index_of(r - 1)
    matrix = np.zeros((len(index), len(index)))
    for sigma, degree in X.r_degrees(r).items():
        matrix[index[sigma], index[sigma]] = degree
    for rho in X.faces(r):
        for a, b in combinations(boundary_faces(rho), 2):
            if signed:
                common = tuple(v for v in a if v in b)
                value = -incidence_sign(a, common) * incidence_sign(b, common)
            else:
                value = 1
            matrix[index[a], index[b]] = value
            matrix[index[b], index[a]] = value
    return matrix


def _direct_lower(X: SimplicialComplex, r: int, signed: bool) -> np.ndarray:
    index = X.index_of(r)
    matrix = np.eye(len(index)) * (r + 1)
    for sigma, taus in X.cofaces(r).items():
        for a, b in combinations(taus, 2):
            value = incidence_sign(a, sigma) * incidence_sign(b, sigma) if signed else 1
            matrix[index[a], index[b]] = value
            matrix[index[b], index[a]] = value
    return matrix


def laplacian(X: SimplicialComplex, kind, r: int, check: bool = True) -> OperatorMatrix:
    """
    Верхний/нижний (знаковый или беззнаковый) лапласиан

    upper-типы: матрица на X(r-1), 1 <= r <= dim(X) + 1 (при r = dim+1 - нулевая);
    lower-типы: матрица на X(r), 0 <= r <= dim(X).

    Args:
        X: Комплекс
        kind: OperatorKind или строковое имя
        r: Параметр размерности
        check: Сверка произведения с прямой формулой

    Returns:
        OperatorMatrix
    """
    kind = kind if isinstance(kind, OperatorKind) else OperatorKind.parse(kind)
    signed = not kind.is_signless

    if kind.is_upper:
        if not 1 <= r <= X.dim + 1:
            raise ContractViolation(f"{kind.value}: r={r} вне диапазона 1..{X.dim + 1}",
                                    {'r': r, 'dim': X.dim, 'kind': kind.value})
        B = _boundary_entries(X, r, signed)
        product = B @ B.T
        faces = X.faces(r - 1)
        direct = _direct_upper if check else None
    elif kind.is_lower:
        if not 0 <= r <= X.dim:
            raise ContractViolation(f"{kind.value}: r={r} вне диапазона 0..{X.dim}",
                                    {'r': r, 'dim': X.dim, 'kind': kind.value})
        B = _boundary_entries(X, r, signed)
        product = B.T @ B
        faces = X.faces(r)
        direct = _direct_lower if check else None
    else:
        raise ContractViolation(f"laplacian не строит операторы типа {kind.value}")

    if direct is not None:
        expected = direct(X, r, signed)
        if not np.array_equal(product, expected):
            deviation = float(np.max(np.abs(product - expected)))
            logger.error(f"❌ Расхождение {kind.value} (r={r}) с прямой формулой: {deviation}")
            raise InternalConsistencyError(
                f"{kind.value}: произведение граничных матриц не совпало с прямой формулой",
                {'kind': kind.value, 'r': r, 'max_deviation': deviation},
            )
    return OperatorMatrix(kind, r, faces, faces, product)


def graph_laplacian(G: SimplicialComplex, signless: bool = False) -> OperatorMatrix:
    """L(G) = D - A (или Q(G) = D + A) графа"""
    if G.dim > 1:
        raise ContractViolation(f"graph_laplacian: ожидается граф, получена размерность {G.dim}")
    kind = OperatorKind.SIGNLESS_UPPER if signless else OperatorKind.UPPER
    return laplacian(G, kind, 1)
