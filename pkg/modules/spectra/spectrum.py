"""
Спектры симметричных операторов
Полное плотное разложение, частичные суммы, ненулевая часть спектра
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np
from scipy import linalg

from core.errors import ContractViolation
from modules.complex_core import SimplicialComplex, graph_laplacian
from modules.complex_core.operators import OperatorMatrix

logger = logging.getLogger(__name__)

DEFAULT_ZERO_TOL_REL = 1e-9
DEFAULT_SYMMETRY_TOL = 1e-12

MatrixLike = Union[OperatorMatrix, np.ndarray]


@dataclass(frozen=True, eq=False)
class SpectrumSummary:
    """
    Спектр по убыванию

    prefix_sums[k] - сумма k наибольших собственных значений (prefix_sums[0] = 0).
    tolerance - порог классификации нуля.
    """
    eigenvalues: np.ndarray
    prefix_sums: np.ndarray
    tolerance: float

    @property
    def order(self) -> int:
        return len(self.eigenvalues)

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[0]) if self.order else 0.0

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[-1]) if self.order else 0.0

    def is_psd(self) -> bool:
        return self.lambda_min >= -self.tolerance

    def as_list(self):
        return [float(x) for x in self.eigenvalues]


def _entries(M: MatrixLike) -> np.ndarray:
    return M.entries if isinstance(M, OperatorMatrix) else np.asarray(M, dtype=float)


def summarize(eigenvalues: np.ndarray, tolerance: Optional[float] = None,
              zero_tol_rel: float = DEFAULT_ZERO_TOL_REL) -> SpectrumSummary:
    """SpectrumSummary из уже вычисленных собственных значений"""
    values = np.sort(np.asarray(eigenvalues, dtype=float), kind='stable')[::-1].copy()
    if tolerance is None:
        top = float(values[0]) if len(values) else 0.0
        tolerance = zero_tol_rel * max(1.0, top)
    prefix = np.concatenate(([0.0], np.cumsum(values)))
    values.setflags(write=False)
    prefix.setflags(write=False)
    return SpectrumSummary(eigenvalues=values, prefix_sums=prefix, tolerance=float(tolerance))


def sym_spectrum(M: MatrixLike, tolerance: Optional[float] = None,
                 zero_tol_rel: float = DEFAULT_ZERO_TOL_REL,
                 symmetry_tol: float = DEFAULT_SYMMETRY_TOL) -> SpectrumSummary:
    """
    Полный спектр симметричной матрицы

    Args:
        M: OperatorMatrix или квадратный массив
        tolerance: Порог нуля; по умолчанию zero_tol_rel * max(1, lambda_1)
        zero_tol_rel: Относительный порог нуля
        symmetry_tol: Допустимая абсолютная несимметричность

    Returns:
        SpectrumSummary с собственными значениями по убыванию
    """
    A = _entries(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ContractViolation(f"sym_spectrum: матрица не квадратная {A.shape}")
    if A.shape[0] == 0:
        return summarize(np.zeros(0), tolerance, zero_tol_rel)
    asymmetry = float(np.max(np.abs(A - A.T)))
    if asymmetry > symmetry_tol:
        raise ContractViolation(f"sym_spectrum: матрица несимметрична (отклонение {asymmetry:.3e})",
                                {'asymmetry': asymmetry})
    eigenvalues = linalg.eigh(A, eigvals_only=True)
    return summarize(eigenvalues, tolerance, zero_tol_rel)


def top_k_sum(s: SpectrumSummary, k: int) -> float:
    """Сумма k наибольших собственных значений, 1 <= k <= порядок"""
    if not 1 <= k <= s.order:
        raise ContractViolation(f"top_k_sum: k={k} вне диапазона 1..{s.order}",
                                {'k': k, 'order': s.order})
    return float(s.prefix_sums[k])


def nonzero_spectrum(s: SpectrumSummary) -> Tuple[float, ...]:
    """Собственные значения с |lambda| > tolerance, по убыванию"""
    return tuple(float(x) for x in s.eigenvalues if abs(x) > s.tolerance)


def graph_spectrum(G: SimplicialComplex, signless: bool = False, **kwargs) -> SpectrumSummary:
    """Спектр L(G) или Q(G)"""
    return sym_spectrum(graph_laplacian(G, signless=signless), **kwargs)


def eps_k(G: SimplicialComplex, k: int, spectrum: Optional[SpectrumSummary] = None) -> float:
    """
    eps_k(G) = сумма k наибольших собственных значений L(G) минус |E|

    Args:
        G: Граф
        k: 1 <= k <= n
        spectrum: Готовый спектр L(G), если уже вычислен
    """
    if G.dim > 1:
        raise ContractViolation(f"eps_k определено только для графов, размерность {G.dim}")
    if not 1 <= k <= G.n:
        raise ContractViolation(f"eps_k: k={k} вне диапазона 1..{G.n}", {'k': k, 'n': G.n})
    s = spectrum if spectrum is not None else graph_spectrum(G)
    return top_k_sum(s, k) - G.f(1)


def gershgorin_bound(M: MatrixLike) -> float:
    """Максимальная сумма модулей по строке (оценка сверху для lambda_1)"""
    A = _entries(M)
    if A.size == 0:
        return 0.0
    return float(np.max(np.sum(np.abs(A), axis=1)))
