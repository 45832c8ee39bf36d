"""
Вспомогательные матрицы доказательства оценки через степени

L_A - матрица на X(r) для множества (r-1)-граней A, в котором каждая r-грань
содержит не более одного элемента; L_i - случай A = {sigma_i};
L' = L-_r - sum_i (1 - d/d_i) L_i по (r+1)k граням наибольшей степени.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from core.errors import (
    ContractViolation,
    DegenerateInstanceError,
    InternalConsistencyError,
    TheoremViolationError,
)
from modules.complex_core import (
    Face,
    OperatorKind,
    OperatorMatrix,
    SimplicialComplex,
    boundary_faces,
    incidence_sign,
    laplacian,
)
from modules.spectra import DegreeProfile, degree_profile, nonzero_spectrum, sym_spectrum

logger = logging.getLogger(__name__)

CLAIM_ATOL = 1e-12


def _check_level(X: SimplicialComplex, r: int, name: str):
    if not 0 <= r <= X.dim:
        raise ContractViolation(f"{name}: r={r} вне диапазона 0..{X.dim}", {'r': r, 'dim': X.dim})


def _normalize_faces(X: SimplicialComplex, r: int, faces: Iterable[Iterable]) -> List[Face]:
    index = X.index_of(r - 1)
    result = []
    for face in faces:
        normalized = X.normalize(face)
        if normalized not in index:
            raise ContractViolation(f"Грань {list(face)} не принадлежит X({r - 1})")
        result.append(normalized)
    return list(dict.fromkeys(result))


def _la_entries(X: SimplicialComplex, r: int, A: List[Face]) -> np.ndarray:
    index = X.index_of(r)
    members = set(A)
    matrix = np.zeros((len(index), len(index)))
    for tau in X.faces(r):
        hits = [sigma for sigma in boundary_faces(tau) if sigma in members]
        if len(hits) > 1:
            raise ContractViolation(
                f"r-грань {tau} содержит {len(hits)} элементов A (допускается не более одного)",
                {'tau': list(tau), 'hits': [list(s) for s in hits]},
            )
        if hits:
            matrix[index[tau], index[tau]] = 1.0
    cofaces = X.cofaces(r)
    for sigma in A:
        taus = cofaces[sigma]
        for i, a in enumerate(taus):
            for b in taus[i + 1:]:
                value = incidence_sign(a, sigma) * incidence_sign(b, sigma)
                matrix[index[a], index[b]] = value
                matrix[index[b], index[a]] = value
    return matrix


def gadget_LA(X: SimplicialComplex, r: int, A: Iterable[Iterable]) -> OperatorMatrix:
    """
    Матрица L_A на X(r)

    Args:
        X: Комплекс
        r: 0 <= r <= dim(X)
        A: (r-1)-грани; каждая r-грань содержит не более одной из них

    Returns:
        OperatorMatrix типа gadget_LA
    """
    _check_level(X, r, 'gadget_LA')
    faces = _normalize_faces(X, r, A)
    return OperatorMatrix(OperatorKind.GADGET_LA, r, X.faces(r), X.faces(r), _la_entries(X, r, faces))


def gadget_Li(X: SimplicialComplex, r: int, sigma_i: Iterable, check: bool = True) -> OperatorMatrix:
    """
    L_i = L_{{sigma_i}}; единственное ненулевое собственное значение равно deg^{(r)}(sigma_i)
    """
    _check_level(X, r, 'gadget_Li')
    (sigma,) = _normalize_faces(X, r, [sigma_i])
    matrix = OperatorMatrix(OperatorKind.GADGET_LI, r, X.faces(r), X.faces(r),
                            _la_entries(X, r, [sigma]))
    if check:
        degree = len(X.cofaces(r)[sigma])
        spectrum = nonzero_spectrum(sym_spectrum(matrix))
        expected = (float(degree),) if degree > 0 else ()
        if len(spectrum) != len(expected) or any(abs(a - b) > 1e-8 for a, b in zip(spectrum, expected)):
            raise InternalConsistencyError(
                f"Спектр L_i для {list(sigma)} не равен {{deg}} = {expected}",
                {'sigma': list(sigma), 'spectrum': list(spectrum), 'degree': degree},
            )
    return matrix


@dataclass
class LPrimeDecomposition:
    """Разложение L-_r = L' + sum_i c_i L_i"""
    r: int
    k: int
    d: int
    lower: OperatorMatrix
    lprime: OperatorMatrix
    chosen_faces: Tuple[Face, ...]
    coefficients: Tuple[float, ...]
    components: Tuple[OperatorMatrix, ...]
    weights: Dict[Face, float] = field(default_factory=dict)
    lambda_max: float = 0.0

    def reconstruction_residual(self) -> float:
        """max |L-_r - (L' + sum c_i L_i)|"""
        total = self.lprime.entries.copy()
        for c, Li in zip(self.coefficients, self.components):
            total = total + c * Li.entries
        if total.size == 0:
            return 0.0
        return float(np.max(np.abs(self.lower.entries - total)))

    def claim_entries(self, X: SimplicialComplex) -> np.ndarray:
        """Прямая формула: диагональ sum w(sigma), вне диагонали w(tau & eta) * знаки"""
        index = X.index_of(self.r)
        expected = np.zeros((len(index), len(index)))
        for tau in X.faces(self.r):
            expected[index[tau], index[tau]] = sum(self.weights[s] for s in boundary_faces(tau))
        for sigma, taus in X.cofaces(self.r).items():
            w = self.weights[sigma]
            for i, a in enumerate(taus):
                for b in taus[i + 1:]:
                    value = w * incidence_sign(a, sigma) * incidence_sign(b, sigma)
                    expected[index[a], index[b]] = value
                    expected[index[b], index[a]] = value
        return expected


def lprime_decomposition(X: SimplicialComplex, r: int, k: int,
                         profile: Optional[DegreeProfile] = None,
                         tol: float = 1e-7) -> LPrimeDecomposition:
    """
    Построение L' с проверкой поэлементной формулы и оценки lambda_1(L') <= (r+1)d

    Args:
        X: Комплекс
        r: 1 <= r <= dim(X)
        k: (r+1)k <= f_{r-1}
        profile: Готовый профиль r-степеней
        tol: Допуск оценки собственного значения

    Raises:
        DegenerateInstanceError: если d = d_{(r+1)k} = 0
    """
    if not 1 <= r <= X.dim:
        raise ContractViolation(f"gadget_Lprime: r={r} вне диапазона 1..{X.dim}")
    count = (r + 1) * k
    if k < 1 or count > X.f(r - 1):
        raise ContractViolation(f"gadget_Lprime: (r+1)k={count} вне диапазона 1..{X.f(r - 1)}",
                                {'k': k, 'f': X.f(r - 1)})

    profile = profile if profile is not None else degree_profile(X, r)
    d = profile.d(count)
    if d == 0:
        raise DegenerateInstanceError(f"d_{count}^({r}) = 0: все верхние степени нулевые",
                                      {'r': r, 'k': k})

    chosen = profile.ordered_faces[:count]
    lower = laplacian(X, OperatorKind.LOWER, r)
    coefficients = []
    components = []
    entries = lower.entries.copy()
    for sigma in chosen:
        d_i = profile.degree_of[sigma]
        c = 1.0 - d / d_i
        Li = gadget_Li(X, r, sigma)
        coefficients.append(c)
        components.append(Li)
        entries = entries - c * Li.entries

    weights = {sigma: (min(d / deg, 1.0) if deg > 0 else 1.0) for sigma, deg in profile.degree_of.items()}
    lprime = OperatorMatrix(OperatorKind.GADGET_LPRIME, r, X.faces(r), X.faces(r), entries)
    decomposition = LPrimeDecomposition(
        r=r, k=k, d=d, lower=lower, lprime=lprime, chosen_faces=tuple(chosen),
        coefficients=tuple(coefficients), components=tuple(components), weights=weights,
    )

    expected = decomposition.claim_entries(X)
    if expected.size and not np.allclose(entries, expected, rtol=0.0, atol=CLAIM_ATOL):
        deviation = float(np.max(np.abs(entries - expected)))
        raise InternalConsistencyError("L' не совпадает с поэлементной формулой весов",
                                       {'r': r, 'k': k, 'max_deviation': deviation})

    decomposition.lambda_max = sym_spectrum(lprime, symmetry_tol=CLAIM_ATOL).lambda_max
    if decomposition.lambda_max > (r + 1) * d + tol:
        logger.error(f"❌ lambda_1(L') = {decomposition.lambda_max} > (r+1)d = {(r + 1) * d}")
        raise TheoremViolationError(
            "lambda_1(L') превышает (r+1)d",
            {'r': r, 'k': k, 'lambda_max': decomposition.lambda_max, 'bound': (r + 1) * d},
        )
    return decomposition


def gadget_Lprime(X: SimplicialComplex, r: int, k: int, **kwargs) -> OperatorMatrix:
    """Матрица L' (все проверки выполняются при построении)"""
    return lprime_decomposition(X, r, k, **kwargs).lprime


def partite_decomposition_residual(X: SimplicialComplex, r: int, partition) -> float:
    """max |L-_r - sum_j L_{X(r-1;j)}| для (r+1)-дольного r-мерного комплекса"""
    partition.validate(X, r)
    lower = laplacian(X, OperatorKind.LOWER, r)
    total = np.zeros(lower.shape)
    for j in range(partition.num_classes):
        total = total + gadget_LA(X, r, partition.faces_missing_class(X, r, j)).entries
    if total.size == 0:
        return 0.0
    return float(np.max(np.abs(lower.entries - total)))
