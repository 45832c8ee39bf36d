"""
Структурные проверки и проверки матриц доказательства

Невязки оформляются как IdentityResult и собираются в IdentityReport,
поэтому набор проверок пишется в тот же поток, что и тождества.
"""

import logging
from typing import Callable, List, Optional

import numpy as np

from core.errors import DegenerateInstanceError
from modules.bounds import gadget_LA, lprime_decomposition, partite_decomposition_residual
from modules.complex_core import (
    OperatorKind,
    OperatorMatrix,
    PartiteStructure,
    SimplicialComplex,
    boundary_matrix,
    laplacian,
)
from modules.spectra import (
    IdentityResult,
    degree_profile,
    lplus_lminus_check,
    multiset_residual,
    nonzero_spectrum,
    relabel_invariance_check,
    sym_spectrum,
)

from .identities import IdentityReport

logger = logging.getLogger(__name__)


def boundary_composition_check(X: SimplicialComplex) -> IdentityResult:
    """B_{r-1} B_r = 0 точно для всех 1 <= r <= dim"""
    residual = 0.0
    for r in range(1, X.dim + 1):
        product = boundary_matrix(X, r - 1).entries @ boundary_matrix(X, r).entries
        if product.size:
            residual = max(residual, float(np.max(np.abs(product))))
    return IdentityResult(name='boundary_squared', residual=residual, checked=max(X.dim, 0))


def _max_abs(matrix: np.ndarray) -> float:
    return float(np.max(np.abs(matrix))) if matrix.size else 0.0


def laplacian_product_check(X: SimplicialComplex,
                            operator: Callable[[SimplicialComplex, OperatorKind, int], OperatorMatrix] = laplacian
                            ) -> IdentityResult:
    """
    max|L+_{r-1} - B_r B_r^T| и max|L-_r - B_r^T B_r| (и беззнаковые с N_r)

    Args:
        X: Комплекс
        operator: Построитель лапласианов (X, kind, r) -> OperatorMatrix

    Returns:
        IdentityResult с наибольшим отклонением; L+ при r = dim+1 сравнивается с нулем
    """
    residual = 0.0
    checked = 0
    for signed, upper, lower in ((True, OperatorKind.UPPER, OperatorKind.LOWER),
                                 (False, OperatorKind.SIGNLESS_UPPER, OperatorKind.SIGNLESS_LOWER)):
        for r in range(0, X.dim + 1):
            B = boundary_matrix(X, r, signed=signed).entries
            if r >= 1:
                residual = max(residual, _max_abs(operator(X, upper, r).entries - B @ B.T))
                checked += 1
            residual = max(residual, _max_abs(operator(X, lower, r).entries - B.T @ B))
            checked += 1
        if X.dim >= 0:
            residual = max(residual, _max_abs(operator(X, upper, X.dim + 1).entries))
            checked += 1
    return IdentityResult(name='laplacian_product', residual=residual, checked=checked)


def check_structure(X: SimplicialComplex, rng: np.random.Generator, instance_id: str = "instance",
                    tol: float = 1e-8, relabel_tol: float = 1e-9, relabelings: int = 5) -> IdentityReport:
    """
    Структурный набор: граничные операторы, произведения, L+/L-, перенумерации

    Args:
        X: Комплекс
        rng: Генератор для случайных перенумераций
        instance_id: Идентификатор экземпляра
        tol: Допуск для сравнения спектров L+ и L-
        relabel_tol: Допуск инвариантности спектра при перенумерации
        relabelings: Число случайных перенумераций
    """
    report = IdentityReport(instance_id=instance_id, tol=tol)
    report.results.append(boundary_composition_check(X))
    report.results.append(laplacian_product_check(X))
    for r in range(1, X.dim + 1):
        report.results.append(lplus_lminus_check(X, r))
        report.results.append(lplus_lminus_check(X, r, signless=True))

    relabel_worst = 0.0
    checked = 0
    for _ in range(relabelings):
        order = [X.vertices[i] for i in rng.permutation(X.n)]
        for r in range(1, max(X.dim, 1) + 1):
            for kind in (OperatorKind.UPPER, OperatorKind.SIGNLESS_UPPER):
                result = relabel_invariance_check(X, r, order, kind)
                relabel_worst = max(relabel_worst, result.residual)
                checked += 1
    report.results.append(IdentityResult(name='relabel', residual=relabel_worst, checked=checked,
                                         details={'tol': relabel_tol}))
    return report


def la_multiset_check(X: SimplicialComplex, r: int, rng: np.random.Generator) -> IdentityResult:
    """
    Ненулевой спектр L_A равен мультимножеству положительных deg^{(r)}(sigma), sigma in A

    A набирается жадно из случайной перестановки X(r-1) с условием
    "каждая r-грань содержит не более одного элемента A".
    """
    faces = X.faces(r - 1)
    cofaces = X.cofaces(r)
    used = set()
    A = []
    for i in rng.permutation(len(faces)):
        sigma = faces[i]
        if any(tau in used for tau in cofaces[sigma]):
            continue
        if rng.random() < 0.5:
            continue
        A.append(sigma)
        used.update(cofaces[sigma])
    spectrum = nonzero_spectrum(sym_spectrum(gadget_LA(X, r, A)))
    expected = [float(len(cofaces[sigma])) for sigma in A if cofaces[sigma]]
    return IdentityResult(name='gadget_la', residual=multiset_residual(spectrum, expected),
                          details={'r': r, 'size': len(A)})


def lprime_check(X: SimplicialComplex, r: int, tol: float = 1e-7) -> Optional[IdentityResult]:
    """
    Восстановление L-_r = L' + sum c_i L_i и lambda_1(L') <= (r+1)d для всех допустимых k

    Returns:
        None, если у комплекса нет невырожденных k
    """
    profile = degree_profile(X, r)
    residual = 0.0
    checked = 0
    for k in range(1, X.f(r - 1) // (r + 1) + 1):
        try:
            decomposition = lprime_decomposition(X, r, k, profile=profile, tol=tol)
        except DegenerateInstanceError:
            break
        residual = max(residual, decomposition.reconstruction_residual())
        checked += 1
    if not checked:
        return None
    return IdentityResult(name='gadget_lprime', residual=residual, checked=checked, details={'r': r})


def check_gadgets(X: SimplicialComplex, rng: np.random.Generator, instance_id: str = "instance",
                  partition: Optional[PartiteStructure] = None, tol: float = 1e-8) -> IdentityReport:
    """Набор проверок L_A, разложения для дольных комплексов и L'"""
    report = IdentityReport(instance_id=instance_id, tol=tol)
    results: List[IdentityResult] = report.results
    for r in range(1, X.dim + 1):
        results.append(la_multiset_check(X, r, rng))
        lprime = lprime_check(X, r)
        if lprime is not None:
            results.append(lprime)
    if partition is not None and X.dim >= 1:
        results.append(IdentityResult(
            name='partite_decomposition',
            residual=partite_decomposition_residual(X, X.dim, partition),
            details={'r': X.dim, 'classes': partition.num_classes},
        ))
    return report
