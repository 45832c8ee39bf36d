"""
Набор тождеств для одного экземпляра

Графовые тождества (компоненты, дополнение, eps_k дополнения) пропускаются
для комплексов размерности >= 2; тождества конуса и L+/L- проверяются для всех.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from modules.complex_core import OperatorKind, SimplicialComplex, join_cone, laplacian
from modules.spectra import (
    IdentityResult,
    complement_eigen_check,
    component_spectrum_check,
    eps_k,
    lplus_lminus_check,
    multiset_residual,
    nonzero_spectrum,
    sym_spectrum,
    top_k_sum,
    trace_check,
)

logger = logging.getLogger(__name__)

CONE_SIZES = (1, 2, 3)


@dataclass
class IdentityReport:
    """Невязки всех тождеств экземпляра"""
    instance_id: str
    results: List[IdentityResult] = field(default_factory=list)
    tol: float = 1e-8

    @property
    def max_residual(self) -> float:
        return max((res.residual for res in self.results), default=0.0)

    @property
    def failures(self) -> List[IdentityResult]:
        return [res for res in self.results if not res.within(res.details.get('tol', self.tol))]

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            'instance_id': self.instance_id,
            'holds': self.holds,
            'max_residual': float(f"{self.max_residual:.12g}"),
            'identities': {res.name: float(f"{res.residual:.12g}") for res in self.results},
        }


def fresh_vertices(X: SimplicialComplex, count: int) -> List[str]:
    """count новых меток вершин, не встречающихся в X"""
    fresh = []
    i = 0
    while len(fresh) < count:
        label = f"w{i}"
        if label not in X.rank:
            fresh.append(label)
        i += 1
    return fresh


def coning_check(X: SimplicialComplex, size: int, r: Optional[int] = None) -> IdentityResult:
    """
    Сдвиг спектра конусом: для Y = X * sigma, |sigma| = size и r = dim(X)

    L-_{r+|sigma|}(Y) = |sigma| I + L-_r(X) поэлементно (tau -> tau + sigma),
    ненулевой спектр L+_{r+|sigma|-1}(Y) = {lambda + |sigma|: lambda in spec L-_r(X)}.
    """
    r = X.dim if r is None else r
    sigma = fresh_vertices(X, size)
    Y = join_cone(X, sigma)
    base = laplacian(X, OperatorKind.LOWER, r)
    shifted_level = r + size

    cone_lower = laplacian(Y, OperatorKind.LOWER, shifted_level)
    matrix_residual = 0.0
    if cone_lower.order != base.order:
        matrix_residual = float('inf')
    elif base.order:
        lifted = [face + tuple(sigma) for face in base.row_faces]
        rows = [cone_lower.row_index[face] for face in lifted]
        cone_entries = cone_lower.entries[np.ix_(rows, rows)]
        matrix_residual = float(np.max(np.abs(cone_entries - (size * np.eye(base.order) + base.entries))))

    expected = sym_spectrum(base).eigenvalues + size
    upper = nonzero_spectrum(sym_spectrum(laplacian(Y, OperatorKind.UPPER, shifted_level)))
    spectrum_residual = multiset_residual(upper, expected)

    return IdentityResult(
        name=f'coning_{size}',
        residual=max(matrix_residual, spectrum_residual),
        details={'r': r, 'size': size, 'matrix_residual': matrix_residual,
                 'spectrum_residual': spectrum_residual},
    )


def extremal_cone_check(G: SimplicialComplex, size: int) -> IdentityResult:
    """
    Для Y = G * sigma и r = |sigma| + 1 >= 2, 1 <= k <= min(n, |E|):
    sum_{i<=k} lambda_i(L+_{r-1}(Y)) = f_r(Y) + eps_k(G) + (r-1)k
    """
    sigma = fresh_vertices(G, size)
    Y = join_cone(G, sigma)
    r = size + 1
    cone_spectrum = sym_spectrum(laplacian(Y, OperatorKind.UPPER, r))
    graph_spectrum_ = sym_spectrum(laplacian(G, OperatorKind.UPPER, 1))
    residual = 0.0
    top = min(G.n, G.f(1))
    for k in range(1, top + 1):
        lhs = top_k_sum(cone_spectrum, k)
        rhs = Y.f(r) + eps_k(G, k, graph_spectrum_) + (r - 1) * k
        residual = max(residual, abs(lhs - rhs))
    return IdentityResult(name=f'extremal_cone_{size}', residual=residual, checked=top,
                          details={'r': r, 'f_r': Y.f(r)})


def check_identities(X: SimplicialComplex, instance_id: str = "instance", tol: float = 1e-8,
                     cone_sizes: Sequence[int] = CONE_SIZES) -> IdentityReport:
    """
    Все применимые тождества для экземпляра

    Args:
        X: Граф или комплекс
        instance_id: Идентификатор для отчета
        tol: Допуск невязки
        cone_sizes: Размеры sigma для тождеств конуса

    Returns:
        IdentityReport; невязка > tol считается нарушением уровня теоремы
    """
    report = IdentityReport(instance_id=instance_id, tol=tol)
    results = report.results

    if X.n == 0:
        return report

    if X.dim <= 1:
        results.append(component_spectrum_check(X))
        results.append(complement_eigen_check(X))
        if X.f(1) > 0:
            for size in cone_sizes:
                results.append(extremal_cone_check(X, size))
    else:
        results.append(component_spectrum_check(X, r=1))

    for r in range(1, X.dim + 1):
        results.append(lplus_lminus_check(X, r))
        results.append(lplus_lminus_check(X, r, signless=True))
    for r in range(1, X.dim + 2):
        results.append(trace_check(X, r))

    if X.dim >= 1:
        for size in cone_sizes:
            results.append(coning_check(X, size))

    for failure in report.failures:
        logger.error(f"❌ Тождество {failure.name} нарушено на {instance_id}: "
                     f"невязка {failure.residual:.3e}")
    return report
