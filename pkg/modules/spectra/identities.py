"""
Классические спектральные тождества
Каждая проверка возвращает IdentityResult с максимальной абсолютной невязкой
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Any, Dict, Optional, Sequence

import numpy as np
from scipy import linalg

from modules.complex_core import (
    OperatorKind,
    SimplicialComplex,
    complement_graph,
    connected_components,
    laplacian,
    reorder_vertices,
)

from .degrees import conjugate_sequence
from .spectrum import (
    DEFAULT_ZERO_TOL_REL,
    SpectrumSummary,
    graph_spectrum,
    nonzero_spectrum,
    sym_spectrum,
    top_k_sum,
)

logger = logging.getLogger(__name__)


@dataclass
class IdentityResult:
    """Итог проверки одного тождества"""
    name: str
    residual: float
    checked: int = 1
    details: Dict[str, Any] = field(default_factory=dict)

    def within(self, tol: float) -> bool:
        return self.residual <= tol

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'residual': self.residual, 'checked': self.checked,
                'details': self.details}


def multiset_residual(a: Sequence[float], b: Sequence[float]) -> float:
    """Максимальное отклонение отсортированных мультимножеств; inf при разной мощности"""
    if len(a) != len(b):
        return float('inf')
    if not len(a):
        return 0.0
    return float(np.max(np.abs(np.sort(np.asarray(a)) - np.sort(np.asarray(b)))))


def complement_eigen_check(G: SimplicialComplex,
                           spectrum: Optional[SpectrumSummary] = None) -> IdentityResult:
    """
    lambda_i(L(G)) = n - lambda_{n-i}(L(G_bar)), 1 <= i <= n-1, и
    eps_k(G) = eps_{n-k-1}(G_bar) + nk - C(n,2), 0 <= k <= n-1 (eps_0 = -|E|)
    """
    n = G.n
    s = spectrum if spectrum is not None else graph_spectrum(G)
    complement = complement_graph(G)
    sc = graph_spectrum(complement)
    m, mc = G.f(1), complement.f(1)

    eigen_residual = 0.0
    for i in range(1, n):
        lhs = s.eigenvalues[i - 1]
        rhs = n - sc.eigenvalues[n - i - 1]
        eigen_residual = max(eigen_residual, abs(float(lhs - rhs)))

    eps_residual = 0.0
    for k in range(0, n):
        eps_g = float(s.prefix_sums[k]) - m
        eps_c = float(sc.prefix_sums[n - k - 1]) - mc
        eps_residual = max(eps_residual, abs(eps_g - (eps_c + n * k - comb(n, 2))))

    return IdentityResult(
        name='complement',
        residual=max(eigen_residual, eps_residual),
        checked=2 * max(n - 1, 0) + 1,
        details={'eigen_residual': eigen_residual, 'eps_residual': eps_residual},
    )


def component_spectrum_check(G: SimplicialComplex, r: int = 1) -> IdentityResult:
    """Спектр L+_{r-1} несвязного комплекса - объединение спектров компонент"""
    whole = sym_spectrum(laplacian(G, OperatorKind.UPPER, r))
    parts = []
    components = connected_components(G)
    for component in components:
        if r <= component.dim + 1:
            parts.extend(sym_spectrum(laplacian(component, OperatorKind.UPPER, r)).eigenvalues)
        else:
            parts.extend([0.0] * component.f(r - 1))
    return IdentityResult(name='components', residual=multiset_residual(whole.eigenvalues, parts),
                          details={'components': len(components)})


def lplus_lminus_check(X: SimplicialComplex, r: int, signless: bool = False) -> IdentityResult:
    """Ненулевые спектры L+_{r-1} и L-_r (или Q+/Q-) совпадают"""
    upper_kind = OperatorKind.SIGNLESS_UPPER if signless else OperatorKind.UPPER
    lower_kind = OperatorKind.SIGNLESS_LOWER if signless else OperatorKind.LOWER
    upper = nonzero_spectrum(sym_spectrum(laplacian(X, upper_kind, r)))
    lower = nonzero_spectrum(sym_spectrum(laplacian(X, lower_kind, r)))
    return IdentityResult(
        name='signless_lminus_lplus' if signless else 'lminus_lplus',
        residual=multiset_residual(upper, lower),
        details={'r': r, 'nonzero_upper': len(upper), 'nonzero_lower': len(lower)},
    )


def ky_fan_check(A: np.ndarray, B: np.ndarray) -> IdentityResult:
    """
    sum_{i<=k} lambda_i(A+B) <= sum_{i<=k} lambda_i(A) + sum_{i<=k} lambda_i(B) для всех k

    residual - наибольшее превышение левой части (0, если неравенство выполнено).
    """
    sa, sb, sab = sym_spectrum(A), sym_spectrum(B), sym_spectrum(np.asarray(A) + np.asarray(B))
    slacks = [top_k_sum(sa, k) + top_k_sum(sb, k) - top_k_sum(sab, k) for k in range(1, sa.order + 1)]
    min_slack = min(slacks) if slacks else 0.0
    return IdentityResult(name='ky_fan', residual=max(0.0, -min_slack), checked=len(slacks),
                          details={'min_slack': min_slack})


def _matched_distance(a: np.ndarray, b: np.ndarray) -> float:
    if len(a) != len(b):
        return float('inf')
    remaining = list(b)
    worst = 0.0
    for value in sorted(a, key=lambda z: (z.real, z.imag)):
        distances = [abs(value - other) for other in remaining]
        j = int(np.argmin(distances))
        worst = max(worst, float(distances[j]))
        remaining.pop(j)
    return worst


def aat_check(A: np.ndarray, B: np.ndarray, zero_tol_rel: float = DEFAULT_ZERO_TOL_REL) -> IdentityResult:
    """Ненулевые собственные значения AB и BA совпадают с кратностями"""
    A, B = np.asarray(A, dtype=float), np.asarray(B, dtype=float)
    ab = linalg.eigvals(A @ B)
    ba = linalg.eigvals(B @ A)
    scale = max(1.0, float(np.max(np.abs(ab))) if ab.size else 0.0,
                float(np.max(np.abs(ba))) if ba.size else 0.0)
    threshold = zero_tol_rel * scale * max(A.shape + (1,))
    nz_ab = ab[np.abs(ab) > threshold]
    nz_ba = ba[np.abs(ba) > threshold]
    return IdentityResult(name='aat', residual=_matched_distance(nz_ab, nz_ba),
                          details={'nonzero_ab': int(nz_ab.size), 'nonzero_ba': int(nz_ba.size)})


def conjugate_identity_check(degrees: Sequence[int]) -> IdentityResult:
    """sum_{i<=k} d'_i = sum_i min(d_i, k) для всех k = 1..n"""
    n = len(degrees)
    conjugate = conjugate_sequence(degrees, n)
    residual = 0
    for k in range(1, n + 1):
        residual = max(residual, abs(sum(conjugate[:k]) - sum(min(d, k) for d in degrees)))
    return IdentityResult(name='conjugate', residual=float(residual), checked=n)


def relabel_invariance_check(X: SimplicialComplex, r: int, order: Sequence,
                             kind: OperatorKind = OperatorKind.UPPER) -> IdentityResult:
    """Спектр не зависит от линейного порядка вершин"""
    original = sym_spectrum(laplacian(X, kind, r))
    relabeled = sym_spectrum(laplacian(reorder_vertices(X, order), kind, r))
    return IdentityResult(name='relabel', residual=multiset_residual(original.eigenvalues,
                                                                     relabeled.eigenvalues),
                          details={'r': r, 'kind': kind.value})


def trace_check(X: SimplicialComplex, r: int) -> IdentityResult:
    """Следы L+_{r-1} и L-_r и сумма спектра: sum deg^{(r)} = (r+1) f_r"""
    upper = laplacian(X, OperatorKind.UPPER, r)
    residual = abs(float(np.trace(upper.entries)) - sum(X.r_degrees(r).values()))
    if r <= X.dim:
        lower = laplacian(X, OperatorKind.LOWER, r)
        residual = max(residual, abs(float(np.trace(lower.entries)) - (r + 1) * X.f(r)))
    spectrum_total = float(sym_spectrum(upper).prefix_sums[-1])
    residual = max(residual, abs(spectrum_total - (r + 1) * X.f(r)))
    return IdentityResult(name='trace', residual=residual, details={'r': r})
