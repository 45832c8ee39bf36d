"""
Модуль спектров
Собственные значения, частичные суммы, профили степеней и спектральные тождества
"""

from .degrees import DegreeProfile, conjugate_sequence, degree_profile, order_faces
from .identities import (
    IdentityResult,
    aat_check,
    complement_eigen_check,
    component_spectrum_check,
    conjugate_identity_check,
    ky_fan_check,
    lplus_lminus_check,
    multiset_residual,
    relabel_invariance_check,
    trace_check,
)
from .spectrum import (
    SpectrumSummary,
    eps_k,
    gershgorin_bound,
    graph_spectrum,
    nonzero_spectrum,
    summarize,
    sym_spectrum,
    top_k_sum,
)

__all__ = [
    'SpectrumSummary',
    'sym_spectrum',
    'summarize',
    'top_k_sum',
    'nonzero_spectrum',
    'graph_spectrum',
    'eps_k',
    'gershgorin_bound',
    'DegreeProfile',
    'degree_profile',
    'conjugate_sequence',
    'order_faces',
    'IdentityResult',
    'multiset_residual',
    'complement_eigen_check',
    'component_spectrum_check',
    'lplus_lminus_check',
    'ky_fan_check',
    'aat_check',
    'conjugate_identity_check',
    'relabel_invariance_check',
    'trace_check',
]
