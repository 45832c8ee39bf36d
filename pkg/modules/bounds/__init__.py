"""
Модуль оценок
Реестр неравенств для сумм собственных значений, вычислитель и матрицы доказательства
"""

from .evaluator import (
    BoundContext,
    BoundEvaluator,
    BoundReport,
    EvaluationLimits,
    evaluate_bound,
    evaluate_in_context,
    rhs_profile,
    round_significant,
    valid_k_range,
    valid_r_range,
)
from .families import FamilyAssumptions, family_term, verify_assumptions
from .gadgets import (
    LPrimeDecomposition,
    gadget_LA,
    gadget_Li,
    gadget_Lprime,
    lprime_decomposition,
    partite_decomposition_residual,
)
from .registry import REGISTRY, BoundId, BoundSpec, Scope, Tier, get_spec, resolve_bound_ids
from .witnesses import max_induced_edges

__all__ = [
    'BoundId',
    'BoundSpec',
    'Tier',
    'Scope',
    'REGISTRY',
    'get_spec',
    'resolve_bound_ids',
    'BoundReport',
    'BoundContext',
    'BoundEvaluator',
    'EvaluationLimits',
    'evaluate_bound',
    'evaluate_in_context',
    'rhs_profile',
    'round_significant',
    'valid_k_range',
    'valid_r_range',
    'FamilyAssumptions',
    'family_term',
    'verify_assumptions',
    'gadget_LA',
    'gadget_Li',
    'gadget_Lprime',
    'lprime_decomposition',
    'LPrimeDecomposition',
    'partite_decomposition_residual',
    'max_induced_edges',
]
