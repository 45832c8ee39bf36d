"""
Вычислитель оценок
LHS - сумма k наибольших собственных значений L+_{r-1} (или Q+_{r-1}),
RHS - формула реестра; результат - BoundReport
"""

import logging
import math
from dataclasses import dataclass
from math import comb
from typing import Any, Callable, Dict, List, Optional, Tuple

from core.errors import (ContractViolation, InapplicableBoundError, InternalConsistencyError,
                         TheoremViolationError)
from modules.complex_core import (
    OperatorKind,
    PartiteStructure,
    SimplicialComplex,
    laplacian,
    partite_classes,
    to_networkx,
)
from modules.spectra import DegreeProfile, SpectrumSummary, degree_profile, sym_spectrum, top_k_sum

from .families import FamilyAssumptions, family_term, has_triangle, validate_parameters, verify_assumptions
from .registry import REGISTRY, BoundId, BoundSpec, Scope, Tier
from .witnesses import max_degree_subset, max_induced_edges

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12


def round_significant(value: float, digits: int = SIGNIFICANT_DIGITS) -> float:
    if value is None or not math.isfinite(value):
        return value
    return float(f"{value:.{digits}g}")


@dataclass
class EvaluationLimits:
    """Пределы точных переборов"""
    induced_exact_n: int = 16
    family_check_n: int = 12
    partite_search_n: int = 24
    witness_bruteforce_faces: int = 12

    @classmethod
    def from_settings(cls, settings) -> "EvaluationLimits":
        return cls(
            induced_exact_n=settings.induced_exact_n,
            family_check_n=settings.family_check_n,
            partite_search_n=settings.partite_search_n,
            witness_bruteforce_faces=settings.witness_bruteforce_faces,
        )


@dataclass
class BoundReport:
    """Результат одной проверки (bound, instance, r, k)"""
    bound_id: str
    instance_id: str
    r: int
    k: int
    lhs: float
    rhs: float
    slack: float
    tier: Tier
    holds: bool
    witness: Optional[Dict[str, Any]] = None

    @property
    def is_theorem_violation(self) -> bool:
        return self.tier == Tier.THEOREM and not self.holds

    @property
    def is_conjecture_violation(self) -> bool:
        return self.tier == Tier.CONJECTURE and not self.holds

    def ensure(self) -> "BoundReport":
        """Исключение, если нарушена оценка уровня теоремы"""
        if self.is_theorem_violation:
            raise TheoremViolationError(
                f"Нарушена теорема {self.bound_id} на {self.instance_id} (r={self.r}, k={self.k})",
                self.to_dict(),
            )
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            'bound_id': self.bound_id,
            'instance_id': self.instance_id,
            'r': self.r,
            'k': self.k,
            'lhs': round_significant(self.lhs),
            'rhs': round_significant(self.rhs),
            'slack': round_significant(self.slack),
            'tier': self.tier.value,
            'holds': self.holds,
            'witness': self.witness,
        }


class BoundContext:
    """
    Кэш вычислений для одного экземпляра: спектры, профили степеней, разбиение
    """

    def __init__(self, X: SimplicialComplex, instance_id: str = "instance",
                 assumptions: Optional[FamilyAssumptions] = None,
                 partition: Optional[PartiteStructure] = None,
                 limits: Optional[EvaluationLimits] = None):
        self.X = X
        self.instance_id = instance_id
        self.assumptions = assumptions or FamilyAssumptions()
        self.limits = limits or EvaluationLimits()
        self._given_partition = partition
        self._partitions: Dict[int, Optional[PartiteStructure]] = {}
        self.partition_errors: Dict[int, str] = {}
        self._spectra: Dict[Tuple[int, bool], SpectrumSummary] = {}
        self._profiles: Dict[Tuple[int, bool], DegreeProfile] = {}
        self._families_verified: Optional[bool] = None
        self._triangle_free: Optional[bool] = None
        self._induced: Dict[int, Any] = {}

    @property
    def edges(self) -> int:
        return self.X.f(1)

    def spectrum(self, r: int, signless: bool = False) -> SpectrumSummary:
        key = (r, signless)
        if key not in self._spectra:
            kind = OperatorKind.SIGNLESS_UPPER if signless else OperatorKind.UPPER
            self._spectra[key] = sym_spectrum(laplacian(self.X, kind, r))
        return self._spectra[key]

    def profile(self, r: int, partite: bool = False) -> DegreeProfile:
        key = (r, partite)
        if key not in self._profiles:
            partition = self.partition(r) if partite else None
            self._profiles[key] = degree_profile(self.X, r, partition)
        return self._profiles[key]

    def partition(self, r: int) -> Optional[PartiteStructure]:
        """
        Разбиение на r+1 долей для r-мерного комплекса (переданное или найденное)

        Некорректное переданное разбиение не используется: причина отказа
        сохраняется в partition_errors[r], дольные оценки становятся неприменимыми
        """
        if r not in self._partitions:
            found = None
            if self.X.dim == r:
                if self._given_partition is not None:
                    try:
                        self._given_partition.validate(self.X, r)
                        found = self._given_partition
                    except ContractViolation as e:
                        logger.warning(f"⚠️ Разбиение для {self.instance_id} отклонено: {e.message}")
                        self.partition_errors[r] = e.message
                elif self.X.n <= self.limits.partite_search_n:
                    found = partite_classes(self.X, r, max_vertices=self.limits.partite_search_n)
            self._partitions[r] = found
        return self._partitions[r]

    def verify_families(self) -> bool:
        if self._families_verified is None:
            validate_parameters(self.assumptions)
            self._families_verified = verify_assumptions(self.X, self.assumptions,
                                                         self.limits.family_check_n)
        return self._families_verified

    def triangle_free(self) -> bool:
        if self._triangle_free is None:
            if self.assumptions.triangle_free:
                self.verify_families()
                self._triangle_free = True
            else:
                self._triangle_free = not has_triangle(to_networkx(self.X))
        return self._triangle_free

    def induced(self, size: int):
        if size not in self._induced:
            self._induced[size] = max_induced_edges(self.X, size, self.limits.induced_exact_n)
        return self._induced[size]


def _faces(faces) -> List[List[Any]]:
    return [list(face) for face in faces]


# ---- формулы правой части: (ctx, r, k) -> (rhs, witness) ----

RhsFormula = Callable[[BoundContext, int, int], Tuple[float, Optional[Dict[str, Any]]]]


def _anderson_morley(ctx, r, k):
    p = ctx.profile(1)
    return p.d(1) + p.d(2), {'d1': p.d(1), 'd2': p.d(2)}


def _am_edgewise(ctx, r, k):
    p = ctx.profile(1)
    best, edge = 0, None
    for u, v in ctx.X.edges:
        value = p.degree_of[(u,)] + p.degree_of[(v,)]
        if value > best:
            best, edge = value, [u, v]
    return best, ({'edge': edge} if edge else None)


def _grone_merris_lower(ctx, r, k):
    return ctx.profile(1).top_sum(k), None


def _bai(ctx, r, k):
    conjugate = ctx.profile(1).conjugate
    return sum(conjugate[:k]), {'conjugate': list(conjugate[:k])}


def _brouwer(ctx, r, k):
    return ctx.edges + comb(k + 1, 2), None


def _weak_brouwer_old(ctx, r, k):
    first = 2 * k * k - math.ceil(k / 2)
    second = k * k + 15 * k * math.log(k) + 65 * k
    return ctx.edges + min(first, second), None


def _degree_sum(ctx, r, k):
    p = ctx.profile(r)
    count = (r + 1) * k
    return p.top_sum(count), {'faces': _faces(p.ordered_faces[:count])}


def _witness_max_form(ctx, r, k):
    p = ctx.profile(r)
    count = (r + 1) * k
    value, chosen, exhaustive = max_degree_subset(p, count, ctx.X.faces(r - 1),
                                                  ctx.limits.witness_bruteforce_faces)
    if value != p.top_sum(count):
        raise InternalConsistencyError(
            "Максимум по множествам A не совпал с суммой наибольших степеней",
            {'max_form': value, 'sorted_sum': p.top_sum(count), 'r': r, 'k': k},
        )
    return value, {'A': _faces(chosen), 'exhaustive': exhaustive}


def _binom_complex(ctx, r, k):
    return ctx.X.f(r) + comb((r + 1) * k, 2), None


def _k_squared(ctx, r, k):
    return ctx.edges + k * k, None


def _main_plus_bai(ctx, r, k):
    degrees = ctx.profile(1).sorted_degrees
    head = sum(min(d, k) for d in degrees[:2 * k])
    tail = sum(max(0, d - k) for d in degrees[2 * k:])
    return ctx.edges + (head - tail) / 2, None


def _brouwer_min_binom(ctx, r, k):
    n = ctx.X.n
    return ctx.edges + comb(k + 1, 2) + min(comb(n - k - 1, 2), comb(k, 2)), None


def _partite_degree_sum(ctx, r, k):
    p = ctx.profile(r, partite=True)
    heads = [list(profile[:k]) for profile in p.partite_profiles]
    return sum(sum(head) for head in heads), {'class_profiles': heads}


def _duval_reiner(ctx, r, k):
    p = ctx.profile(r)
    return p.vertex_conjugate_prefix(k), {'partite': ctx.partition(r) is not None}


def _higher_brouwer(ctx, r, k):
    return ctx.X.f(r) + comb(k, 2) + r * k, None


def _brouwer_plus(ctx, r, k):
    degrees = ctx.profile(1).sorted_degrees
    rhs = ctx.edges + k / 2 + sum(min(d, k) for d in degrees[:k]) / 2
    return rhs, ({'k_equals_n': True} if k == ctx.X.n else None)


def _induced_2k(ctx, r, k):
    witness = ctx.induced(2 * k)
    return ctx.edges + witness.edges, {'S': list(witness.vertices), 'edges': witness.edges,
                                       'exact': witness.exact}


def _hereditary(signless: bool) -> RhsFormula:
    def formula(ctx, r, k):
        terms = {name: family_term(name, ctx.assumptions, k, signless=signless)
                 for name in ctx.assumptions.asserted()}
        family = min(terms, key=lambda name: (terms[name], name))
        return ctx.edges + terms[family], {'family': family, 'terms': terms,
                                           'verified': ctx.verify_families()}
    return formula


def _lambda1_fww(ctx, r, k):
    p = ctx.profile(r)
    best, face = 0, None
    for tau in ctx.X.faces(r):
        value = sum(p.degree_of[tau[:i] + tau[i + 1:]] for i in range(len(tau)))
        if value > best:
            best, face = value, tau
    return best, ({'face': list(face)} if face else None)


def _lambda1_fr_plus_r(ctx, r, k):
    return ctx.X.f(r) + r, None


RHS_FORMULAS: Dict[BoundId, RhsFormula] = {
    BoundId.ANDERSON_MORLEY: _anderson_morley,
    BoundId.AM_EDGEWISE: _am_edgewise,
    BoundId.GRONE_MERRIS_LOWER: _grone_merris_lower,
    BoundId.BAI: _bai,
    BoundId.BROUWER: _brouwer,
    BoundId.WEAK_BROUWER_OLD: _weak_brouwer_old,
    BoundId.DEGREE_SUM_MAIN: _degree_sum,
    BoundId.WITNESS_MAX_FORM: _witness_max_form,
    BoundId.BINOM_COMPLEX: _binom_complex,
    BoundId.K_SQUARED: _k_squared,
    BoundId.MAIN_PLUS_BAI: _main_plus_bai,
    BoundId.BROUWER_MIN_BINOM: _brouwer_min_binom,
    BoundId.PARTITE_DEGREE_SUM: _partite_degree_sum,
    BoundId.DUVAL_REINER: _duval_reiner,
    BoundId.HIGHER_BROUWER: _higher_brouwer,
    BoundId.BROUWER_PLUS: _brouwer_plus,
    BoundId.INDUCED_2K: _induced_2k,
    BoundId.HEREDITARY_F: _hereditary(signless=False),
    BoundId.LAMBDA1_FWW: _lambda1_fww,
    BoundId.LAMBDA1_FR_PLUS_R: _lambda1_fr_plus_r,
    BoundId.SIGNLESS_DEGREE_SUM: _degree_sum,
    BoundId.SIGNLESS_AOT: _brouwer,
    BoundId.SIGNLESS_TRIANGLEFREE_K2: _k_squared,
    BoundId.SIGNLESS_BINOM_COMPLEX: _binom_complex,
    BoundId.SIGNLESS_PARTITE_DEGREE_SUM: _partite_degree_sum,
    BoundId.SIGNLESS_DUVAL_REINER: _duval_reiner,
    BoundId.SIGNLESS_INDUCED_2K: _induced_2k,
    BoundId.SIGNLESS_HEREDITARY_F: _hereditary(signless=True),
}


def valid_r_range(spec: BoundSpec, X: SimplicialComplex) -> range:
    """Допустимые r: графовые оценки - только r = 1"""
    if X.n == 0:
        return range(0)
    if spec.scope == Scope.GRAPH:
        return range(1, 2) if X.dim <= 1 else range(0)
    if spec.needs_partition:
        return range(X.dim, X.dim + 1) if X.dim >= 1 else range(0)
    return range(1, max(X.dim, 1) + 1)


def valid_k_range(spec: BoundSpec, X: SimplicialComplex, r: int) -> range:
    """Диапазон k, в котором утверждение оценки сформулировано"""
    if r not in valid_r_range(spec, X):
        return range(0)
    f = X.f(r - 1)
    if f == 0:
        return range(0)
    if spec.single_k:
        return range(1, 2)
    bid = spec.bound_id
    if bid in (BoundId.DEGREE_SUM_MAIN, BoundId.WITNESS_MAX_FORM, BoundId.SIGNLESS_DEGREE_SUM):
        return range(1, f // (r + 1) + 1)
    if spec.scope == Scope.GRAPH:
        n = X.n
        if bid == BoundId.MAIN_PLUS_BAI:
            return range(1, (n - 1) // 2 + 1)
        if bid == BoundId.BROUWER_MIN_BINOM:
            return range(1, n)
        if bid in (BoundId.INDUCED_2K, BoundId.SIGNLESS_INDUCED_2K):
            return range(1, n // 2 + 1)
        return range(1, n + 1)
    return range(1, f + 1)


def _check_applicable(spec: BoundSpec, ctx: BoundContext, r: int, k: int):
    X = ctx.X
    if r not in valid_r_range(spec, X):
        raise InapplicableBoundError(
            f"{spec.bound_id.value}: r={r} недопустимо (dim={X.dim}, область {spec.scope.value})",
            {'bound_id': spec.bound_id.value, 'r': r, 'dim': X.dim},
        )
    k_range = valid_k_range(spec, X, r)
    if k not in k_range:
        raise InapplicableBoundError(
            f"{spec.bound_id.value}: k={k} вне диапазона {k_range.start}..{k_range.stop - 1}",
            {'bound_id': spec.bound_id.value, 'k': k, 'r': r},
        )
    if spec.needs_partition and ctx.partition(r) is None:
        reason = ctx.partition_errors.get(r)
        if reason is not None:
            raise InapplicableBoundError(f"{spec.bound_id.value}: переданное разбиение некорректно: {reason}",
                                         {'bound_id': spec.bound_id.value, 'r': r, 'reason': reason})
        raise InapplicableBoundError(f"{spec.bound_id.value}: комплекс не является {r + 1}-дольным",
                                     {'bound_id': spec.bound_id.value, 'r': r})
    if spec.needs_family:
        if not ctx.assumptions.any:
            raise InapplicableBoundError(f"{spec.bound_id.value}: не заявлено ни одного семейства")
        ctx.verify_families()
    if spec.bound_id == BoundId.SIGNLESS_TRIANGLEFREE_K2 and not ctx.triangle_free():
        raise InapplicableBoundError(f"{spec.bound_id.value}: граф содержит треугольник")


def _tier(spec: BoundSpec, ctx: BoundContext, r: int) -> Tier:
    if spec.bound_id == BoundId.DUVAL_REINER:
        # r=1 зависит только от 1-остова: теорема Гроне-Мерриса
        if r == 1 or ctx.partition(r) is not None:
            return Tier.THEOREM
    return spec.tier


def evaluate_in_context(bound_id, ctx: BoundContext, r: int, k: int, tol: float = 1e-7) -> BoundReport:
    """Проверка оценки с кэшем экземпляра"""
    spec = REGISTRY[BoundId(bound_id)]
    _check_applicable(spec, ctx, r, k)

    lhs = top_k_sum(ctx.spectrum(r, spec.signless), k)
    rhs, witness = RHS_FORMULAS[spec.bound_id](ctx, r, k)
    rhs = float(rhs)
    slack = lhs - rhs if spec.lower else rhs - lhs
    report = BoundReport(
        bound_id=spec.bound_id.value,
        instance_id=ctx.instance_id,
        r=r,
        k=k,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        tier=_tier(spec, ctx, r),
        holds=slack >= -tol,
        witness=witness,
    )
    if report.is_theorem_violation:
        logger.error(f"❌ Нарушена теорема {report.bound_id} на {ctx.instance_id}: "
                     f"r={r}, k={k}, slack={slack:.3e}")
    elif report.is_conjecture_violation:
        logger.warning(f"⚠️ Контрпример к гипотезе {report.bound_id} на {ctx.instance_id}: "
                       f"r={r}, k={k}, slack={slack:.3e}")
    return report


def evaluate_bound(bound_id, X: SimplicialComplex, r: int, k: int,
                   assumptions: Optional[FamilyAssumptions] = None, tol: float = 1e-7,
                   partition: Optional[PartiteStructure] = None, instance_id: str = "instance",
                   limits: Optional[EvaluationLimits] = None) -> BoundReport:
    """
    Проверка одной оценки на экземпляре

    Raises:
        InapplicableBoundError: оценка неприменима к (X, r, k)
        FamilyAssumptionError: граф не принадлежит заявленному семейству
    """
    ctx = BoundContext(X, instance_id, assumptions, partition, limits)
    return evaluate_in_context(bound_id, ctx, r, k, tol)


class BoundEvaluator:
    """Пакетная проверка набора оценок на одном экземпляре"""

    def __init__(self, tol: float = 1e-7, limits: Optional[EvaluationLimits] = None,
                 strict: bool = False):
        self.tol = tol
        self.limits = limits or EvaluationLimits()
        self.strict = strict
        self.logger = logging.getLogger(__name__)
        self.skipped = 0

    def context(self, X: SimplicialComplex, instance_id: str = "instance",
                assumptions: Optional[FamilyAssumptions] = None,
                partition: Optional[PartiteStructure] = None) -> BoundContext:
        return BoundContext(X, instance_id, assumptions, partition, self.limits)

    def evaluate(self, ctx: BoundContext, bound_ids, k_spec="valid",
                 r_values: Optional[List[int]] = None) -> List[BoundReport]:
        """
        Все комбинации (id, r, k) для экземпляра

        Args:
            ctx: Контекст экземпляра
            bound_ids: Идентификаторы оценок
            k_spec: "valid", "1..n" или список k
            r_values: Значения r; по умолчанию все допустимые для каждой оценки

        Returns:
            Отчеты в порядке (id, r, k); неприменимые комбинации пропускаются,
            если не включен strict
        """
        reports: List[BoundReport] = []
        for bound_id in bound_ids:
            spec = REGISTRY[BoundId(bound_id)]
            rs = r_values if r_values is not None else list(valid_r_range(spec, ctx.X))
            for r in rs:
                for k in self._k_values(spec, ctx.X, r, k_spec):
                    try:
                        reports.append(evaluate_in_context(spec.bound_id, ctx, r, k, self.tol))
                    except InapplicableBoundError as e:
                        if self.strict:
                            raise
                        self.skipped += 1
                        self.logger.debug(f"Пропуск {spec.bound_id.value} на {ctx.instance_id}: {e}")
        return reports

    def _k_values(self, spec: BoundSpec, X: SimplicialComplex, r: int, k_spec) -> List[int]:
        if k_spec in (None, 'valid'):
            return list(valid_k_range(spec, X, r))
        if k_spec == '1..n':
            order = X.f(r - 1) if 1 <= r <= X.dim + 1 else 0
            return list(range(1, order + 1))
        return list(k_spec)

    def rhs_profile(self, bound_id, ctx: BoundContext, r: int) -> List[Tuple[int, float]]:
        """RHS для всех допустимых k (для проверки монотонности по k)"""
        spec = REGISTRY[BoundId(bound_id)]
        profile = []
        for k in valid_k_range(spec, ctx.X, r):
            _check_applicable(spec, ctx, r, k)
            rhs, _ = RHS_FORMULAS[spec.bound_id](ctx, r, k)
            profile.append((k, float(rhs)))
        return profile


def rhs_profile(bound_id, X: SimplicialComplex, r: int = 1,
                assumptions: Optional[FamilyAssumptions] = None,
                partition: Optional[PartiteStructure] = None) -> List[Tuple[int, float]]:
    """RHS оценки как функция k на всем допустимом диапазоне"""
    evaluator = BoundEvaluator()
    return evaluator.rhs_profile(bound_id, evaluator.context(X, assumptions=assumptions,
                                                             partition=partition), r)
