"""
Реестр оценок
Каждая оценка: стабильный идентификатор, уровень (теорема/гипотеза), область
применимости и оператор, к спектру которого она относится
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List

from core.errors import ConfigError


class Tier(str, Enum):
    THEOREM = "theorem"
    CONJECTURE = "conjecture"
    GADGET = "lemma-gadget"


class Scope(str, Enum):
    GRAPH = "graph"
    COMPLEX = "complex"


class BoundId(str, Enum):
    ANDERSON_MORLEY = "anderson_morley"
    AM_EDGEWISE = "am_edgewise"
    GRONE_MERRIS_LOWER = "grone_merris_lower"
    BAI = "bai"
    BROUWER = "brouwer"
    WEAK_BROUWER_OLD = "weak_brouwer_old"
    DEGREE_SUM_MAIN = "degree_sum_main"
    WITNESS_MAX_FORM = "witness_max_form"
    BINOM_COMPLEX = "binom_complex"
    K_SQUARED = "k_squared"
    MAIN_PLUS_BAI = "main_plus_bai"
    BROUWER_MIN_BINOM = "brouwer_min_binom"
    PARTITE_DEGREE_SUM = "partite_degree_sum"
    DUVAL_REINER = "duval_reiner"
    HIGHER_BROUWER = "higher_brouwer"
    BROUWER_PLUS = "brouwer_plus"
    INDUCED_2K = "induced_2k"
    HEREDITARY_F = "hereditary_f"
    LAMBDA1_FWW = "lambda1_fww"
    LAMBDA1_FR_PLUS_R = "lambda1_fr_plus_r"
    SIGNLESS_DEGREE_SUM = "signless_degree_sum"
    SIGNLESS_AOT = "signless_aot"
    SIGNLESS_TRIANGLEFREE_K2 = "signless_trianglefree_k2"
    SIGNLESS_BINOM_COMPLEX = "signless_binom_complex"
    SIGNLESS_PARTITE_DEGREE_SUM = "signless_partite_degree_sum"
    SIGNLESS_DUVAL_REINER = "signless_duval_reiner"
    SIGNLESS_INDUCED_2K = "signless_induced_2k"
    SIGNLESS_HEREDITARY_F = "signless_hereditary_f"


@dataclass(frozen=True)
class BoundSpec:
    """Описание оценки в реестре"""
    bound_id: BoundId
    tier: Tier
    scope: Scope
    description: str
    signless: bool = False
    lower: bool = False
    needs_partition: bool = False
    needs_family: bool = False
    single_k: bool = False


def _spec(bound_id: BoundId, tier: Tier, scope: Scope, description: str, **flags) -> BoundSpec:
    return BoundSpec(bound_id=bound_id, tier=tier, scope=scope, description=description, **flags)


T, C = Tier.THEOREM, Tier.CONJECTURE
G, X = Scope.GRAPH, Scope.COMPLEX

REGISTRY: Dict[BoundId, BoundSpec] = {spec.bound_id: spec for spec in [
    _spec(BoundId.ANDERSON_MORLEY, T, G, "lambda_1 <= d_1 + d_2", single_k=True),
    _spec(BoundId.AM_EDGEWISE, T, G, "lambda_1 <= max_{uv in E} deg(u) + deg(v)", single_k=True),
    _spec(BoundId.GRONE_MERRIS_LOWER, T, G, "sum lambda_i >= sum_{i<=k} d_i", lower=True),
    _spec(BoundId.BAI, T, G, "sum lambda_i <= sum_{i<=k} d'_i"),
    _spec(BoundId.BROUWER, C, G, "sum lambda_i <= |E| + C(k+1, 2)"),
    _spec(BoundId.WEAK_BROUWER_OLD, T, G, "sum lambda_i <= |E| + min(2k^2 - ceil(k/2), k^2 + 15k ln k + 65k)"),
    _spec(BoundId.DEGREE_SUM_MAIN, T, X, "sum lambda_i(L+) <= sum_{i<=(r+1)k} d_i^(r)"),
    _spec(BoundId.WITNESS_MAX_FORM, T, X, "sum lambda_i(L+) <= max_{|A|=(r+1)k} sum_{A} deg^(r)"),
    _spec(BoundId.BINOM_COMPLEX, T, X, "sum lambda_i(L+) <= f_r + C((r+1)k, 2)"),
    _spec(BoundId.K_SQUARED, T, G, "sum lambda_i <= |E| + k^2"),
    _spec(BoundId.MAIN_PLUS_BAI, T, G,
          "sum lambda_i <= |E| + (sum_{i<=2k} min(d_i,k) - sum_{i>2k} max(0, d_i-k)) / 2"),
    _spec(BoundId.BROUWER_MIN_BINOM, T, G, "sum lambda_i <= |E| + C(k+1,2) + min(C(n-k-1,2), C(k,2))"),
    _spec(BoundId.PARTITE_DEGREE_SUM, T, X, "sum lambda_i(L+) <= sum_j sum_{i<=k} d_i^(r)(X;j)",
          needs_partition=True),
    _spec(BoundId.DUVAL_REINER, C, X, "sum lambda_i(L+) <= sum_{i<=k} |{v : deg^(r)(v) >= i}|"),
    _spec(BoundId.HIGHER_BROUWER, C, X, "sum lambda_i(L+) <= f_r + C(k,2) + rk"),
    _spec(BoundId.BROUWER_PLUS, C, G, "sum lambda_i <= |E| + k/2 + sum_{i<=k} min(d_i,k) / 2"),
    _spec(BoundId.INDUCED_2K, T, G, "sum lambda_i <= |E| + max_{|S|=2k} |E(G[S])|"),
    _spec(BoundId.HEREDITARY_F, T, G, "sum lambda_i <= |E| + f(2k)", needs_family=True),
    _spec(BoundId.LAMBDA1_FWW, T, X, "lambda_1(L+) <= max_tau sum_{sigma in tau} deg^(r)(sigma)",
          single_k=True),
    _spec(BoundId.LAMBDA1_FR_PLUS_R, T, X, "lambda_1(L+) <= f_r + r", single_k=True),
    _spec(BoundId.SIGNLESS_DEGREE_SUM, T, X, "sum lambda_i(Q+) <= sum_{i<=(r+1)k} d_i^(r)", signless=True),
    _spec(BoundId.SIGNLESS_AOT, C, G, "sum lambda_i(Q) <= |E| + C(k+1, 2)", signless=True),
    _spec(BoundId.SIGNLESS_TRIANGLEFREE_K2, T, G, "sum lambda_i(Q) <= |E| + k^2 (triangle-free)",
          signless=True),
    _spec(BoundId.SIGNLESS_BINOM_COMPLEX, T, X, "sum lambda_i(Q+) <= f_r + C((r+1)k, 2)", signless=True),
    _spec(BoundId.SIGNLESS_PARTITE_DEGREE_SUM, T, X, "sum lambda_i(Q+) <= sum_j sum_{i<=k} d_i^(r)(X;j)",
          signless=True, needs_partition=True),
    _spec(BoundId.SIGNLESS_DUVAL_REINER, T, X, "sum lambda_i(Q+) <= sum_{i<=k} |{v : deg^(r)(v) >= i}|",
          signless=True, needs_partition=True),
    _spec(BoundId.SIGNLESS_INDUCED_2K, T, G, "sum lambda_i(Q) <= |E| + max_{|S|=2k} |E(G[S])|",
          signless=True),
    _spec(BoundId.SIGNLESS_HEREDITARY_F, T, G, "sum lambda_i(Q) <= |E| + f(2k)", signless=True,
          needs_family=True),
]}


def get_spec(bound_id) -> BoundSpec:
    return REGISTRY[BoundId(bound_id)]


def resolve_bound_ids(names: Iterable[str]) -> List[BoundId]:
    """
    Разбор списка идентификаторов; "all" / "all-applicable" - весь реестр

    Raises:
        ConfigError: при неизвестном идентификаторе
    """
    result: List[BoundId] = []
    for name in names:
        name = str(name).strip()
        if not name:
            continue
        if name in ('all', 'all-applicable'):
            result.extend(REGISTRY)
            continue
        try:
            result.append(BoundId(name))
        except ValueError:
            raise ConfigError(f"Неизвестная оценка: {name}", {'known': [b.value for b in BoundId]})
    return list(dict.fromkeys(result))
