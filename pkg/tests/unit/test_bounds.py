# tests/unit/test_bounds.py
"""
Тесты реестра оценок и вычислителя
"""

from itertools import combinations_with_replacement

import pytest

from core.errors import (
    ConfigError,
    FamilyAssumptionError,
    InapplicableBoundError,
    TheoremViolationError,
)
from modules.bounds import (
    REGISTRY,
    BoundEvaluator,
    BoundId,
    BoundReport,
    FamilyAssumptions,
    Tier,
    evaluate_bound,
    get_spec,
    resolve_bound_ids,
    rhs_profile,
    round_significant,
    valid_k_range,
    valid_r_range,
)
from modules.bounds.evaluator import RHS_FORMULAS
from modules.complex_core import PartiteStructure, build_complex
from modules.generators import (
    gen_brouwer_equality,
    gen_complete_graph,
    gen_complete_partite_complex,
    gen_matching_complex,
    gen_path,
    gen_star_forest,
)


class TestRegistry:
    """Содержимое реестра и разбор идентификаторов"""

    def test_registry_is_complete(self):
        assert len(REGISTRY) == len(BoundId) == 28
        assert set(RHS_FORMULAS) == set(BoundId)

    def test_tiers(self):
        assert get_spec('brouwer').tier == Tier.CONJECTURE
        assert get_spec('signless_aot').tier == Tier.CONJECTURE
        assert get_spec('k_squared').tier == Tier.THEOREM
        assert get_spec('grone_merris_lower').lower
        assert get_spec('partite_degree_sum').needs_partition
        assert get_spec('hereditary_f').needs_family

    def test_resolve(self):
        assert resolve_bound_ids(['brouwer', ' brouwer ', '']) == [BoundId.BROUWER]
        assert len(resolve_bound_ids(['all-applicable'])) == 28
        with pytest.raises(ConfigError):
            resolve_bound_ids(['no_such_bound'])


class TestGraphBounds:
    """Оценки для графов на экземплярах с известным спектром"""

    def test_anderson_morley_on_triangle(self, k3):
        report = evaluate_bound('anderson_morley', k3, 1, 1)
        assert report.lhs == pytest.approx(3.0)
        assert report.rhs == 4.0
        assert report.slack == pytest.approx(1.0)
        assert report.holds
        assert report.tier == Tier.THEOREM

    def test_k_squared_on_k5(self):
        report = evaluate_bound('k_squared', gen_complete_graph(5), 1, 2)
        assert report.lhs == pytest.approx(10.0)
        assert report.rhs == 14.0

    def test_grone_merris_lower_slack_sign(self, star4):
        report = evaluate_bound('grone_merris_lower', star4, 1, 1)
        assert report.rhs == 3.0
        assert report.slack == pytest.approx(1.0)

    def test_bai_tight_on_star(self, star4):
        report = evaluate_bound('bai', star4, 1, 1)
        assert report.rhs == 4.0
        assert report.slack == pytest.approx(0.0, abs=1e-9)
        assert report.witness == {'conjugate': [4]}

    def test_am_edgewise_tight_on_star(self, star4):
        report = evaluate_bound('am_edgewise', star4, 1, 1)
        assert report.rhs == 4.0
        assert report.witness == {'edge': [0, 1]}

    def test_main_plus_bai_on_triangle(self, k3):
        report = evaluate_bound('main_plus_bai', k3, 1, 1)
        assert report.rhs == 3.5

    def test_brouwer_equality_family(self):
        report = evaluate_bound('brouwer', gen_brouwer_equality(3, 5), 1, 3)
        assert report.rhs == 24.0
        assert report.slack == pytest.approx(0.0, abs=1e-9)
        assert report.tier == Tier.CONJECTURE
        assert report.holds

    @pytest.mark.parametrize('b', range(0, 7))
    @pytest.mark.parametrize('k', range(1, 6))
    def test_brouwer_equality_grid(self, k, b):
        G = gen_brouwer_equality(k, b)
        report = evaluate_bound('brouwer', G, 1, k)
        if b > 0:
            assert report.slack == pytest.approx(0.0, abs=1e-8)
            return
        # b = 0 дает K_k: sum = k(k-1) при правой части k^2, равенство сдвигается на k-1
        assert report.slack == pytest.approx(float(k), abs=1e-8)
        if k > 1:
            assert evaluate_bound('brouwer', G, 1, k - 1).slack == pytest.approx(0.0, abs=1e-8)

    @pytest.mark.parametrize('sizes', [
        sizes for m in (1, 2, 3) for sizes in combinations_with_replacement((2, 3, 4), m)
    ])
    def test_star_forest_equality(self, sizes):
        G = gen_star_forest(*sizes)
        k = len(sizes)
        report = evaluate_bound('degree_sum_main', G, 1, k)
        assert report.lhs == pytest.approx(float(sum(sizes)))
        assert report.slack == pytest.approx(0.0, abs=1e-8)

    def test_weak_brouwer_and_min_binom(self, k3):
        assert evaluate_bound('weak_brouwer_old', k3, 1, 1).rhs == 4.0
        assert evaluate_bound('brouwer_min_binom', k3, 1, 1).rhs == 4.0

    def test_induced_2k(self):
        report = evaluate_bound('induced_2k', gen_complete_graph(4), 1, 1)
        assert report.rhs == 7.0
        assert report.witness['edges'] == 1
        assert report.witness['exact']

    def test_partite_degree_sum_tight_on_c4(self):
        X, partition = gen_complete_partite_complex(1, [2, 2])
        report = evaluate_bound('partite_degree_sum', X, 1, 1, partition=partition)
        assert report.lhs == pytest.approx(4.0)
        assert report.slack == pytest.approx(0.0, abs=1e-9)

    def test_partite_needs_partition(self, k3):
        with pytest.raises(InapplicableBoundError):
            evaluate_bound('partite_degree_sum', k3, 1, 1)

    def test_signless_triangle_free_needs_triangle_free(self, k3, path3):
        with pytest.raises(InapplicableBoundError):
            evaluate_bound('signless_trianglefree_k2', k3, 1, 1)
        assert evaluate_bound('signless_trianglefree_k2', path3, 1, 1).holds

    def test_graph_bound_on_complex_is_inapplicable(self, full_triangle):
        assert len(valid_r_range(get_spec('brouwer'), full_triangle)) == 0
        with pytest.raises(InapplicableBoundError):
            evaluate_bound('brouwer', full_triangle, 1, 1)

    def test_k_out_of_range(self, k3):
        assert list(valid_k_range(get_spec('main_plus_bai'), k3, 1)) == [1]
        with pytest.raises(InapplicableBoundError):
            evaluate_bound('main_plus_bai', k3, 1, 2)


class TestFamilyBounds:
    """Оценки с утверждениями о наследственных семействах"""

    def test_forest_is_tight_on_star(self, star4):
        report = evaluate_bound('hereditary_f', star4, 1, 1, FamilyAssumptions(forest=True))
        assert report.rhs == 4.0
        assert report.slack == pytest.approx(0.0, abs=1e-9)
        assert report.witness['family'] == 'forest'
        assert report.witness['verified']

    def test_smallest_family_term_wins(self, star4):
        assumptions = FamilyAssumptions(forest=True, triangle_free=True)
        report = evaluate_bound('hereditary_f', star4, 1, 2, assumptions)
        assert report.witness['terms'] == {'forest': 3, 'triangle_free': 4}
        assert report.rhs == 6.0

    def test_requires_assumptions(self, star4):
        with pytest.raises(InapplicableBoundError):
            evaluate_bound('hereditary_f', star4, 1, 1)

    def test_false_assumption(self, k3):
        with pytest.raises(FamilyAssumptionError):
            evaluate_bound('hereditary_f', k3, 1, 1, FamilyAssumptions(forest=True))


class TestComplexBounds:
    """Оценки для комплексов"""

    def setup_method(self):
        self.triangle = build_complex([[0, 1, 2]])
        self.tetrahedron_boundary = build_complex([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])

    @pytest.mark.parametrize('r,m', [(1, 2), (2, 2), (3, 1)])
    def test_degree_sum_tight_on_matchings(self, r, m):
        X = gen_matching_complex(r, m)
        for k in valid_k_range(get_spec('degree_sum_main'), X, r):
            report = evaluate_bound('degree_sum_main', X, r, k)
            assert report.slack == pytest.approx(0.0, abs=1e-9)

    def test_full_triangle_values(self):
        assert evaluate_bound('binom_complex', self.triangle, 2, 1).rhs == 4.0
        for bound_id in ('higher_brouwer', 'lambda1_fr_plus_r', 'lambda1_fww', 'duval_reiner'):
            report = evaluate_bound(bound_id, self.triangle, 2, 1)
            assert report.rhs == 3.0
            assert report.slack == pytest.approx(0.0, abs=1e-9)

    def test_witness_form_matches_degree_sum(self):
        X = self.tetrahedron_boundary
        for k in (1, 2):
            main = evaluate_bound('degree_sum_main', X, 2, k)
            witness = evaluate_bound('witness_max_form', X, 2, k)
            assert witness.rhs == main.rhs
            assert len(witness.witness['A']) == 3 * k

    def test_duval_reiner_tier(self, path3):
        assert evaluate_bound('duval_reiner', path3, 1, 1).tier == Tier.THEOREM
        assert evaluate_bound('duval_reiner', self.triangle, 2, 1).tier == Tier.THEOREM
        report = evaluate_bound('duval_reiner', self.tetrahedron_boundary, 2, 1)
        assert report.tier == Tier.CONJECTURE

    def test_duval_reiner_on_skeleton_is_theorem(self):
        for X in (self.triangle, self.tetrahedron_boundary):
            for k in valid_k_range(get_spec('duval_reiner'), X, 1):
                report = evaluate_bound('duval_reiner', X, 1, k)
                assert report.tier == Tier.THEOREM
                assert report.holds

    def test_invalid_partition_makes_partite_bounds_inapplicable(self):
        X, _ = gen_complete_partite_complex(2, [2, 2, 2])
        bad = PartiteStructure.from_lists([[0, 2], [1, 3], [4, 5]])
        with pytest.raises(InapplicableBoundError) as excinfo:
            evaluate_bound('partite_degree_sum', X, 2, 1, partition=bad)
        assert 'reason' in excinfo.value.details
        evaluator = BoundEvaluator()
        ctx = evaluator.context(X, 'bad', partition=bad)
        reports = evaluator.evaluate(ctx, [BoundId.PARTITE_DEGREE_SUM, BoundId.DUVAL_REINER], r_values=[2])
        assert {r.bound_id for r in reports} == {'duval_reiner'}
        assert all(r.tier == Tier.CONJECTURE for r in reports)
        assert evaluator.skipped > 0
        assert 2 in ctx.partition_errors

    def test_signless_partite_bounds(self):
        X, partition = gen_complete_partite_complex(2, [2, 2, 2])
        for bound_id in ('signless_partite_degree_sum', 'signless_duval_reiner', 'partite_degree_sum'):
            for k in (1, 2, 3):
                assert evaluate_bound(bound_id, X, 2, k, partition=partition).holds


class TestReports:
    """Формат отчета и пакетная проверка"""

    def test_report_fields(self, k3):
        record = evaluate_bound('k_squared', k3, 1, 1, instance_id='k3').to_dict()
        assert list(record) == ['bound_id', 'instance_id', 'r', 'k', 'lhs', 'rhs', 'slack',
                                'tier', 'holds', 'witness']
        assert record['tier'] == 'theorem'
        assert record['instance_id'] == 'k3'

    def test_round_significant(self):
        assert round_significant(1 / 3) == 0.333333333333
        assert round_significant(float('inf')) == float('inf')

    def test_ensure_raises_on_theorem_violation(self):
        report = BoundReport('k_squared', 'forged', 1, 1, lhs=5.0, rhs=4.0, slack=-1.0,
                             tier=Tier.THEOREM, holds=False)
        assert report.is_theorem_violation
        with pytest.raises(TheoremViolationError):
            report.ensure()
        conjecture = BoundReport('brouwer', 'forged', 1, 1, lhs=5.0, rhs=4.0, slack=-1.0,
                                 tier=Tier.CONJECTURE, holds=False)
        assert conjecture.ensure() is conjecture

    def test_evaluator_skips_inapplicable(self, star4):
        evaluator = BoundEvaluator()
        ctx = evaluator.context(star4, 'star4')
        reports = evaluator.evaluate(ctx, resolve_bound_ids(['all']))
        assert reports
        assert not any(r.is_theorem_violation for r in reports)
        assert evaluator.skipped > 0
        assert not any(r.bound_id == 'hereditary_f' for r in reports)

    def test_strict_evaluator_raises(self, star4):
        evaluator = BoundEvaluator(strict=True)
        with pytest.raises(InapplicableBoundError):
            evaluator.evaluate(evaluator.context(star4), [BoundId.HEREDITARY_F])

    def test_explicit_k_list(self, path3):
        evaluator = BoundEvaluator()
        reports = evaluator.evaluate(evaluator.context(path3), [BoundId.K_SQUARED], k_spec=[1, 3])
        assert [r.k for r in reports] == [1, 3]

    def test_rhs_profile_is_monotone(self, k3):
        profile = rhs_profile('k_squared', k3)
        assert profile == [(1, 4.0), (2, 7.0), (3, 12.0)]
        for bound_id in ('brouwer', 'bai', 'degree_sum_main'):
            values = [rhs for _, rhs in rhs_profile(bound_id, gen_path(6))]
            assert values == sorted(values)
