# tests/unit/test_spectra.py
"""
Тесты модуля spectra: спектры, профили степеней, классические тождества
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from core.errors import ContractViolation
from modules.complex_core import SimplicialComplex, build_complex, graph_laplacian
from modules.generators import gen_complete_partite_complex, gen_path, gen_random_complex, graph_from_mask
from modules.spectra import (
    aat_check,
    complement_eigen_check,
    component_spectrum_check,
    conjugate_identity_check,
    conjugate_sequence,
    degree_profile,
    eps_k,
    gershgorin_bound,
    graph_spectrum,
    ky_fan_check,
    lplus_lminus_check,
    nonzero_spectrum,
    relabel_invariance_check,
    sym_spectrum,
    top_k_sum,
    trace_check,
)


class TestSpectrum:
    """Полный спектр и частичные суммы"""

    def test_star_spectrum(self, star4):
        s = graph_spectrum(star4)
        assert np.allclose(s.eigenvalues, [4, 1, 1, 0], atol=1e-12)
        assert s.prefix_sums[0] == 0.0
        assert top_k_sum(s, 1) == pytest.approx(4.0)
        assert top_k_sum(s, 3) == pytest.approx(6.0)

    def test_path_spectrum(self, path3):
        s = graph_spectrum(path3)
        assert np.allclose(s.eigenvalues, [3, 1, 0], atol=1e-12)
        assert nonzero_spectrum(s) == pytest.approx((3.0, 1.0))
        assert s.is_psd()

    def test_path_closed_form(self):
        n = 9
        s = graph_spectrum(gen_path(n))
        expected = sorted((2 - 2 * np.cos(np.pi * j / n) for j in range(n)), reverse=True)
        assert np.allclose(s.eigenvalues, expected, atol=1e-10)

    def test_top_k_range(self, path3):
        s = graph_spectrum(path3)
        with pytest.raises(ContractViolation):
            top_k_sum(s, 0)
        with pytest.raises(ContractViolation):
            top_k_sum(s, 4)

    def test_eps_k(self, star4, k3):
        assert eps_k(k3, 1) == pytest.approx(0.0)
        assert eps_k(star4, 1) == pytest.approx(1.0)
        with pytest.raises(ContractViolation):
            eps_k(star4, 5)

    def test_rejects_bad_matrices(self):
        with pytest.raises(ContractViolation):
            sym_spectrum(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(ContractViolation):
            sym_spectrum(np.zeros((2, 3)))

    def test_empty_matrix(self):
        s = sym_spectrum(np.zeros((0, 0)))
        assert s.order == 0
        assert list(s.prefix_sums) == [0.0]

    def test_gershgorin(self, path3):
        bound = gershgorin_bound(graph_laplacian(path3))
        assert bound == 4.0
        assert graph_spectrum(path3).lambda_max <= bound


class TestDegreeProfile:
    """Профили r-степеней"""

    def test_graph_profile(self, path3):
        p = degree_profile(path3, 1)
        assert p.sorted_degrees == (2, 1, 1)
        assert p.ordered_faces == ((1,), (0,), (2,))
        assert p.conjugate == (3, 1, 0)
        assert p.d(4) == 0
        assert p.top_sum(5) == 4

    def test_complex_profile(self, full_triangle):
        p = degree_profile(full_triangle, 2)
        assert p.sorted_degrees == (1, 1, 1)
        assert p.conjugate is None
        assert p.vertex_conjugate_prefix(1) == 3

    def test_partite_profiles(self):
        X, partition = gen_complete_partite_complex(1, [2, 2])
        p = degree_profile(X, 1, partition)
        assert p.partite_profiles == ((2, 2), (2, 2))

    def test_level_range(self, path3):
        with pytest.raises(ContractViolation):
            degree_profile(path3, 3)

    def test_conjugate_sequence(self):
        assert conjugate_sequence([3, 1, 1, 1]) == (4, 1, 1, 0)
        assert conjugate_sequence([2, 2], length=3) == (2, 2, 0)

    def test_conjugate_prefix_identity(self):
        p = degree_profile(build_complex([[0, 1], [0, 2], [0, 3], [1, 2]]), 1)
        for k in range(1, 5):
            assert p.conjugate_prefix(k) == sum(p.conjugate[:k])


class TestIdentities:
    """Классические тождества на фиксированных экземплярах"""

    def setup_method(self):
        self.hollow = build_complex([[0, 1, 2], [1, 2, 3], [3, 4]])
        self.split = SimplicialComplex.from_edges(range(6), [(0, 1), (1, 2), (3, 4)])

    def test_complement(self):
        result = complement_eigen_check(gen_path(5))
        assert result.within(1e-9)

    def test_components(self):
        assert component_spectrum_check(self.split).within(1e-9)
        assert component_spectrum_check(self.hollow, r=2).within(1e-9)

    def test_lplus_lminus(self):
        for r in (1, 2):
            assert lplus_lminus_check(self.hollow, r).within(1e-9)
            assert lplus_lminus_check(self.hollow, r, signless=True).within(1e-9)

    def test_ky_fan(self):
        rng = np.random.default_rng(3)
        A = rng.normal(size=(6, 6))
        B = rng.normal(size=(6, 6))
        result = ky_fan_check(A + A.T, B + B.T)
        assert result.within(1e-9)
        assert result.checked == 6

    def test_aat(self):
        rng = np.random.default_rng(5)
        A = rng.normal(size=(3, 5))
        B = rng.normal(size=(5, 3))
        result = aat_check(A, B)
        assert result.details['nonzero_ab'] == 3
        assert result.details['nonzero_ba'] == 3
        assert result.within(1e-8)

    def test_conjugate(self):
        assert conjugate_identity_check([3, 1, 1, 1]).residual == 0.0

    def test_relabel(self):
        order = list(reversed(self.hollow.vertices))
        assert relabel_invariance_check(self.hollow, 2, order).within(1e-9)

    def test_trace(self):
        for r in range(1, self.hollow.dim + 2):
            assert trace_check(self.hollow, r).within(1e-9)


class TestIdentityProperties:
    """Тождества на случайных графах и комплексах"""

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 15 - 1))
    def test_graph_identities(self, mask):
        G = graph_from_mask(6, mask)
        assert complement_eigen_check(G).within(1e-8)
        assert component_spectrum_check(G).within(1e-8)
        assert lplus_lminus_check(G, 1).within(1e-8)
        assert trace_check(G, 1).within(1e-8)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=10 ** 6), st.integers(min_value=1, max_value=3))
    def test_complex_identities(self, seed, r):
        X = gen_random_complex(6, r, 0.5, seed)
        for level in range(1, X.dim + 1):
            assert lplus_lminus_check(X, level).within(1e-8)
            assert lplus_lminus_check(X, level, signless=True).within(1e-8)
        for level in range(1, X.dim + 2):
            assert trace_check(X, level).within(1e-8)
