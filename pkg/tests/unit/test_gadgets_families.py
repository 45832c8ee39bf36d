# tests/unit/test_gadgets_families.py
"""
Тесты матриц доказательства, свидетелей и наследственных семейств
"""

import numpy as np
import pytest

from core.errors import ContractViolation, DegenerateInstanceError, FamilyAssumptionError, MalformedInputError
from modules.bounds import (
    FamilyAssumptions,
    family_term,
    gadget_LA,
    gadget_Li,
    gadget_Lprime,
    lprime_decomposition,
    max_induced_edges,
    partite_decomposition_residual,
    verify_assumptions,
)
from modules.bounds.families import has_four_cycle, longest_cycle_length, longest_path_edges
from modules.bounds.witnesses import max_degree_subset
from modules.complex_core import SimplicialComplex, build_complex, to_networkx
from modules.generators import gen_complete_graph, gen_complete_partite_complex, gen_path
from modules.spectra import degree_profile, nonzero_spectrum, sym_spectrum

C5 = SimplicialComplex.from_edges(range(5), [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


class TestGadgets:
    """L_A, L_i и L'"""

    def setup_method(self):
        self.hollow = build_complex([[0, 1, 2], [1, 2, 3], [3, 4]])
        self.triangle = build_complex([[0, 1, 2]])

    def test_li_has_single_eigenvalue(self):
        Li = gadget_Li(self.hollow, 2, (2, 1))
        assert Li.shape == (2, 2)
        assert nonzero_spectrum(sym_spectrum(Li)) == pytest.approx((2.0,))

    def test_la_spectrum_is_degree_multiset(self):
        LA = gadget_LA(self.hollow, 2, [(0, 1), (1, 3)])
        assert nonzero_spectrum(sym_spectrum(LA)) == pytest.approx((1.0, 1.0))

    def test_la_rejects_shared_coface(self):
        with pytest.raises(ContractViolation):
            gadget_LA(self.triangle, 2, [(0, 1), (0, 2)])

    def test_la_rejects_unknown_face(self):
        with pytest.raises(ContractViolation):
            gadget_LA(self.hollow, 2, [(0, 4)])

    def test_lprime_reconstruction(self):
        decomposition = lprime_decomposition(self.hollow, 2, 1)
        assert decomposition.d == 1
        assert decomposition.chosen_faces[0] == (1, 2)
        assert decomposition.reconstruction_residual() < 1e-12
        assert decomposition.lambda_max <= 3 * decomposition.d + 1e-9

    def test_lprime_degenerate(self):
        with pytest.raises(DegenerateInstanceError):
            lprime_decomposition(self.hollow, 2, 2)

    def test_lprime_on_graph(self, star4):
        Lp = gadget_Lprime(star4, 1, 1)
        assert Lp.shape == (3, 3)
        assert sym_spectrum(Lp).lambda_max <= 2.0 + 1e-9

    def test_lprime_range(self, star4):
        with pytest.raises(ContractViolation):
            lprime_decomposition(star4, 1, 3)

    def test_partite_decomposition(self):
        X, partition = gen_complete_partite_complex(2, [2, 2, 2])
        assert partite_decomposition_residual(X, 2, partition) == 0.0


class TestWitnesses:
    """Комбинаторные свидетели"""

    def test_exact_induced_edges(self):
        K4 = gen_complete_graph(4)
        assert max_induced_edges(K4, 2).edges == 1
        whole = max_induced_edges(K4, 4)
        assert whole.edges == 6
        assert whole.exact

    def test_heuristic_induced_edges(self):
        witness = max_induced_edges(gen_path(20), 4, exact_limit=16)
        assert not witness.exact
        assert witness.edges == 3

    def test_max_degree_subset(self, star4):
        profile = degree_profile(star4, 1)
        value, chosen, exhaustive = max_degree_subset(profile, 2, star4.faces(0))
        assert value == 4
        assert (0,) in chosen
        assert exhaustive


class TestFamilies:
    """Утверждения о семействах и функции f(n)"""

    def test_parse(self):
        a = FamilyAssumptions.parse('forest, max_degree=3')
        assert a.forest and a.max_degree == 3
        assert a.asserted() == ['forest', 'max_degree']
        assert a.to_dict() == {'forest': True, 'max_degree': 3}
        assert not FamilyAssumptions.parse(None).any

    def test_parse_errors(self):
        with pytest.raises(MalformedInputError):
            FamilyAssumptions.parse('outerplanar')
        with pytest.raises(MalformedInputError):
            FamilyAssumptions.parse('max_degree=x')

    def test_merge(self):
        merged = FamilyAssumptions(forest=True).merge(FamilyAssumptions(max_degree=2))
        assert merged.asserted() == ['forest', 'max_degree']

    def test_cycle_and_path_lengths(self, star4):
        assert longest_cycle_length(to_networkx(C5)) == 5
        assert longest_cycle_length(to_networkx(gen_complete_graph(4))) == 4
        assert longest_cycle_length(to_networkx(star4)) == 0
        assert longest_path_edges(to_networkx(gen_path(4))) == 3
        assert longest_path_edges(to_networkx(star4)) == 2
        assert has_four_cycle(to_networkx(gen_complete_partite_complex(1, [2, 2])[0]))
        assert not has_four_cycle(to_networkx(C5))

    def test_verify_accepts_members(self):
        assert verify_assumptions(C5, FamilyAssumptions(girth5=True, max_degree=2, max_cycle=5))
        assert verify_assumptions(gen_path(4), FamilyAssumptions(forest=True, no_path=4))

    @pytest.mark.parametrize('graph,assumptions', [
        (gen_complete_graph(3), FamilyAssumptions(triangle_free=True)),
        (gen_complete_graph(3), FamilyAssumptions(forest=True)),
        (gen_complete_partite_complex(1, [2, 2])[0], FamilyAssumptions(square_free=True)),
        (gen_path(4), FamilyAssumptions(no_path=3)),
        (C5, FamilyAssumptions(max_cycle=4)),
        (gen_complete_graph(4), FamilyAssumptions(max_degree=2)),
    ])
    def test_verify_rejects_non_members(self, graph, assumptions):
        with pytest.raises(FamilyAssumptionError):
            verify_assumptions(graph, assumptions)

    def test_large_graphs_are_trusted(self):
        assert verify_assumptions(gen_complete_graph(14), FamilyAssumptions(forest=True), max_n=12) is False

    def test_family_terms(self):
        a = FamilyAssumptions(max_degree=3, no_path=4)
        assert family_term('planar', a, 1) == 1
        assert family_term('planar', a, 2) == 6
        assert family_term('max_degree', a, 2) == 4
        assert family_term('max_degree', a, 2, signless=True) == 6
        assert family_term('triangle_free', a, 2) == 4
        assert family_term('forest', a, 3) == 5
        assert family_term('no_path', a, 2) == 6
        assert np.isclose(family_term('girth5', a, 5), 15.0)
