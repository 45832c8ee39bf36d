# tests/unit/test_generators.py
"""
Тесты генераторов: семейства, случайные экземпляры, перебор, потоки
"""

import networkx as nx
import pytest

from core.errors import ContractViolation, EnumerationLimitError, MalformedInputError
from modules.complex_core import to_networkx
from modules.generators import (
    InstanceStream,
    enumerate_graphs,
    enumerate_trees,
    gen_brouwer_equality,
    gen_complete_partite_complex,
    gen_matching_complex,
    gen_random_complex,
    gen_random_graph,
    gen_random_partite_complex,
    gen_star,
    gen_star_forest,
    graph_count,
    graph_from_mask,
    make_rng,
    parse_descriptor,
    tree_count,
    tree_from_index,
)
from modules.generators.streams import parse_filters


class TestFamilies:
    """Детерминированные семейства"""

    def test_star_forest(self):
        G = gen_star_forest(3, 2)
        assert G.n == 5
        assert G.f(1) == 3
        assert gen_star_forest([2, 2]).f_vector == (4, 2)

    def test_invalid_sizes(self):
        with pytest.raises(ContractViolation):
            gen_star(1)
        with pytest.raises(ContractViolation):
            gen_star_forest(3, 1)

    def test_matching_with_shared_core(self):
        X = gen_matching_complex(2, 3, shared=1)
        assert X.f_vector == (7, 9, 3)
        assert set(X.r_degrees(2).values()) == {1}
        with pytest.raises(ContractViolation):
            gen_matching_complex(2, 3, shared=2)

    def test_brouwer_equality(self):
        G = gen_brouwer_equality(2, 3)
        assert G.f(1) == 7

    def test_complete_partite(self):
        X, partition = gen_complete_partite_complex(2, [2, 2, 2])
        assert X.f_vector == (6, 12, 8)
        assert partition.num_classes == 3
        partition.validate(X)


class TestRandomInstances:
    """Воспроизводимость случайных экземпляров"""

    def test_graph_is_reproducible(self):
        first = gen_random_graph(8, 0.5, 42, 3)
        assert first.edges == gen_random_graph(8, 0.5, 42, 3).edges
        assert first.edges != gen_random_graph(8, 0.5, 42, 4).edges

    def test_complex_keeps_full_skeleton(self):
        full = gen_random_complex(6, 2, 1.0, 0)
        assert full.f_vector == (6, 15, 20)
        empty = gen_random_complex(5, 2, 0.0, 1)
        assert empty.f_vector == (5, 10)

    def test_invalid_parameters(self):
        with pytest.raises(ContractViolation):
            gen_random_graph(5, 1.5, 0)
        with pytest.raises(ContractViolation):
            gen_random_complex(3, 3, 0.5, 0)
        with pytest.raises(ContractViolation):
            make_rng(-1)

    def test_rng_streams_are_independent(self):
        assert make_rng(7, 0).random() == make_rng(7, 0).random()
        assert make_rng(7, 0).random() != make_rng(7, 1).random()

    def test_random_partite_faces_are_rainbow(self):
        for index in range(10):
            X, partition = gen_random_partite_complex(2, [2, 2, 3], 0.6, 5, index)
            assert X.dim == 2
            assert X.n == 7
            partition.validate(X)
            for face in X.faces(2):
                assert sorted(partition.class_of[v] for v in face) == [0, 1, 2]

    def test_random_partite_is_reproducible(self):
        first, _ = gen_random_partite_complex(2, [2, 2, 2], 0.5, 9, 1)
        assert first.faces(2) == gen_random_partite_complex(2, [2, 2, 2], 0.5, 9, 1)[0].faces(2)
        full, _ = gen_random_partite_complex(2, [2, 2, 2], 1.0, 9)
        assert full.f_vector == (6, 12, 8)

    def test_random_partite_never_drops_dimension(self):
        X, partition = gen_random_partite_complex(3, [2, 2, 2, 2], 0.0, 3)
        assert X.f_vector == (8, 6, 4, 1)
        partition.validate(X)

    def test_random_partite_invalid_parameters(self):
        with pytest.raises(ContractViolation):
            gen_random_partite_complex(2, [2, 2], 0.5, 0)
        with pytest.raises(ContractViolation):
            gen_random_partite_complex(1, [2, 0], 0.5, 0)
        with pytest.raises(ContractViolation):
            gen_random_partite_complex(1, [2, 2], -0.1, 0)


class TestEnumeration:
    """Перебор графов и деревьев"""

    def test_graph_masks(self):
        assert graph_count(4) == 64
        assert graph_from_mask(3, 0b101).edges == ((0, 1), (1, 2))
        assert sum(1 for _ in enumerate_graphs(4)) == 64

    def test_dedup_classes(self):
        assert sum(1 for _ in enumerate_graphs(3, dedup=True)) == 4

    def test_limits(self):
        with pytest.raises(EnumerationLimitError):
            list(enumerate_graphs(9))
        with pytest.raises(EnumerationLimitError):
            list(enumerate_graphs(8, max_n=7))

    def test_trees(self):
        assert tree_count(5) == 125
        assert tree_from_index(4, 0).edges == ((0, 1), (0, 2), (0, 3))
        trees = [T for _, T in enumerate_trees(5)]
        assert len(trees) == 125
        assert all(nx.is_tree(to_networkx(T)) for T in trees)
        assert sum(1 for _ in enumerate_trees(5, dedup=True)) == 3


class TestStreams:
    """Дескрипторы и потоки экземпляров"""

    def test_parse_descriptor(self):
        assert parse_descriptor('path:n=50/100/200') == ('path', {'n': ['50', '100', '200']})
        assert parse_descriptor('star_forest:sizes=2/3') == ('star_forest', {'sizes': ['2', '3']})
        with pytest.raises(MalformedInputError):
            parse_descriptor('lattice:n=3')
        with pytest.raises(MalformedInputError):
            parse_descriptor('path:n')

    def test_scalar_lists_expand(self):
        stream = InstanceStream('path:n=50/100/200')
        assert len(stream) == 3
        ids = [inst.instance_id for _, inst in stream]
        assert ids == ['path:n=50', 'path:n=100', 'path:n=200']
        assert stream.instance_at(2).complex.n == 200

    def test_cartesian_product(self):
        stream = InstanceStream('random_complex:n=6/7,r=1/2,p=0.5,count=2')
        assert len(stream) == 8
        assert stream.instance_at(1).instance_id.endswith(':i=1')

    def test_enumeration_stream(self):
        stream = InstanceStream('enumerate:n=3')
        assert len(stream) == 8
        instance = stream.instance_at(5)
        assert instance.complex.edges == graph_from_mask(3, 5).edges
        assert instance.instance_id == 'enumerate:n=3:i=5'
        with pytest.raises(IndexError):
            stream.instance_at(8)
        with pytest.raises(EnumerationLimitError):
            InstanceStream('enumerate:n=9')

    def test_filter(self):
        stream = InstanceStream('enumerate:n=4,filter=triangle_free')
        assert stream.instance_at(63) is None
        instances = [inst for _, inst in stream]
        assert instances
        assert all(inst.assumptions.triangle_free for inst in instances)
        assert all(':filter=triangle_free' in inst.instance_id for inst in instances)
        with pytest.raises(MalformedInputError):
            parse_filters(['planar'])
        assert parse_filters(['max_degree:3']).max_degree == 3

    def test_dedup(self):
        assert sum(1 for _ in InstanceStream('enumerate:n=3,dedup=1')) == 4
        assert sum(1 for _ in InstanceStream('enumerate:n=3', dedup=True)) == 4

    def test_random_stream_matches_generator(self):
        stream = InstanceStream('random_graph:n=6,p=0.5,seed=3,count=4')
        assert len(stream) == 4
        assert stream.instance_at(2).complex.edges == gen_random_graph(6, 0.5, 3, 2).edges

    def test_assumptions_and_partitions(self):
        assert InstanceStream('trees:n=4').instance_at(0).assumptions.forest
        partite = InstanceStream('complete_partite:r=1,sizes=2/3').instance_at(0)
        assert partite.partition.num_classes == 2
        assert partite.complex.f(1) == 6

    def test_random_partite_stream(self):
        stream = InstanceStream('random_partite:r=2,sizes=2/2/3,p=0.6,seed=5,count=30')
        assert len(stream) == 30
        instance = stream.instance_at(4)
        X, partition = gen_random_partite_complex(2, [2, 2, 3], 0.6, 5, 4)
        assert instance.complex.faces(2) == X.faces(2)
        assert instance.partition == partition
        assert instance.instance_id.endswith(':i=4')

    def test_iter_range(self):
        stream = InstanceStream('enumerate:n=3')
        assert [index for index, _ in stream.iter_range(1, 3)] == [1, 2]
        assert [index for index, _ in stream.iter_range(6, 20)] == [6, 7]
