"""
Модуль генераторов
Детерминированные семейства, случайные экземпляры, полный перебор и потоки экземпляров
"""

from .enumeration import (
    check_enumeration_limit,
    enumerate_graphs,
    enumerate_trees,
    graph_count,
    graph_from_mask,
    invariant_key,
    tree_count,
    tree_from_index,
)
from .families import (
    gen_brouwer_equality,
    gen_complete_graph,
    gen_complete_partite_complex,
    gen_matching_complex,
    gen_path,
    gen_star,
    gen_star_forest,
)
from .random_instances import gen_random_complex, gen_random_graph, gen_random_partite_complex, make_rng
from .streams import FAMILIES, Instance, InstanceStream, parse_descriptor, parse_filters

__all__ = [
    'gen_star',
    'gen_path',
    'gen_star_forest',
    'gen_complete_graph',
    'gen_matching_complex',
    'gen_brouwer_equality',
    'gen_complete_partite_complex',
    'gen_random_graph',
    'gen_random_complex',
    'gen_random_partite_complex',
    'make_rng',
    'graph_count',
    'graph_from_mask',
    'invariant_key',
    'check_enumeration_limit',
    'enumerate_graphs',
    'tree_count',
    'tree_from_index',
    'enumerate_trees',
    'Instance',
    'InstanceStream',
    'FAMILIES',
    'parse_descriptor',
    'parse_filters',
]
