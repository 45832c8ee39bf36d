"""
Модуль комплексов
Симплициальные комплексы, знаки инцидентности, граничные операторы и лапласианы
"""

from .complex_io import LoadedInstance, dump_complex, load_complex, parse_complex_document, save_complex
from .constructions import (
    complement_graph,
    connected_components,
    induced_subcomplex,
    join_cone,
    reorder_vertices,
    to_networkx,
)
from .operators import OperatorKind, OperatorMatrix, boundary_matrix, graph_laplacian, laplacian
from .partite import PartiteStructure, partite_classes
from .simplicial_complex import Face, SimplicialComplex, Vertex, boundary_faces, build_complex, incidence_sign

__all__ = [
    'SimplicialComplex',
    'Face',
    'Vertex',
    'build_complex',
    'incidence_sign',
    'boundary_faces',
    'OperatorKind',
    'OperatorMatrix',
    'boundary_matrix',
    'laplacian',
    'graph_laplacian',
    'complement_graph',
    'join_cone',
    'induced_subcomplex',
    'reorder_vertices',
    'connected_components',
    'to_networkx',
    'PartiteStructure',
    'partite_classes',
    'LoadedInstance',
    'load_complex',
    'save_complex',
    'dump_complex',
    'parse_complex_document',
]
