"""
JSON-формат экземпляров

{"vertices": [...], "facets": [[...], ...], "partition": [[...], ...]}
или сокращение для графов {"n": int, "edges": [[u, v], ...]}
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Union

from core.errors import MalformedInputError

from .partite import PartiteStructure
from .simplicial_complex import SimplicialComplex, build_complex

logger = logging.getLogger(__name__)


@dataclass
class LoadedInstance:
    """Экземпляр, прочитанный из файла"""
    complex: SimplicialComplex
    partition: Optional[PartiteStructure] = None
    instance_id: str = "file"
    meta: Dict[str, Any] = field(default_factory=dict)


def _vertex_id(value: Any) -> Union[int, str]:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise MalformedInputError(f"Идентификатор вершины должен быть int или str: {value!r}")
    return value


def parse_complex_document(document: Dict[str, Any], instance_id: str = "file") -> LoadedInstance:
    """
    Разбор JSON-документа экземпляра

    Raises:
        MalformedInputError: при неверной структуре документа
    """
    if not isinstance(document, dict):
        raise MalformedInputError("Документ экземпляра должен быть JSON-объектом")

    if 'edges' in document and 'facets' not in document:
        n = document.get('n')
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise MalformedInputError(f"Поле 'n' должно быть неотрицательным целым: {n!r}")
        facets = []
        for edge in document['edges']:
            if not isinstance(edge, (list, tuple)) or len(edge) != 2:
                raise MalformedInputError(f"Ребро должно быть парой вершин: {edge!r}")
            u, v = (_vertex_id(x) for x in edge)
            if not all(isinstance(x, int) and 0 <= x < n for x in (u, v)):
                raise MalformedInputError(f"Ребро {edge!r} вне диапазона 0..{n - 1}")
            if u == v:
                raise MalformedInputError(f"Петля {edge!r} недопустима")
            facets.append([u, v])
        X = build_complex(facets, vertices=list(range(n)))
    else:
        if 'facets' not in document:
            raise MalformedInputError("Документ должен содержать 'facets' или 'edges'")
        raw_facets = document['facets']
        if not isinstance(raw_facets, list):
            raise MalformedInputError("'facets' должно быть списком")
        facets = []
        for facet in raw_facets:
            if not isinstance(facet, list) or not facet:
                raise MalformedInputError(f"Грань должна быть непустым списком: {facet!r}")
            facets.append([_vertex_id(v) for v in facet])
        vertices = document.get('vertices')
        if vertices is not None:
            if not isinstance(vertices, list):
                raise MalformedInputError("'vertices' должно быть списком")
            vertices = [_vertex_id(v) for v in vertices]
            known = set(vertices)
            stray = [v for facet in facets for v in facet if v not in known]
            if stray:
                raise MalformedInputError(f"Вершины {stray} отсутствуют в 'vertices'")
        X = build_complex(facets, vertices=vertices)

    partition = None
    if document.get('partition') is not None:
        raw = document['partition']
        if not isinstance(raw, list) or not all(isinstance(c, list) for c in raw):
            raise MalformedInputError("'partition' должно быть списком списков вершин")
        partition = PartiteStructure.from_lists([_vertex_id(v) for v in c] for c in raw)

    return LoadedInstance(complex=X, partition=partition,
                          instance_id=str(document.get('instance_id', instance_id)),
                          meta=dict(document.get('meta') or {}))


def load_complex(path: Union[str, Path]) -> LoadedInstance:
    """Чтение экземпляра из JSON-файла"""
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            document = json.load(f)
    except FileNotFoundError:
        raise MalformedInputError(f"Файл экземпляра не найден: {path}")
    except json.JSONDecodeError as e:
        raise MalformedInputError(f"Некорректный JSON в {path}: {e}")
    loaded = parse_complex_document(document, instance_id=f"file:{path.name}")
    logger.info(f"📂 Загружен экземпляр {loaded.instance_id}: {loaded.complex.summary()}")
    return loaded


def dump_complex(X: SimplicialComplex, partition: Optional[PartiteStructure] = None,
                 instance_id: Optional[str] = None, meta: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Документ в формате {"vertices", "facets", "partition"}"""
    document: Dict[str, Any] = {
        'vertices': list(X.vertices),
        'facets': [list(face) for face in X.facets()],
    }
    if partition is not None:
        document['partition'] = partition.to_lists(X)
    if instance_id is not None:
        document['instance_id'] = instance_id
    if meta:
        document['meta'] = meta
    return document


def save_complex(path: Union[str, Path], X: SimplicialComplex,
                 partition: Optional[PartiteStructure] = None, **kwargs) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(dump_complex(X, partition, **kwargs), f, ensure_ascii=False)
        f.write('\n')
    return path
