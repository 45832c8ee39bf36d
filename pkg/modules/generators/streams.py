"""
Потоки экземпляров

Дескриптор: "name:param=value,..."; '/' разделяет значения списка.
Скалярные параметры со списком значений разворачиваются декартовым произведением
(path:n=50/100/200 - три экземпляра); sizes и filter - списочные параметры.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from core.errors import FamilyAssumptionError, MalformedInputError
from modules.bounds import FamilyAssumptions, verify_assumptions
from modules.complex_core import PartiteStructure, SimplicialComplex

from .enumeration import (
    check_enumeration_limit,
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
from .random_instances import gen_random_complex, gen_random_graph, gen_random_partite_complex

logger = logging.getLogger(__name__)

LIST_PARAMS = {'sizes', 'filter'}
FOREST = FamilyAssumptions(forest=True, planar=True)


@dataclass
class Instance:
    """Экземпляр потока"""
    instance_id: str
    complex: SimplicialComplex
    assumptions: FamilyAssumptions = field(default_factory=FamilyAssumptions)
    partition: Optional[PartiteStructure] = None
    meta: Dict[str, Any] = field(default_factory=dict)


@dataclass
class _Family:
    count: Callable[[Dict[str, Any]], int]
    build: Callable[[Dict[str, Any], int], Tuple[SimplicialComplex, FamilyAssumptions, Optional[PartiteStructure]]]


def _int(params, name, default=None) -> int:
    value = params.get(name, default)
    if value is None:
        raise MalformedInputError(f"Параметр {name} обязателен")
    try:
        return int(value)
    except (TypeError, ValueError):
        raise MalformedInputError(f"Параметр {name} должен быть целым: {value!r}")


def _float(params, name, default=None) -> float:
    value = params.get(name, default)
    try:
        return float(value)
    except (TypeError, ValueError):
        raise MalformedInputError(f"Параметр {name} должен быть числом: {value!r}")


def _sizes(params) -> List[int]:
    raw = params.get('sizes')
    if not raw:
        raise MalformedInputError("Параметр sizes обязателен")
    try:
        return [int(x) for x in raw]
    except ValueError:
        raise MalformedInputError(f"sizes должны быть целыми: {raw}")


def _single(builder):
    return lambda params, i: builder(params)


def _complete_partite(r: int, sizes: List[int]):
    X, partition = gen_complete_partite_complex(r, sizes)
    return X, FamilyAssumptions(), partition


def _random_partite(params, i: int):
    X, partition = gen_random_partite_complex(_int(params, 'r'), _sizes(params), _float(params, 'p'),
                                              _int(params, 'seed', 0), i)
    return X, FamilyAssumptions(), partition


FAMILIES: Dict[str, _Family] = {
    'star': _Family(lambda p: 1, _single(lambda p: (gen_star(_int(p, 'n')), FOREST, None))),
    'path': _Family(lambda p: 1, _single(lambda p: (gen_path(_int(p, 'n')), FOREST, None))),
    'star_forest': _Family(lambda p: 1,
                           _single(lambda p: (gen_star_forest(*_sizes(p)), FOREST, None))),
    'complete': _Family(lambda p: 1, _single(lambda p: (gen_complete_graph(_int(p, 'n')),
                                                        FamilyAssumptions(), None))),
    'matching': _Family(lambda p: 1, _single(lambda p: (
        gen_matching_complex(_int(p, 'r'), _int(p, 'm'), _int(p, 'shared', 0)), FamilyAssumptions(), None))),
    'brouwer_equality': _Family(lambda p: 1, _single(lambda p: (
        gen_brouwer_equality(_int(p, 'k'), _int(p, 'b')), FamilyAssumptions(), None))),
    'complete_partite': _Family(lambda p: 1, _single(lambda p: _complete_partite(_int(p, 'r'), _sizes(p)))),
    'random_graph': _Family(
        lambda p: _int(p, 'count', 1),
        lambda p, i: (gen_random_graph(_int(p, 'n'), _float(p, 'p'), _int(p, 'seed', 0), i),
                      FamilyAssumptions(), None)),
    'random_complex': _Family(
        lambda p: _int(p, 'count', 1),
        lambda p, i: (gen_random_complex(_int(p, 'n'), _int(p, 'r'), _float(p, 'p'), _int(p, 'seed', 0), i),
                      FamilyAssumptions(), None)),
    'random_partite': _Family(
        lambda p: _int(p, 'count', 1),
        _random_partite),
    'enumerate': _Family(
        lambda p: graph_count(_int(p, 'n')),
        lambda p, i: (graph_from_mask(_int(p, 'n'), i), FamilyAssumptions(), None)),
    'trees': _Family(
        lambda p: tree_count(_int(p, 'n')),
        lambda p, i: (tree_from_index(_int(p, 'n'), i), FOREST, None)),
}


def parse_descriptor(descriptor: str) -> Tuple[str, Dict[str, Any]]:
    """
    "name:a=1,b=2/3" -> ("name", {"a": "1", "b": ["2", "3"]})

    Raises:
        MalformedInputError: неизвестное семейство или неверный синтаксис
    """
    name, _, rest = descriptor.strip().partition(':')
    name = name.strip()
    if name not in FAMILIES:
        raise MalformedInputError(f"Неизвестное семейство: {name}", {'known': sorted(FAMILIES)})
    params: Dict[str, Any] = {}
    for token in filter(None, (t.strip() for t in rest.split(','))):
        key, sep, value = token.partition('=')
        if not sep:
            raise MalformedInputError(f"Ожидалось param=value: {token}")
        key = key.strip()
        values = [v.strip() for v in value.split('/') if v.strip()]
        if key in LIST_PARAMS:
            params[key] = values
        else:
            params[key] = values if len(values) > 1 else (values[0] if values else '')
    return name, params


def parse_filters(values: Optional[List[str]]) -> Optional[FamilyAssumptions]:
    """filter=forest/girth5/max_degree:3 -> FamilyAssumptions"""
    if not values:
        return None
    assumptions = FamilyAssumptions.parse(','.join(v.replace(':', '=') for v in values))
    if assumptions.planar:
        raise MalformedInputError("Фильтр planar не поддерживается: планарность не проверяется")
    return assumptions


def matches_families(G: SimplicialComplex, assumptions: FamilyAssumptions) -> bool:
    """Принадлежность графа всем указанным семействам (полный перебор)"""
    try:
        verify_assumptions(G, assumptions, max_n=G.n)
    except FamilyAssumptionError:
        return False
    return True


class InstanceStream:
    """
    Детерминированный поток экземпляров по дескриптору

    Экземпляр однозначно определяется (дескриптор, индекс), поэтому поток
    можно обрабатывать по диапазонам индексов в разных процессах.
    """

    def __init__(self, descriptor: str, dedup: bool = False, max_enumeration_n: int = 7,
                 hard_enumeration_n: int = 8):
        self.descriptor = descriptor
        self.name, params = parse_descriptor(descriptor)
        self.filters = parse_filters(params.pop('filter', None))
        self.dedup = dedup or str(params.pop('dedup', '0')).lower() in ('1', 'true', 'yes')
        self.family = FAMILIES[self.name]

        scalar_lists = {k: v for k, v in params.items() if isinstance(v, list) and k not in LIST_PARAMS}
        keys = sorted(scalar_lists)
        self.expansions: List[Dict[str, Any]] = []
        for combo in product(*(scalar_lists[k] for k in keys)):
            expanded = dict(params)
            expanded.update(zip(keys, combo))
            self.expansions.append(expanded)

        if self.name == 'enumerate':
            for expanded in self.expansions:
                check_enumeration_limit(_int(expanded, 'n'), max_enumeration_n, hard_enumeration_n)
        if self.name == 'trees':
            for expanded in self.expansions:
                check_enumeration_limit(_int(expanded, 'n'), hard_enumeration_n, hard_enumeration_n)

        self._sizes = [self.family.count(expanded) for expanded in self.expansions]
        self._offsets = []
        total = 0
        for size in self._sizes:
            self._offsets.append(total)
            total += size
        self._total = total
        logger.debug(f"Поток {self.descriptor}: {len(self.expansions)} наборов параметров, {total} экземпляров")

    def __len__(self) -> int:
        return self._total

    def _locate(self, index: int) -> Tuple[int, int]:
        for j in range(len(self._sizes) - 1, -1, -1):
            if index >= self._offsets[j]:
                return j, index - self._offsets[j]
        raise IndexError(index)

    def _instance_id(self, params: Dict[str, Any], local: int) -> str:
        rendered = ','.join(f"{k}={'/'.join(v) if isinstance(v, list) else v}"
                            for k, v in sorted(params.items()))
        suffix = f":i={local}" if self.family.count(params) > 1 else ""
        filters = f":filter={'/'.join(self.filters.asserted())}" if self.filters else ""
        return f"{self.name}:{rendered}{filters}{suffix}"

    def instance_at(self, index: int) -> Optional[Instance]:
        """Экземпляр с номером index или None, если он отсеян фильтром"""
        if not 0 <= index < self._total:
            raise IndexError(f"Индекс {index} вне потока длины {self._total}")
        j, local = self._locate(index)
        params = self.expansions[j]
        X, assumptions, partition = self.family.build(params, local)
        if self.filters is not None:
            if not matches_families(X, self.filters):
                return None
            assumptions = assumptions.merge(self.filters)
        return Instance(instance_id=self._instance_id(params, local), complex=X,
                        assumptions=assumptions, partition=partition,
                        meta={'index': index, 'family': self.name})

    def iter_range(self, start: int, stop: int) -> Iterator[Tuple[int, Instance]]:
        """Экземпляры с индексами [start, stop) без фильтра повторов"""
        for index in range(max(start, 0), min(stop, self._total)):
            instance = self.instance_at(index)
            if instance is not None:
                yield index, instance

    def dedup_key(self, instance: Instance) -> Optional[Any]:
        if not self.dedup or instance.complex.dim > 1:
            return None
        return invariant_key(instance.complex)

    def __iter__(self) -> Iterator[Tuple[int, Instance]]:
        seen = set()
        for index, instance in self.iter_range(0, self._total):
            key = self.dedup_key(instance)
            if key is not None:
                if key in seen:
                    continue
                seen.add(key)
            yield index, instance
