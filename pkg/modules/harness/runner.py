"""
Прогон наборов проверок над потоками экземпляров

Экземпляры обрабатываются блоками индексов (последовательно или в пуле процессов),
результаты сливаются в порядке индексов единственным писателем, поэтому файлы
отчетов не зависят от степени параллелизма.
"""

import bisect
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, Iterator, List, Optional, Set, Tuple

import networkx as nx

from core.config import HarnessSettings, load_settings
from core.errors import ConfigError, ContractViolation, LapBoundError
from core.performance_monitor import RunMonitor
from modules.bounds import BoundEvaluator, BoundId, BoundReport, EvaluationLimits, Tier, resolve_bound_ids
from modules.complex_core import partite_classes, to_networkx
from modules.generators import Instance, InstanceStream, make_rng

from .checks import check_gadgets, check_structure
from .config import SuiteConfig
from .identities import IdentityReport, check_identities
from .writers import ReportWriter

logger = logging.getLogger(__name__)


@dataclass
class InstanceOutcome:
    """Результаты одного экземпляра"""
    index: int
    instance_id: str
    dedup_key: Optional[Hashable] = None
    excluded: bool = False
    duplicate: bool = False
    reports: List[BoundReport] = field(default_factory=list)
    checks: List[IdentityReport] = field(default_factory=list)
    skipped: int = 0
    errors: List[Dict[str, Any]] = field(default_factory=list)


@dataclass
class BoundStats:
    """Строка summary.csv"""
    bound_id: str
    instances: int = 0
    min_slack: Optional[float] = None
    argmin_instance: Optional[str] = None
    violations: int = 0
    _last_instance: Optional[str] = None

    def add(self, report: BoundReport):
        if report.instance_id != self._last_instance:
            self.instances += 1
            self._last_instance = report.instance_id
        if self.min_slack is None or report.slack < self.min_slack:
            self.min_slack = report.slack
            self.argmin_instance = report.instance_id
        if not report.holds:
            self.violations += 1

    def to_row(self) -> Dict[str, Any]:
        return {
            'bound_id': self.bound_id,
            'instances': self.instances,
            'min_slack': f"{self.min_slack:.12g}" if self.min_slack is not None else '',
            'argmin_instance': self.argmin_instance or '',
            'violations': self.violations,
        }


class SlackLeaderboard:
    """s экземпляров с наименьшим запасом; при равенстве раньше пришедший выше"""

    def __init__(self, size: int):
        self.size = size
        self._keys: List[Tuple[float, int]] = []
        self._reports: List[BoundReport] = []
        self._seq = 0

    def offer(self, report: BoundReport):
        key = (report.slack, self._seq)
        self._seq += 1
        if len(self._keys) >= self.size and key >= self._keys[-1]:
            return
        position = bisect.bisect(self._keys, key)
        self._keys.insert(position, key)
        self._reports.insert(position, report)
        del self._keys[self.size:]
        del self._reports[self.size:]

    @property
    def reports(self) -> List[BoundReport]:
        return list(self._reports)


@dataclass
class RunSummary:
    """Итог прогона"""
    suite: str
    tol: float = 1e-7
    instances: int = 0
    filtered: int = 0
    reports: int = 0
    skipped: int = 0
    theorem_violations: List[Dict[str, Any]] = field(default_factory=list)
    conjecture_violations: List[Dict[str, Any]] = field(default_factory=list)
    identity_failures: List[Dict[str, Any]] = field(default_factory=list)
    errors: List[Dict[str, Any]] = field(default_factory=list)
    stats: Dict[str, BoundStats] = field(default_factory=dict)
    leaderboards: Dict[str, List[BoundReport]] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def internal_errors(self) -> List[Dict[str, Any]]:
        return [e for e in self.errors if e.get('exit_code') == 1]

    @property
    def exit_code(self) -> int:
        """0 - чисто; 1 - нарушение теоремы или тождества; 3 - найден контрпример к гипотезе"""
        if self.theorem_violations or self.identity_failures or self.internal_errors:
            return 1
        if self.conjecture_violations:
            return 3
        return 0

    def summary_rows(self) -> List[Dict[str, Any]]:
        return [self.stats[key].to_row() for key in sorted(self.stats)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'tol': self.tol,
            'instances': self.instances,
            'filtered': self.filtered,
            'reports': self.reports,
            'skipped': self.skipped,
            'theorem_violations': len(self.theorem_violations),
            'conjecture_violations': len(self.conjecture_violations),
            'identity_failures': len(self.identity_failures),
            'errors': len(self.errors),
            'exit_code': self.exit_code,
            'summary': self.summary_rows(),
        }


def is_connected(instance: Instance) -> bool:
    """Связность 1-остова"""
    X = instance.complex
    return X.n > 0 and nx.is_connected(to_networkx(X))


class InstanceProcessor:
    """Проверки одного экземпляра; работает одинаково в главном процессе и в рабочих"""

    def __init__(self, cfg: SuiteConfig, tol: float, limits: EvaluationLimits):
        self.cfg = cfg
        self.tol = tol
        self.limits = limits
        self.bound_ids: List[BoundId] = cfg.bound_ids if 'bounds' in cfg.checks else []
        self.assumptions = cfg.assumptions
        self.logger = logging.getLogger(__name__)

    def process(self, index: int, instance: Instance, stream: InstanceStream,
                seen: Optional[Set[Hashable]] = None) -> InstanceOutcome:
        outcome = InstanceOutcome(index=index, instance_id=instance.instance_id)
        if self.cfg.connected_only and not is_connected(instance):
            outcome.excluded = True
            return outcome
        outcome.dedup_key = stream.dedup_key(instance)
        if seen is not None and outcome.dedup_key is not None:
            if outcome.dedup_key in seen:
                outcome.duplicate = True
                return outcome
            seen.add(outcome.dedup_key)

        if self.bound_ids:
            self._evaluate_bounds(instance, outcome)
        X = instance.complex
        rng = make_rng(self.cfg.seed, index)
        checks = self.cfg.checks
        try:
            if 'identities' in checks:
                outcome.checks.append(check_identities(X, instance.instance_id, self.cfg.identity_tol))
            if 'structural' in checks:
                outcome.checks.append(check_structure(X, rng, instance.instance_id, self.cfg.identity_tol))
            if 'gadgets' in checks:
                partition = instance.partition
                if partition is not None:
                    try:
                        partition.validate(X)
                    except ContractViolation as e:
                        self.logger.warning(f"⚠️ Разбиение {instance.instance_id} отброшено: {e.message}")
                        partition = None
                elif X.dim >= 1 and X.n <= self.limits.partite_search_n:
                    partition = partite_classes(X, max_vertices=self.limits.partite_search_n)
                outcome.checks.append(check_gadgets(X, rng, instance.instance_id, partition,
                                                    self.cfg.identity_tol))
        except LapBoundError as e:
            self._record_error(outcome, e, 'checks')
        return outcome

    def _evaluate_bounds(self, instance: Instance, outcome: InstanceOutcome):
        evaluator = BoundEvaluator(tol=self.tol, limits=self.limits, strict=self.cfg.strict)
        ctx = evaluator.context(instance.complex, instance.instance_id,
                                instance.assumptions.merge(self.assumptions), instance.partition)
        for bound_id in self.bound_ids:
            try:
                outcome.reports.extend(evaluator.evaluate(ctx, [bound_id], self.cfg.k, self.cfg.r))
            except LapBoundError as e:
                self._record_error(outcome, e, bound_id.value)
        outcome.skipped = evaluator.skipped

    def _record_error(self, outcome: InstanceOutcome, error: LapBoundError, stage: str):
        if self.cfg.strict and error.exit_code == 2:
            raise error
        record = error.to_dict()
        record.update({'instance_id': outcome.instance_id, 'stage': stage, 'exit_code': error.exit_code})
        outcome.errors.append(record)
        log = self.logger.error if error.exit_code == 1 else self.logger.debug
        log(f"{stage} на {outcome.instance_id}: {error.message}")


def _process_chunk(payload: Tuple[Dict[str, Any], float, EvaluationLimits, str, int, int, int, int]
                   ) -> List[InstanceOutcome]:
    """Рабочая функция пула: экземпляры регенерируются по (дескриптор, индекс)"""
    cfg_data, tol, limits, descriptor, max_n, hard_n, start, stop = payload
    cfg = SuiteConfig.model_validate(cfg_data)
    stream = InstanceStream(descriptor, dedup=cfg.dedup, max_enumeration_n=max_n, hard_enumeration_n=hard_n)
    processor = InstanceProcessor(cfg, tol, limits)
    seen: Set[Hashable] = set()
    return [processor.process(index, instance, stream, seen) for index, instance in stream.iter_range(start, stop)]


class SuiteRunner:
    """Прогон SuiteConfig с агрегацией в порядке индексов"""

    def __init__(self, cfg: SuiteConfig, settings: Optional[HarnessSettings] = None):
        self.cfg = cfg
        self.settings = settings or load_settings()
        self.tol = cfg.tol if cfg.tol is not None else self.settings.tol
        self.parallelism = cfg.parallelism or self.settings.parallelism
        self.limits = EvaluationLimits.from_settings(self.settings)
        self.logger = logging.getLogger(__name__)

    def _stream(self, descriptor: str) -> InstanceStream:
        return InstanceStream(descriptor, dedup=self.cfg.dedup,
                              max_enumeration_n=self.settings.max_enumeration_n,
                              hard_enumeration_n=self.settings.hard_enumeration_n)

    def _is_serial(self, stream: InstanceStream) -> bool:
        return self.parallelism <= 1 or len(stream) <= self.cfg.chunk_size

    def _outcomes(self, stream: InstanceStream, seen: Set[Hashable]) -> Iterator[InstanceOutcome]:
        if self._is_serial(stream):
            processor = InstanceProcessor(self.cfg, self.tol, self.limits)
            for index, instance in stream.iter_range(0, len(stream)):
                yield processor.process(index, instance, stream, seen)
            return

        cfg_data = self.cfg.model_dump()
        size = self.cfg.chunk_size
        payloads = [(cfg_data, self.tol, self.limits, stream.descriptor, self.settings.max_enumeration_n,
                     self.settings.hard_enumeration_n, start, min(start + size, len(stream)))
                    for start in range(0, len(stream), size)]
        self.logger.debug(f"{len(payloads)} блоков по {size} экземпляров, {self.parallelism} процессов")
        with ProcessPoolExecutor(max_workers=self.parallelism) as executor:
            # map сохраняет порядок блоков
            for chunk in executor.map(_process_chunk, payloads):
                yield from chunk

    def run(self) -> RunSummary:
        cfg = self.cfg
        if not cfg.streams:
            raise ConfigError("Не задан ни один поток экземпляров")
        streams = [self._stream(descriptor) for descriptor in cfg.streams]

        summary = RunSummary(suite=cfg.name, tol=self.tol)
        leaderboards: Dict[str, SlackLeaderboard] = {}
        monitor = RunMonitor(cfg.name).start()
        self.logger.info(f"Набор {cfg.name}: {len(streams)} потоков, "
                         f"{sum(len(s) for s in streams)} индексов, проверки {cfg.checks}, tol={self.tol}")

        with ReportWriter(cfg.out_dir, cfg.report_mode) as writer:
            for stream in streams:
                monitor.begin_stage(stream.descriptor)
                seen: Set[Hashable] = set()
                serial = self._is_serial(stream)
                for outcome in self._outcomes(stream, seen):
                    if outcome.excluded or outcome.duplicate:
                        summary.filtered += 1
                        continue
                    if outcome.dedup_key is not None and not serial:
                        if outcome.dedup_key in seen:
                            summary.filtered += 1
                            continue
                        seen.add(outcome.dedup_key)
                    self._merge(outcome, summary, leaderboards, writer)
                    monitor.record_instance(len(outcome.reports))
                monitor.end_stage(stream.descriptor)

            summary.leaderboards = {key: board.reports for key, board in sorted(leaderboards.items())}
            writer.write_summary(summary.summary_rows())
            summary.wall_time = monitor.stop().wall_time
            writer.write_run({**summary.to_dict(), 'performance': monitor.as_dict()})

        self._log_summary(summary)
        return summary

    def _merge(self, outcome: InstanceOutcome, summary: RunSummary,
               leaderboards: Dict[str, SlackLeaderboard], writer: ReportWriter):
        summary.instances += 1
        summary.skipped += outcome.skipped
        summary.errors.extend(outcome.errors)

        best: Dict[str, BoundReport] = {}
        for report in outcome.reports:
            summary.reports += 1
            writer.write_report(report)
            summary.stats.setdefault(report.bound_id, BoundStats(report.bound_id)).add(report)
            if report.bound_id not in best or report.slack < best[report.bound_id].slack:
                best[report.bound_id] = report
            if not report.holds:
                if report.tier == Tier.THEOREM:
                    summary.theorem_violations.append(report.to_dict())
                elif report.tier == Tier.CONJECTURE:
                    summary.conjecture_violations.append(report.to_dict())
        for bound_id, report in best.items():
            leaderboards.setdefault(bound_id, SlackLeaderboard(self.cfg.leaderboard_size)).offer(report)

        for check in outcome.checks:
            record = check.to_dict()
            writer.write_identity(record)
            if not check.holds:
                summary.identity_failures.append(record)

    def _log_summary(self, summary: RunSummary):
        self.logger.info(
            f"Набор {summary.suite}: {summary.instances} экземпляров ({summary.filtered} отсеяно), "
            f"{summary.reports} отчетов, пропущено {summary.skipped}, "
            f"нарушений теорем {len(summary.theorem_violations)}, "
            f"контрпримеров к гипотезам {len(summary.conjecture_violations)}, "
            f"нарушений тождеств {len(summary.identity_failures)}, ошибок {len(summary.errors)}"
        )
        if summary.theorem_violations or summary.identity_failures:
            self.logger.error(f"❌ Набор {summary.suite} завершился нарушением доказанных утверждений")
        elif summary.conjecture_violations:
            self.logger.warning(f"⚠️ Набор {summary.suite}: найдены контрпримеры к гипотезам")


def run_suite(cfg: SuiteConfig, settings: Optional[HarnessSettings] = None) -> RunSummary:
    """
    Прогон набора проверок

    Args:
        cfg: Конфигурация набора
        settings: Допуски и лимиты (по умолчанию - config/ и окружение)

    Returns:
        RunSummary; exit_code отражает худший исход
    """
    return SuiteRunner(cfg, settings).run()


def min_slack_search(cfg: SuiteConfig, bound_id, connected_only: bool = False, size: Optional[int] = None,
                     settings: Optional[HarnessSettings] = None) -> List[BoundReport]:
    """
    Экземпляры с наименьшим запасом для одной оценки

    Returns:
        Не более size отчетов (по одному на экземпляр) по возрастанию запаса
    """
    resolved = resolve_bound_ids([bound_id.value if isinstance(bound_id, BoundId) else bound_id])
    if len(resolved) != 1:
        raise ConfigError(f"Поиск выполняется для одной оценки, получено {len(resolved)}")
    bid = resolved[0]
    update: Dict[str, Any] = {'bounds': [bid.value], 'checks': ['bounds'], 'connected_only': connected_only}
    if size is not None:
        update['leaderboard_size'] = size
    search_cfg = SuiteConfig.build(**{**cfg.model_dump(), **update})
    summary = run_suite(search_cfg, settings)
    return summary.leaderboards.get(bid.value, [])
