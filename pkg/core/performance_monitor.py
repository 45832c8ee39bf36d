"""
Монитор производительности прогонов
Время выполнения, пиковая память процесса и пропускная способность
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import psutil


@dataclass
class PerformanceMetrics:
    """Метрики одного прогона"""
    started_at: float
    wall_time: float = 0.0
    instances: int = 0
    reports: int = 0
    peak_rss_mb: float = 0.0
    cpu_percent: float = 0.0
    stage_times: Dict[str, float] = field(default_factory=dict)

    @property
    def instances_per_second(self) -> float:
        return self.instances / self.wall_time if self.wall_time > 0 else 0.0


class RunMonitor:
    """Монитор производительности прогона набора проверок"""

    def __init__(self, name: str = "run", sample_every: int = 256):
        self.name = name
        self.logger = logging.getLogger('core.performance_monitor')
        self.sample_every = max(1, sample_every)
        self._process = psutil.Process()
        self._t0: Optional[float] = None
        self._stage_t0: Dict[str, float] = {}
        self.metrics = PerformanceMetrics(started_at=time.time())

    def start(self) -> "RunMonitor":
        self._t0 = time.perf_counter()
        self.metrics = PerformanceMetrics(started_at=time.time())
        self._process.cpu_percent(interval=None)
        self._sample_memory()
        return self

    def record_instance(self, reports: int = 0):
        """Учет обработанного экземпляра"""
        self.metrics.instances += 1
        self.metrics.reports += reports
        if self.metrics.instances % self.sample_every == 0:
            self._sample_memory()

    def begin_stage(self, stage: str):
        self._stage_t0[stage] = time.perf_counter()

    def end_stage(self, stage: str):
        t0 = self._stage_t0.pop(stage, None)
        if t0 is not None:
            elapsed = time.perf_counter() - t0
            self.metrics.stage_times[stage] = self.metrics.stage_times.get(stage, 0.0) + elapsed

    def stop(self) -> PerformanceMetrics:
        if self._t0 is not None:
            self.metrics.wall_time = time.perf_counter() - self._t0
        self._sample_memory()
        self.metrics.cpu_percent = self._process.cpu_percent(interval=None)
        self.logger.info(
            f"Прогон {self.name}: {self.metrics.instances} экземпляров, "
            f"{self.metrics.reports} отчетов за {self.metrics.wall_time:.2f} сек "
            f"({self.metrics.instances_per_second:.1f} экз/сек, "
            f"пик памяти {self.metrics.peak_rss_mb:.1f} МБ)"
        )
        return self.metrics

    def _sample_memory(self):
        try:
            rss_mb = self._process.memory_info().rss / (1024 ** 2)
        except psutil.Error as e:
            self.logger.debug(f"Не удалось прочитать память процесса: {e}")
            return
        if rss_mb > self.metrics.peak_rss_mb:
            self.metrics.peak_rss_mb = rss_mb

    def as_dict(self) -> Dict[str, Any]:
        return {
            'wall_time': round(self.metrics.wall_time, 6),
            'instances': self.metrics.instances,
            'reports': self.metrics.reports,
            'peak_rss_mb': round(self.metrics.peak_rss_mb, 3),
            'instances_per_second': round(self.metrics.instances_per_second, 3),
            'stage_times': {k: round(v, 6) for k, v in self.metrics.stage_times.items()},
        }
