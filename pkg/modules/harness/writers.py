"""
Запись результатов прогона

reports.jsonl      - по одному BoundReport на строку (report_mode: all | violations | none)
violations.jsonl   - все отчеты с holds = false (всегда)
identities.jsonl   - отчеты тождеств и структурных проверок
summary.csv        - bound_id, instances, min_slack, argmin_instance, violations
run.json           - метрики прогона (время, память)
"""

import csv
import json
import logging
from pathlib import Path
from typing import IO, Any, Dict, Iterable, Optional

import numpy as np

from core.errors import ConfigError
from modules.bounds import BoundReport, round_significant

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ('bound_id', 'instances', 'min_slack', 'argmin_instance', 'violations')


def _json_default(value: Any) -> Any:
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return round_significant(float(value))
    if isinstance(value, (set, frozenset)):
        return sorted(value, key=repr)
    if isinstance(value, np.ndarray):
        return value.tolist()
    return str(value)


def dumps_line(record: Dict[str, Any]) -> str:
    """Одна строка JSON Lines с фиксированным порядком полей"""
    return json.dumps(record, ensure_ascii=False, default=_json_default)


class ReportWriter:
    """Единственный писатель отчетов; вызывается в порядке индексов экземпляров"""

    def __init__(self, out_dir: Optional[str], report_mode: str = 'all'):
        self.out_dir = Path(out_dir) if out_dir else None
        self.report_mode = report_mode
        self.logger = logging.getLogger(__name__)
        self._reports: Optional[IO[str]] = None
        self._violations: Optional[IO[str]] = None
        self._identities: Optional[IO[str]] = None
        self.written = 0

    def __enter__(self) -> "ReportWriter":
        self.open()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.close()

    def open(self):
        if self.out_dir is None:
            return
        try:
            self.out_dir.mkdir(parents=True, exist_ok=True)
            if self.report_mode != 'none':
                self._reports = open(self.out_dir / 'reports.jsonl', 'w', encoding='utf-8')
            self._violations = open(self.out_dir / 'violations.jsonl', 'w', encoding='utf-8')
            self._identities = open(self.out_dir / 'identities.jsonl', 'w', encoding='utf-8')
        except OSError as e:
            self.close()
            raise ConfigError(f"Не удалось открыть каталог результатов {self.out_dir}: {e}")
        self.logger.info(f"📂 Результаты пишутся в {self.out_dir}")

    def close(self):
        for handle in (self._reports, self._violations, self._identities):
            if handle is not None:
                handle.close()
        self._reports = self._violations = self._identities = None

    def write_report(self, report: BoundReport):
        record = report.to_dict()
        line = dumps_line(record) + '\n'
        if self._reports is not None and (self.report_mode == 'all' or not report.holds):
            self._reports.write(line)
            self.written += 1
        if self._violations is not None and not report.holds:
            self._violations.write(line)

    def write_identity(self, record: Dict[str, Any]):
        if self._identities is not None:
            self._identities.write(dumps_line(record) + '\n')

    def write_summary(self, rows: Iterable[Dict[str, Any]]):
        if self.out_dir is None:
            return
        path = self.out_dir / 'summary.csv'
        with open(path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.DictWriter(f, fieldnames=SUMMARY_COLUMNS, lineterminator='\n')
            writer.writeheader()
            for row in rows:
                writer.writerow({column: row.get(column) for column in SUMMARY_COLUMNS})

    def write_run(self, data: Dict[str, Any]):
        if self.out_dir is None:
            return
        with open(self.out_dir / 'run.json', 'w', encoding='utf-8') as f:
            json.dump(data, f, ensure_ascii=False, indent=2, default=_json_default)
            f.write('\n')
