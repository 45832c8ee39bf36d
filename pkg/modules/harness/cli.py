"""
Командная строка LapBound

Коды выхода: 0 - чисто; 1 - нарушена теорема или тождество (или внутренняя ошибка);
2 - ошибка использования/конфигурации/входных данных; 3 - найден контрпример к гипотезе.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from core.config import HarnessSettings, load_settings
from core.errors import ConfigError, LapBoundError
from core.logging_setup import setup_logging
from modules.bounds import BoundEvaluator, EvaluationLimits, FamilyAssumptions, Tier
from modules.complex_core import OperatorKind, dump_complex, laplacian, load_complex, save_complex
from modules.generators import InstanceStream
from modules.spectra import sym_spectrum

from .config import SuiteConfig, load_config_file, load_profile, parse_k_spec, parse_r_spec
from .identities import check_identities
from .runner import min_slack_search, run_suite
from .writers import dumps_line

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_THEOREM = 1
EXIT_CONJECTURE = 3


def _emit(record: Dict[str, Any]):
    sys.stdout.write(dumps_line(record) + '\n')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='lapbound',
        description='Проверка оценок сумм собственных значений лапласианов графов и комплексов',
    )
    parser.add_argument('--config', help='JSON-файл с теми же параметрами, что и флаги')
    parser.add_argument('--log-level', dest='log_level', help='Уровень журнала (DEBUG, INFO, ...)')
    parser.add_argument('--log-dir', dest='log_dir', help='Каталог файла журнала')
    parser.add_argument('--tol', type=float, help='Допуск (по умолчанию LB_TOL или 1e-7)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('spectrum', help='Спектр лапласиана экземпляра')
    p.add_argument('file')
    p.add_argument('--r', type=int, default=None)
    p.add_argument('--kind', default=None,
                   help='upper | lower | signless-upper | signless-lower')

    p = sub.add_parser('check', help='Проверка оценок на экземпляре')
    p.add_argument('file')
    p.add_argument('--bounds', default=None, help='Идентификаторы через запятую или all-applicable')
    p.add_argument('--k', default=None, help='valid | 1..n | a..b | список через запятую')
    p.add_argument('--r', default=None)
    p.add_argument('--assume', default=None, help='Семейства: forest,planar,max_degree=3,...')
    p.add_argument('--strict', action='store_true', default=None)

    p = sub.add_parser('search', help='Поиск экземпляров с наименьшим запасом')
    source = p.add_mutually_exclusive_group()
    source.add_argument('--family', default=None, help='Дескриптор потока name:param=value,...')
    source.add_argument('--enumerate', type=int, default=None, dest='enumerate_n',
                        help='Все помеченные графы на N вершинах')
    p.add_argument('--bounds', default=None)
    p.add_argument('--k', default=None)
    p.add_argument('--r', default=None)
    p.add_argument('--assume', default=None)
    p.add_argument('--min-slack', type=int, default=None, dest='min_slack',
                   help='Размер таблицы наименьших запасов')
    p.add_argument('--connected-only', action='store_true', default=None, dest='connected_only')
    p.add_argument('--dedup', action='store_true', default=None)
    p.add_argument('--parallelism', type=int, default=None)
    p.add_argument('--out', default=None)

    p = sub.add_parser('identities', help='Спектральные тождества для экземпляра')
    p.add_argument('file')

    p = sub.add_parser('gen', help='Генерация экземпляров в JSON')
    p.add_argument('descriptor')
    p.add_argument('--out', default=None)
    p.add_argument('--index', type=int, default=None)

    p = sub.add_parser('suite', help='Прогон профиля из config/modules/harness.yaml')
    p.add_argument('profile')
    p.add_argument('--out', default=None)
    p.add_argument('--parallelism', type=int, default=None)
    p.add_argument('--report-mode', default=None, dest='report_mode', choices=['all', 'violations', 'none'])
    return parser


def apply_config_file(args: argparse.Namespace) -> argparse.Namespace:
    """Значения из --config заполняют флаги, не заданные явно"""
    if not args.config:
        return args
    for key, value in load_config_file(args.config).items():
        attr = key.replace('-', '_')
        if getattr(args, attr, None) is None:
            setattr(args, attr, value)
    return args


def _settings(args: argparse.Namespace) -> HarnessSettings:
    return load_settings(tol=args.tol, log_level=args.log_level, log_dir=args.log_dir)


def _join(value) -> Optional[str]:
    if isinstance(value, (list, tuple)):
        return ','.join(str(v) for v in value)
    return value


def cmd_spectrum(args, settings: HarnessSettings) -> int:
    loaded = load_complex(args.file)
    X = loaded.complex
    kind = OperatorKind.parse(args.kind) if args.kind else OperatorKind.UPPER
    r = int(args.r) if args.r is not None else (1 if kind.is_upper else max(X.dim, 0))
    spectrum = sym_spectrum(laplacian(X, kind, r), zero_tol_rel=settings.zero_tol_rel,
                            symmetry_tol=settings.symmetry_tol)
    _emit({
        'instance_id': loaded.instance_id,
        'kind': kind.value,
        'r': r,
        'order': spectrum.order,
        'eigenvalues': [float(f"{x:.12g}") for x in spectrum.eigenvalues],
        'prefix_sums': [float(f"{x:.12g}") for x in spectrum.prefix_sums],
    })
    return EXIT_OK


def cmd_check(args, settings: HarnessSettings) -> int:
    loaded = load_complex(args.file)
    cfg = SuiteConfig.build(bounds=_join(args.bounds) or 'all-applicable', k=args.k, r=args.r,
                            assume=_join(args.assume), strict=bool(args.strict))
    evaluator = BoundEvaluator(tol=settings.tol, limits=EvaluationLimits.from_settings(settings),
                               strict=cfg.strict)
    assumptions = FamilyAssumptions.parse(cfg.assume)
    ctx = evaluator.context(loaded.complex, loaded.instance_id, assumptions, loaded.partition)
    reports = evaluator.evaluate(ctx, cfg.bound_ids, cfg.k, cfg.r)
    for report in reports:
        _emit(report.to_dict())
    logger.info(f"{len(reports)} отчетов, пропущено неприменимых комбинаций: {evaluator.skipped}")
    if any(report.is_theorem_violation for report in reports):
        return EXIT_THEOREM
    if any(report.is_conjecture_violation for report in reports):
        return EXIT_CONJECTURE
    return EXIT_OK


def cmd_search(args, settings: HarnessSettings) -> int:
    if args.family:
        streams = [args.family]
    elif args.enumerate_n is not None:
        streams = [f"enumerate:n={int(args.enumerate_n)}"]
    else:
        raise ConfigError("search: нужен --family или --enumerate")
    bounds = [b for b in (_join(args.bounds) or '').split(',') if b.strip()]
    if len(bounds) != 1:
        raise ConfigError("search: --bounds должен содержать ровно одну оценку")
    cfg = SuiteConfig.build(name='search', streams=streams, bounds=bounds, k=args.k, r=args.r,
                            assume=_join(args.assume), tol=settings.tol, parallelism=args.parallelism,
                            dedup=bool(args.dedup), out_dir=args.out)
    leaders = min_slack_search(cfg, bounds[0], connected_only=bool(args.connected_only),
                               size=args.min_slack, settings=settings)
    for report in leaders:
        _emit(report.to_dict())
    if any(report.tier == Tier.THEOREM and not report.holds for report in leaders):
        return EXIT_THEOREM
    if any(report.tier == Tier.CONJECTURE and not report.holds for report in leaders):
        return EXIT_CONJECTURE
    return EXIT_OK


def cmd_identities(args, settings: HarnessSettings) -> int:
    loaded = load_complex(args.file)
    report = check_identities(loaded.complex, loaded.instance_id)
    record = report.to_dict()
    record['details'] = {res.name: res.details for res in report.results}
    _emit(record)
    return EXIT_OK if report.holds else EXIT_THEOREM


def cmd_gen(args, settings: HarnessSettings) -> int:
    stream = InstanceStream(args.descriptor, max_enumeration_n=settings.max_enumeration_n,
                            hard_enumeration_n=settings.hard_enumeration_n)
    if args.index is not None or len(stream) == 1:
        instance = stream.instance_at(args.index or 0)
        if instance is None:
            raise ConfigError(f"Экземпляр {args.index} отсеян фильтром")
        if args.out:
            save_complex(args.out, instance.complex, instance.partition, instance_id=instance.instance_id)
            logger.info(f"Экземпляр {instance.instance_id} записан в {args.out}")
        else:
            _emit(dump_complex(instance.complex, instance.partition, instance.instance_id))
        return EXIT_OK

    lines = (dumps_line(dump_complex(inst.complex, inst.partition, inst.instance_id))
             for _, inst in stream)
    if args.out:
        path = Path(args.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        count = 0
        with open(path, 'w', encoding='utf-8') as f:
            for line in lines:
                f.write(line + '\n')
                count += 1
        logger.info(f"{count} экземпляров записано в {path}")
    else:
        for line in lines:
            sys.stdout.write(line + '\n')
    return EXIT_OK


def cmd_suite(args, settings: HarnessSettings) -> int:
    cfg = load_profile(args.profile)
    update = {key: value for key, value in {
        'out_dir': args.out, 'parallelism': args.parallelism, 'report_mode': args.report_mode,
        'tol': args.tol,
    }.items() if value is not None}
    if update:
        cfg = SuiteConfig.build(**{**cfg.model_dump(), **update})
    summary = run_suite(cfg, settings)
    _emit(summary.to_dict())
    return summary.exit_code


COMMANDS = {
    'spectrum': cmd_spectrum,
    'check': cmd_check,
    'search': cmd_search,
    'identities': cmd_identities,
    'gen': cmd_gen,
    'suite': cmd_suite,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Точка входа; возвращает код выхода"""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = apply_config_file(args)
        settings = _settings(args)
        setup_logging(settings.log_level, settings.log_dir)
        # k и r проверяются до начала работы
        if getattr(args, 'k', None) is not None:
            parse_k_spec(args.k)
        if getattr(args, 'r', None) is not None and args.command != 'spectrum':
            parse_r_spec(args.r)
        return COMMANDS[args.command](args, settings)
    except LapBoundError as e:
        logging.getLogger('lapbound').error(f"❌ {type(e).__name__}: {e.message}")
        sys.stderr.write(json.dumps({'error': e.to_dict()}, ensure_ascii=False, default=str) + '\n')
        return e.exit_code
    except KeyboardInterrupt:
        sys.stderr.write("Прервано пользователем\n")
        return 130


def run(argv: Optional[List[str]] = None):
    sys.exit(main(argv))
