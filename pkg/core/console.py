"""
CLI для Core Runtime: команды конвейера поверх сервисов модулей.

Коды выхода: 0 — успех, 1 — проверка не пройдена или стадия упала,
2 — ошибка входных данных (GraphInputError, неверные параметры).
Результаты пишутся в stdout (или в файлы), логи — в stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from typing import Any, Awaitable, Callable, Dict, List, Optional, TextIO

from core.config import LAYOUT_STRATEGIES, LOG_LEVELS, Config
from core.errors import GraphInputError, SegmentRuntimeError
from core.logger_helper import error
from core.pipeline import run_pipeline
from core.runtime import CoreRuntime
from modules.corpus.model import InstanceSpec

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

Command = Callable[[CoreRuntime, argparse.Namespace, TextIO], Awaitable[int]]


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise GraphInputError(f"cannot write {path}: {exc}")


def _emit(text: str, path: Optional[str], out: TextIO) -> None:
    if path:
        _write(path, text)
    else:
        out.write(text)


async def _cmd_quadrangulate(runtime: CoreRuntime, args: argparse.Namespace, out: TextIO) -> int:
    graph = await runtime.call("graph.read", args.graph)
    q = await runtime.call("quadrangulate.run", graph)
    _emit(await runtime.call("quadrangulate.render", q), args.output, out)
    if args.report:
        report = await runtime.call("verifier.quadrangulation", q)
        out.write(report.to_text())
        out.write(runtime.par.report.to_table() + "\n")
        return EXIT_OK if report.ok else EXIT_FAILED
    return EXIT_OK


async def _cmd_stnumber(runtime: CoreRuntime, args: argparse.Namespace, out: TextIO) -> int:
    graph = await runtime.call("graph.read", args.graph)
    if (args.s is None) != (args.t is None):
        raise GraphInputError("--s and --t must be given together")
    if args.s is None:
        if graph.m == 0:
            raise GraphInputError("graph has no edges")
        s, t = graph.endpoints(0)
    else:
        s, t = args.s, args.t
    service = "stnumber.oracle" if args.oracle else "stnumber.run"
    numbering = await runtime.call(service, graph, s, t)
    for v, k in enumerate(numbering.number):
        out.write(f"{v} {k}\n")
    if args.report:
        out.write(runtime.par.report.to_table() + "\n")
    if args.check:
        report = await runtime.call("verifier.numbering", graph, numbering, s, t)
        out.write(report.to_text())
        return EXIT_OK if report.ok else EXIT_FAILED
    return EXIT_OK


async def _cmd_layout(runtime: CoreRuntime, args: argparse.Namespace, out: TextIO) -> int:
    graph = await runtime.call("graph.read", args.graph)
    result = await run_pipeline(runtime, graph, verify=False, strategy=args.strategy)
    _emit(await runtime.call("layout.write", result.layout), args.output, out)
    if args.svg:
        _write(args.svg, await runtime.call("layout.svg", result.layout, graph))
    if args.report:
        out.write(result.rounds.to_table() + "\n")
    return EXIT_OK


async def _cmd_verify(runtime: CoreRuntime, args: argparse.Namespace, out: TextIO) -> int:
    graph = await runtime.call("graph.read", args.graph)
    layout = await runtime.call("layout.read", args.segments)
    report = await runtime.call("verifier.layout", graph, layout)
    if args.report:
        out.write(report.to_text())
    else:
        out.write(report.to_text(limit=0))
    return EXIT_OK if report.ok else EXIT_FAILED


async def _cmd_pipeline(runtime: CoreRuntime, args: argparse.Namespace, out: TextIO) -> int:
    if args.batch:
        return await _run_batch(runtime, args, out)
    if not args.graph:
        raise GraphInputError("pipeline needs a graph file or --batch")
    graph = await runtime.call("graph.read", args.graph)
    result = await run_pipeline(runtime, graph, verify=True, strategy=args.strategy)
    if args.output:
        _write(args.output, await runtime.call("layout.write", result.layout))
    if args.svg:
        _write(args.svg, await runtime.call("layout.svg", result.layout, graph))
    out.write(result.report.to_text(limit=None if args.report else 0))
    if args.report:
        out.write(result.rounds.to_table() + "\n")
    return EXIT_OK if result.ok else EXIT_FAILED


async def _run_batch(runtime: CoreRuntime, args: argparse.Namespace, out: TextIO) -> int:
    specs = await runtime.call("corpus.read_specs", args.batch)
    out.write(f"{'seed':>20} {'n':>6} {'rate':>5} {'m':>7} {'status':>6} {'rounds':>8} {'work':>10}\n")
    failed = 0
    for spec in specs:
        instance = await runtime.call("corpus.generate", spec)
        try:
            result = await run_pipeline(runtime, instance.graph, verify=True, strategy=args.strategy)
            status = "pass" if result.ok else "fail"
            rounds, work = result.rounds.total_rounds, result.rounds.total_work
        except SegmentRuntimeError as exc:
            await error(runtime, str(exc), module="console", seed=spec.seed, n=spec.n)
            status, rounds, work = "error", 0, 0
        if status != "pass":
            failed += 1
        out.write(
            f"{spec.seed:>20} {spec.n:>6} {spec.rate:>5g} {instance.graph.m:>7} {status:>6} {rounds:>8} {work:>10}\n"
        )
    out.write(f"instances={len(specs)} failed={failed}\n")
    return EXIT_OK if failed == 0 else EXIT_FAILED


async def _cmd_gen(runtime: CoreRuntime, args: argparse.Namespace, out: TextIO) -> int:
    try:
        spec = InstanceSpec(seed=runtime.config.seed, n=args.n, rate=args.rate)
        spec.validate()
    except ValueError as exc:
        raise GraphInputError(str(exc))
    instance = await runtime.call("corpus.generate", spec)
    text = await runtime.call("graph.serialize", instance.graph)
    _emit(f"# {spec.label()}\n" + text, args.output, out)
    if args.reference:
        _write(args.reference, await runtime.call("graph.serialize", instance.reference))
    return EXIT_OK


async def _cmd_bench(runtime: CoreRuntime, args: argparse.Namespace, out: TextIO) -> int:
    summary = await runtime.call(
        "bench.sweep",
        min_exp=args.min_exp,
        max_exp=args.max_exp,
        rate=args.rate,
        verify=args.verify,
    )
    out.write(summary.to_table())
    if args.csv:
        _write(args.csv, summary.to_csv())
    return EXIT_OK if all(r.ok for r in summary.records) else EXIT_FAILED


COMMANDS: Dict[str, Command] = {
    "quadrangulate": _cmd_quadrangulate,
    "stnumber": _cmd_stnumber,
    "layout": _cmd_layout,
    "verify": _cmd_verify,
    "pipeline": _cmd_pipeline,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="segrt", description="Segment-contact representations of planar bipartite graphs")
    parser.add_argument("--workers", type=int, help="threads of the parallel runtime")
    parser.add_argument("--seed", type=int, help="corpus seed")
    parser.add_argument("--log-format", choices=("text", "json"))
    parser.add_argument("--log-level", choices=LOG_LEVELS)
    parser.add_argument("--metrics", metavar="FILE", help="write Prometheus metrics text on exit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quadrangulate", help="add chords until every face is a 4-cycle")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.add_argument("--report", action="store_true")

    p = sub.add_parser("stnumber", help="st-number a 2-connected graph")
    p.add_argument("graph")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--oracle", action="store_true", help="use the sequential implementation")
    p.add_argument("--check", action="store_true")
    p.add_argument("--report", action="store_true")

    p = sub.add_parser("layout", help="compute the segment representation")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.add_argument("--svg")
    p.add_argument("--strategy", choices=LAYOUT_STRATEGIES)
    p.add_argument("--report", action="store_true")

    p = sub.add_parser("verify", help="check a segment file against a graph")
    p.add_argument("graph")
    p.add_argument("segments")
    p.add_argument("--report", action="store_true")

    p = sub.add_parser("pipeline", help="quadrangulate, number, lay out and verify")
    p.add_argument("graph", nargs="?")
    p.add_argument("--batch", metavar="SPECFILE")
    p.add_argument("-o", "--output")
    p.add_argument("--svg")
    p.add_argument("--strategy", choices=LAYOUT_STRATEGIES)
    p.add_argument("--report", action="store_true")

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rate", type=float, default=0.0)
    p.add_argument("-o", "--output")
    p.add_argument("--reference", help="also write the full quadrangulation")

    p = sub.add_parser("bench", help="round scaling over n = 2^min .. 2^max")
    p.add_argument("--min-exp", type=int)
    p.add_argument("--max-exp", type=int)
    p.add_argument("--rate", type=float)
    p.add_argument("--csv")
    p.add_argument("--verify", action="store_true")
    return parser


def _config_from(args: argparse.Namespace) -> Config:
    config = Config.from_env()
    overrides: Dict[str, Any] = {}
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.log_format is not None:
        overrides["log_format"] = args.log_format
    if args.log_level is not None:
        overrides["log_level"] = args.log_level
    config = dataclasses.replace(config, **overrides)
    config.validate()
    return config


async def run_cli(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Выполнить одну команду.

    Args:
        argv: аргументы без имени программы (по умолчанию sys.argv[1:])
        out: поток результатов (по умолчанию sys.stdout)

    Returns:
        код выхода
    """
    stream = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        config = _config_from(args)
    except ValueError as exc:
        sys.stderr.write(f"[ERROR] {exc}\n")
        return EXIT_INPUT

    runtime = CoreRuntime(config)
    await runtime.start()
    try:
        return await COMMANDS[args.command](runtime, args, stream)
    except GraphInputError as exc:
        await error(runtime, str(exc), module="console", **exc.context)
        return EXIT_INPUT
    except SegmentRuntimeError as exc:
        await error(runtime, str(exc), module="console", **exc.context)
        return EXIT_FAILED
    except ValueError as exc:
        await error(runtime, str(exc), module="console")
        return EXIT_INPUT
    finally:
        if args.metrics and await runtime.service_registry.has_service("monitoring.export"):
            _write(args.metrics, await runtime.call("monitoring.export"))
        await runtime.shutdown()
