"""
Сервисы верификатора. Нарушения логируются на уровне warning.
"""

from typing import FrozenSet, Tuple

from core.logger_helper import info, warning
from modules.graph.model import EmbeddedBipartiteGraph
from modules.layout.model import SegmentLayout
from modules.verifier import checks
from modules.verifier.model import VerificationReport


async def _log_report(runtime, report: VerificationReport) -> None:
    if report.ok:
        await info(runtime, f"Verification of {report.subject} passed", module="verifier", **report.stats)
        return
    await warning(
        runtime,
        f"Verification of {report.subject} failed",
        module="verifier",
        violations=len(report.violations),
        kinds=",".join(report.kinds()),
    )


async def verify_layout(runtime, graph: EmbeddedBipartiteGraph, layout: SegmentLayout) -> VerificationReport:
    report = checks.verify_layout(graph, layout)
    await _log_report(runtime, report)
    return report


async def verify_numbering(runtime, graph, numbering, s: int, t: int) -> VerificationReport:
    report = checks.verify_numbering(graph, numbering, s, t)
    await _log_report(runtime, report)
    return report


async def verify_quadrangulation(runtime, quadrangulation) -> VerificationReport:
    report = checks.verify_quadrangulation(quadrangulation)
    await _log_report(runtime, report)
    return report


async def intersections(runtime, layout: SegmentLayout) -> FrozenSet[Tuple[int, int]]:
    return checks.intersection_graph(layout)
