"""Отчёты верификатора."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

# layout
MISSING_CONTACT = "MissingContact"
SPURIOUS_INTERSECTION = "SpuriousIntersection"
CROSSING_PAIR = "CrossingPair"
PARALLEL_OVERLAP = "ParallelOverlap"
INTERIOR_SHARING = "InteriorSharing"
OUT_OF_GRID = "OutOfGrid"
WRONG_ORIENTATION = "WrongOrientation"
COVERAGE_MISMATCH = "CoverageMismatch"

# numbering
NOT_BIJECTION = "NotBijection"
SOURCE_NOT_LOWEST = "SourceNotLowest"
SINK_NOT_HIGHEST = "SinkNotHighest"
NO_LOWER_NEIGHBOR = "NoLowerNeighbor"
NO_HIGHER_NEIGHBOR = "NoHigherNeighbor"

# quadrangulation
FACE_NOT_QUADRANGLE = "FaceNotQuadrangle"
NOT_SIMPLE = "NotSimple"
EDGE_COUNT = "EdgeCountMismatch"
NOT_BIPARTITE = "NotBipartite"
POLE_NOT_ON_OUTER = "PoleNotOnOuterFace"


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    owners: Tuple[int, ...] = ()
    point: Optional[Tuple[int, int]] = None

    def __str__(self) -> str:
        where = f" at {self.point}" if self.point is not None else ""
        return f"{self.kind}{where}: {self.message}"


@dataclass(frozen=True)
class VerificationReport:
    """
    Результат проверки: ok тогда и только тогда, когда нарушений нет.

    subject — что проверялось ("layout", "numbering", "quadrangulation");
    stats — счётчики проверки (пары, контакты, грани).
    """

    subject: str
    violations: Tuple[Violation, ...] = ()
    stats: Dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> List[str]:
        return sorted({v.kind for v in self.violations})

    def count(self, kind: str) -> int:
        return sum(1 for v in self.violations if v.kind == kind)

    def to_text(self, limit: Optional[int] = None) -> str:
        status = "PASS" if self.ok else "FAIL"
        head = f"{self.subject}: {status} ({len(self.violations)} violations)"
        if self.stats:
            head += " " + " ".join(f"{k}={v}" for k, v in sorted(self.stats.items()))
        rows = [head]
        shown = self.violations if limit is None else self.violations[:limit]
        rows.extend(f"  {v}" for v in shown)
        if limit is not None and len(self.violations) > limit:
            rows.append(f"  ... {len(self.violations) - limit} more")
        return "\n".join(rows) + "\n"

    def as_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "stats": dict(self.stats),
            "violations": [
                {"kind": v.kind, "message": v.message, "owners": list(v.owners), "point": v.point}
                for v in self.violations
            ],
        }
