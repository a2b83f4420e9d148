"""Типы генератора корпуса."""

from __future__ import annotations

from dataclasses import dataclass

from modules.graph.model import EmbeddedBipartiteGraph

MAX_SEED = 2**64


@dataclass(frozen=True)
class InstanceSpec:
    """Одинаковая спецификация даёт один и тот же экземпляр."""

    seed: int
    n: int
    rate: float = 0.0

    def validate(self) -> None:
        """
        Raises:
            ValueError: значения вне допустимых границ
        """
        if not isinstance(self.seed, int) or not 0 <= self.seed < MAX_SEED:
            raise ValueError(f"seed must be integer in [0, 2^64), got: {self.seed!r}")
        if not isinstance(self.n, int) or self.n < 4:
            raise ValueError(f"n must be integer >= 4, got: {self.n!r}")
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError(f"rate must be in [0, 1], got: {self.rate!r}")

    def label(self) -> str:
        return f"seed={self.seed} n={self.n} rate={self.rate:g}"


@dataclass(frozen=True)
class Instance:
    """graph — вход конвейера, reference — квадрангуляция, из которой он получен."""

    spec: InstanceSpec
    graph: EmbeddedBipartiteGraph
    reference: EmbeddedBipartiteGraph

    @property
    def removed(self) -> int:
        return self.reference.m - self.graph.m
