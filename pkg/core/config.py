"""
Конфигурация runtime конвейера.

Значения по умолчанию годятся для CLI; переменные окружения RUNTIME_*
переопределяют их, флаги CLI переопределяют окружение.
"""

import os
from dataclasses import dataclass
from typing import Optional


LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
LAYOUT_STRATEGIES = ("retract", "direct", "auto")


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be integer, got: {raw!r}")


def _env_float(name: str, default: Optional[float]) -> Optional[float]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"{name} must be number, got: {raw!r}")


@dataclass
class Config:
    """Конфигурация runtime."""

    # Потоки ParRuntime; на раунды и результат не влияет
    workers: int = 1
    # Шаги уже порога исполняются inline
    parallel_threshold: int = 4096

    # Seed генератора корпуса
    seed: int = 1

    # "text" | "json"
    log_format: str = "text"
    log_level: str = "INFO"

    # Бенчмарк: n = 2^min_exp .. 2^max_exp
    bench_min_exp: int = 8
    bench_max_exp: int = 14
    bench_rate: float = 0.1

    # "retract" | "direct" | "auto"
    layout_strategy: str = "retract"

    # Предел проходов квадрангуляции
    max_quad_passes: int = 64

    # Тайм-аут для shutdown (секунды)
    shutdown_timeout: int = 10

    # Тайм-аут вызова сервиса (секунды); None: без ограничения
    service_call_timeout: Optional[float] = None

    metrics_enabled: bool = True

    def validate(self) -> None:
        """
        Валидировать конфигурацию.

        Raises:
            ValueError: если конфигурация невалидна
        """
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ValueError(f"workers must be positive integer, got: {self.workers!r}")
        if not isinstance(self.parallel_threshold, int) or self.parallel_threshold < 1:
            raise ValueError(f"parallel_threshold must be positive integer, got: {self.parallel_threshold!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be integer in [0, 2^64), got: {self.seed!r}")

        if self.log_format not in ("text", "json"):
            raise ValueError("log_format must be 'text' or 'json'")
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}, got: {self.log_level!r}")

        for field_name in ("bench_min_exp", "bench_max_exp"):
            value = getattr(self, field_name)
            if not isinstance(value, int) or not 2 <= value <= 20:
                raise ValueError(f"{field_name} must be integer between 2 and 20, got: {value!r}")
        if self.bench_min_exp > self.bench_max_exp:
            raise ValueError(
                f"bench_min_exp must not exceed bench_max_exp, got: {self.bench_min_exp} > {self.bench_max_exp}"
            )
        if not 0.0 <= float(self.bench_rate) <= 1.0:
            raise ValueError(f"bench_rate must be between 0 and 1, got: {self.bench_rate!r}")

        if self.layout_strategy not in LAYOUT_STRATEGIES:
            raise ValueError(
                f"layout_strategy must be one of {', '.join(LAYOUT_STRATEGIES)}, got: {self.layout_strategy!r}"
            )
        if not isinstance(self.max_quad_passes, int) or self.max_quad_passes < 1:
            raise ValueError(f"max_quad_passes must be positive integer, got: {self.max_quad_passes!r}")

        if not isinstance(self.shutdown_timeout, int) or self.shutdown_timeout <= 0:
            raise ValueError(f"shutdown_timeout must be positive integer, got: {self.shutdown_timeout}")
        if self.service_call_timeout is not None and self.service_call_timeout <= 0:
            raise ValueError(f"service_call_timeout must be positive, got: {self.service_call_timeout}")

    @classmethod
    def from_env(cls) -> "Config":
        """
        Создать конфигурацию из переменных окружения.

        Raises:
            ValueError: если конфигурация невалидна
        """
        config = cls(
            workers=_env_int("RUNTIME_WORKERS", 1),
            parallel_threshold=_env_int("RUNTIME_PARALLEL_THRESHOLD", 4096),
            seed=_env_int("RUNTIME_SEED", 1),
            log_format=os.getenv("RUNTIME_LOG_FORMAT", "text").lower(),
            log_level=os.getenv("LOG_LEVEL", "INFO").upper(),
            bench_min_exp=_env_int("RUNTIME_BENCH_MIN_EXP", 8),
            bench_max_exp=_env_int("RUNTIME_BENCH_MAX_EXP", 14),
            bench_rate=_env_float("RUNTIME_BENCH_RATE", 0.1),
            layout_strategy=os.getenv("RUNTIME_LAYOUT_STRATEGY", "retract").lower(),
            max_quad_passes=_env_int("RUNTIME_MAX_QUAD_PASSES", 64),
            shutdown_timeout=_env_int("RUNTIME_SHUTDOWN_TIMEOUT", 10),
            service_call_timeout=_env_float("RUNTIME_SERVICE_CALL_TIMEOUT", None),
            metrics_enabled=_env_bool("RUNTIME_METRICS_ENABLED", True),
        )
        config.validate()
        return config
