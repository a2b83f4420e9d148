"""
Core Runtime — ядро конвейера сегментных представлений планарных двудольных графов.
"""

from .config import Config
from .console import run_cli
from .event_bus import EventBus
from .logger_helper import error, info, warning
from .module_manager import ModuleManager
from .par_runtime import ParRuntime, RoundReport, WritePolicy
from .pipeline import PipelineResult, run_pipeline
from .runtime import CoreRuntime
from .runtime_module import RuntimeModule
from .service_registry import ServiceMiddleware, ServiceRegistry, StageMiddleware

__all__ = [
    "Config",
    "CoreRuntime",
    "EventBus",
    "ServiceRegistry",
    "ServiceMiddleware",
    "StageMiddleware",
    "ModuleManager",
    "RuntimeModule",
    "ParRuntime",
    "RoundReport",
    "WritePolicy",
    "PipelineResult",
    "run_pipeline",
    "run_cli",
    "info",
    "warning",
    "error",
]
