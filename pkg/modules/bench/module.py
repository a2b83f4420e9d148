"""
BenchModule — замер раундов конвейера по размерам входа.
"""

from core.runtime_module import RuntimeModule
from modules.bench import services


class BenchModule(RuntimeModule):
    @property
    def name(self) -> str:
        return "bench"

    def services(self):
        return [
            ("bench.measure", services.measure),
            ("bench.sweep", services.sweep),
        ]
