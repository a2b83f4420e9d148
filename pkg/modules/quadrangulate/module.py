"""
QuadrangulateModule — стадия квадрангуляции.
"""

from core.runtime_module import RuntimeModule
from core.service_registry import StageMiddleware
from modules.quadrangulate import services


class QuadrangulateModule(RuntimeModule):
    stage_services = ("quadrangulate.run",)

    @property
    def name(self) -> str:
        return "quadrangulate"

    def services(self):
        return [
            ("quadrangulate.run", services.run),
            ("quadrangulate.remove_chords", services.remove_chords),
            ("quadrangulate.render", services.render),
        ]

    def middleware(self):
        return [StageMiddleware(self.runtime, "quadrangulate")]
