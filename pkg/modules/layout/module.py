"""
LayoutModule — стадия построения сегментов.
"""

from core.runtime_module import RuntimeModule
from core.service_registry import StageMiddleware
from modules.layout import services


class LayoutModule(RuntimeModule):
    stage_services = ("layout.run",)

    @property
    def name(self) -> str:
        return "layout"

    def services(self):
        return [
            ("layout.run", services.run),
            ("layout.diagonals", services.diagonals),
            ("layout.orderings", services.orderings),
            ("layout.write", services.write),
            ("layout.parse", services.parse),
            ("layout.read", services.read),
            ("layout.svg", services.svg),
        ]

    def middleware(self):
        return [StageMiddleware(self.runtime, "layout")]
