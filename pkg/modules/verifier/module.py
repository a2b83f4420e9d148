"""
VerifierModule — точная проверка результатов стадий.
"""

from core.runtime_module import RuntimeModule
from core.service_registry import StageMiddleware
from modules.verifier import services


class VerifierModule(RuntimeModule):
    stage_services = ("verifier.layout",)

    @property
    def name(self) -> str:
        return "verifier"

    def services(self):
        return [
            ("verifier.layout", services.verify_layout),
            ("verifier.numbering", services.verify_numbering),
            ("verifier.quadrangulation", services.verify_quadrangulation),
            ("verifier.intersections", services.intersections),
        ]

    def middleware(self):
        return [StageMiddleware(self.runtime, "verify")]
