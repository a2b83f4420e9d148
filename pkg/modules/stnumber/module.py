"""
StnumberModule — стадия st-нумерации.
"""

from core.runtime_module import RuntimeModule
from core.service_registry import StageMiddleware
from modules.stnumber import services


class StnumberModule(RuntimeModule):
    stage_services = ("stnumber.run",)

    @property
    def name(self) -> str:
        return "stnumber"

    def services(self):
        return [
            ("stnumber.run", services.run),
            ("stnumber.oracle", services.oracle),
            ("stnumber.levels", services.levels),
            ("stnumber.check", services.check),
        ]

    def middleware(self):
        return [StageMiddleware(self.runtime, "stnumber")]
