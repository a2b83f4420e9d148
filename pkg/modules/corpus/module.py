"""
CorpusModule — детерминированный генератор входных графов.
"""

from core.runtime_module import RuntimeModule
from modules.corpus import services


class CorpusModule(RuntimeModule):
    @property
    def name(self) -> str:
        return "corpus"

    def services(self):
        return [
            ("corpus.generate", services.generate),
            ("corpus.parse_specs", services.parse_specs),
            ("corpus.read_specs", services.read_specs),
        ]
