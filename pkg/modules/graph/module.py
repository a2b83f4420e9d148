"""
GraphModule — graph-core: разбор, построение, грани, валидация.
"""

from core.runtime_module import RuntimeModule
from modules.graph import services


class GraphModule(RuntimeModule):
    """Модуль graph-core. Сервисы не являются стадиями конвейера."""

    @property
    def name(self) -> str:
        return "graph"

    def services(self):
        return [
            ("graph.parse", services.parse_graph),
            ("graph.read", services.read_graph),
            ("graph.build", services.build_graph),
            ("graph.faces", services.extract_faces),
            ("graph.incidence", services.face_incidence_lists),
            ("graph.validate", services.validate),
            ("graph.serialize", services.serialize_graph),
        ]
