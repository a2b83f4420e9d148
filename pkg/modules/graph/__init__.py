"""
graph-core: вложенный двудольный граф, грани, текстовый формат.
"""

from .module import GraphModule

__all__ = ["GraphModule"]
