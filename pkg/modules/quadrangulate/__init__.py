"""
Квадрангуляция вложенного двудольного графа.
"""

from .module import QuadrangulateModule

__all__ = ["QuadrangulateModule"]
