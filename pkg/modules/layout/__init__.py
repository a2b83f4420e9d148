"""
Layout — диагональные графы, порядки вершин и сегменты.
"""

from .module import LayoutModule

__all__ = ["LayoutModule"]
