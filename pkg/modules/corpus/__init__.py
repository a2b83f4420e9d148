"""
Corpus — случайные квадрангуляции и их 2-связные подграфы.
"""

from .module import CorpusModule

__all__ = ["CorpusModule"]
