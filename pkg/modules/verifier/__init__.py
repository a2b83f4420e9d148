"""
Verifier — проверка представлений, нумераций и квадрангуляций.
"""

from .module import VerifierModule

__all__ = ["VerifierModule"]
