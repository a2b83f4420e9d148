"""
Bench — масштабирование раундов и работы.
"""

from .module import BenchModule

__all__ = ["BenchModule"]
