"""
st-нумерация через открытое разложение на уши.
"""

from .module import StnumberModule

__all__ = ["StnumberModule"]
