"""
Monitoring — метрики Prometheus (раунды, работа, стадии, прогоны).
"""

from .module import MonitoringModule

__all__ = ["MonitoringModule"]
