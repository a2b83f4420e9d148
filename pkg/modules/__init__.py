from .logger import LoggerModule
from .graph import GraphModule
from .quadrangulate import QuadrangulateModule
from .stnumber import StnumberModule
from .layout import LayoutModule
from .verifier import VerifierModule
from .corpus import CorpusModule
from .bench import BenchModule
from .monitoring import MonitoringModule

__all__ = [
    "LoggerModule",
    "GraphModule",
    "QuadrangulateModule",
    "StnumberModule",
    "LayoutModule",
    "VerifierModule",
    "CorpusModule",
    "BenchModule",
    "MonitoringModule",
]
