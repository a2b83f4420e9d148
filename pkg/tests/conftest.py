import sys
import pathlib

import pytest

# Ensure repository root is on sys.path so packages (core, modules) import correctly
ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.config import Config
from core.par_runtime import ParRuntime
from core.runtime import CoreRuntime
from modules.graph.io import parse_graph
from tests.samples import C4_TEXT, C6_CHORD_TEXT, GRID_2X3_TEXT, HEXAGON_TEXT


@pytest.fixture
def c4():
    return parse_graph(C4_TEXT)


@pytest.fixture
def hexagon():
    return parse_graph(HEXAGON_TEXT)


@pytest.fixture
def c6_chord():
    return parse_graph(C6_CHORD_TEXT)


@pytest.fixture
def grid_2x3():
    return parse_graph(GRID_2X3_TEXT)


@pytest.fixture
def par():
    with ParRuntime() as runtime:
        yield runtime


@pytest.fixture
async def runtime():
    rt = CoreRuntime(Config())
    await rt.start()
    yield rt
    await rt.shutdown()


@pytest.fixture
def write_file(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write
