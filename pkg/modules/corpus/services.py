"""Сервисы генератора корпуса."""

from typing import List

from core.errors import GraphInputError
from core.logger_helper import debug
from modules.corpus import generator
from modules.corpus.model import Instance, InstanceSpec


async def generate(runtime, spec: InstanceSpec) -> Instance:
    instance = generator.generate(spec)
    await debug(
        runtime,
        "Instance generated",
        module="corpus",
        seed=spec.seed,
        n=spec.n,
        m=instance.graph.m,
        removed=instance.removed,
    )
    return instance


async def parse_specs(runtime, text: str) -> List[InstanceSpec]:
    return generator.parse_spec_file(text)


async def read_specs(runtime, path: str) -> List[InstanceSpec]:
    """
    Raises:
        GraphInputError: файл не читается
        ParseError: строка не в формате `seed n rate`
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read corpus file {path}: {exc}")
    specs = generator.parse_spec_file(text)
    await debug(runtime, "Corpus specs loaded", module="corpus", path=path, count=len(specs))
    return specs
