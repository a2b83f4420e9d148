"""
Тесты генератора корпуса.
"""

import pytest

from core.errors import ParseError
from modules.corpus.generator import format_spec_file, generate, generate_quadrangulation, parse_spec_file
from modules.corpus.model import InstanceSpec
from modules.graph.embedding import extract_faces, validate
from modules.layout.algorithm import compute_layout
from modules.quadrangulate.algorithm import quadrangulate
from modules.verifier.checks import verify_layout, verify_quadrangulation


def test_smallest_instance_is_c4(c4):
    instance = generate(InstanceSpec(seed=5, n=4))
    assert instance.graph == c4
    assert instance.reference == c4
    assert instance.removed == 0


def test_reference_is_quadrangulation(par):
    reference = generate_quadrangulation(seed=11, n=100)
    assert reference.m == 196
    assert all(face.length == 4 for face in extract_faces(reference, par))
    assert verify_quadrangulation(reference).ok


def test_zero_rate_keeps_every_edge():
    instance = generate(InstanceSpec(seed=3, n=50, rate=0.0))
    assert instance.graph == instance.reference


def test_removal_keeps_two_connectivity():
    instance = generate(InstanceSpec(seed=42, n=80, rate=0.2))
    assert instance.removed > 0
    assert instance.graph.edge_keys < instance.reference.edge_keys
    report = validate(instance.graph)
    assert report.ok
    assert report.two_connected
    assert report.simple


def test_outer_cycle_survives_full_rate():
    instance = generate(InstanceSpec(seed=9, n=30, rate=1.0))
    for edge in [(0, 1), (1, 2), (2, 3), (0, 3)]:
        assert edge in instance.graph.edge_keys


def test_same_spec_same_instance():
    spec = InstanceSpec(seed=2**63 + 17, n=60, rate=0.3)
    assert generate(spec) == generate(spec)
    assert generate(spec).graph != generate(InstanceSpec(seed=18, n=60, rate=0.3)).graph


@pytest.mark.parametrize(
    "spec",
    [InstanceSpec(seed=-1, n=10), InstanceSpec(seed=1, n=3), InstanceSpec(seed=1, n=10, rate=1.5)],
)
def test_invalid_spec(spec):
    with pytest.raises(ValueError):
        generate(spec)


@pytest.mark.parametrize("seed", [1, 2, 3, 4])
def test_generated_instances_pass_pipeline(seed, par):
    instance = generate(InstanceSpec(seed=seed, n=40, rate=0.3))
    q = quadrangulate(instance.graph, par)
    layout = compute_layout(instance.graph, q, par)
    report = verify_layout(instance.graph, layout)
    assert report.ok, report.to_text()


def test_spec_file_round_trip():
    text = "# corpus\n1 16 0.1\n\n2 32 0   # no removal\n"
    specs = parse_spec_file(text)
    assert specs == [InstanceSpec(1, 16, 0.1), InstanceSpec(2, 32, 0.0)]
    assert format_spec_file(specs) == "1 16 0.1\n2 32 0\n"
    assert specs[0].label() == "seed=1 n=16 rate=0.1"


def test_spec_file_errors():
    with pytest.raises(ParseError, match="seed n rate"):
        parse_spec_file("1 16\n")
    with pytest.raises(ParseError) as exc:
        parse_spec_file("1 16 0.1\n1 3 0.1\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        parse_spec_file("x 16 0.1\n")


async def test_corpus_services(runtime, write_file):
    path = write_file("corpus.txt", "7 12 0.2\n8 12 0.0\n")
    specs = await runtime.call("corpus.read_specs", path)
    assert len(specs) == 2
    instance = await runtime.call("corpus.generate", specs[1])
    assert instance.graph.m == 20


CORPUS_SIZES = [2**k for k in range(3, 13)]
CORPUS_RATES = (0.0, 0.1, 0.3)
CORPUS = [InstanceSpec(seed=seed, n=n, rate=rate) for seed in range(7) for n in CORPUS_SIZES for rate in CORPUS_RATES]


@pytest.mark.slow
def test_corpus_instances_are_valid_inputs():
    assert len(CORPUS) >= 200
    assert max(spec.n for spec in CORPUS) == 4096
    for spec in CORPUS:
        instance = generate(spec)
        assert instance.graph.n == spec.n
        report = validate(instance.graph)
        assert report.ok and report.two_connected and report.simple, spec
        if spec.rate == 0.0:
            assert instance.removed == 0


@pytest.mark.slow
def test_corpus_layouts_verify(par):
    for spec in CORPUS:
        if spec.n > 256 or spec.seed > 1:
            continue
        graph = generate(spec).graph
        layout = compute_layout(graph, quadrangulate(graph, par), par)
        assert verify_layout(graph, layout).ok, spec
