import pytest

from core.config import Config


ENV_VARS = (
    "RUNTIME_WORKERS",
    "RUNTIME_SEED",
    "RUNTIME_LOG_FORMAT",
    "LOG_LEVEL",
    "RUNTIME_BENCH_MIN_EXP",
    "RUNTIME_BENCH_MAX_EXP",
    "RUNTIME_BENCH_RATE",
    "RUNTIME_LAYOUT_STRATEGY",
    "RUNTIME_METRICS_ENABLED",
    "RUNTIME_SERVICE_CALL_TIMEOUT",
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)


def test_defaults_are_valid():
    config = Config()
    config.validate()
    assert config.workers == 1
    assert config.layout_strategy == "retract"
    assert config.metrics_enabled is True


@pytest.mark.parametrize(
    "overrides, message",
    [
        ({"workers": 0}, "workers"),
        ({"seed": -1}, "seed"),
        ({"log_format": "xml"}, "log_format"),
        ({"log_level": "TRACE"}, "log_level"),
        ({"bench_min_exp": 1}, "bench_min_exp"),
        ({"bench_min_exp": 10, "bench_max_exp": 9}, "must not exceed"),
        ({"bench_rate": 1.5}, "bench_rate"),
        ({"layout_strategy": "greedy"}, "layout_strategy"),
        ({"max_quad_passes": 0}, "max_quad_passes"),
        ({"service_call_timeout": 0}, "service_call_timeout"),
    ],
)
def test_validate_rejects(overrides, message):
    with pytest.raises(ValueError, match=message):
        Config(**overrides).validate()


def test_from_env(monkeypatch):
    monkeypatch.setenv("RUNTIME_WORKERS", "4")
    monkeypatch.setenv("RUNTIME_SEED", "42")
    monkeypatch.setenv("RUNTIME_LOG_FORMAT", "JSON")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    monkeypatch.setenv("RUNTIME_BENCH_RATE", "0.25")
    monkeypatch.setenv("RUNTIME_LAYOUT_STRATEGY", "auto")
    monkeypatch.setenv("RUNTIME_METRICS_ENABLED", "off")

    config = Config.from_env()

    assert config.workers == 4
    assert config.seed == 42
    assert config.log_format == "json"
    assert config.log_level == "DEBUG"
    assert config.bench_rate == 0.25
    assert config.layout_strategy == "auto"
    assert config.metrics_enabled is False


def test_from_env_rejects_garbage(monkeypatch):
    monkeypatch.setenv("RUNTIME_WORKERS", "many")
    with pytest.raises(ValueError, match="RUNTIME_WORKERS must be integer"):
        Config.from_env()


def test_from_env_validates(monkeypatch):
    monkeypatch.setenv("RUNTIME_BENCH_MIN_EXP", "12")
    monkeypatch.setenv("RUNTIME_BENCH_MAX_EXP", "10")
    with pytest.raises(ValueError, match="must not exceed"):
        Config.from_env()
