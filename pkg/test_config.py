import copy

import pytest

from crossed_bimodules.config import load_config
from crossed_bimodules.errors import InstanceError
from crossed_bimodules.utils import (
    canonical_json,
    digest,
    read_instance_data,
    validate_config,
    validate_env_vars,
    write_report,
)


@pytest.fixture
def clean_env(monkeypatch):
    for var in (
        "CROSSED_BIMODULES_LOG_LEVEL",
        "CROSSED_BIMODULES_SEARCH_BUDGET",
        "CROSSED_BIMODULES_SEED",
    ):
        monkeypatch.delenv(var, raising=False)
    return monkeypatch


def test_bundled_defaults(clean_env):
    config = load_config(create_dirs=False)
    assert config["search"]["exhaustive_limit"] == 1_000_000
    assert config["search"]["seed"] == 0
    assert config["generation"]["perturbations"] == 50
    assert config["reports"]["include_timings"] is False
    assert config["logging"]["level"] == "WARNING"


def test_environment_overrides(clean_env):
    clean_env.setenv("CROSSED_BIMODULES_SEED", "5")
    clean_env.setenv("CROSSED_BIMODULES_SEARCH_BUDGET", "100")
    clean_env.setenv("CROSSED_BIMODULES_LOG_LEVEL", "debug")
    config = load_config(create_dirs=False)
    assert config["search"]["seed"] == 5
    assert config["search"]["exhaustive_limit"] == 100
    assert config["logging"]["level"] == "DEBUG"


@pytest.mark.parametrize(
    "var, value",
    [
        ("CROSSED_BIMODULES_SEARCH_BUDGET", "-1"),
        ("CROSSED_BIMODULES_SEARCH_BUDGET", "0"),
        ("CROSSED_BIMODULES_SEED", "seven"),
        ("CROSSED_BIMODULES_LOG_LEVEL", "LOUD"),
    ],
)
def test_bad_environment_values(clean_env, var, value):
    clean_env.setenv(var, value)
    with pytest.raises(ValueError):
        validate_env_vars()


def test_config_validation(clean_env):
    config = load_config(create_dirs=False)
    broken = copy.deepcopy(config)
    del broken["generation"]
    with pytest.raises(ValueError):
        validate_config(broken)
    broken = copy.deepcopy(config)
    broken["search"]["sample_size"] = -3
    with pytest.raises(ValueError):
        validate_config(broken)
    broken = copy.deepcopy(config)
    broken["search"]["exhaustive_limit"] = 0
    with pytest.raises(ValueError):
        validate_config(broken)
    broken = copy.deepcopy(config)
    broken["reports"]["indent"] = True
    with pytest.raises(ValueError):
        validate_config(broken)
    lowered = copy.deepcopy(config)
    lowered["logging"]["level"] = "info"
    assert validate_config(lowered)
    assert lowered["logging"]["level"] == "INFO"


def test_digest_ignores_key_order():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
    assert digest({"b": 1, "a": 2}) == digest({"a": 2, "b": 1})
    assert digest({"a": 1}) != digest({"a": 2})


def test_reading_instance_files(tmp_path):
    good = tmp_path / "good.json"
    good.write_text('{"name": "x"}', encoding="utf-8")
    assert read_instance_data(good) == {"name": "x"}
    with pytest.raises(InstanceError):
        read_instance_data(tmp_path / "missing.json")
    listed = tmp_path / "list.json"
    listed.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(InstanceError):
        read_instance_data(listed)


def test_write_report(tmp_path):
    target = tmp_path / "nested" / "report.json"
    text = write_report({"status": "pass"}, target, indent=4)
    assert target.read_text(encoding="utf-8") == text
    assert text.startswith('{\n    "status"')
    assert write_report({"a": 1}, None) == '{\n  "a": 1\n}\n'
