import logging
from typing import Any, Dict

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def validate_config(config: Dict[str, Any]):
    """Validate configuration structure"""
    if not isinstance(config, dict):
        raise ValueError("Configuration must be a mapping")

    required_sections = ["search", "generation", "reports", "logging"]
    for section in required_sections:
        if section not in config:
            raise ValueError(f"Missing required section: {section}")

    required_fields = {
        "search": ["exhaustive_limit", "sample_size", "seed"],
        "generation": ["el_objects", "adjoint_samples", "perturbations"],
        "reports": ["indent", "include_timings", "save_path"],
        "logging": ["level", "file_path", "format"],
    }
    for section, fields in required_fields.items():
        for field in fields:
            if field not in config[section]:
                raise ValueError(f"Missing required {section} field: {field}")

    for field in ("exhaustive_limit", "sample_size"):
        value = config["search"][field]
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(
                f"search.{field} must be a positive integer, got {value!r}"
            )

    for section, field in [
        ("generation", "el_objects"),
        ("generation", "adjoint_samples"),
        ("generation", "perturbations"),
        ("reports", "indent"),
    ]:
        value = config[section][field]
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(
                f"{section}.{field} must be a non-negative integer, got {value!r}"
            )

    if not isinstance(config["search"]["seed"], int):
        raise ValueError("search.seed must be an integer")

    level = str(config["logging"]["level"]).upper()
    if level not in LEVELS:
        raise ValueError(f"Unknown logging level: {config['logging']['level']}")
    config["logging"]["level"] = level
    logging.getLogger(__name__).debug("configuration validated")

    return True
