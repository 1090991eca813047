import os

from .config_validator import LEVELS


def validate_env_vars():
    """Validate optional override variables; unset ones are fine."""
    bad_vars = []
    for var in ("CROSSED_BIMODULES_SEARCH_BUDGET", "CROSSED_BIMODULES_SEED"):
        value = os.getenv(var)
        if not value:
            continue
        try:
            number = int(value)
        except ValueError:
            bad_vars.append(var)
            continue
        if var.endswith("BUDGET") and number < 1:
            bad_vars.append(var)

    level = os.getenv("CROSSED_BIMODULES_LOG_LEVEL")
    if level and level.upper() not in LEVELS:
        bad_vars.append("CROSSED_BIMODULES_LOG_LEVEL")

    if bad_vars:
        raise ValueError(f"Invalid environment variables: {', '.join(bad_vars)}")
