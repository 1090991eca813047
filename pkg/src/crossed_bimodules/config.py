import os
from pathlib import Path
from typing import Any, Dict

import yaml
from dotenv import load_dotenv

from .utils.config_validator import validate_config
from .utils.env_validator import validate_env_vars

LOG_LEVEL_VAR = "CROSSED_BIMODULES_LOG_LEVEL"
SEARCH_BUDGET_VAR = "CROSSED_BIMODULES_SEARCH_BUDGET"
SEED_VAR = "CROSSED_BIMODULES_SEED"


def _apply_env(config: Dict[str, Any]) -> None:
    if os.getenv(LOG_LEVEL_VAR):
        config["logging"]["level"] = os.environ[LOG_LEVEL_VAR].upper()
    if os.getenv(SEARCH_BUDGET_VAR):
        config["search"]["exhaustive_limit"] = int(os.environ[SEARCH_BUDGET_VAR])
    if os.getenv(SEED_VAR):
        config["search"]["seed"] = int(os.environ[SEED_VAR])


def load_config(create_dirs: bool = True) -> Dict[str, Any]:
    """Load the bundled defaults, apply environment overrides and validate."""
    load_dotenv()
    validate_env_vars()
    config_path = Path(__file__).parent / "config" / "config.yaml"
    with open(config_path, "r", encoding="utf-8") as f:
        config = yaml.safe_load(f)

    _apply_env(config)
    validate_config(config)

    if create_dirs:
        Path(config["reports"]["save_path"]).mkdir(parents=True, exist_ok=True)
        Path(config["logging"]["file_path"]).parent.mkdir(parents=True, exist_ok=True)

    return config
