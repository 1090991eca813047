from .config_validator import validate_config
from .env_validator import validate_env_vars
from .file_utils import (
    canonical_json,
    digest,
    dump_json,
    read_instance_data,
    write_report,
)
from .logger import VerificationLogger

__all__ = [
    "VerificationLogger",
    "canonical_json",
    "digest",
    "dump_json",
    "read_instance_data",
    "validate_config",
    "validate_env_vars",
    "write_report",
]
