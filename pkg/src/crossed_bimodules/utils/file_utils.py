import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Optional, Union

from ..errors import InstanceError

logger = logging.getLogger(__name__)


def read_instance_data(path: Union[str, Path]) -> dict:
    """Read an instance file as JSON."""
    file_path = Path(path)
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise InstanceError(f"no such file: {file_path}")
    except json.JSONDecodeError as e:
        logger.error(f"Error reading instance data: {str(e)}")
        raise InstanceError(
            f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}",
            str(file_path),
        )
    if not isinstance(data, dict):
        raise InstanceError("top level must be a JSON object", str(file_path))
    return data


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def digest(data: Any) -> str:
    """sha256 of the canonical JSON text."""
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


def dump_json(data: Any, indent: int = 2) -> str:
    return json.dumps(data, indent=indent, ensure_ascii=False) + "\n"


def write_report(data: Any, path: Optional[Union[str, Path]], indent: int = 2) -> str:
    """Write to path, or return the text for stdout when path is None."""
    text = dump_json(data, indent)
    if path is not None:
        out = Path(path)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        logger.info(f"Report written to {out}")
    return text
