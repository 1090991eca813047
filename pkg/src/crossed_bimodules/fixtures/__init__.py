"""Bundled instances, loadable by name."""

from pathlib import Path
from typing import List

from ..api.schema import InstanceFile, parse_instance
from ..errors import InstanceError

FIXTURE_DIR = Path(__file__).parent


def list_fixtures() -> List[str]:
    return sorted(p.stem for p in FIXTURE_DIR.glob("*.json"))


def fixture_path(name: str) -> Path:
    path = FIXTURE_DIR / f"{name}.json"
    if not path.is_file():
        bundled = ", ".join(list_fixtures())
        raise InstanceError(f"unknown fixture {name!r}; bundled: {bundled}")
    return path


def load_fixture(name: str) -> InstanceFile:
    return parse_instance(fixture_path(name))


__all__ = ['FIXTURE_DIR', 'list_fixtures', 'fixture_path', 'load_fixture']
