from abc import ABC, abstractmethod
import logging
from typing import TYPE_CHECKING, List, Sequence, Tuple

from ..api.models import CheckResult
from ..exact import FieldSpec

if TYPE_CHECKING:
    from ..verification.context import VerificationContext


class BaseCheck(ABC):
    """
    Base class for one verifiable statement about an instance.

    A check names the preconditions it needs; the orchestrator evaluates them
    on the shared context and marks the check skipped when one is unmet, so
    `run` may assume all of them hold.

    Attributes:
        name (str): identifier used in reports
        requires (Tuple[str, ...]): context preconditions, e.g. "valid", "separable"
    """

    name: str = "check"
    requires: Tuple[str, ...] = ()

    def __init__(self):
        self.logger = logging.getLogger(f"{__name__}.{self.name}")

    @abstractmethod
    def run(self, context: "VerificationContext") -> List[CheckResult]:
        """Run the check and return one or more results."""
        pass

    @property
    def label(self) -> str:
        return self.name


def format_vector(field: FieldSpec, v: Sequence) -> List[str]:
    return [field.format(c) for c in v]


def format_blocks(field: FieldSpec, blocks) -> List[List[List[str]]]:
    return [[format_vector(field, v) for v in row] for row in blocks]
