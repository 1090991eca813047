from .models import (
    CheckResult,
    CrossCheck,
    DecompositionReport,
    Report,
    SearchSettings,
    SummandRecord,
    ValidationReport,
    Violation,
)
from .schema import InstanceFile, parse_instance

__all__ = [
    "CheckResult",
    "CrossCheck",
    "DecompositionReport",
    "InstanceFile",
    "Report",
    "SearchSettings",
    "SummandRecord",
    "ValidationReport",
    "Violation",
    "parse_instance",
]
