from .context import VerificationContext
from .orchestrator import COMMANDS, VerificationOrchestrator, aggregate_status

__all__ = [
    "VerificationContext",
    "VerificationOrchestrator",
    "COMMANDS",
    "aggregate_status",
]
