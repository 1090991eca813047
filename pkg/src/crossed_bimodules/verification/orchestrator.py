import logging
import time
from typing import Dict, List, Optional, Sequence, Tuple, Type

from rich.console import Console
from rich.table import Table

from ..api.models import CheckResult, Report
from ..checks import (
    ActionCheck,
    AdjunctionCheck,
    AlmostSplitCheck,
    BaseCheck,
    CenterCheck,
    CenterInvariantsCheck,
    CharacterDualityCheck,
    CocycleAssociativityCheck,
    CrossedRadicalCheck,
    CrossedTripleCheck,
    ElDecomposeCheck,
    ElementsDualityCheck,
    ElHomCheck,
    FactorSystemCheck,
    GroupCheck,
    InducedActionCheck,
    KrullSchmidtCheck,
    NuCheck,
    PhiCheck,
    PsiCheck,
    RadicalCheck,
    RadicalGeneratorsCheck,
    SeparabilityCheck,
    StabilizerReductionCheck,
    SubgroupHeredityCheck,
    SummandCheck,
    TripleCheck,
)
from ..errors import (
    CrossedBimoduleError,
    InstanceError,
    PreconditionError,
    VerificationError,
)
from ..utils.logger import VerificationLogger
from .context import VerificationContext

logger = logging.getLogger(__name__)

CheckClass = Type[BaseCheck]

STRUCTURE_CHECKS: List[CheckClass] = [
    TripleCheck,
    GroupCheck,
    ActionCheck,
    FactorSystemCheck,
]

COMMANDS: Dict[str, List[CheckClass]] = {
    "validate": [],
    "crossed": [CrossedTripleCheck, CocycleAssociativityCheck],
    "el-hom": [ElHomCheck, InducedActionCheck, PhiCheck],
    "psi": [PsiCheck],
    "adjoint-check": [AdjunctionCheck],
    "summand-check": [SummandCheck],
    "center": [CenterCheck, CenterInvariantsCheck],
    "separable": [SeparabilityCheck, SubgroupHeredityCheck],
    "radical": [RadicalCheck, CrossedRadicalCheck],
    "decompose": [KrullSchmidtCheck, ElDecomposeCheck],
    "nu": [NuCheck, StabilizerReductionCheck],
    "char-double": [CharacterDualityCheck, ElementsDualityCheck],
    "ar-check": [AlmostSplitCheck, RadicalGeneratorsCheck],
}
COMMANDS["verify-all"] = [
    check for name, checks in COMMANDS.items() for check in checks
]

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3

STATUS_STYLES = {
    "pass": "green",
    "fail": "red",
    "inconclusive": "yellow",
    "skipped": "dim",
}


def aggregate_status(results: Sequence[CheckResult]) -> str:
    statuses = [r.status for r in results]
    if "fail" in statuses:
        return "fail"
    if not statuses or all(s == "skipped" for s in statuses):
        return "skipped"
    if "inconclusive" in statuses:
        return "inconclusive"
    return "pass"


class VerificationOrchestrator:
    """
    Runs the checks of one command on one instance and assembles the report.

    Structural validation always runs first; every other check declares its
    preconditions and is marked skipped when one of them is unmet. Exceptions
    are mapped to check results here and nowhere else.

    Attributes:
        context (VerificationContext): shared state of the run
        verification_logger (VerificationLogger): receives one line per check result
        console (Console): rich console on stderr for the summary table
        timings (bool): whether the report carries per-check timings
    """

    def __init__(
        self,
        context: VerificationContext,
        verification_logger: Optional[VerificationLogger] = None,
        console: Optional[Console] = None,
        timings: bool = False,
    ):
        self.context = context
        self.verification_logger = verification_logger
        self.console = console or Console(stderr=True)
        self.timings = timings

    def _check(self, check: BaseCheck) -> Tuple[List[CheckResult], bool]:
        """Results of one check, and whether an unmet precondition skipped it."""
        for requirement in check.requires:
            reason = self.context.unmet(requirement)
            if reason is not None:
                return [CheckResult.skipped(check.name, reason)], True
        try:
            return check.run(self.context), False
        except InstanceError:
            raise
        except PreconditionError as e:
            logger.info(f"{check.name} skipped: {e}")
            return [CheckResult.skipped(check.name, str(e))], True
        except VerificationError as e:
            logger.error(f"{check.name} failed post-verification: {e}")
            failed = CheckResult(
                name=check.name, status="fail", reason=str(e), witnesses=e.instance
            )
            return [failed], False
        except CrossedBimoduleError as e:
            logger.error(f"{check.name} raised {type(e).__name__}: {e}")
            return [CheckResult(name=check.name, status="fail", reason=str(e))], False

    def run(self, command: str) -> Report:
        if command not in COMMANDS:
            raise ValueError(f"Unknown command: {command}")
        structure_results: List[CheckResult] = []
        command_results: List[CheckResult] = []
        timings: Dict[str, float] = {}
        precondition_unmet = False
        plan = [(cls, True) for cls in STRUCTURE_CHECKS]
        plan += [(cls, False) for cls in COMMANDS[command]]
        for cls, structural in plan:
            check = cls()
            start = time.perf_counter()
            results, unmet = self._check(check)
            timings[check.name] = round(time.perf_counter() - start, 6)
            precondition_unmet = precondition_unmet or (unmet and not structural)
            for result in results:
                if self.verification_logger is not None:
                    self.verification_logger.log_check(
                        result.name, result.status, result.reason
                    )
            (structure_results if structural else command_results).extend(results)

        checks = structure_results + command_results
        own = structure_results if command == "validate" else command_results
        status = "fail" if aggregate_status(checks) == "fail" else aggregate_status(own)
        if status == "fail":
            exit_code = EXIT_FAIL
        elif precondition_unmet and command != "verify-all":
            exit_code = EXIT_PRECONDITION
        else:
            exit_code = EXIT_PASS
        inst = self.context.instance
        return Report(
            command=command,
            instance=inst.name,
            digest=inst.digest,
            status=status,
            exit_code=exit_code,
            checks=checks,
            timings=timings if self.timings else None,
        )

    def display(self, report: Report):
        """Print a table of check names and statuses to stderr."""
        table = Table(title=f"{report.command} on {report.instance}")
        table.add_column("Check")
        table.add_column("Status")
        table.add_column("Detail")
        for result in report.checks:
            style = STATUS_STYLES.get(result.status, "")
            detail = result.reason or ""
            if not detail and result.violations:
                detail = f"{len(result.violations)} violations"
            table.add_row(result.name, f"[{style}]{result.status}[/]", detail)
        self.console.print(table)
        style = STATUS_STYLES.get(report.status, "")
        self.console.print(
            f"[bold {style}]{report.status}[/] (exit {report.exit_code})"
        )
