from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

Status = Literal["pass", "fail", "inconclusive", "skipped"]


class Violation(BaseModel):
    """One failing axiom instance, e.g. a non-associating basis triple."""

    kind: str = Field(
        ..., description="Which law failed (associativity, leibniz, ...)"
    )
    where: List[str] = Field(
        default_factory=list, description="Basis ids / objects involved"
    )
    detail: Optional[str] = Field(None, description="Free-form extra information")


class ValidationReport(BaseModel):
    """Outcome of a structural validation; never raised, always returned."""

    subject: str
    checked: int = Field(0, description="Number of axiom instances examined")
    violations: List[Violation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, *where: str, detail: Optional[str] = None) -> None:
        self.violations.append(
            Violation(kind=kind, where=[str(w) for w in where], detail=detail)
        )

    def tick(self, n: int = 1) -> None:
        self.checked += n

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        self.checked += other.checked
        self.violations.extend(other.violations)
        return self


class SearchSettings(BaseModel):
    """Budget for the bounded searches over invertible elements."""

    exhaustive_limit: int = Field(
        1_000_000, gt=0, description="Enumerate exhaustively when p^dim is at most this"
    )
    sample_size: int = Field(10_000, gt=0, description="Random samples otherwise")
    seed: int = Field(0, description="Seed for sampling and generated objects")


class CheckResult(BaseModel):
    name: str
    status: Status
    reason: Optional[str] = None
    violations: List[Violation] = Field(default_factory=list)
    witnesses: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_validation(
        cls, name: str, report: ValidationReport, **witnesses
    ) -> "CheckResult":
        return cls(
            name=name,
            status="pass" if report.ok else "fail",
            violations=report.violations,
            witnesses={"checked": report.checked, **witnesses},
        )

    @classmethod
    def skipped(cls, name: str, reason: str) -> "CheckResult":
        return cls(name=name, status="skipped", reason=reason)


class Report(BaseModel):
    """Machine-readable result of one CLI command."""

    command: str
    instance: str
    digest: str = Field(..., description="sha256 of the canonical instance JSON")
    status: Status
    exit_code: int
    checks: List[CheckResult] = Field(default_factory=list)
    timings: Optional[Dict[str, float]] = None


class SummandRecord(BaseModel):
    idempotent: List[str] = Field(..., description="Coordinates in End(X)")
    rank: int = Field(..., description="Dimension of the right ideal e·End(X)")
    iso_class: int = Field(..., description="Index of the isomorphism class")
    primitive: Literal["yes", "inconclusive"] = "yes"


class CrossCheck(BaseModel):
    applicable: bool
    predicted: Optional[int] = None
    agrees: Optional[bool] = None
    reason: Optional[str] = None


class DecompositionReport(BaseModel):
    """Radical dimension, summands and the number of isomorphism classes."""

    object: str
    end_dim: int
    rad_dim: int
    summands: List[SummandRecord] = Field(default_factory=list)
    multiplicities: List[int] = Field(default_factory=list)
    nu: int
    nu_independent: Optional[int] = Field(
        None, description="Simple components of the centre of End/rad"
    )
    cross_checks: Dict[str, CrossCheck] = Field(default_factory=dict)
    details: Dict[str, Any] = Field(default_factory=dict)
