from typing import List

from ..api.builder import build_instance, triple_to_instance
from ..api.models import CheckResult, ValidationReport
from ..api.schema import parse_instance
from ..categories.validation import validate_category, validate_triple
from ..crossed.crossed_triple import build_crossed, check_associativity
from ..errors import CrossedBimoduleError, PreconditionError
from ..groups.action import perturb_factor_system, validate_factor_system
from .base_check import BaseCheck


class CrossedTripleCheck(BaseCheck):
    """TG is a bimodule triple, and its instance file parses back to a valid triple."""

    name = "crossed-triple"
    requires = ("action",)

    def run(self, context) -> List[CheckResult]:
        inst = context.instance
        ct = context.crossed
        report = check_associativity(ct)
        data = triple_to_instance(ct.triple, name=f"{inst.name}-crossed")
        if report.ok:
            report.tick()
            try:
                rebuilt = build_instance(parse_instance(data)).triple
                again = validate_category(rebuilt.cat)
                if again.ok:
                    again.merge(validate_triple(rebuilt))
                if not again.ok:
                    detail = f"{len(again.violations)} violations after re-parsing"
                    report.add("round-trip", detail=detail)
            except CrossedBimoduleError as e:
                report.add("round-trip", detail=str(e))
        objs = ct.base.objects
        dims = {f"{X},{Y}": ct.cat.dim(X, Y) for X in objs for Y in objs}
        self.logger.info(f"{ct.triple.name}: {ct.cat.total_dim()} basis morphisms")
        return [
            CheckResult.from_validation(self.name, report, dims=dims, instance=data)
        ]


class CocycleAssociativityCheck(BaseCheck):
    """TG is associative exactly when λ is a factor system.

    Tried on λ itself and on random perturbations of it.
    """

    name = "cocycle-associativity"
    requires = ("action",)

    def run(self, context) -> List[CheckResult]:
        inst = context.instance
        rng = context.rng("perturbations")
        report = ValidationReport(subject=self.name)
        candidates = [("given", inst.factors)]
        try:
            for k in range(context.generation["perturbations"]):
                lam, key, c = perturb_factor_system(inst.factors, rng)
                candidates.append((f"{','.join(key)}*{inst.field.format(c)}", lam))
        except PreconditionError as e:
            return [CheckResult.skipped(self.name, str(e))]
        cocycles = 0
        for label, lam in candidates:
            report.tick()
            is_cocycle = validate_factor_system(lam).ok
            crossed = build_crossed(inst.triple, inst.action, lam)
            associative = check_associativity(crossed).ok
            cocycles += is_cocycle
            if is_cocycle != associative:
                detail = f"cocycle {is_cocycle}, associative {associative}"
                report.add("equivalence", label, detail=detail)
        return [
            CheckResult.from_validation(
                self.name, report, candidates=len(candidates), cocycles=cocycles
            )
        ]
