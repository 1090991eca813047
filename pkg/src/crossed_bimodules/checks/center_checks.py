from typing import List

from ..api.models import CheckResult
from ..center.center import (
    check_center_action,
    check_center_invariants,
    check_separability_witness,
    check_subgroup_heredity,
)
from .base_check import BaseCheck


class CenterCheck(BaseCheck):
    """G acts on Z(T) by ring automorphisms and tr lands in Z(T)^G."""

    name = "center"
    requires = ("valid",)

    def run(self, context) -> List[CheckResult]:
        return [check_center_action(context.instance.factors, name=self.name)]


class CenterInvariantsCheck(BaseCheck):
    name = "center-invariants"
    requires = ("valid",)

    def run(self, context) -> List[CheckResult]:
        return [check_center_invariants(context.crossed, name=self.name)]


class SeparabilityCheck(BaseCheck):
    """A witness α with tr α = 1 and the separability element it induces in ZG ⊗ ZG."""

    name = "separability"
    requires = ("valid", "separable")

    def run(self, context) -> List[CheckResult]:
        alpha = context.separability
        factors = context.instance.factors
        result = check_separability_witness(factors, alpha, name=self.name)
        result.witnesses["alpha"] = alpha.to_json()
        return [result]


class SubgroupHeredityCheck(BaseCheck):
    """Separability passes to every subgroup."""

    name = "heredity"
    requires = ("valid", "separable")

    def run(self, context) -> List[CheckResult]:
        inst = context.instance
        subgroups = [h.elements for h in inst.subgroups] or None
        alpha = context.separability
        return [
            check_subgroup_heredity(inst.factors, alpha, subgroups, name=self.name)
        ]
