from typing import List

from ..api.models import CheckResult
from .base_check import BaseCheck


class TripleCheck(BaseCheck):
    """Category axioms, bimodule axioms and the Leibniz rule."""

    name = "triple"

    def run(self, context) -> List[CheckResult]:
        t = context.instance.triple
        dims = {
            f"{X},{Y}": [t.cat.dim(X, Y), t.bim.dim(X, Y)]
            for X in t.objects
            for Y in t.objects
        }
        report = context.structure_reports["triple"]
        return [
            CheckResult.from_validation(
                self.name, report, field=str(t.field), dims=dims
            )
        ]


class GroupCheck(BaseCheck):
    name = "group"

    def run(self, context) -> List[CheckResult]:
        g = context.instance.group
        report = context.structure_reports["group"]
        abelian = report.ok and g.is_abelian
        return [
            CheckResult.from_validation(
                self.name, report, order=len(g), abelian=abelian
            )
        ]


class ActionCheck(BaseCheck):
    name = "action"
    requires = ("triple", "group")

    def run(self, context) -> List[CheckResult]:
        act = context.instance.action
        moved = {
            s: {X: act.obj(s, X) for X in act.triple.objects if act.obj(s, X) != X}
            for s in act.group.elements
        }
        report = context.structure_reports["action"]
        moved = {s: m for s, m in moved.items() if m}
        return [CheckResult.from_validation(self.name, report, moved=moved)]


class FactorSystemCheck(BaseCheck):
    """Cocycle identity, naturality, normalization, ∂λ = 0 and the derived identity."""

    name = "factor-system"
    requires = ("action",)

    def run(self, context) -> List[CheckResult]:
        report = context.structure_reports["factors"]
        return [CheckResult.from_validation(self.name, report)]
