from typing import List

from ..api.models import CheckResult, ValidationReport
from ..elements.el_category import ElHomSpace, induced_action, is_el_morphism
from ..elements.functors import (
    check_adjunction,
    check_adjunction_naturality,
    check_phi_fully_faithful,
    psi,
    psi_morphism,
    psi_summands,
    summand_witness,
)
from ..errors import PreconditionError, VerificationError
from ..groups.action import validate_action, validate_factor_system
from .base_check import BaseCheck, format_blocks


class ElHomCheck(BaseCheck):
    """Hom spaces of El(T): every basis vector solves a∘x = y∘a and ∂a = 0."""

    name = "el-hom"
    requires = ("triple", "el-objects")

    def run(self, context) -> List[CheckResult]:
        t = context.instance.triple
        report = ValidationReport(subject=self.name)
        dims = []
        for x, y in context.el_pairs(context.el_objects):
            space = ElHomSpace(t, x, y)
            dims.append([x.label(), y.label(), space.dim])
            for k, a in enumerate(space.basis_blocks()):
                report.tick()
                if not is_el_morphism(t, x, y, a):
                    report.add("not-a-morphism", x.label(), y.label(), k)
        return [CheckResult.from_validation(self.name, report, dims=dims)]


class InducedActionCheck(BaseCheck):
    """x -> x^σ and λ on the orbit closure of the El objects.

    They must form an action with a factor system.
    """

    name = "induced-action"
    requires = ("valid", "el-objects")
    cap = 32

    def run(self, context) -> List[CheckResult]:
        inst = context.instance
        objects = context.el_objects[: context.generation["el_objects"]]
        try:
            frag, act, lam = induced_action(
                inst.action, inst.factors, objects, cap=self.cap
            )
        except PreconditionError as e:
            return [CheckResult.skipped(self.name, str(e))]
        report = validate_action(act)
        if report.ok:
            report.merge(validate_factor_system(lam))
        return [
            CheckResult.from_validation(
                self.name, report, objects=list(frag.objects)
            )
        ]


class PhiCheck(BaseCheck):
    """Φ is fully faithful on pairs of El objects."""

    name = "phi"
    requires = ("valid", "el-objects")

    def run(self, context) -> List[CheckResult]:
        limit = context.generation["adjoint_samples"]
        pairs = context.el_pairs(context.el_objects, limit=limit)
        return [check_phi_fully_faithful(context.crossed, pairs, name=self.name)]


class PsiCheck(BaseCheck):
    """Ψξ lies in El(T) and Ψ sends El(TG) morphisms to El(T) morphisms."""

    name = "psi"
    requires = ("valid",)

    def run(self, context) -> List[CheckResult]:
        ct = context.crossed
        report = ValidationReport(subject=self.name)
        objects = context.crossed_el_objects
        carriers = {}
        for xi in objects:
            report.tick()
            image = psi(ct, xi)
            carriers[xi.label()] = list(psi_summands(ct, xi.summands))
            if image.summands != psi_summands(ct, xi.summands):
                report.add("carrier", xi.label())
        limit = context.generation["adjoint_samples"]
        for xi, eta in context.el_pairs(objects, limit=limit):
            for k, a in enumerate(ElHomSpace(ct.triple, xi, eta).basis_blocks()):
                report.tick()
                image = psi_morphism(ct, xi.summands, eta.summands, a)
                if not is_el_morphism(ct.base, psi(ct, xi), psi(ct, eta), image):
                    report.add("not-a-morphism", xi.label(), eta.label(), k)
        return [CheckResult.from_validation(self.name, report, carriers=carriers)]


class AdjunctionCheck(BaseCheck):
    """Φ ⊣ Ψ: the hom bijection and its naturality on sampled objects."""

    name = "adjunction"
    requires = ("valid", "el-objects")

    def run(self, context) -> List[CheckResult]:
        ct = context.crossed
        limit = context.generation["adjoint_samples"]
        xs = context.el_objects
        etas = context.crossed_el_objects
        pairs = [(x, eta) for x in xs for eta in etas]
        if len(pairs) > limit:
            pairs = context.rng("adjunction").sample(pairs, limit)
        results = [
            check_adjunction(ct, x, eta, name=f"{self.name}:{x.label()},{eta.label()}")
            for x, eta in pairs
        ]
        if len(xs) > 1 and len(etas) > 1:
            results.append(
                check_adjunction_naturality(
                    ct,
                    xs[0],
                    xs[1],
                    etas[0],
                    etas[1],
                    name=f"{self.name}-naturality",
                )
            )
        return results


class SummandCheck(BaseCheck):
    """With a separable action every ξ is a direct summand of ΦΨξ."""

    name = "summand"
    requires = ("valid", "separable")

    def run(self, context) -> List[CheckResult]:
        ct = context.crossed
        alpha = context.separability.as_dict()
        field = ct.base.field
        results = []
        for xi in context.crossed_el_objects:
            label = f"{self.name}:{xi.label()}"
            try:
                iota, pi = summand_witness(ct, xi, alpha)
            except PreconditionError as e:
                results.append(CheckResult.skipped(label, str(e)))
                continue
            except VerificationError as e:
                results.append(
                    CheckResult(
                        name=label, status="fail", reason=str(e), witnesses=e.instance
                    )
                )
                continue
            results.append(
                CheckResult(
                    name=label,
                    status="pass",
                    witnesses={
                        "iota": format_blocks(field, iota),
                        "pi": format_blocks(field, pi),
                    },
                )
            )
        return results
