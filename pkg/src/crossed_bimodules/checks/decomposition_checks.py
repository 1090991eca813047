from typing import List

from ..api.models import CheckResult, DecompositionReport
from ..categories.additive import AddObject
from ..decomposition.algebra import endomorphism_algebra
from ..decomposition.almost_split import check_almost_split, check_radical_generators
from ..decomposition.krull_schmidt import check_uniqueness, el_decompose, krull_schmidt
from ..decomposition.radical import radical, radical_category, verify_radical
from ..decomposition.reduction import (
    check_crossed_radical,
    check_free_orbit_indecomposable,
    check_reduction_isomorphism,
    check_residue_center,
    check_stabilizer_reduction,
    nu,
    reduce_cocycle,
    stabilizer,
)
from ..elements.functors import phi
from ..errors import PreconditionError, VerificationError
from .base_check import BaseCheck


def decomposition_result(name: str, dec: DecompositionReport) -> CheckResult:
    primitive = all(s.primitive == "yes" for s in dec.summands)
    conclusive = dec.details.get("iso_search_conclusive", True) and primitive
    return CheckResult(
        name=name,
        status="pass" if conclusive else "inconclusive",
        reason=(
            None
            if conclusive
            else "primitivity or isomorphism search undecided within the budget"
        ),
        witnesses=dec.model_dump(),
    )


class RadicalCheck(BaseCheck):
    """rad of the base and the crossed category.

    Each is post-verified on End of the sum of all objects.
    """

    name = "radical"
    requires = ("valid",)

    def run(self, context) -> List[CheckResult]:
        results = []
        cats = (("base", context.instance.triple.cat), ("crossed", context.crossed.cat))
        for label, cat in cats:
            alg = endomorphism_algebra(cat, AddObject(tuple(cat.objects)))
            report = verify_radical(alg, radical(alg, verify=False))
            rad = radical_category(cat)
            dims = {f"{X},{Y}": sub.dim for (X, Y), sub in rad.items()}
            results.append(
                CheckResult.from_validation(f"{self.name}:{label}", report, dims=dims)
            )
        return results


class CrossedRadicalCheck(BaseCheck):
    name = "crossed-radical"
    requires = ("valid", "separable")

    def run(self, context) -> List[CheckResult]:
        return [check_crossed_radical(context.crossed, name=self.name)]


class KrullSchmidtCheck(BaseCheck):
    """Decompose each requested object of A and AG, then again on a permuted basis."""

    name = "krull-schmidt"
    requires = ("valid",)

    def run(self, context) -> List[CheckResult]:
        inst = context.instance
        results = []
        for label, cat in (("base", inst.triple.cat), ("crossed", context.crossed.cat)):
            for X in inst.requested_objects:
                obj = AddObject.of(X)
                dec = krull_schmidt(cat, obj, context.settings, name=X)
                results.append(decomposition_result(f"{self.name}:{label}:{X}", dec))
                results.append(
                    check_uniqueness(
                        endomorphism_algebra(cat, obj),
                        context.settings,
                        name=f"{self.name}-uniqueness:{label}:{X}",
                    )
                )
        return results


class ElDecomposeCheck(BaseCheck):
    """Decompose x[1] = Φx in El(TG) for the requested El objects."""

    name = "el-decompose"
    requires = ("valid", "el-objects")

    def run(self, context) -> List[CheckResult]:
        ct = context.crossed
        results = []
        for x in context.el_objects:
            dec = el_decompose(ct.triple, phi(ct, x), context.settings)
            results.append(decomposition_result(f"{self.name}:{x.label()}", dec))
        return results


class NuCheck(BaseCheck):
    """ν_G(X) for each requested object, with the closed-form predictions that apply."""

    name = "nu"
    requires = ("valid", "finite-field")

    def run(self, context) -> List[CheckResult]:
        ct = context.crossed
        results = []
        for X in context.instance.requested_objects:
            label = f"{self.name}:{X}"
            try:
                dec = nu(ct, X, context.settings)
            except VerificationError as e:
                results.append(
                    CheckResult(
                        name=label, status="fail", reason=str(e), witnesses=e.instance
                    )
                )
                continue
            results.append(decomposition_result(label, dec))
        return results


class StabilizerReductionCheck(BaseCheck):
    """Reduction of AG(X, X) to the stabilizer of X and on to the residue ring."""

    name = "stabilizer-reduction"
    requires = ("valid",)

    def run(self, context) -> List[CheckResult]:
        ct = context.crossed
        settings = context.settings
        results = []
        for X in context.instance.requested_objects:
            results.append(
                check_stabilizer_reduction(ct, X, settings, name=f"{self.name}:{X}")
            )
            results.append(
                check_free_orbit_indecomposable(ct, X, settings, name=f"free-orbit:{X}")
            )
            try:
                red = reduce_cocycle(ct, stabilizer(ct.action, X, settings))
            except PreconditionError as e:
                results.append(CheckResult.skipped(f"cocycle-reduction:{X}", str(e)))
                continue
            results.append(
                CheckResult.from_validation(
                    f"cocycle-reduction:{X}",
                    red.report,
                    stabilizer=list(red.subgroup.elements),
                )
            )
            results.append(
                check_reduction_isomorphism(
                    ct, red, name=f"reduced-crossed-algebra:{X}"
                )
            )
            results.append(check_residue_center(red, name=f"residue-center:{X}"))
        return results


class AlmostSplitCheck(BaseCheck):
    """Requested almost split sequences of A, and their images in AG."""

    name = "almost-split"
    requires = ("valid", "sequences")

    def run(self, context) -> List[CheckResult]:
        results = []
        for k, (a, b) in enumerate(context.instance.sequences):
            results.extend(
                check_almost_split(context.crossed, a, b, name=f"{self.name}:{k}")
            )
        return results


class RadicalGeneratorsCheck(BaseCheck):
    """Generators of rad(X, _) or rad(_, X) in A still generate after a |-> a[1]."""

    name = "radical-generators"
    requires = ("valid", "generators")

    def run(self, context) -> List[CheckResult]:
        return [
            check_radical_generators(
                context.crossed, X, arrows, side, name=f"{self.name}:{X}:{side}"
            )
            for X, side, arrows in context.instance.generators
        ]
