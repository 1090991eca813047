"""Shared, lazily computed state for the checks of one command run."""

from functools import cached_property
import logging
import random
from typing import Any, Dict, List, Optional, Tuple

from ..api.builder import Instance
from ..api.models import SearchSettings, ValidationReport
from ..categories.validation import validate_category, validate_triple
from ..center.center import CenterElement, is_separable
from ..characters.dual import CharacterGroup, Theta, character_group, theta
from ..crossed.crossed_triple import CrossedTriple
from ..elements.el_category import ElObject, generate_el_objects
from ..elements.functors import phi
from ..errors import PreconditionError
from ..exact import Scalar
from ..groups.action import (
    derived_identity_holds,
    validate_action,
    validate_factor_system,
)
from ..groups.finite_group import validate_group

logger = logging.getLogger(__name__)

STRUCTURE = ("triple", "group", "action", "factors")


class VerificationContext:
    """Everything the checks share: the instance, budgets and cached results.

    Attributes:
        instance: the built instance
        settings: search budget and seed
        generation: counts for generated objects and samples
        zeta: a primitive root overriding the one in the instance
    """

    def __init__(
        self,
        instance: Instance,
        settings: SearchSettings,
        generation: Dict[str, int],
        zeta: Optional[Scalar] = None,
    ):
        self.instance = instance
        self.settings = settings
        self.generation = generation
        self.zeta = zeta if zeta is not None else instance.zeta

    def rng(self, purpose: str) -> random.Random:
        """A generator seeded by the run seed and the purpose.

        Independent of check order.
        """
        return random.Random(f"{self.settings.seed}:{purpose}")

    # -- structure -----------------------------------------------------

    @cached_property
    def structure_reports(self) -> Dict[str, ValidationReport]:
        inst = self.instance
        reports: Dict[str, ValidationReport] = {}
        triple = validate_category(inst.triple.cat)
        if triple.ok:
            triple.merge(validate_triple(inst.triple))
        reports["triple"] = triple
        reports["group"] = validate_group(inst.group)
        if triple.ok and reports["group"].ok:
            reports["action"] = validate_action(inst.action)
        if "action" in reports and reports["action"].ok:
            factors = validate_factor_system(inst.factors)
            if factors.ok:
                factors.merge(derived_identity_holds(inst.factors))
            reports["factors"] = factors
        return reports

    def structure_ok(self, part: str) -> bool:
        report = self.structure_reports.get(part)
        return report is not None and report.ok

    # -- derived objects -------------------------------------------------

    @property
    def crossed(self) -> CrossedTriple:
        return self.instance.crossed

    @cached_property
    def separability(self) -> Optional[CenterElement]:
        return is_separable(self.instance.factors)

    @cached_property
    def characters(self) -> CharacterGroup:
        inst = self.instance
        return character_group(inst.group, inst.field, self.zeta)

    @cached_property
    def theta(self) -> Theta:
        return theta(self.crossed, self.characters)

    @cached_property
    def el_objects(self) -> List[ElObject]:
        """Requested objects of El(T), or generated ones when none were requested."""
        if self.instance.el_objects:
            return list(self.instance.el_objects)
        count = self.generation["el_objects"]
        return generate_el_objects(self.instance.triple, count, self.rng("el-objects"))

    @cached_property
    def crossed_el_objects(self) -> List[ElObject]:
        """Objects of El(TG): Φ of the El(T) objects plus generated ones."""
        ct = self.crossed
        images = [phi(ct, x) for x in self.el_objects]
        count = max(1, self.generation["el_objects"] // 2)
        rng = self.rng("crossed-el-objects")
        return images + generate_el_objects(ct.triple, count, rng, prefix="xi")

    def el_pairs(
        self, objects: List[ElObject], limit: Optional[int] = None
    ) -> List[Tuple[ElObject, ElObject]]:
        pairs = [(x, y) for x in objects for y in objects]
        if limit is not None and len(pairs) > limit:
            pairs = self.rng("pairs").sample(pairs, limit)
        return pairs

    # -- preconditions ---------------------------------------------------

    def unmet(self, requirement: str) -> Optional[str]:
        """Why `requirement` does not hold, or None when it does."""
        inst = self.instance
        if requirement in STRUCTURE:
            if self.structure_ok(requirement):
                return None
            return f"{requirement} does not validate"
        if requirement == "valid":
            for part in STRUCTURE:
                if not self.structure_ok(part):
                    return f"{part} does not validate"
            return None
        if requirement == "separable":
            return None if self.separability is not None else "action is not separable"
        if requirement == "abelian":
            if inst.group.is_abelian:
                return None
            return f"{inst.group.name} is not abelian"
        if requirement == "characters":
            try:
                self.characters
            except PreconditionError as e:
                return str(e)
            return None
        if requirement == "finite-field":
            return None if inst.field.is_prime else "needs a finite field"
        if requirement == "el-objects":
            if inst.el_objects_skipped:
                return inst.el_objects_skipped
            return None if self.el_objects else "no El objects requested or generated"
        if requirement == "sequences":
            return None if inst.sequences else "no almost split sequences requested"
        if requirement == "generators":
            return None if inst.generators else "no radical generators requested"
        raise ValueError(f"Unknown requirement: {requirement}")

    def summary(self) -> Dict[str, Any]:
        inst = self.instance
        return {
            "objects": list(inst.triple.objects),
            "group_order": len(inst.group),
            "field": str(inst.field),
        }
