from typing import List

from ..api.models import CheckResult
from ..characters.dual import check_character_duality, check_elements_duality
from .base_check import BaseCheck


class CharacterDualityCheck(BaseCheck):
    """For abelian G with enough roots of unity: add T ≃ add TGĜ through Θ."""

    name = "character-duality"
    requires = ("valid", "abelian", "characters")

    def run(self, context) -> List[CheckResult]:
        return check_character_duality(
            context.crossed, context.characters, context.settings, name=self.name
        )


class ElementsDualityCheck(BaseCheck):
    name = "elements-duality"
    requires = ("valid", "abelian", "characters", "el-objects")
    max_objects = 4

    def run(self, context) -> List[CheckResult]:
        objects = context.el_objects[: self.max_objects]
        return [
            check_elements_duality(
                context.crossed,
                context.characters,
                objects,
                name=self.name,
                th=context.theta,
            )
        ]
