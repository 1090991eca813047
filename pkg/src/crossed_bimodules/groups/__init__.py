from .action import (
    FactorSystem,
    GroupAction,
    derived_identity_holds,
    perturb_factor_system,
    validate_action,
    validate_factor_system,
)
from .finite_group import FiniteGroup, validate_group

__all__ = [
    "FactorSystem",
    "FiniteGroup",
    "GroupAction",
    "derived_identity_holds",
    "perturb_factor_system",
    "validate_action",
    "validate_factor_system",
    "validate_group",
]
