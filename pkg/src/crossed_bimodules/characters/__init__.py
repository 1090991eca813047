from .dual import (
    CharacterGroup,
    Theta,
    character_group,
    check_elements_duality,
    check_idempotents,
    check_orthogonality,
    check_character_duality,
    double_crossed,
    find_root,
    hat_action,
    idempotents_e,
    theta,
    theta_el_object,
)

__all__ = [
    "CharacterGroup",
    "Theta",
    "character_group",
    "check_elements_duality",
    "check_idempotents",
    "check_orthogonality",
    "check_character_duality",
    "double_crossed",
    "find_root",
    "hat_action",
    "idempotents_e",
    "theta",
    "theta_el_object",
]
