from .el_category import (
    ElFragment,
    ElHomSpace,
    ElMorphism,
    ElObject,
    act_el_object,
    el_hom_basis,
    el_isomorphic,
    el_object,
    generate_el_objects,
    induced_action,
    is_el_morphism,
)
from .functors import (
    adjoint_backward,
    adjoint_forward,
    check_adjunction,
    check_adjunction_naturality,
    check_phi_fully_faithful,
    phi,
    phi_morphism,
    psi,
    psi_morphism,
    summand_witness,
)

__all__ = [
    "ElFragment",
    "ElHomSpace",
    "ElMorphism",
    "ElObject",
    "act_el_object",
    "adjoint_backward",
    "adjoint_forward",
    "check_adjunction",
    "check_adjunction_naturality",
    "check_phi_fully_faithful",
    "el_hom_basis",
    "el_isomorphic",
    "el_object",
    "generate_el_objects",
    "induced_action",
    "is_el_morphism",
    "phi",
    "phi_morphism",
    "psi",
    "psi_morphism",
    "summand_witness",
]
