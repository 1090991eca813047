from .center import (
    CenterElement,
    CenterLayout,
    center_act,
    center_basis,
    center_one,
    center_product,
    center_span,
    check_center_action,
    check_separability_witness,
    check_center_invariants,
    check_separability_element,
    check_subgroup_heredity,
    invariant_basis,
    is_central,
    is_separable,
    separability_element,
    trace,
)

__all__ = [
    "CenterElement",
    "CenterLayout",
    "center_act",
    "center_basis",
    "center_one",
    "center_product",
    "center_span",
    "check_center_action",
    "check_separability_witness",
    "check_center_invariants",
    "check_separability_element",
    "check_subgroup_heredity",
    "invariant_basis",
    "is_central",
    "is_separable",
    "separability_element",
    "trace",
]
