from .algebra import (
    AlgebraPresentation,
    Quotient,
    el_endomorphism_algebra,
    endomorphism_algebra,
    hom_algebra,
    validate_algebra,
)
from .almost_split import (
    Arrow,
    check_almost_split,
    check_radical_generators,
    embed_arrows,
    is_almost_split_sequence,
    is_left_almost_split,
    is_right_almost_split,
)
from .idempotents import (
    UnitDecomposition,
    central_idempotents,
    count_simple_components,
    lift_idempotents,
    primitive_idempotents,
)
from .krull_schmidt import (
    check_uniqueness,
    decompose_algebra,
    el_decompose,
    krull_schmidt,
)
from .radical import (
    Radicals,
    nilpotency_index,
    radical,
    radical_category,
    verify_radical,
)
from .reduction import (
    CocycleReduction,
    Stabilizer,
    check_free_orbit_indecomposable,
    check_crossed_radical,
    check_stabilizer_reduction,
    check_residue_center,
    check_reduction_isomorphism,
    nu,
    reduce_cocycle,
    stabilizer,
)

__all__ = [
    "AlgebraPresentation",
    "Arrow",
    "CocycleReduction",
    "Quotient",
    "Radicals",
    "Stabilizer",
    "UnitDecomposition",
    "central_idempotents",
    "check_almost_split",
    "check_free_orbit_indecomposable",
    "check_radical_generators",
    "check_crossed_radical",
    "check_stabilizer_reduction",
    "check_residue_center",
    "check_reduction_isomorphism",
    "check_uniqueness",
    "count_simple_components",
    "decompose_algebra",
    "el_decompose",
    "el_endomorphism_algebra",
    "embed_arrows",
    "endomorphism_algebra",
    "hom_algebra",
    "is_almost_split_sequence",
    "is_left_almost_split",
    "is_right_almost_split",
    "krull_schmidt",
    "lift_idempotents",
    "nilpotency_index",
    "nu",
    "primitive_idempotents",
    "radical",
    "radical_category",
    "reduce_cocycle",
    "stabilizer",
    "validate_algebra",
    "verify_radical",
]
