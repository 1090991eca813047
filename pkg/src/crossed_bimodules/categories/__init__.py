from .additive import (
    AddMorphism,
    AddObject,
    BlockLayout,
    Blocks,
    act_left_blocks,
    act_right_blocks,
    add_compose,
    add_identity,
    compose_blocks,
    diff_blocks,
    identity_blocks,
    identity_of,
    invert_add,
    invert_morphism,
    split_epi,
    split_idempotent,
    split_mono,
)
from .bifunctor import Bifunctor, identity_bifunctor, is_equivalence, validate_bifunctor
from .double import double_bimodule
from .fincat import Bimodule, BimoduleTriple, Differentiation, FinCat
from .karoubi import KaroubiSubcategory, corner_dimension, karoubi_subcategory
from .search import SearchOutcome, find_invertible
from .validation import validate_bimodule, validate_category, validate_triple

__all__ = [
    "AddMorphism",
    "AddObject",
    "Bifunctor",
    "Bimodule",
    "BimoduleTriple",
    "BlockLayout",
    "Blocks",
    "Differentiation",
    "FinCat",
    "KaroubiSubcategory",
    "SearchOutcome",
    "act_left_blocks",
    "act_right_blocks",
    "add_compose",
    "add_identity",
    "compose_blocks",
    "corner_dimension",
    "diff_blocks",
    "double_bimodule",
    "find_invertible",
    "identity_bifunctor",
    "identity_blocks",
    "identity_of",
    "invert_add",
    "invert_morphism",
    "is_equivalence",
    "karoubi_subcategory",
    "split_epi",
    "split_idempotent",
    "split_mono",
    "validate_bifunctor",
    "validate_bimodule",
    "validate_category",
    "validate_triple",
]
