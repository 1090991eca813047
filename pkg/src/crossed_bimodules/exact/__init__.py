from .field import PRIME, RATIONAL, FieldSpec, Scalar
from .linalg import (
    SubspaceBasis,
    image_basis,
    inverse,
    is_invertible,
    kernel_basis,
    kernel_vectors,
    linear_map,
    min_poly,
    minimal_relation,
    rank,
    rref,
    solve,
    solve_vector,
    span,
)
from .matrix import (
    Mat,
    Vector,
    is_zero_vector,
    unit_vector,
    vec_add,
    vec_axpy,
    vec_scale,
    vec_sub,
    vec_zero,
)

__all__ = [
    "PRIME",
    "RATIONAL",
    "FieldSpec",
    "Scalar",
    "Mat",
    "Vector",
    "SubspaceBasis",
    "image_basis",
    "inverse",
    "is_invertible",
    "is_zero_vector",
    "kernel_basis",
    "kernel_vectors",
    "linear_map",
    "min_poly",
    "minimal_relation",
    "rank",
    "rref",
    "solve",
    "solve_vector",
    "span",
    "unit_vector",
    "vec_add",
    "vec_axpy",
    "vec_scale",
    "vec_sub",
    "vec_zero",
]
