from fractions import Fraction

import pytest

from crossed_bimodules.errors import (
    DimensionMismatch,
    InstanceError,
    NotInvertibleError,
)
from crossed_bimodules.exact import (
    FieldSpec,
    Mat,
    SubspaceBasis,
    inverse,
    is_invertible,
    kernel_vectors,
    min_poly,
    rank,
    solve_vector,
    span,
)

F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
Q = FieldSpec.rational()


def test_field_construction():
    assert str(F5) == "F_5"
    assert str(Q) == "Q"
    assert F5.characteristic == 5 and Q.characteristic == 0
    with pytest.raises(InstanceError):
        FieldSpec.prime(4)
    with pytest.raises(InstanceError):
        FieldSpec.prime(1)


def test_scalar_parsing():
    assert F5.parse("2/3") == 4
    assert F5.parse("-1") == 4
    assert Q.parse("2/3") == Fraction(2, 3)
    assert F3.element(7) == 1
    with pytest.raises(InstanceError):
        F3.parse("1/3")
    with pytest.raises(InstanceError):
        Q.parse("two")


def test_field_arithmetic():
    assert F5.inv(2) == 3
    assert F5.mul(4, 4) == 1
    assert F5.pow(2, -1) == 3
    assert F3.neg(1) == 2
    assert Q.inv(Fraction(2, 3)) == Fraction(3, 2)
    assert F5.order_of_unit(2) == 4
    with pytest.raises(NotInvertibleError):
        F3.inv(0)


def test_matrix_products():
    A = Mat.from_rows(F3, [[1, 2], [0, 1]])
    B = Mat.from_rows(F3, [[1, 1], [0, 1]])
    assert (A @ B).to_rows() == [[1, 0], [0, 1]]
    assert A.apply((1, 1)) == (0, 1)
    assert A.power(3) == Mat.identity(F3, 2)
    assert A.transpose().to_rows() == [[1, 0], [2, 1]]
    with pytest.raises(DimensionMismatch):
        Mat.from_rows(F3, [[1, 2], [1]])
    with pytest.raises(AttributeError):
        A.rows = 3


def test_rank_inverse_and_kernel():
    A = Mat.from_rows(F5, [[1, 2, 3], [2, 4, 1], [0, 1, 1]])
    assert rank(A) == 2
    assert not is_invertible(A)
    for v in kernel_vectors(A):
        assert A.apply(v) == (0, 0, 0)
    with pytest.raises(NotInvertibleError):
        inverse(A)
    B = Mat.from_rows(Q, [[2, 1], [1, 1]])
    assert inverse(B).to_rows() == [[1, -1], [-1, 2]]


def test_solve_vector():
    A = Mat.from_rows(F3, [[1, 1], [0, 1]])
    x = solve_vector(A, (2, 1))
    assert A.apply(x) == (2, 1)
    assert solve_vector(Mat.from_rows(F3, [[1], [1]]), (1, 0)) is None


def test_subspaces_are_canonical():
    U = span(F3, 3, [(1, 1, 0), (0, 1, 1)])
    V = span(F3, 3, [(1, 0, 2), (1, 1, 0)])
    assert U == V
    assert U.dim == 2
    assert U.contains((1, 0, 2))
    assert not U.contains((1, 0, 0))
    assert U.combine(U.coordinates((1, 0, 2))) == (1, 0, 2)
    assert SubspaceBasis.full(F3, 3).dim == 3
    assert span(F3, 3, []).is_subspace_of(U)


def test_minimal_polynomial():
    # x^2 + 1 over F_3 is irreducible
    J = Mat.from_rows(F3, [[0, 2], [1, 0]])
    assert min_poly(J) == (1, 0, 1)
    assert min_poly(Mat.identity(F5, 3)) == (4, 1)
