"""Exact linear algebra: echelon forms, solving, kernels, inverses, minimal relations.

Pivoting is deterministic: columns are scanned left to right and the first row
holding a nonzero entry in the current column becomes the pivot row.
"""

import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import DimensionMismatch, NotInvertibleError
from .field import FieldSpec, Scalar
from .matrix import Mat, Vector, is_zero_vector

logger = logging.getLogger(__name__)

Poly = Tuple[Scalar, ...]


def _rref_rows(
    field: FieldSpec, rows: List[List[Scalar]], ncols: int
) -> Tuple[List[List[Scalar]], List[int]]:
    """In-place Gauss-Jordan on a list of rows; returns (rows, pivot columns)."""
    pivots: List[int] = []
    r = 0
    nrows = len(rows)
    prime = field.is_prime
    p = field.p
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        if prime:
            rows[r] = [(v * inv) % p for v in rows[r]]
        else:
            rows[r] = [v * inv for v in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][c]
            if factor == 0:
                continue
            if prime:
                rows[i] = [(a - factor * b) % p for a, b in zip(rows[i], prow)]
            else:
                rows[i] = [a - factor * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(A: Mat) -> Tuple[Mat, Tuple[int, ...]]:
    """Reduced row echelon form and the pivot columns."""
    rows, pivots = _rref_rows(A.field, A.to_rows(), A.cols)
    return Mat(A.field, A.rows, A.cols, [v for r in rows for v in r]), tuple(pivots)


def rank(A: Mat) -> int:
    return len(rref(A)[1])


def solve(A: Mat, b: Mat) -> Optional[Mat]:
    """Some x with A·x = b, free variables set to zero; None when inconsistent."""
    A.field.check_same(b.field)
    if A.rows != b.rows:
        raise DimensionMismatch(f"solve: A is {A.shape}, b is {b.shape}")
    c, k = A.cols, b.cols
    aug = [list(A.row(i)) + list(b.row(i)) for i in range(A.rows)]
    rows, pivots = _rref_rows(A.field, aug, c + k)
    if any(pc >= c for pc in pivots):
        return None
    x = [[A.field.zero] * k for _ in range(c)]
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][c:]
    return Mat(A.field, c, k, [v for r in x for v in r])


def solve_vector(A: Mat, b: Sequence[Scalar]) -> Optional[Vector]:
    x = solve(A, Mat.column(A.field, tuple(b)))
    return None if x is None else x.entries


def kernel_vectors(A: Mat) -> List[Vector]:
    """Right null space, one vector per free column with a 1 in that column."""
    rows, pivots = _rref_rows(A.field, A.to_rows(), A.cols)
    field = A.field
    pivot_set = set(pivots)
    basis = []
    for f in range(A.cols):
        if f in pivot_set:
            continue
        x = [field.zero] * A.cols
        x[f] = field.one
        for i, pc in enumerate(pivots):
            x[pc] = field.neg(rows[i][f])
        basis.append(tuple(x))
    return basis


def kernel_basis(A: Mat) -> List[Mat]:
    """Basis of the right null space as column matrices; empty iff A is injective."""
    return [Mat.column(A.field, v) for v in kernel_vectors(A)]


def is_invertible(A: Mat) -> bool:
    if not A.is_square:
        raise DimensionMismatch(f"invertibility of non-square {A.shape} matrix")
    return rank(A) == A.rows


def inverse(A: Mat) -> Mat:
    if not A.is_square:
        raise DimensionMismatch(f"inverse of non-square {A.shape} matrix")
    n = A.rows
    ident = Mat.identity(A.field, n)
    aug = [list(A.row(i)) + list(ident.row(i)) for i in range(n)]
    rows, pivots = _rref_rows(A.field, aug, 2 * n)
    if tuple(pivots) != tuple(range(n)):
        raise NotInvertibleError("matrix is singular")
    return Mat(A.field, n, n, [v for r in rows for v in r[n:]])


def minimal_relation(field: FieldSpec, powers: Iterator[Vector], limit: int) -> Poly:
    """Monic polynomial from the first linear dependency in a Krylov sequence.

    `powers` yields v_0, v_1, ...; the result c_0 + c_1 t + ... + t^k is the
    first relation v_k = -(c_0 v_0 + ... + c_{k-1} v_{k-1}).
    """
    seen: List[Vector] = []
    for k, v in enumerate(powers):
        if k > limit:
            break
        if seen:
            A = Mat.from_columns(field, len(v), seen)
            coeffs = solve_vector(A, v)
        else:
            coeffs = () if is_zero_vector(v) else None
        if coeffs is not None:
            return tuple(field.neg(c) for c in coeffs) + (field.one,)
        seen.append(v)
    raise ArithmeticError("no linear relation found within the degree bound")


def min_poly(A: Mat) -> Poly:
    """Monic minimal polynomial of a square matrix, coefficients lowest degree first."""
    if not A.is_square:
        raise DimensionMismatch(f"minimal polynomial of non-square {A.shape} matrix")

    def krylov() -> Iterator[Vector]:
        P = Mat.identity(A.field, A.rows)
        while True:
            yield P.entries
            P = A @ P

    return minimal_relation(A.field, krylov(), A.rows)


class SubspaceBasis:
    """A subspace of K^n held by its reduced row echelon basis.

    The echelon rows are canonical, so two instances describe the same subspace
    exactly when their rows coincide.
    """

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(
        self, field: FieldSpec, ambient: int, vectors: Iterable[Sequence[Scalar]] = ()
    ):
        rows = [list(v) for v in vectors]
        for r in rows:
            if len(r) != ambient:
                raise DimensionMismatch(f"vector of length {len(r)} in K^{ambient}")
        rows, pivots = _rref_rows(field, rows, ambient)
        self.field = field
        self.ambient = ambient
        self.rows: Tuple[Vector, ...] = tuple(tuple(r) for r in rows[: len(pivots)])
        self.pivots: Tuple[int, ...] = tuple(pivots)

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "SubspaceBasis":
        return cls(field, n, Mat.identity(field, n).to_rows())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return self.dim

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.rows))

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient})"

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """Remainder of v after clearing the pivot coordinates."""
        f = self.field
        out = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = out[pc]
            if c != 0:
                out = [f.sub(a, f.mul(c, b)) for a, b in zip(out, row)]
        return tuple(out)

    def contains(self, v: Sequence[Scalar]) -> bool:
        return is_zero_vector(self.reduce(v))

    def coordinates(self, v: Sequence[Scalar]) -> Vector:
        """Coefficients of v in the echelon basis; raises if v is outside."""
        if not self.contains(v):
            raise ValueError("vector does not lie in the subspace")
        return tuple(v[pc] for pc in self.pivots)

    def combine(self, coords: Sequence[Scalar]) -> Vector:
        f = self.field
        out = [f.zero] * self.ambient
        for c, row in zip(coords, self.rows):
            if c != 0:
                out = [f.add(a, f.mul(c, b)) for a, b in zip(out, row)]
        return tuple(out)

    def is_subspace_of(self, other: "SubspaceBasis") -> bool:
        return all(other.contains(r) for r in self.rows)

    def plus(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return SubspaceBasis(self.field, self.ambient, self.rows + other.rows)

    def complement_positions(self) -> Tuple[int, ...]:
        pivot_set = set(self.pivots)
        return tuple(i for i in range(self.ambient) if i not in pivot_set)


def span(
    field: FieldSpec, ambient: int, vectors: Iterable[Sequence[Scalar]]
) -> SubspaceBasis:
    return SubspaceBasis(field, ambient, vectors)


def image_basis(A: Mat) -> SubspaceBasis:
    """Column space of A."""
    return SubspaceBasis(A.field, A.rows, [A.col(j) for j in range(A.cols)])


def linear_map(field: FieldSpec, in_dim: int, out_dim: int, fn) -> Mat:
    """Matrix of a linear function on coordinate tuples, built column by column."""
    columns = []
    for i in range(in_dim):
        e = tuple(field.one if k == i else field.zero for k in range(in_dim))
        image = tuple(fn(e))
        if len(image) != out_dim:
            raise DimensionMismatch(
                f"linear map produced length {len(image)}, expected {out_dim}"
            )
        columns.append(image)
    return Mat.from_columns(field, out_dim, columns)
