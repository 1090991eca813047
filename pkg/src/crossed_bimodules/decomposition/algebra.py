"""Finite-dimensional unital algebras given by structure constants.

The product table follows the category convention: ``table[j][i]`` holds
e_j · e_i as a sparse vector, j running over the left factor.
"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

from ..api.models import ValidationReport
from ..categories.additive import (
    AddObject,
    BlockLayout,
    Blocks,
    compose_blocks,
    corner_projector,
    hom_layout,
    identity_of,
)
from ..categories.fincat import BimoduleTriple, FinCat, Table, bilinear, to_sparse
from ..elements.el_category import ElHomSpace, ElObject
from ..errors import DimensionMismatch
from ..exact import (
    FieldSpec,
    Mat,
    SubspaceBasis,
    Vector,
    image_basis,
    kernel_vectors,
    linear_map,
    minimal_relation,
    span,
)
from ..exact import vec_add, vec_scale, vec_sub, vec_zero

logger = logging.getLogger(__name__)


class AlgebraPresentation:
    """An associative unital algebra over a prime field or Q.

    Attributes:
        field: the base field
        names: basis ids
        table: structure constants, table[j][i] = e_j · e_i
        unit: coordinates of 1
        ambient: optional (layout, basis) placing coordinates in a hom space
            of add A
    """

    __slots__ = ("field", "names", "table", "unit", "name", "ambient")

    def __init__(
        self,
        field: FieldSpec,
        names: Sequence[str],
        products: Sequence[Sequence[Sequence]],
        unit: Sequence,
        name: str = "A",
        ambient: Optional[Tuple[BlockLayout, SubspaceBasis]] = None,
    ):
        n = len(names)
        if len(products) != n or any(len(row) != n for row in products):
            raise DimensionMismatch(f"product table of {name} is not {n}x{n}")
        if len(unit) != n:
            raise DimensionMismatch(
                f"unit of {name} has {len(unit)} coordinates, expected {n}"
            )
        self.field = field
        self.names = tuple(names)
        self.table: Table = tuple(
            tuple(to_sparse(tuple(w)) for w in row) for row in products
        )
        self.unit: Vector = tuple(unit)
        self.name = name
        self.ambient = ambient

    @classmethod
    def from_products(
        cls,
        field: FieldSpec,
        names: Sequence[str],
        product: Callable[[int, int], Vector],
        unit: Sequence,
        name: str = "A",
    ) -> "AlgebraPresentation":
        n = len(names)
        products = [[product(j, i) for i in range(n)] for j in range(n)]
        return cls(field, names, products, unit, name)

    def __repr__(self) -> str:
        return f"AlgebraPresentation({self.name}, dim={self.dim}, {self.field})"

    @property
    def dim(self) -> int:
        return len(self.names)

    def zero(self) -> Vector:
        return vec_zero(self.field, self.dim)

    def basis_vector(self, i: int) -> Vector:
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.dim))

    def basis_vectors(self) -> List[Vector]:
        return [self.basis_vector(i) for i in range(self.dim)]

    # -- arithmetic -----------------------------------------------------

    def mul(self, u: Sequence, v: Sequence) -> Vector:
        return bilinear(self.field, self.table, u, v, self.dim)

    def add(self, u: Sequence, v: Sequence) -> Vector:
        return vec_add(self.field, u, v)

    def sub(self, u: Sequence, v: Sequence) -> Vector:
        return vec_sub(self.field, u, v)

    def scale(self, c, u: Sequence) -> Vector:
        return vec_scale(self.field, c, u)

    def power(self, u: Sequence, n: int, unit: Optional[Sequence] = None) -> Vector:
        """u^n by square-and-multiply; u^0 is `unit` (default 1)."""
        result = tuple(unit) if unit is not None else self.unit
        base = tuple(u)
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def left_matrix(self, u: Sequence) -> Mat:
        """Matrix of v |-> u·v."""
        return linear_map(self.field, self.dim, self.dim, lambda v: self.mul(u, v))

    def right_matrix(self, u: Sequence) -> Mat:
        return linear_map(self.field, self.dim, self.dim, lambda v: self.mul(v, u))

    def evaluate(
        self, coeffs: Sequence, u: Sequence, unit: Optional[Sequence] = None
    ) -> Vector:
        """c_0·1 + c_1·u + ... by Horner, coefficients lowest degree first."""
        one = tuple(unit) if unit is not None else self.unit
        acc = self.zero()
        for c in reversed(tuple(coeffs)):
            acc = self.add(self.mul(acc, u), self.scale(c, one))
        return acc

    def min_poly(self, u: Sequence, unit: Optional[Sequence] = None) -> Tuple:
        """Minimal polynomial of u in the corner with the given unit, lowest first."""
        one = tuple(unit) if unit is not None else self.unit

        def powers():
            p = one
            while True:
                yield p
                p = self.mul(p, u)

        return minimal_relation(self.field, powers(), self.dim)

    def is_idempotent(self, e: Sequence) -> bool:
        return self.mul(e, e) == tuple(e)

    # -- substructures --------------------------------------------------

    def center(self) -> SubspaceBasis:
        """{z : e_i z = z e_i for every basis e_i}."""
        n = self.dim
        basis = self.basis_vectors()

        def commutators(z):
            out: List = []
            for b in basis:
                out.extend(self.sub(self.mul(b, z), self.mul(z, b)))
            return out

        M = linear_map(self.field, n, n * n, commutators)
        return SubspaceBasis(self.field, n, kernel_vectors(M))

    def is_commutative(self) -> bool:
        e = self.basis_vector
        return all(
            self.mul(e(i), e(j)) == self.mul(e(j), e(i))
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def corner(self, e: Sequence) -> SubspaceBasis:
        """e·A·e."""
        products = [self.mul(self.mul(e, b), e) for b in self.basis_vectors()]
        return span(self.field, self.dim, products)

    def subalgebra(
        self,
        sub: SubspaceBasis,
        unit: Optional[Sequence] = None,
        name: Optional[str] = None,
    ) -> "AlgebraPresentation":
        """The algebra on a multiplicatively closed subspace, in its echelon basis.

        `unit` is the unit of the subalgebra (a corner e·A·e has unit e).
        """
        rows = sub.rows
        products = [[sub.coordinates(self.mul(b, a)) for a in rows] for b in rows]
        one = sub.coordinates(tuple(unit) if unit is not None else self.unit)
        names = [f"{self.name}.s{k}" for k in range(len(rows))]
        label = name or f"sub({self.name})"
        return AlgebraPresentation(self.field, names, products, one, label)

    def quotient(self, ideal: SubspaceBasis, name: Optional[str] = None) -> "Quotient":
        return Quotient(self, ideal, name)

    def permuted(self, perm: Sequence[int]) -> "AlgebraPresentation":
        """The same algebra with basis vector k taken to be old basis vector perm[k]."""
        n = self.dim
        e = self.basis_vector

        def to_new(v):
            return tuple(v[perm[k]] for k in range(n))

        products = [
            [to_new(self.mul(e(perm[j]), e(perm[i]))) for i in range(n)]
            for j in range(n)
        ]
        names = [self.names[p] for p in perm]
        return AlgebraPresentation(
            self.field, names, products, to_new(self.unit), f"{self.name}'"
        )

    # -- ambient --------------------------------------------------------

    def blocks(self, coords: Sequence) -> Blocks:
        if self.ambient is None:
            raise ValueError(f"{self.name} carries no block realization")
        layout, basis = self.ambient
        return layout.unflatten(basis.combine(coords))

    def coordinates(self, blocks: Blocks) -> Vector:
        if self.ambient is None:
            raise ValueError(f"{self.name} carries no block realization")
        layout, basis = self.ambient
        return basis.coordinates(layout.flatten(blocks))


class Quotient:
    """A/I with the canonical complement of the echelon pivots as basis.

    Attributes:
        source: the algebra A
        ideal: the two-sided ideal I
        algebra: A/I as an AlgebraPresentation
    """

    def __init__(
        self,
        source: AlgebraPresentation,
        ideal: SubspaceBasis,
        name: Optional[str] = None,
    ):
        self.source = source
        self.ideal = ideal
        self.positions = ideal.complement_positions()
        names = [source.names[k] for k in self.positions]
        lifted = [self.lift(self._unit(i)) for i in range(len(self.positions))]
        products = [[self.project(source.mul(b, a)) for a in lifted] for b in lifted]
        self.algebra = AlgebraPresentation(
            source.field,
            names,
            products,
            self.project(source.unit),
            name or f"{source.name}/rad",
        )

    def _unit(self, i: int) -> Vector:
        f = self.source.field
        return tuple(f.one if k == i else f.zero for k in range(len(self.positions)))

    def project(self, v: Sequence) -> Vector:
        r = self.ideal.reduce(v)
        return tuple(r[k] for k in self.positions)

    def lift(self, q: Sequence) -> Vector:
        f = self.source.field
        out = [f.zero] * self.source.dim
        for k, c in zip(self.positions, q):
            out[k] = c
        return tuple(out)

    def projection_matrix(self) -> Mat:
        return linear_map(
            self.source.field, self.source.dim, len(self.positions), self.project
        )


def validate_algebra(alg: AlgebraPresentation) -> ValidationReport:
    """Associativity on basis triples and the two unit laws."""
    report = ValidationReport(subject=f"algebra {alg.name}")
    basis = alg.basis_vectors()
    names = alg.names
    for i, a in enumerate(basis):
        report.tick(2)
        if alg.mul(alg.unit, a) != a or alg.mul(a, alg.unit) != a:
            report.add("unit", names[i])
        for j, b in enumerate(basis):
            ab = alg.mul(a, b)
            for k, c in enumerate(basis):
                report.tick()
                if alg.mul(ab, c) != alg.mul(a, alg.mul(b, c)):
                    report.add("associativity", names[i], names[j], names[k])
    return report


def endomorphism_algebra(
    cat: FinCat, X: AddObject, name: Optional[str] = None
) -> AlgebraPresentation:
    """End(X) in add A on the echelon basis of the corner e·A(X, X)·e."""
    layout = hom_layout(cat, X, X)
    corner = image_basis(corner_projector(cat, X, X))
    s = X.summands
    rows = [layout.unflatten(r) for r in corner.rows]

    def product(j, i):
        ji = compose_blocks(cat, s, s, s, rows[j], rows[i])
        return corner.coordinates(layout.flatten(ji))

    unit = corner.coordinates(layout.flatten(identity_of(cat, X)))
    label = name or f"End({X.label()})"
    names = [f"{label}#{k}" for k in range(corner.dim)]
    alg = AlgebraPresentation.from_products(cat.field, names, product, unit, label)
    alg.ambient = (layout, corner)
    logger.debug("End(%s) has dimension %d", X.label(), alg.dim)
    return alg


def hom_algebra(cat: FinCat, X: str) -> AlgebraPresentation:
    """A(X, X) in the category's own basis."""
    basis = cat.basis_vectors(X, X)
    return AlgebraPresentation.from_products(
        cat.field,
        cat.basis(X, X),
        lambda j, i: cat.compose(X, X, X, basis[j], basis[i]),
        cat.identity(X),
        f"A({X},{X})",
    )


def el_endomorphism_algebra(
    t: BimoduleTriple, x: ElObject, name: Optional[str] = None
) -> AlgebraPresentation:
    """End_{El(T)}(x) on the echelon basis of its hom space."""
    space = ElHomSpace(t, x, x)
    s = x.summands
    rows = space.basis_blocks()

    def product(j, i):
        return space.coordinates(compose_blocks(t.cat, s, s, s, rows[j], rows[i]))

    unit = space.coordinates(identity_of(t.cat, x.carrier))
    label = name or f"End({x.label()})"
    names = [f"{label}#{k}" for k in range(space.dim)]
    alg = AlgebraPresentation.from_products(t.field, names, product, unit, label)
    alg.ambient = (space.layout, space.basis)
    return alg
