"""Finite K-linear categories, their bimodules, differentiations and triples.

All morphism and bimodule spaces are given by bases; composition and the two
actions are stored as structure constants.  A structure table for a bilinear
map U(Y,Z) x V(X,Y) -> W(X,Z) is indexed ``table[j][i]`` with j running over
the basis of U and i over the basis of V; each entry is a sparse list of
``(k, coefficient)`` pairs in the basis of W.
"""

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import DimensionMismatch, InstanceError
from ..exact import FieldSpec, Mat, Scalar, Vector, vec_zero

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]
Key3 = Tuple[str, str, str]
Sparse = Tuple[Tuple[int, Scalar], ...]
Table = Tuple[Tuple[Sparse, ...], ...]


def to_sparse(v: Sequence[Scalar]) -> Sparse:
    return tuple((k, c) for k, c in enumerate(v) if c != 0)


def _freeze_table(
    tables: Mapping[Key3, Sequence[Sequence[Sequence[Scalar]]]]
) -> Dict[Key3, Table]:
    frozen = {}
    for key, table in tables.items():
        frozen[key] = tuple(tuple(to_sparse(w) for w in row) for row in table)
    return frozen


def bilinear(
    field: FieldSpec,
    table: Optional[Table],
    u: Sequence[Scalar],
    v: Sequence[Scalar],
    out_dim: int,
) -> Vector:
    """Evaluate a structure table on coordinate vectors u (outer) and v (inner)."""
    if table is None:
        return vec_zero(field, out_dim)
    acc = [0] * out_dim
    for j, uj in enumerate(u):
        if uj == 0:
            continue
        row = table[j]
        for i, vi in enumerate(v):
            if vi == 0:
                continue
            c = uj * vi
            for k, w in row[i]:
                acc[k] += c * w
    if field.is_prime:
        p = field.p
        return tuple(a % p for a in acc)
    return tuple(field.element(a) for a in acc)


class FinCat:
    """A K-category with finitely many objects and finite-dimensional hom spaces.

    Attributes:
        field: the base field
        objects: object ids in input order
        hom_basis: (X, Y) -> basis ids of A(X, Y); omitted pairs are zero
    """

    def __init__(
        self,
        field: FieldSpec,
        objects: Sequence[str],
        hom_basis: Mapping[Pair, Sequence[str]],
        comp: Mapping[Key3, Sequence[Sequence[Sequence[Scalar]]]],
        id_coords: Mapping[str, Sequence[Scalar]],
    ):
        self.field = field
        self.objects: Tuple[str, ...] = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise InstanceError("duplicate object ids")
        known = set(self.objects)
        self.hom_basis: Dict[Pair, Tuple[str, ...]] = {}
        for (X, Y), ids in hom_basis.items():
            if X not in known or Y not in known:
                raise InstanceError(
                    f"hom space ({X}, {Y}) refers to an unknown object"
                )
            if ids:
                self.hom_basis[(X, Y)] = tuple(ids)
        self._comp = _freeze_table(comp)
        for (X, Y, Z), table in self._comp.items():
            rows_ok = all(len(row) == self.dim(X, Y) for row in table)
            if len(table) != self.dim(Y, Z) or not rows_ok:
                raise DimensionMismatch(
                    f"composition table ({X}, {Y}, {Z}) has the wrong shape"
                )
        self._ids: Dict[str, Vector] = {}
        for X in self.objects:
            v = tuple(id_coords.get(X, ()))
            expected = self.dim(X, X)
            if len(v) != expected:
                raise DimensionMismatch(
                    f"identity of {X} has {len(v)} coordinates, expected {expected}"
                )
            self._ids[X] = v
        self._locator: Dict[str, Tuple[str, str, int]] = {}
        for (X, Y), ids in self.hom_basis.items():
            for i, name in enumerate(ids):
                self._locator.setdefault(name, (X, Y, i))

    def __repr__(self) -> str:
        objects = list(self.objects)
        return f"FinCat({self.field}, objects={objects}, dims={self.total_dim()})"

    # -- spaces ---------------------------------------------------------

    def dim(self, X: str, Y: str) -> int:
        return len(self.hom_basis.get((X, Y), ()))

    def basis(self, X: str, Y: str) -> Tuple[str, ...]:
        return self.hom_basis.get((X, Y), ())

    def total_dim(self) -> int:
        return sum(len(ids) for ids in self.hom_basis.values())

    def locate(self, name: str) -> Tuple[str, str, int]:
        """Source, target and index of a basis morphism id."""
        try:
            return self._locator[name]
        except KeyError:
            raise InstanceError(f"unknown basis morphism {name!r}")

    def zero(self, X: str, Y: str) -> Vector:
        return vec_zero(self.field, self.dim(X, Y))

    def unit(self, X: str, Y: str, i: int) -> Vector:
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.dim(X, Y)))

    def basis_vectors(self, X: str, Y: str) -> List[Vector]:
        return [self.unit(X, Y, i) for i in range(self.dim(X, Y))]

    def identity(self, X: str) -> Vector:
        return self._ids[X]

    # -- composition ----------------------------------------------------

    def table(self, X: str, Y: str, Z: str) -> Optional[Table]:
        return self._comp.get((X, Y, Z))

    def compose(
        self, X: str, Y: str, Z: str, b: Sequence[Scalar], a: Sequence[Scalar]
    ) -> Vector:
        """b∘a for a: X -> Y and b: Y -> Z."""
        table = self._comp.get((X, Y, Z))
        return bilinear(self.field, table, b, a, self.dim(X, Z))

    def compose_path(
        self, objects: Sequence[str], morphisms: Sequence[Sequence[Scalar]]
    ) -> Vector:
        """m_k ∘ ... ∘ m_1 along X_0 -> X_1 -> ... -> X_k."""
        acc = morphisms[0]
        for idx in range(1, len(morphisms)):
            acc = self.compose(
                objects[0], objects[idx], objects[idx + 1], morphisms[idx], acc
            )
        return acc

    def composition_tables(self) -> Dict[Key3, Table]:
        return dict(self._comp)


class Bimodule:
    """An A-bimodule B: element bases and the structure constants of b·x and x·a."""

    def __init__(
        self,
        base: FinCat,
        el_basis: Mapping[Pair, Sequence[str]],
        left: Mapping[Key3, Sequence[Sequence[Sequence[Scalar]]]],
        right: Mapping[Key3, Sequence[Sequence[Sequence[Scalar]]]],
    ):
        self.base = base
        self.field = base.field
        known = set(base.objects)
        self.el_basis: Dict[Pair, Tuple[str, ...]] = {}
        for (X, Y), ids in el_basis.items():
            if X not in known or Y not in known:
                raise InstanceError(
                    f"element space ({X}, {Y}) refers to an unknown object"
                )
            if ids:
                self.el_basis[(X, Y)] = tuple(ids)
        self._left = _freeze_table(left)
        self._right = _freeze_table(right)
        for (X, Y, Z), table in self._left.items():
            rows_ok = all(len(r) == self.dim(X, Y) for r in table)
            if len(table) != base.dim(Y, Z) or not rows_ok:
                raise DimensionMismatch(
                    f"left action table ({X}, {Y}, {Z}) has the wrong shape"
                )
        for (X, Y, Z), table in self._right.items():
            rows_ok = all(len(r) == base.dim(X, Y) for r in table)
            if len(table) != self.dim(Y, Z) or not rows_ok:
                raise DimensionMismatch(
                    f"right action table ({X}, {Y}, {Z}) has the wrong shape"
                )
        self._locator: Dict[str, Tuple[str, str, int]] = {}
        for (X, Y), ids in self.el_basis.items():
            for i, name in enumerate(ids):
                self._locator.setdefault(name, (X, Y, i))

    @classmethod
    def regular(cls, cat: FinCat) -> "Bimodule":
        """A itself, acted on by composition."""
        tables = cat.composition_tables()
        expanded = {
            k: [[_dense(w, cat.dim(k[0], k[2]), cat.field) for w in row] for row in t]
            for k, t in tables.items()
        }
        return cls(cat, cat.hom_basis, expanded, expanded)

    def dim(self, X: str, Y: str) -> int:
        return len(self.el_basis.get((X, Y), ()))

    def basis(self, X: str, Y: str) -> Tuple[str, ...]:
        return self.el_basis.get((X, Y), ())

    def locate(self, name: str) -> Tuple[str, str, int]:
        try:
            return self._locator[name]
        except KeyError:
            raise InstanceError(f"unknown bimodule basis element {name!r}")

    def zero(self, X: str, Y: str) -> Vector:
        return vec_zero(self.field, self.dim(X, Y))

    def unit(self, X: str, Y: str, i: int) -> Vector:
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.dim(X, Y)))

    def act_left(
        self, X: str, Y: str, Z: str, b: Sequence[Scalar], x: Sequence[Scalar]
    ) -> Vector:
        """b·x for b in A(Y, Z) and x in B(X, Y)."""
        table = self._left.get((X, Y, Z))
        return bilinear(self.field, table, b, x, self.dim(X, Z))

    def act_right(
        self, X: str, Y: str, Z: str, x: Sequence[Scalar], a: Sequence[Scalar]
    ) -> Vector:
        """x·a for x in B(Y, Z) and a in A(X, Y)."""
        table = self._right.get((X, Y, Z))
        return bilinear(self.field, table, x, a, self.dim(X, Z))

    def left_tables(self) -> Dict[Key3, Table]:
        return dict(self._left)

    def right_tables(self) -> Dict[Key3, Table]:
        return dict(self._right)


def _dense(w: Sparse, n: int, field: FieldSpec) -> Vector:
    out = [field.zero] * n
    for k, c in w:
        out[k] = c
    return tuple(out)


class Differentiation:
    """∂: A -> B as one matrix per object pair; omitted pairs are zero maps."""

    def __init__(self, bim: Bimodule, maps: Mapping[Pair, Mat]):
        self.bim = bim
        self.maps: Dict[Pair, Mat] = {}
        cat = bim.base
        for (X, Y), m in maps.items():
            expected = (bim.dim(X, Y), cat.dim(X, Y))
            if m.shape != expected:
                raise DimensionMismatch(
                    f"∂ on ({X}, {Y}) is {m.shape}, expected {expected}"
                )
            if not m.is_zero():
                self.maps[(X, Y)] = m

    @classmethod
    def zero(cls, bim: Bimodule) -> "Differentiation":
        return cls(bim, {})

    def matrix(self, X: str, Y: str) -> Mat:
        m = self.maps.get((X, Y))
        if m is None:
            bim = self.bim
            return Mat.zeros(bim.field, bim.dim(X, Y), bim.base.dim(X, Y))
        return m

    def apply(self, X: str, Y: str, a: Sequence[Scalar]) -> Vector:
        m = self.maps.get((X, Y))
        if m is None:
            return self.bim.zero(X, Y)
        return m.apply(a)

    @property
    def is_zero(self) -> bool:
        return not self.maps


class BimoduleTriple:
    """(A, B, ∂): a category, a bimodule over it and a differentiation."""

    def __init__(
        self, cat: FinCat, bim: Bimodule, diff: Differentiation, name: str = "T"
    ):
        if bim.base is not cat:
            raise InstanceError("bimodule is defined over a different category")
        if diff.bim is not bim:
            raise InstanceError("differentiation targets a different bimodule")
        self.cat = cat
        self.bim = bim
        self.diff = diff
        self.name = name

    @classmethod
    def principal(cls, cat: FinCat, name: str = "A") -> "BimoduleTriple":
        """(A, A, 0): its category of elements is the endomorphism category."""
        bim = Bimodule.regular(cat)
        return cls(cat, bim, Differentiation.zero(bim), name=name)

    @property
    def field(self) -> FieldSpec:
        return self.cat.field

    @property
    def objects(self) -> Tuple[str, ...]:
        return self.cat.objects

    def __repr__(self) -> str:
        return f"BimoduleTriple({self.name}, {self.cat!r})"


def object_pairs(cat: FinCat) -> Iterable[Pair]:
    for X in cat.objects:
        for Y in cat.objects:
            yield X, Y
