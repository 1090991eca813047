"""The additive hull add A: objects are matrix idempotents over base object lists.

A block matrix from an object with summands (X_1, ..., X_m) to one with summands
(Y_1, ..., Y_n) is an n x m grid whose entry (i, j) is a coordinate vector in
A(X_j, Y_i) (morphisms) or B(X_j, Y_i) (bimodule elements).
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from ..errors import DimensionMismatch, NotAMorphismError
from ..exact import (
    FieldSpec,
    Mat,
    Scalar,
    Vector,
    is_zero_vector,
    linear_map,
    solve_vector,
    vec_add,
    vec_scale,
    vec_sub,
)
from .fincat import Bimodule, Differentiation, FinCat

logger = logging.getLogger(__name__)

Blocks = Tuple[Tuple[Vector, ...], ...]
DimFn = Callable[[str, str], int]


class BlockLayout:
    """Flat coordinates for block matrices between two summand lists.

    Entries are laid out row-major: (0,0), (0,1), ..., (1,0), ...
    """

    def __init__(self, dim: DimFn, src: Sequence[str], dst: Sequence[str]):
        self.src = tuple(src)
        self.dst = tuple(dst)
        self.sizes = [[dim(X, Y) for X in self.src] for Y in self.dst]
        self.offsets: List[List[int]] = []
        pos = 0
        for row in self.sizes:
            offs = []
            for size in row:
                offs.append(pos)
                pos += size
            self.offsets.append(offs)
        self.dim = pos

    def flatten(self, blocks: Blocks) -> Vector:
        n, m = len(self.dst), len(self.src)
        if len(blocks) != n or any(len(r) != m for r in blocks):
            raise DimensionMismatch(f"block matrix is not {n}x{m}")
        out: List[Scalar] = []
        for i, row in enumerate(blocks):
            for j, entry in enumerate(row):
                if len(entry) != self.sizes[i][j]:
                    raise DimensionMismatch(
                        f"block ({i}, {j}) has {len(entry)} coordinates, "
                        f"expected {self.sizes[i][j]}"
                    )
                out.extend(entry)
        return tuple(out)

    def unflatten(self, v: Sequence[Scalar]) -> Blocks:
        if len(v) != self.dim:
            raise DimensionMismatch(
                f"flat vector of length {len(v)}, expected {self.dim}"
            )

        def entry(i, j):
            start = self.offsets[i][j]
            return tuple(v[start : start + self.sizes[i][j]])

        return tuple(
            tuple(entry(i, j) for j in range(len(self.src)))
            for i in range(len(self.dst))
        )


def zero_blocks(
    field: FieldSpec, dim: DimFn, src: Sequence[str], dst: Sequence[str]
) -> Blocks:
    return tuple(tuple((field.zero,) * dim(X, Y) for X in src) for Y in dst)


def identity_blocks(cat: FinCat, summands: Sequence[str]) -> Blocks:
    return tuple(
        tuple(
            cat.identity(X) if i == j else cat.zero(X, Y)
            for j, X in enumerate(summands)
        )
        for i, Y in enumerate(summands)
    )


def add_blocks(field: FieldSpec, f: Blocks, g: Blocks) -> Blocks:
    return tuple(
        tuple(vec_add(field, a, b) for a, b in zip(rf, rg)) for rf, rg in zip(f, g)
    )


def sub_blocks(field: FieldSpec, f: Blocks, g: Blocks) -> Blocks:
    return tuple(
        tuple(vec_sub(field, a, b) for a, b in zip(rf, rg)) for rf, rg in zip(f, g)
    )


def scale_blocks(field: FieldSpec, c: Scalar, f: Blocks) -> Blocks:
    return tuple(tuple(vec_scale(field, c, a) for a in row) for row in f)


def blocks_are_zero(f: Blocks) -> bool:
    return all(is_zero_vector(a) for row in f for a in row)


def _sum_products(field: FieldSpec, size: int, terms) -> Vector:
    acc = (field.zero,) * size
    for t in terms:
        acc = vec_add(field, acc, t)
    return acc


def compose_blocks(
    cat: FinCat,
    src: Sequence[str],
    mid: Sequence[str],
    dst: Sequence[str],
    g: Blocks,
    f: Blocks,
) -> Blocks:
    """g∘f for f: src -> mid and g: mid -> dst."""
    field = cat.field
    return tuple(
        tuple(
            _sum_products(
                field,
                cat.dim(X, Z),
                (cat.compose(X, Y, Z, g[i][k], f[k][j]) for k, Y in enumerate(mid)),
            )
            for j, X in enumerate(src)
        )
        for i, Z in enumerate(dst)
    )


def act_left_blocks(
    bim: Bimodule,
    src: Sequence[str],
    mid: Sequence[str],
    dst: Sequence[str],
    b: Blocks,
    x: Blocks,
) -> Blocks:
    """b·x for morphism blocks b: mid -> dst and element blocks x: src -> mid."""
    field = bim.field
    return tuple(
        tuple(
            _sum_products(
                field,
                bim.dim(X, Z),
                (bim.act_left(X, Y, Z, b[i][k], x[k][j]) for k, Y in enumerate(mid)),
            )
            for j, X in enumerate(src)
        )
        for i, Z in enumerate(dst)
    )


def act_right_blocks(
    bim: Bimodule,
    src: Sequence[str],
    mid: Sequence[str],
    dst: Sequence[str],
    x: Blocks,
    a: Blocks,
) -> Blocks:
    """x·a for element blocks x: mid -> dst and morphism blocks a: src -> mid."""
    field = bim.field
    return tuple(
        tuple(
            _sum_products(
                field,
                bim.dim(X, Z),
                (
                    bim.act_right(X, Y, Z, x[i][k], a[k][j])
                    for k, Y in enumerate(mid)
                ),
            )
            for j, X in enumerate(src)
        )
        for i, Z in enumerate(dst)
    )


def diff_blocks(
    diff: Differentiation, src: Sequence[str], dst: Sequence[str], a: Blocks
) -> Blocks:
    return tuple(
        tuple(diff.apply(X, Y, a[i][j]) for j, X in enumerate(src))
        for i, Y in enumerate(dst)
    )


@dataclass(frozen=True)
class AddObject:
    """An object of add A: summands and an idempotent, None meaning the identity.

    The empty summand list is the zero object.
    """

    summands: Tuple[str, ...]
    idem: Optional[Blocks] = None
    name: Optional[str] = field(default=None, compare=False)

    @classmethod
    def of(cls, *summands: str) -> "AddObject":
        return cls(tuple(summands))

    @property
    def is_plain(self) -> bool:
        return self.idem is None

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def label(self) -> str:
        if self.name:
            return self.name
        body = "+".join(self.summands) or "0"
        return body if self.is_plain else f"({body}, e)"


def identity_of(cat: FinCat, X: AddObject) -> Blocks:
    return X.idem if X.idem is not None else identity_blocks(cat, X.summands)


def normalize_object(
    cat: FinCat,
    summands: Sequence[str],
    idem: Optional[Blocks],
    name: Optional[str] = None,
) -> AddObject:
    """Drop the idempotent when it is the identity."""
    if idem is not None and idem == identity_blocks(cat, summands):
        idem = None
    return AddObject(tuple(summands), idem, name)


@dataclass(frozen=True)
class AddMorphism:
    src: AddObject
    dst: AddObject
    blocks: Blocks


def add_identity(cat: FinCat, X: AddObject) -> AddMorphism:
    return AddMorphism(X, X, identity_of(cat, X))


def add_zero(cat: FinCat, X: AddObject, Y: AddObject) -> AddMorphism:
    return AddMorphism(X, Y, zero_blocks(cat.field, cat.dim, X.summands, Y.summands))


def add_compose(cat: FinCat, f: AddMorphism, g: AddMorphism) -> AddMorphism:
    """f∘g, requiring g.dst = f.src."""
    if g.dst.summands != f.src.summands:
        raise DimensionMismatch(f"cannot compose {f.src.label()} <- {g.dst.label()}")
    blocks = compose_blocks(
        cat, g.src.summands, g.dst.summands, f.dst.summands, f.blocks, g.blocks
    )
    return AddMorphism(g.src, f.dst, blocks)


def is_absorbed(cat: FinCat, f: AddMorphism) -> bool:
    """e_dst · m · e_src = m."""
    s, d = f.src.summands, f.dst.summands
    m = compose_blocks(cat, s, s, d, f.blocks, identity_of(cat, f.src))
    m = compose_blocks(cat, s, d, d, identity_of(cat, f.dst), m)
    return m == f.blocks


def is_idempotent_blocks(cat: FinCat, summands: Sequence[str], e: Blocks) -> bool:
    return compose_blocks(cat, summands, summands, summands, e, e) == e


def split_idempotent(
    cat: FinCat, e: AddMorphism
) -> Tuple[AddObject, AddMorphism, AddMorphism]:
    """Split e: X -> X as X ->π Y ->ι X with πι = 1_Y and ιπ = e."""
    X = e.src
    square = e.dst.summands == X.summands
    if not square or not is_idempotent_blocks(cat, X.summands, e.blocks):
        raise NotAMorphismError("split_idempotent needs an idempotent endomorphism")
    if blocks_are_zero(e.blocks):
        Y = AddObject(())
        return Y, add_zero(cat, Y, X), add_zero(cat, X, Y)
    if e.blocks == identity_of(cat, X):
        return X, add_identity(cat, X), add_identity(cat, X)
    Y = normalize_object(cat, X.summands, e.blocks)
    return Y, AddMorphism(Y, X, e.blocks), AddMorphism(X, Y, e.blocks)


def hom_layout(cat: FinCat, X: AddObject, Y: AddObject) -> BlockLayout:
    return BlockLayout(cat.dim, X.summands, Y.summands)


def element_layout(bim: Bimodule, X: AddObject, Y: AddObject) -> BlockLayout:
    return BlockLayout(bim.dim, X.summands, Y.summands)


def corner_projector(cat: FinCat, X: AddObject, Y: AddObject) -> Mat:
    """Matrix of m |-> f·m·e on flat Hom(X, Y) coordinates."""
    layout = hom_layout(cat, X, Y)
    e, f = identity_of(cat, X), identity_of(cat, Y)
    s, d = X.summands, Y.summands

    def project(v):
        m = layout.unflatten(v)
        m = compose_blocks(cat, s, s, d, m, e)
        return layout.flatten(compose_blocks(cat, s, d, d, f, m))

    return linear_map(cat.field, layout.dim, layout.dim, project)


def element_projector(bim: Bimodule, X: AddObject, Y: AddObject) -> Mat:
    """Matrix of x |-> f·x·e on flat B(X, Y) coordinates."""
    cat = bim.base
    layout = element_layout(bim, X, Y)
    e, f = identity_of(cat, X), identity_of(cat, Y)
    s, d = X.summands, Y.summands

    def project(v):
        x = layout.unflatten(v)
        x = act_right_blocks(bim, s, s, d, x, e)
        return layout.flatten(act_left_blocks(bim, s, d, d, f, x))

    return linear_map(cat.field, layout.dim, layout.dim, project)


def invert_add(
    cat: FinCat, X: AddObject, Y: AddObject, a: Blocks
) -> Optional[Blocks]:
    """Some b: Y -> X with b∘a = 1_X and a∘b = 1_Y, or None."""
    s, d = X.summands, Y.summands
    back = BlockLayout(cat.dim, d, s)
    ex, fy = identity_of(cat, X), identity_of(cat, Y)
    lx, ly = hom_layout(cat, X, X), hom_layout(cat, Y, Y)

    def equations(v):
        b = back.unflatten(v)
        ba = compose_blocks(cat, s, d, s, b, a)
        ab = compose_blocks(cat, d, s, d, a, b)
        return lx.flatten(ba) + ly.flatten(ab)

    M = linear_map(cat.field, back.dim, lx.dim + ly.dim, equations)
    rhs = lx.flatten(ex) + ly.flatten(fy)
    sol = solve_vector(M, rhs)
    if sol is None:
        return None
    b = back.unflatten(sol)
    # project into the corner so the inverse is absorbed by the idempotents
    b = compose_blocks(cat, d, d, s, b, fy)
    return compose_blocks(cat, d, s, s, ex, b)


def invert_morphism(
    cat: FinCat, X: str, Y: str, f: Sequence[Scalar]
) -> Optional[Vector]:
    """Two-sided inverse of f: X -> Y in the base category, or None."""
    inv = invert_add(cat, AddObject.of(X), AddObject.of(Y), ((tuple(f),),))
    return None if inv is None else inv[0][0]


def split_mono(
    cat: FinCat, X: str, components: Sequence[Tuple[str, Sequence[Scalar]]]
) -> bool:
    """Whether (a_k: X -> Y_k) has a left inverse (g_k: Y_k -> X), Σ g_k∘a_k = 1_X."""
    sizes = [cat.dim(Y, X) for Y, _ in components]

    def apply(g):
        parts, o = [], 0
        for (Y, a), n in zip(components, sizes):
            parts.append(cat.compose(X, Y, X, tuple(g[o : o + n]), a))
            o += n
        return _sum_products(cat.field, cat.dim(X, X), parts)

    M = linear_map(cat.field, sum(sizes), cat.dim(X, X), apply)
    return solve_vector(M, cat.identity(X)) is not None


def split_epi(
    cat: FinCat, X: str, components: Sequence[Tuple[str, Sequence[Scalar]]]
) -> bool:
    """Whether (b_k: Y_k -> X) has a right inverse (g_k: X -> Y_k), Σ b_k∘g_k = 1_X."""
    sizes = [cat.dim(X, Y) for Y, _ in components]

    def apply(g):
        parts, o = [], 0
        for (Y, b), n in zip(components, sizes):
            parts.append(cat.compose(X, Y, X, b, tuple(g[o : o + n])))
            o += n
        return _sum_products(cat.field, cat.dim(X, X), parts)

    M = linear_map(cat.field, sum(sizes), cat.dim(X, X), apply)
    return solve_vector(M, cat.identity(X)) is not None
