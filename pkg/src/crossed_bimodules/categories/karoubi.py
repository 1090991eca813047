"""Materialize a full subcategory of add T on finitely many named objects.

Hom spaces are the corners f·A(X, Y)·e with reduced-echelon bases, so the
result is an ordinary BimoduleTriple that every other module can consume.
"""

import logging
from typing import Dict, List, Mapping, Sequence, Tuple

from ..errors import InstanceError
from ..exact import SubspaceBasis, Vector, image_basis, linear_map
from .additive import (
    AddObject,
    BlockLayout,
    Blocks,
    act_left_blocks,
    act_right_blocks,
    compose_blocks,
    corner_projector,
    diff_blocks,
    element_projector,
    identity_of,
)
from .fincat import Bimodule, BimoduleTriple, Differentiation, FinCat

logger = logging.getLogger(__name__)

Corner = Tuple[BlockLayout, SubspaceBasis]


class KaroubiSubcategory:
    """A BimoduleTriple on named AddObjects, translating to and from block matrices.

    Attributes:
        source: the triple whose additive hull the objects live in
        objects: name -> AddObject
        triple: the materialized triple
    """

    def __init__(self, source: BimoduleTriple, objects: Mapping[str, AddObject]):
        self.source = source
        self.objects: Dict[str, AddObject] = dict(objects)
        cat, bim = source.cat, source.bim
        names = list(self.objects)
        self._homs: Dict[Tuple[str, str], Corner] = {}
        self._elems: Dict[Tuple[str, str], Corner] = {}
        for P in names:
            for Q in names:
                X, Y = self.objects[P], self.objects[Q]
                self._homs[(P, Q)] = (
                    BlockLayout(cat.dim, X.summands, Y.summands),
                    image_basis(corner_projector(cat, X, Y)),
                )
                self._elems[(P, Q)] = (
                    BlockLayout(bim.dim, X.summands, Y.summands),
                    image_basis(element_projector(bim, X, Y)),
                )
        field = cat.field
        homs, elems = self._homs, self._elems
        hom_basis = {
            (P, Q): [f"{P}->{Q}#{k}" for k in range(basis.dim)]
            for (P, Q), (_, basis) in homs.items()
        }
        el_basis = {
            (P, Q): [f"{P}~>{Q}#{k}" for k in range(basis.dim)]
            for (P, Q), (_, basis) in elems.items()
        }
        comp, left, right = {}, {}, {}
        for P in names:
            for Q in names:
                for R in names:
                    s = (
                        self.objects[P].summands,
                        self.objects[Q].summands,
                        self.objects[R].summands,
                    )
                    comp[(P, Q, R)] = corner_table(
                        homs[(Q, R)],
                        homs[(P, Q)],
                        homs[(P, R)],
                        lambda u, v, s=s: compose_blocks(cat, *s, u, v),
                    )
                    left[(P, Q, R)] = corner_table(
                        homs[(Q, R)],
                        elems[(P, Q)],
                        elems[(P, R)],
                        lambda u, v, s=s: act_left_blocks(bim, *s, u, v),
                    )
                    right[(P, Q, R)] = corner_table(
                        elems[(Q, R)],
                        homs[(P, Q)],
                        elems[(P, R)],
                        lambda u, v, s=s: act_right_blocks(bim, *s, u, v),
                    )
        ids = {
            P: self.hom_coordinates(P, P, identity_of(cat, self.objects[P]))
            for P in names
        }
        kcat = FinCat(field, names, hom_basis, comp, ids)
        kbim = Bimodule(kcat, el_basis, left, right)
        maps = {}
        for P in names:
            for Q in names:

                def restricted(c, P=P, Q=Q):
                    d = self._karoubi_diff(P, Q, self.hom_blocks(P, Q, c))
                    return self.element_coordinates(P, Q, d)

                maps[(P, Q)] = linear_map(
                    field, kcat.dim(P, Q), kbim.dim(P, Q), restricted
                )
        self.triple = BimoduleTriple(
            kcat, kbim, Differentiation(kbim, maps), name=f"add({source.name})"
        )
        logger.debug(
            "materialized %d Karoubi objects over %s", len(names), source.name
        )

    def _karoubi_diff(self, P: str, Q: str, a: Blocks) -> Blocks:
        """f·∂(a)·e, the differentiation restricted to the corner."""
        src, dst = self.objects[P], self.objects[Q]
        bim = self.source.bim
        s, d_s = src.summands, dst.summands
        d = diff_blocks(self.source.diff, s, d_s, a)
        d = act_right_blocks(bim, s, s, d_s, d, identity_of(bim.base, src))
        return act_left_blocks(bim, s, d_s, d_s, identity_of(bim.base, dst), d)

    # -- translation ----------------------------------------------------

    def hom_blocks(self, P: str, Q: str, coords: Sequence) -> Blocks:
        layout, basis = self._homs[(P, Q)]
        return layout.unflatten(basis.combine(coords))

    def hom_coordinates(self, P: str, Q: str, blocks: Blocks) -> Vector:
        layout, basis = self._homs[(P, Q)]
        try:
            return basis.coordinates(layout.flatten(blocks))
        except ValueError:
            raise InstanceError(
                f"morphism is not absorbed by the idempotents of {P} and {Q}"
            )

    def element_blocks(self, P: str, Q: str, coords: Sequence) -> Blocks:
        layout, basis = self._elems[(P, Q)]
        return layout.unflatten(basis.combine(coords))

    def element_coordinates(self, P: str, Q: str, blocks: Blocks) -> Vector:
        layout, basis = self._elems[(P, Q)]
        try:
            return basis.coordinates(layout.flatten(blocks))
        except ValueError:
            raise InstanceError(
                f"element is not absorbed by the idempotents of {P} and {Q}"
            )


def karoubi_subcategory(
    t: BimoduleTriple, objects: Mapping[str, AddObject]
) -> KaroubiSubcategory:
    if not objects:
        raise InstanceError("a Karoubi subcategory needs at least one object")
    return KaroubiSubcategory(t, objects)


def corner_dimension(t: BimoduleTriple, X: AddObject, Y: AddObject) -> int:
    return image_basis(corner_projector(t.cat, X, Y)).dim


def corner_table(
    outer: Corner, inner: Corner, target: Corner, product
) -> List[List[Vector]]:
    """Structure constants of a bilinear block product between corner spaces."""
    out_layout, out_basis = outer
    in_layout, in_basis = inner
    t_layout, t_basis = target
    table = []
    for u in out_basis.rows:
        row = []
        for v in in_basis.rows:
            w = t_layout.flatten(
                product(out_layout.unflatten(u), in_layout.unflatten(v))
            )
            row.append(t_basis.coordinates(w))
        table.append(row)
    return table
