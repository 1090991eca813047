"""The category of elements El(T).

An object is an element x ∈ B(X, X) over an object X of add A; a morphism
x -> y is a morphism a: X -> Y of add A with a·x = y·a + ∂(a). Hom spaces are
solved as kernels of that linear condition on the corner f·A(X, Y)·e.
El(T) is infinite, so only finite fragments of it are ever materialized.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..api.models import SearchSettings
from ..categories.additive import (
    AddObject,
    Blocks,
    BlockLayout,
    act_left_blocks,
    act_right_blocks,
    compose_blocks,
    corner_projector,
    diff_blocks,
    element_projector,
    identity_of,
    invert_add,
    sub_blocks,
)
from ..categories.bifunctor import Bifunctor
from ..categories.fincat import BimoduleTriple, FinCat
from ..categories.karoubi import corner_table
from ..categories.search import SearchOutcome, find_invertible
from ..errors import InstanceError, NotAMorphismError, PreconditionError
from ..exact import SubspaceBasis, Vector, image_basis, kernel_vectors, linear_map
from ..groups.action import FactorSystem, GroupAction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ElObject:
    carrier: AddObject
    elem: Blocks
    name: Optional[str] = field(default=None, compare=False)

    @property
    def summands(self) -> Tuple[str, ...]:
        return self.carrier.summands

    def label(self) -> str:
        return self.name or f"x on {self.carrier.label()}"


@dataclass(frozen=True)
class ElMorphism:
    src: ElObject
    dst: ElObject
    blocks: Blocks


def el_object(
    t: BimoduleTriple, carrier: AddObject, elem: Blocks, name: Optional[str] = None
) -> ElObject:
    """An ElObject, once the element is checked to be absorbed by the idempotent."""
    layout = BlockLayout(t.bim.dim, carrier.summands, carrier.summands)
    flat = layout.flatten(elem)
    if element_projector(t.bim, carrier, carrier).apply(flat) != flat:
        raise InstanceError(
            f"element of {name or carrier.label()} is not absorbed by its idempotent"
        )
    return ElObject(carrier, tuple(tuple(tuple(v) for v in row) for row in elem), name)


def el_defect(t: BimoduleTriple, x: ElObject, y: ElObject, a: Blocks) -> Blocks:
    """a·x − y·a − f·∂(a)·e, zero exactly when a is a morphism x -> y."""
    bim = t.bim
    s, d = x.summands, y.summands
    ax = act_left_blocks(bim, s, s, d, a, x.elem)
    ya = act_right_blocks(bim, s, d, d, y.elem, a)
    da = diff_blocks(t.diff, s, d, a)
    da = act_right_blocks(bim, s, s, d, da, identity_of(t.cat, x.carrier))
    da = act_left_blocks(bim, s, d, d, identity_of(t.cat, y.carrier), da)
    return sub_blocks(t.field, sub_blocks(t.field, ax, ya), da)


def is_el_morphism(t: BimoduleTriple, x: ElObject, y: ElObject, a: Blocks) -> bool:
    s, d = x.summands, y.summands
    m = compose_blocks(t.cat, s, s, d, a, identity_of(t.cat, x.carrier))
    m = compose_blocks(t.cat, s, d, d, identity_of(t.cat, y.carrier), m)
    if m != a:
        return False
    return all(v == 0 for row in el_defect(t, x, y, a) for entry in row for v in entry)


class ElHomSpace:
    """Hom_{El(T)}(x, y) as a subspace of the flat Hom_{add A}(X, Y) coordinates.

    Attributes:
        layout: flat coordinates of block matrices X -> Y
        basis: reduced-echelon basis of the solution space
    """

    def __init__(self, t: BimoduleTriple, x: ElObject, y: ElObject):
        self.src, self.dst = x, y
        self.layout = BlockLayout(t.cat.dim, x.summands, y.summands)
        corner = image_basis(corner_projector(t.cat, x.carrier, y.carrier))
        el_layout = BlockLayout(t.bim.dim, x.summands, y.summands)

        def equation(c):
            a = self.layout.unflatten(corner.combine(c))
            return el_layout.flatten(el_defect(t, x, y, a))

        M = linear_map(t.field, corner.dim, el_layout.dim, equation)
        self.basis = SubspaceBasis(
            t.field, self.layout.dim, [corner.combine(k) for k in kernel_vectors(M)]
        )

    @property
    def dim(self) -> int:
        return self.basis.dim

    def blocks(self, coords: Sequence) -> Blocks:
        return self.layout.unflatten(self.basis.combine(coords))

    def coordinates(self, a: Blocks) -> Vector:
        try:
            return self.basis.coordinates(self.layout.flatten(a))
        except ValueError:
            raise NotAMorphismError(
                f"not a morphism {self.src.label()} -> {self.dst.label()}"
            )

    def basis_blocks(self) -> List[Blocks]:
        return [self.layout.unflatten(r) for r in self.basis.rows]


def el_hom_basis(t: BimoduleTriple, x: ElObject, y: ElObject) -> List[ElMorphism]:
    space = ElHomSpace(t, x, y)
    return [ElMorphism(x, y, b) for b in space.basis_blocks()]


def el_isomorphic(
    t: BimoduleTriple, x: ElObject, y: ElObject, settings: SearchSettings
) -> SearchOutcome:
    """Search Hom(x, y) for a morphism invertible in add A."""
    space = ElHomSpace(t, x, y)
    if x == y:
        identity = space.layout.flatten(identity_of(t.cat, x.carrier))
        return SearchOutcome(identity, True, 0)
    back = ElHomSpace(t, y, x)
    if space.dim != back.dim:
        return SearchOutcome(None, True, 0)

    def invertible(v):
        blocks = space.layout.unflatten(v)
        return invert_add(t.cat, x.carrier, y.carrier, blocks) is not None

    return find_invertible(
        t.field, space.layout.dim, list(space.basis.rows), invertible, settings
    )


def act_el_object(act: GroupAction, s: str, x: ElObject) -> ElObject:
    """x^σ on the carrier X^σ."""
    elem = act.act_element_blocks(s, x.summands, x.summands, x.elem)
    return ElObject(act.act_object(s, x.carrier), elem)


def generate_el_objects(
    t: BimoduleTriple, count: int, rng: random.Random, prefix: str = "x"
) -> List[ElObject]:
    """Random objects on plain carriers of one or two summands, from the rng state."""
    objs = t.objects
    out: List[ElObject] = []
    if not objs:
        return out
    for n in range(count):
        size = 1 + rng.randrange(2)
        summands = tuple(objs[rng.randrange(len(objs))] for _ in range(size))
        elem = tuple(
            tuple(
                tuple(t.field.random_element(rng, 2) for _ in range(t.bim.dim(X, Y)))
                for X in summands
            )
            for Y in summands
        )
        out.append(ElObject(AddObject(summands), elem, f"{prefix}{n}"))
    logger.debug("generated %d El objects over %s", len(out), t.name)
    return out


class ElFragment:
    """A finite full subcategory of El(T), materialized as a FinCat on named objects.

    The triple attribute is the principal triple of that category.
    """

    def __init__(
        self,
        t: BimoduleTriple,
        objects: Mapping[str, ElObject],
        name: Optional[str] = None,
    ):
        self.source = t
        self.objects: Dict[str, ElObject] = dict(objects)
        names = list(self.objects)
        self.spaces: Dict[Tuple[str, str], ElHomSpace] = {
            (P, Q): ElHomSpace(t, self.objects[P], self.objects[Q])
            for P in names
            for Q in names
        }
        cat = t.cat
        hom_basis = {
            (P, Q): [f"{P}->{Q}#{k}" for k in range(sp.dim)]
            for (P, Q), sp in self.spaces.items()
        }
        comp = {}
        for P in names:
            for Q in names:
                for R in names:
                    sp, sq, sr = (self.objects[N].summands for N in (P, Q, R))
                    comp[(P, Q, R)] = corner_table(
                        self._corner(Q, R),
                        self._corner(P, Q),
                        self._corner(P, R),
                        lambda u, v, sp=sp, sq=sq, sr=sr: compose_blocks(
                            cat, sp, sq, sr, u, v
                        ),
                    )
        ids = {
            P: self.spaces[(P, P)].coordinates(
                identity_of(cat, self.objects[P].carrier)
            )
            for P in names
        }
        self.cat = FinCat(t.field, names, hom_basis, comp, ids)
        self.triple = BimoduleTriple.principal(self.cat, name=name or f"El({t.name})")
        logger.debug("materialized El fragment with %d objects", len(names))

    def _corner(self, P: str, Q: str):
        sp = self.spaces[(P, Q)]
        return sp.layout, sp.basis

    def name_of(self, x: ElObject) -> Optional[str]:
        for name, obj in self.objects.items():
            if obj == x:
                return name
        return None

    def hom_blocks(self, P: str, Q: str, coords: Sequence) -> Blocks:
        return self.spaces[(P, Q)].blocks(coords)

    def hom_coordinates(self, P: str, Q: str, a: Blocks) -> Vector:
        return self.spaces[(P, Q)].coordinates(a)


def induced_action(
    act: GroupAction, lam: FactorSystem, objects: Sequence[ElObject], cap: int = 32
) -> Tuple[ElFragment, GroupAction, FactorSystem]:
    """The action x -> x^σ with factors λ_*(x) = λ(X), on the orbit closure.

    Closure of `objects` is taken under every T_σ; more than `cap` objects is
    refused.
    """
    t, g = act.triple, act.group
    named: Dict[str, ElObject] = {}
    lookup: Dict[ElObject, str] = {}
    queue: List[ElObject] = []
    for k, x in enumerate(objects):
        if x not in lookup:
            name = x.name or f"x{k}"
            named[name] = x
            lookup[x] = name
            queue.append(x)
    while queue:
        x = queue.pop(0)
        for s in g.elements:
            y = act_el_object(act, s, x)
            if y in lookup:
                continue
            if len(named) >= cap:
                raise PreconditionError(f"orbit closure exceeds {cap} El objects")
            name = f"{lookup[x]}^{s}"
            y = ElObject(y.carrier, y.elem, name)
            named[name] = y
            lookup[y] = name
            queue.append(y)
    frag = ElFragment(t, named, name=f"El({t.name})")
    ft = frag.triple
    names = list(named)
    functors = {}
    for s in g.elements:
        obj_map = {P: lookup[act_el_object(act, s, named[P])] for P in names}
        hom_mats = {}
        for P in names:
            for Q in names:
                sP, sQ = named[P].summands, named[Q].summands

                def moved(c, P=P, Q=Q, sP=sP, sQ=sQ, s=s, obj_map=obj_map):
                    blocks = act.act_blocks(s, sP, sQ, frag.hom_blocks(P, Q, c))
                    return frag.hom_coordinates(obj_map[P], obj_map[Q], blocks)

                hom_mats[(P, Q)] = linear_map(
                    t.field,
                    frag.cat.dim(P, Q),
                    frag.cat.dim(obj_map[P], obj_map[Q]),
                    moved,
                )
        functors[s] = Bifunctor(
            ft, ft, obj_map, hom_mats, dict(hom_mats), name=f"T_{s}*"
        )
    el_act = GroupAction(ft, g, functors)
    values = {}
    for s in g.elements:
        for u in g.elements:
            su = g.mul(s, u)
            for P in names:
                x = named[P]
                src_name = el_act.obj(su, P)
                dst_name = el_act.obj(s, el_act.obj(u, P))
                src, dst = named[src_name], named[dst_name]
                diag = tuple(
                    tuple(
                        (
                            lam.value(s, u, X)
                            if i == j
                            else t.cat.zero(src.summands[j], dst.summands[i])
                        )
                        for j in range(len(x.summands))
                    )
                    for i, X in enumerate(x.summands)
                )
                diag = compose_blocks(
                    t.cat,
                    src.summands,
                    src.summands,
                    dst.summands,
                    diag,
                    identity_of(t.cat, src.carrier),
                )
                values[(s, u, P)] = frag.hom_coordinates(src_name, dst_name, diag)
    el_lam = FactorSystem(el_act, values)
    logger.info("induced action on %d El objects", len(names))
    return frag, el_act, el_lam
