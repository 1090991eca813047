"""The crossed group triple TG = (AG, BG, ∂).

AG(X, Y) = ⊕_σ A(X^σ, Y) and BG(X, Y) = ⊕_σ B(X^σ, Y), laid out σ-major in
group element order. For a: Y^σ -> Z and b: X^τ -> Y the product is

    a[σ] · b[τ] = (a ∘ b^σ ∘ λ_{σ,τ}(X))[στ]

and both actions on BG follow the same rule; ∂ acts componentwise. The result
is materialized as an ordinary BimoduleTriple so every downstream construction
applies to it unchanged.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from ..api.models import ValidationReport
from ..categories.fincat import Bimodule, BimoduleTriple, Differentiation, FinCat
from ..categories.validation import validate_category, validate_triple
from ..errors import DimensionMismatch
from ..exact import Mat, Scalar, Vector, linear_map, vec_zero
from ..groups.action import FactorSystem, GroupAction

logger = logging.getLogger(__name__)


class TagLayout:
    """Offsets of the σ-blocks inside one crossed hom or element space."""

    def __init__(self, elements: Sequence[str], sizes: Sequence[int]):
        self.elements = tuple(elements)
        self.sizes = dict(zip(self.elements, sizes))
        self.offsets: Dict[str, int] = {}
        pos = 0
        for s, n in zip(self.elements, sizes):
            self.offsets[s] = pos
            pos += n
        self.dim = pos

    def component(self, v: Sequence[Scalar], s: str) -> Vector:
        o = self.offsets[s]
        return tuple(v[o : o + self.sizes[s]])

    def place(self, field, s: str, a: Sequence[Scalar]) -> Vector:
        if len(a) != self.sizes[s]:
            raise DimensionMismatch(
                f"component {s} has {len(a)} coordinates, expected {self.sizes[s]}"
            )
        o = self.offsets[s]
        return vec_zero(field, o) + tuple(a) + vec_zero(field, self.dim - o - len(a))

    def split(self, v: Sequence[Scalar]) -> Dict[str, Vector]:
        return {s: self.component(v, s) for s in self.elements}


class CrossedTriple:
    """TG built from a validated triple, action and factor system.

    Attributes:
        base: the triple T
        action: the group action
        factors: the factor system λ
        triple: the materialized (AG, BG, ∂)
    """

    def __init__(
        self, base: BimoduleTriple, action: GroupAction, factors: FactorSystem
    ):
        self.base = base
        self.action = action
        self.factors = factors
        self.group = action.group
        cat, bim = base.cat, base.bim
        G = self.group.elements
        objs = cat.objects
        self._homs: Dict[Tuple[str, str], TagLayout] = {}
        self._elems: Dict[Tuple[str, str], TagLayout] = {}
        hom_basis, el_basis = {}, {}
        for X in objs:
            for Y in objs:
                hl = TagLayout(G, [cat.dim(action.obj(s, X), Y) for s in G])
                el = TagLayout(G, [bim.dim(action.obj(s, X), Y) for s in G])
                self._homs[(X, Y)] = hl
                self._elems[(X, Y)] = el
                hom_basis[(X, Y)] = [
                    f"{a}[{s}]" for s in G for a in cat.basis(action.obj(s, X), Y)
                ]
                el_basis[(X, Y)] = [
                    f"{x}[{s}]" for s in G for x in bim.basis(action.obj(s, X), Y)
                ]
        homs, elems = self._homs, self._elems
        comp, left, right = {}, {}, {}
        for X in objs:
            for Y in objs:
                for Z in objs:
                    key = (X, Y, Z)
                    comp[key] = self._table(
                        homs[(Y, Z)], homs[(X, Y)], homs[(X, Z)], key, self._hom_product
                    )
                    left[key] = self._table(
                        homs[(Y, Z)],
                        elems[(X, Y)],
                        elems[(X, Z)],
                        key,
                        self._left_product,
                    )
                    right[key] = self._table(
                        elems[(Y, Z)],
                        homs[(X, Y)],
                        elems[(X, Z)],
                        key,
                        self._right_product,
                    )
        unit = self.group.unit
        ids = {X: homs[(X, X)].place(cat.field, unit, cat.identity(X)) for X in objs}
        gcat = FinCat(cat.field, objs, hom_basis, comp, ids)
        gbim = Bimodule(gcat, el_basis, left, right)
        maps = {}
        for X in objs:
            for Y in objs:
                maps[(X, Y)] = linear_map(
                    cat.field,
                    homs[(X, Y)].dim,
                    elems[(X, Y)].dim,
                    lambda v, X=X, Y=Y: self._diff(X, Y, v),
                )
        self.triple = BimoduleTriple(
            gcat,
            gbim,
            Differentiation(gbim, maps),
            name=f"{base.name}{self.group.name}",
        )
        logger.debug(
            "built crossed triple %s with %d morphism basis vectors",
            self.triple.name,
            gcat.total_dim(),
        )

    # -- structure constants ---------------------------------------------

    def _table(
        self,
        outer: TagLayout,
        inner: TagLayout,
        target: TagLayout,
        key: Tuple[str, str, str],
        product,
    ) -> List[List[Vector]]:
        field = self.base.field

        def unit(n, i):
            return tuple(field.one if k == i else field.zero for k in range(n))

        table = []
        for s in outer.elements:
            for j in range(outer.sizes[s]):
                u = unit(outer.sizes[s], j)
                row = []
                for t in inner.elements:
                    for i in range(inner.sizes[t]):
                        v = unit(inner.sizes[t], i)
                        st = self.group.mul(s, t)
                        row.append(target.place(field, st, product(*key, s, u, t, v)))
                table.append(row)
        return table

    def _hom_product(self, X, Y, Z, s, b, t, a) -> Vector:
        """b ∘ a^σ ∘ λ_{σ,τ}(X) for b: Y^σ -> Z and a: X^τ -> Y."""
        act, lam, cat = self.action, self.factors, self.base.cat
        Xt, Ys = act.obj(t, X), act.obj(s, Y)
        Xts, Xst = act.obj(s, Xt), act.obj(self.group.mul(s, t), X)
        a_s = act.act_morphism(s, Xt, Y, a)
        ba = cat.compose(Xts, Ys, Z, b, a_s)
        return cat.compose(Xst, Xts, Z, ba, lam.value(s, t, X))

    def _left_product(self, X, Y, Z, s, b, t, x) -> Vector:
        """b · x^σ · λ_{σ,τ}(X) for b: Y^σ -> Z and x in B(X^τ, Y)."""
        act, lam, bim = self.action, self.factors, self.base.bim
        Xt, Ys = act.obj(t, X), act.obj(s, Y)
        Xts, Xst = act.obj(s, Xt), act.obj(self.group.mul(s, t), X)
        x_s = act.act_element(s, Xt, Y, x)
        xl = bim.act_right(Xst, Xts, Ys, x_s, lam.value(s, t, X))
        return bim.act_left(Xst, Ys, Z, b, xl)

    def _right_product(self, X, Y, Z, s, x, t, a) -> Vector:
        """x · a^σ · λ_{σ,τ}(X) for x in B(Y^σ, Z) and a: X^τ -> Y."""
        act, lam = self.action, self.factors
        cat, bim = self.base.cat, self.base.bim
        Xt, Ys = act.obj(t, X), act.obj(s, Y)
        Xts, Xst = act.obj(s, Xt), act.obj(self.group.mul(s, t), X)
        a_s = act.act_morphism(s, Xt, Y, a)
        al = cat.compose(Xst, Xts, Ys, a_s, lam.value(s, t, X))
        return bim.act_right(Xst, Ys, Z, x, al)

    def _diff(self, X: str, Y: str, v: Sequence[Scalar]) -> Vector:
        hl = self._homs[(X, Y)]
        parts: List[Scalar] = []
        for s in self.group.elements:
            Xs = self.action.obj(s, X)
            parts.extend(self.base.diff.apply(Xs, Y, hl.component(v, s)))
        return tuple(parts)

    # -- coordinates ----------------------------------------------------

    @property
    def cat(self) -> FinCat:
        return self.triple.cat

    @property
    def bim(self) -> Bimodule:
        return self.triple.bim

    def hom_layout(self, X: str, Y: str) -> TagLayout:
        return self._homs[(X, Y)]

    def element_layout(self, X: str, Y: str) -> TagLayout:
        return self._elems[(X, Y)]

    def tagged(self, X: str, Y: str, s: str, a: Sequence[Scalar]) -> Vector:
        """a[σ] for a: X^σ -> Y."""
        return self._homs[(X, Y)].place(self.base.field, s, a)

    def tagged_element(self, X: str, Y: str, s: str, x: Sequence[Scalar]) -> Vector:
        return self._elems[(X, Y)].place(self.base.field, s, x)

    def component(self, X: str, Y: str, v: Sequence[Scalar], s: str) -> Vector:
        return self._homs[(X, Y)].component(v, s)

    def element_component(
        self, X: str, Y: str, v: Sequence[Scalar], s: str
    ) -> Vector:
        return self._elems[(X, Y)].component(v, s)

    def group_element(self, X: str, s: str) -> Vector:
        """[σ] = 1_{X^σ}[σ], a morphism X -> X^σ of AG."""
        Xs = self.action.obj(s, X)
        return self.tagged(X, Xs, s, self.base.cat.identity(Xs))

    def embed(self, X: str, Y: str, a: Sequence[Scalar]) -> Vector:
        """a[1]."""
        return self.tagged(X, Y, self.group.unit, a)

    def embed_element(self, X: str, Y: str, x: Sequence[Scalar]) -> Vector:
        return self.tagged_element(X, Y, self.group.unit, x)

    def embedding_matrix(self, X: str, Y: str) -> Mat:
        cat = self.base.cat
        return linear_map(
            cat.field, cat.dim(X, Y), self.cat.dim(X, Y), lambda a: self.embed(X, Y, a)
        )

    def crossed_compose(
        self, X: str, Y: str, Z: str, b: Sequence[Scalar], a: Sequence[Scalar]
    ) -> Vector:
        """b·a in AG for a ∈ AG(X, Y), b ∈ AG(Y, Z)."""
        return self.cat.compose(X, Y, Z, b, a)

    def crossed_act_left(
        self, X: str, Y: str, Z: str, b: Sequence[Scalar], x: Sequence[Scalar]
    ) -> Vector:
        return self.bim.act_left(X, Y, Z, b, x)

    def crossed_act_right(
        self, X: str, Y: str, Z: str, x: Sequence[Scalar], a: Sequence[Scalar]
    ) -> Vector:
        return self.bim.act_right(X, Y, Z, x, a)


def build_crossed(
    base: BimoduleTriple, action: GroupAction, factors: FactorSystem
) -> CrossedTriple:
    return CrossedTriple(base, action, factors)


def check_associativity(ct: CrossedTriple) -> ValidationReport:
    """Associativity of AG on all tagged basis triples, and nondegeneracy of each λ.

    A non-invertible λ is reported even where the products happen to associate.
    """
    report = ValidationReport(subject=f"associativity of {ct.triple.name}")
    lam = ct.factors
    for s in ct.group.elements:
        for t in ct.group.elements:
            for X in ct.base.objects:
                report.tick()
                if not lam.is_invertible(s, t, X):
                    report.add("degenerate", s, t, X, detail="λ is not invertible")
    cat_report = validate_category(ct.cat)
    report.merge(cat_report)
    if cat_report.ok:
        report.merge(validate_triple(ct.triple))
    if not report.ok:
        logger.info(
            "%s is not associative: %d violations",
            ct.triple.name,
            len(report.violations),
        )
    return report
