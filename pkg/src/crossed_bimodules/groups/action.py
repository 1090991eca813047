"""Group actions on bimodule triples and their factor systems.

An action assigns a bifunctor T_σ to every σ with T_1 = id. The factor system
λ_{σ,τ}(X): X^{στ} -> (X^τ)^σ measures the failure of T_{στ} = T_σ T_τ; it is
supplied explicitly and never synthesized.
"""

import itertools
import logging
import random
from typing import Dict, Mapping, Optional, Sequence, Tuple

from ..api.models import ValidationReport
from ..categories.additive import AddObject, Blocks, invert_morphism
from ..categories.bifunctor import Bifunctor, identity_bifunctor, validate_bifunctor
from ..categories.fincat import BimoduleTriple
from ..errors import InstanceError, NotInvertibleError, PreconditionError
from ..exact import Mat, Scalar, Vector, is_invertible, is_zero_vector, vec_scale
from .finite_group import FiniteGroup

logger = logging.getLogger(__name__)

FactorKey = Tuple[str, str, str]


class GroupAction:
    """One bifunctor T_σ: T -> T per group element.

    Attributes:
        triple: the triple acted on
        group: the acting group
        functors: σ -> T_σ; omitted elements act as the identity
    """

    def __init__(
        self,
        triple: BimoduleTriple,
        group: FiniteGroup,
        functors: Mapping[str, Bifunctor],
    ):
        for s in functors:
            if s not in group:
                raise InstanceError(
                    f"action refers to unknown group element {s!r}", "action"
                )
        self.triple = triple
        self.group = group
        ident = identity_bifunctor(triple)
        self.functors: Dict[str, Bifunctor] = {
            s: functors.get(s, ident) for s in group.elements
        }

    @classmethod
    def trivial(cls, triple: BimoduleTriple, group: FiniteGroup) -> "GroupAction":
        return cls(triple, group, {})

    def functor(self, s: str) -> Bifunctor:
        return self.functors[s]

    def obj(self, s: str, X: str) -> str:
        """X^σ."""
        return self.functors[s].obj(X)

    def obj_path(self, X: str, *elems: str) -> str:
        """((X^{τ_k})^{...})^{τ_1} for elems = (τ_1, ..., τ_k), right to left."""
        for s in reversed(elems):
            X = self.obj(s, X)
        return X

    def act_morphism(self, s: str, X: str, Y: str, a: Sequence[Scalar]) -> Vector:
        """a^σ for a: X -> Y."""
        return self.functors[s].on_morphism(X, Y, a)

    def act_element(self, s: str, X: str, Y: str, x: Sequence[Scalar]) -> Vector:
        return self.functors[s].on_element(X, Y, x)

    @property
    def fixes_objects(self) -> bool:
        return all(
            self.obj(s, X) == X for s in self.group for X in self.triple.objects
        )

    # -- add A ----------------------------------------------------------

    def act_summands(self, s: str, summands: Sequence[str]) -> Tuple[str, ...]:
        return tuple(self.obj(s, X) for X in summands)

    def act_blocks(
        self, s: str, src: Sequence[str], dst: Sequence[str], blocks: Blocks
    ) -> Blocks:
        return tuple(
            tuple(self.act_morphism(s, X, Y, blocks[i][j]) for j, X in enumerate(src))
            for i, Y in enumerate(dst)
        )

    def act_element_blocks(
        self, s: str, src: Sequence[str], dst: Sequence[str], blocks: Blocks
    ) -> Blocks:
        return tuple(
            tuple(self.act_element(s, X, Y, blocks[i][j]) for j, X in enumerate(src))
            for i, Y in enumerate(dst)
        )

    def act_object(self, s: str, X: AddObject) -> AddObject:
        idem = None
        if X.idem is not None:
            idem = self.act_blocks(s, X.summands, X.summands, X.idem)
        return AddObject(self.act_summands(s, X.summands), idem)

    def restrict(self, h: FiniteGroup) -> "GroupAction":
        return GroupAction(self.triple, h, {s: self.functors[s] for s in h.elements})


class FactorSystem:
    """λ_{σ,τ}(X) as coordinates in A(X^{στ}, (X^τ)^σ); omitted ones are identities."""

    def __init__(
        self, action: GroupAction, values: Mapping[FactorKey, Sequence[Scalar]]
    ):
        self.action = action
        cat = action.triple.cat
        g = action.group
        self.values: Dict[FactorKey, Vector] = {}
        for s in g.elements:
            for t in g.elements:
                for X in cat.objects:
                    src, dst = self.source(s, t, X), self.target(s, t, X)
                    v = values.get((s, t, X))
                    if v is None:
                        if src != dst:
                            raise InstanceError(
                                f"λ_{{{s},{t}}}({X}) goes {src} -> {dst} "
                                "and cannot default to an identity",
                                "factors",
                            )
                        v = cat.identity(src)
                    v = tuple(v)
                    if len(v) != cat.dim(src, dst):
                        raise InstanceError(
                            f"λ_{{{s},{t}}}({X}) has {len(v)} coordinates, "
                            f"expected {cat.dim(src, dst)}",
                            "factors",
                        )
                    self.values[(s, t, X)] = v
        self._inverses: Dict[FactorKey, Optional[Vector]] = {}

    @classmethod
    def trivial(cls, action: GroupAction) -> "FactorSystem":
        return cls(action, {})

    @classmethod
    def from_scalars(
        cls, action: GroupAction, scalars: Mapping[Tuple[str, str], Scalar]
    ) -> "FactorSystem":
        """λ_{σ,τ}(X) = c_{σ,τ}·1_X; needs an action fixing every object."""
        if not action.fixes_objects:
            raise InstanceError(
                "scalar factors need an action that fixes every object",
                "factors.scalar",
            )
        cat = action.triple.cat
        values = {}
        for (s, t), c in scalars.items():
            for X in cat.objects:
                values[(s, t, X)] = vec_scale(cat.field, c, cat.identity(X))
        return cls(action, values)

    def source(self, s: str, t: str, X: str) -> str:
        return self.action.obj(self.action.group.mul(s, t), X)

    def target(self, s: str, t: str, X: str) -> str:
        return self.action.obj_path(X, s, t)

    def value(self, s: str, t: str, X: str) -> Vector:
        return self.values[(s, t, X)]

    def inverse(self, s: str, t: str, X: str) -> Vector:
        key = (s, t, X)
        if key not in self._inverses:
            self._inverses[key] = invert_morphism(
                self.action.triple.cat,
                self.source(s, t, X),
                self.target(s, t, X),
                self.values[key],
            )
        inv = self._inverses[key]
        if inv is None:
            raise NotInvertibleError(f"λ_{{{s},{t}}}({X}) is not invertible")
        return inv

    def is_invertible(self, s: str, t: str, X: str) -> bool:
        try:
            self.inverse(s, t, X)
        except NotInvertibleError:
            return False
        return True

    def replace(self, key: FactorKey, value: Sequence[Scalar]) -> "FactorSystem":
        values = dict(self.values)
        values[key] = tuple(value)
        return FactorSystem(self.action, values)

    def restrict(self, h: FiniteGroup) -> "FactorSystem":
        action = self.action.restrict(h)
        values = {
            (s, t, X): v
            for (s, t, X), v in self.values.items()
            if s in h and t in h
        }
        return FactorSystem(action, values)


def validate_action(act: GroupAction) -> ValidationReport:
    """T_1 = id and every T_σ a bifunctor, bijective on objects, morphisms, elements.

    T_{στ} = T_σ T_τ is not required; the factor system accounts for it.
    """
    t, g = act.triple, act.group
    report = ValidationReport(subject=f"action of {g.name} on {t.name}")
    one = act.functor(g.unit)
    report.tick()
    if any(one.obj(X) != X for X in t.objects):
        report.add("unit-functor", g.unit, detail="T_1 moves an object")
    else:
        for X in t.objects:
            for Y in t.objects:
                if one.hom_matrix(X, Y) != Mat.identity(t.field, t.cat.dim(X, Y)):
                    report.add(
                        "unit-functor",
                        X,
                        Y,
                        detail="T_1 is not the identity on morphisms",
                    )
                if one.bim_matrix(X, Y) != Mat.identity(t.field, t.bim.dim(X, Y)):
                    report.add(
                        "unit-functor",
                        X,
                        Y,
                        detail="T_1 is not the identity on elements",
                    )
    for s in g.elements:
        F = act.functor(s)
        sub = validate_bifunctor(F)
        for v in sub.violations:
            v.where.insert(0, s)
        report.merge(sub)
        if not sub.ok:
            continue
        report.tick()
        if sorted(F.obj(X) for X in t.objects) != sorted(t.objects):
            report.add("object-bijection", s)
            continue
        for X in t.objects:
            for Y in t.objects:
                report.tick()
                H, E = F.hom_matrix(X, Y), F.bim_matrix(X, Y)
                if not H.is_square or not is_invertible(H):
                    report.add("hom-bijection", s, X, Y)
                if not E.is_square or not is_invertible(E):
                    report.add("element-bijection", s, X, Y)
    if report.ok:
        logger.info("action of %s on %s passes validation", g.name, t.name)
    return report


def validate_factor_system(lam: FactorSystem) -> ValidationReport:
    """Cocycle identity, naturality, normalization and ∂λ = 0."""
    act = lam.action
    t, g = act.triple, act.group
    cat, bim = t.cat, t.bim
    report = ValidationReport(subject=f"factor system on {t.name}")
    for s, u in itertools.product(g.elements, repeat=2):
        for X in cat.objects:
            src, dst = lam.source(s, u, X), lam.target(s, u, X)
            v = lam.value(s, u, X)
            report.tick()
            if not lam.is_invertible(s, u, X):
                report.add("invertible", s, u, X)
            if not is_zero_vector(t.diff.apply(src, dst, v)):
                report.add("differentiation", s, u, X, detail="∂λ ≠ 0")
            if (s == g.unit or u == g.unit) and (src != dst or v != cat.identity(src)):
                report.add("normalization", s, u, X)
    # T_ρ(λ_{σ,τ}(X)) ∘ λ_{ρ,στ}(X) = λ_{ρ,σ}(X^τ) ∘ λ_{ρσ,τ}(X)
    for r, s, u in itertools.product(g.elements, repeat=3):
        su, rs, rsu = g.mul(s, u), g.mul(r, s), g.product(r, s, u)
        for X in cat.objects:
            report.tick()
            a = act.act_morphism(
                r, lam.source(s, u, X), lam.target(s, u, X), lam.value(s, u, X)
            )
            end = act.obj_path(X, r, s, u)
            lhs = cat.compose(
                act.obj(rsu, X),
                act.obj(r, act.obj(su, X)),
                end,
                a,
                lam.value(r, su, X),
            )
            Xu = act.obj(u, X)
            rhs = cat.compose(
                act.obj(rsu, X),
                act.obj(rs, Xu),
                end,
                lam.value(r, s, Xu),
                lam.value(rs, u, X),
            )
            if lhs != rhs:
                report.add("cocycle", r, s, u, X)
    # λ(Y) ∘ a^{στ} = (a^τ)^σ ∘ λ(X), and the same for elements
    for s, u in itertools.product(g.elements, repeat=2):
        su = g.mul(s, u)
        for X in cat.objects:
            for Y in cat.objects:
                Xsu, Ysu = act.obj(su, X), act.obj(su, Y)
                Xst, Yst = act.obj_path(X, s, u), act.obj_path(Y, s, u)
                Xu, Yu = act.obj(u, X), act.obj(u, Y)
                lx, ly = lam.value(s, u, X), lam.value(s, u, Y)
                for i, na in enumerate(cat.basis(X, Y)):
                    a = cat.unit(X, Y, i)
                    report.tick()
                    lhs = cat.compose(Xsu, Ysu, Yst, ly, act.act_morphism(su, X, Y, a))
                    aa = act.act_morphism(s, Xu, Yu, act.act_morphism(u, X, Y, a))
                    rhs = cat.compose(Xsu, Xst, Yst, aa, lx)
                    if lhs != rhs:
                        report.add("naturality", s, u, na)
                for i, nx in enumerate(bim.basis(X, Y)):
                    x = bim.unit(X, Y, i)
                    report.tick()
                    lhs = bim.act_left(Xsu, Ysu, Yst, ly, act.act_element(su, X, Y, x))
                    xx = act.act_element(s, Xu, Yu, act.act_element(u, X, Y, x))
                    rhs = bim.act_right(Xsu, Xst, Yst, xx, lx)
                    if lhs != rhs:
                        report.add("element-naturality", s, u, nx)
    if report.ok:
        logger.info("factor system passes validation (%d instances)", report.checked)
    else:
        logger.info(
            "factor system fails validation with %d violations", len(report.violations)
        )
    return report


def derived_identity_holds(lam: FactorSystem) -> ValidationReport:
    """λ_{σ⁻¹,σ}(X)^σ = λ_{σ,σ⁻¹}(X^σ) on every object."""
    act = lam.action
    g, cat = act.group, act.triple.cat
    report = ValidationReport(subject="derived cocycle identity")
    for s in g.elements:
        si = g.inv(s)
        for X in cat.objects:
            report.tick()
            lhs = act.act_morphism(
                s, lam.source(si, s, X), lam.target(si, s, X), lam.value(si, s, X)
            )
            if lhs != lam.value(s, si, act.obj(s, X)):
                report.add("inverse-pair", s, X)
    return report


def perturb_factor_system(
    lam: FactorSystem, rng: random.Random
) -> Tuple[FactorSystem, FactorKey, Scalar]:
    """Multiply one λ value by a random nonzero scalar other than 1."""
    field = lam.action.triple.field
    if field.is_prime and field.p == 2:
        raise PreconditionError("F_2 has no nonzero scalar other than 1")
    keys = sorted(lam.values)
    key = keys[rng.randrange(len(keys))]
    c = field.one
    while c == field.one or field.is_zero(c):
        c = field.random_element(rng)
    logger.debug("perturbing λ%s by %s", key, c)
    return lam.replace(key, vec_scale(field, c, lam.values[key])), key, c
