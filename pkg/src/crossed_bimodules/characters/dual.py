"""The character group of an abelian G and the double crossed construction TGĜ.

Ĝ acts on TG by (Σ a_σ[σ])^χ = Σ χ(σ)a_σ[σ] with trivial factors. In TGĜ the
elements e_σ = (1/n)Σ_χ χ(σ)[χ] are orthogonal idempotents with
e_σ∘[τ] = [τ]∘e_{στ}, and Θ: X |-> (X, e_1), a |-> a[1]e_1 is an equivalence
add T -> add TGĜ.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..api.models import CheckResult, SearchSettings, ValidationReport
from ..categories.additive import AddObject
from ..categories.bifunctor import Bifunctor, is_equivalence
from ..categories.karoubi import KaroubiSubcategory, karoubi_subcategory
from ..crossed.crossed_triple import CrossedTriple, build_crossed
from ..elements.el_category import ElHomSpace, ElObject, el_object
from ..errors import PreconditionError
from ..exact import FieldSpec, Scalar, Vector, linear_map, vec_add, vec_scale
from ..groups.action import FactorSystem, GroupAction, validate_action
from ..groups.finite_group import FiniteGroup

logger = logging.getLogger(__name__)


def _find_basis(g: FiniteGroup) -> List[str]:
    """Generators g_i with Π Z/o(g_i) -> G, (k_i) |-> Π g_i^{k_i} bijective."""
    n = len(g)
    by_order = sorted(
        (s for s in g.elements if s != g.unit), key=lambda s: (-g.order(s), g.index(s))
    )

    def powers(s: str) -> List[str]:
        out, x = [g.unit], s
        while x != g.unit:
            out.append(x)
            x = g.mul(x, s)
        return out

    def extend(chosen: List[str], reached: frozenset) -> Optional[List[str]]:
        if len(reached) == n:
            return chosen
        for s in by_order:
            if s in reached:
                continue
            cyc = powers(s)
            if any(c in reached for c in cyc[1:]):
                continue
            grown = frozenset(g.mul(r, c) for r in reached for c in cyc)
            if len(grown) != len(reached) * len(cyc):
                continue
            found = extend(chosen + [s], grown)
            if found is not None:
                return found
        return None

    basis = extend([], frozenset({g.unit}))
    if basis is None:
        raise PreconditionError(f"{g.name} has no decomposition into cyclic factors")
    return basis


def find_root(field: FieldSpec, n: int, zeta: Optional[Scalar] = None) -> Scalar:
    """A primitive n-th root of unity: the given one once checked, else the smallest."""
    if zeta is not None:
        z = field.element(zeta)
        if z == 0 or field.order_of_unit(z) != n:
            raise PreconditionError(
                f"{field.format(z)} is not a primitive {n}-th root of unity in {field}"
            )
        return z
    if not field.is_prime:
        if n == 1:
            return field.one
        if n == 2:
            return field.element(-1)
        raise PreconditionError(f"Q has no primitive {n}-th root of unity")
    if (field.p - 1) % n:
        raise PreconditionError(
            f"F_{field.p} has no primitive {n}-th root of unity "
            f"({n} does not divide {field.p - 1})"
        )
    return next(a for a in range(1, field.p) if field.order_of_unit(a) == n)


@dataclass(frozen=True)
class CharacterGroup:
    """Ĝ as a FiniteGroup on ids chi0, chi1, ... with the value table χ(σ).

    Attributes:
        group: the abelian group G
        field: the base field
        zeta: the primitive |G|-th root used
        dual: Ĝ with pointwise product
        values: (χ, σ) -> χ(σ)
    """

    group: FiniteGroup
    field: FieldSpec
    zeta: Scalar
    dual: FiniteGroup
    values: Dict[Tuple[str, str], Scalar]

    @property
    def order(self) -> int:
        return len(self.group)

    def __call__(self, chi: str, s: str) -> Scalar:
        return self.values[(chi, s)]

    @property
    def characters(self) -> Tuple[str, ...]:
        return self.dual.elements

    def to_json(self) -> Dict[str, Dict[str, str]]:
        return {
            chi: {s: self.field.format(self(chi, s)) for s in self.group.elements}
            for chi in self.characters
        }


def character_group(
    g: FiniteGroup, field: FieldSpec, zeta: Optional[Scalar] = None
) -> CharacterGroup:
    if not g.is_abelian:
        raise PreconditionError(
            f"{g.name} is not abelian; only abelian groups have a dual here"
        )
    n = len(g)
    z = find_root(field, n, zeta)
    basis = _find_basis(g)
    orders = [g.order(s) for s in basis]
    # σ = Π g_i^{k_i}
    exponents: Dict[str, Tuple[int, ...]] = {}
    for ks in itertools.product(*(range(d) for d in orders)):
        s = g.unit
        for gi, k in zip(basis, ks):
            for _ in range(k):
                s = g.mul(s, gi)
        exponents[s] = ks
    roots = [field.pow(z, n // d) for d in orders]
    labels = list(itertools.product(*(range(d) for d in orders)))
    ids = [f"chi{k}" for k in range(len(labels))]
    values: Dict[Tuple[str, str], Scalar] = {}
    for cid, js in zip(ids, labels):
        for s in g.elements:
            v = field.one
            for r, j, k in zip(roots, js, exponents[s]):
                v = field.mul(v, field.pow(r, j * k))
            values[(cid, s)] = v
    index = {js: cid for cid, js in zip(ids, labels)}
    table = {}
    for a, ja in zip(ids, labels):
        for b, jb in zip(ids, labels):
            table[(a, b)] = index[tuple((x + y) % d for x, y, d in zip(ja, jb, orders))]
    dual = FiniteGroup(ids, ids[0], table, name=f"{g.name}^")
    chars = CharacterGroup(g, field, z, dual, values)
    report = check_orthogonality(chars)
    if not report.ok:
        raise PreconditionError(
            f"characters of {g.name} fail orthogonality: {report.violations[0].kind}"
        )
    logger.info("built %d characters of %s with zeta = %s", n, g.name, field.format(z))
    return chars


def check_orthogonality(chars: CharacterGroup) -> ValidationReport:
    """Σ_σ χ(σ)χ'(σ)⁻¹ = n·δ_{χ,χ'}."""
    f, g = chars.field, chars.group
    n = f.element(chars.order)
    report = ValidationReport(subject="character orthogonality")
    for a in chars.characters:
        for s in g.elements:
            for t in g.elements:
                report.tick()
                if chars(a, g.mul(s, t)) != f.mul(chars(a, s), chars(a, t)):
                    report.add("homomorphism", a, s, t)
        for b in chars.characters:
            acc = f.zero
            for s in g.elements:
                acc = f.add(acc, f.mul(chars(a, s), f.inv(chars(b, s))))
            report.tick()
            if acc != (n if a == b else f.zero):
                report.add("orthogonality", a, b)
    return report


def hat_action(ct: CrossedTriple, chars: CharacterGroup) -> GroupAction:
    """Ĝ on TG: objects fixed, σ-components of morphisms and elements scaled by χ(σ)."""
    t = ct.triple
    field = t.field
    functors = {}
    for chi in chars.characters:
        hom_mats, bim_mats = {}, {}
        for X in t.objects:
            for Y in t.objects:
                hl, el = ct.hom_layout(X, Y), ct.element_layout(X, Y)
                hom_mats[(X, Y)] = linear_map(
                    field,
                    hl.dim,
                    hl.dim,
                    lambda v, hl=hl, chi=chi: _scaled(field, hl, chars, chi, v),
                )
                bim_mats[(X, Y)] = linear_map(
                    field,
                    el.dim,
                    el.dim,
                    lambda v, el=el, chi=chi: _scaled(field, el, chars, chi, v),
                )
        functors[chi] = Bifunctor(
            t, t, {X: X for X in t.objects}, hom_mats, bim_mats, name=f"T_{chi}"
        )
    return GroupAction(t, chars.dual, functors)


def _scaled(
    field: FieldSpec, layout, chars: CharacterGroup, chi: str, v: Sequence
) -> Vector:
    out: List = []
    for s in chars.group.elements:
        out.extend(vec_scale(field, chars(chi, s), layout.component(v, s)))
    return tuple(out)


def double_crossed(ct: CrossedTriple, chars: CharacterGroup) -> CrossedTriple:
    """TGĜ with trivial factors."""
    act = hat_action(ct, chars)
    return build_crossed(ct.triple, act, FactorSystem.trivial(act))


def idempotents_e(
    ct: CrossedTriple, dct: CrossedTriple, chars: CharacterGroup, X: str
) -> Dict[str, Vector]:
    """σ -> e_σ = (1/n)Σ_χ χ(σ)[χ] in AGĜ(X, X)."""
    f = ct.base.field
    inv_n = f.inv(f.element(chars.order))
    out = {}
    for s in ct.group.elements:
        acc = dct.cat.zero(X, X)
        for chi in chars.characters:
            term = vec_scale(f, f.mul(inv_n, chars(chi, s)), dct.group_element(X, chi))
            acc = vec_add(f, acc, term)
        out[s] = acc
    return out


def _tau(ct: CrossedTriple, dct: CrossedTriple, X: str, s: str) -> Vector:
    """[σ] of AG seen in AGĜ(X, X^σ) with character tag χ0."""
    Xs = ct.action.obj(s, X)
    return dct.embed(X, Xs, ct.group_element(X, s))


def check_idempotents(
    ct: CrossedTriple,
    dct: CrossedTriple,
    chars: CharacterGroup,
    name: str = "character-idempotents",
) -> CheckResult:
    """Orthogonality, completeness and e_σ∘[τ] = [τ]∘e_{στ} at every object."""
    report = ValidationReport(subject=name)
    g = ct.group
    cat = dct.cat
    f = ct.base.field
    es = {X: idempotents_e(ct, dct, chars, X) for X in ct.base.objects}
    for X in ct.base.objects:
        e = es[X]
        total = cat.zero(X, X)
        for s in g.elements:
            total = vec_add(f, total, e[s])
            for t in g.elements:
                report.tick()
                prod = cat.compose(X, X, X, e[s], e[t])
                if prod != (e[s] if s == t else cat.zero(X, X)):
                    report.add("orthogonal-idempotents", X, s, t)
        report.tick()
        if total != cat.identity(X):
            report.add("sum-to-one", X)
        for s in g.elements:
            for t in g.elements:
                Xt = ct.action.obj(t, X)
                tau = _tau(ct, dct, X, t)
                report.tick()
                lhs = cat.compose(X, Xt, Xt, es[Xt][s], tau)
                rhs = cat.compose(X, X, Xt, tau, es[X][g.mul(s, t)])
                if lhs != rhs:
                    report.add("conjugacy", X, s, t)
        for Y in ct.base.objects:
            report.tick()
            expected = chars.order * ct.cat.dim(X, Y)
            if cat.dim(X, Y) != expected:
                report.add("dimension", X, Y, detail=f"{cat.dim(X, Y)} vs {expected}")
    witnesses = {
        X: {s: [f.format(c) for c in v] for s, v in e.items()} for X, e in es.items()
    }
    return CheckResult.from_validation(name, report, idempotents=witnesses)


@dataclass
class Theta:
    """Θ with its target: the Karoubi objects X@σ = (X, e_σ) of TGĜ."""

    functor: Bifunctor
    karoubi: KaroubiSubcategory
    double: CrossedTriple
    idempotents: Dict[str, Dict[str, Vector]]
    density_witnesses: Dict[str, List[Tuple[str, Vector]]]


def _at(X: str, s: str) -> str:
    return f"{X}@{s}"


def theta(ct: CrossedTriple, chars: CharacterGroup) -> Theta:
    dct = double_crossed(ct, chars)
    g, objs = ct.group, ct.base.objects
    base = ct.base
    es = {X: idempotents_e(ct, dct, chars, X) for X in objs}
    kar = karoubi_subcategory(
        dct.triple,
        {
            _at(X, s): AddObject((X,), ((es[X][s],),))
            for X in objs
            for s in g.elements
        },
    )
    field = base.field
    one = g.unit
    hom_mats, bim_mats = {}, {}
    for X in objs:
        for Y in objs:
            P, Q = _at(X, one), _at(Y, one)

            def on_hom(a, X=X, Y=Y, P=P, Q=Q):
                lifted = dct.embed(X, Y, ct.embed(X, Y, a))
                cut = dct.cat.compose(X, X, Y, lifted, es[X][one])
                return kar.hom_coordinates(P, Q, ((cut,),))

            def on_elem(x, X=X, Y=Y, P=P, Q=Q):
                lifted = dct.embed_element(X, Y, ct.embed_element(X, Y, x))
                cut = dct.bim.act_right(X, X, Y, lifted, es[X][one])
                return kar.element_coordinates(P, Q, ((cut,),))

            hom_mats[(X, Y)] = linear_map(
                field, base.cat.dim(X, Y), kar.triple.cat.dim(P, Q), on_hom
            )
            bim_mats[(X, Y)] = linear_map(
                field, base.bim.dim(X, Y), kar.triple.bim.dim(P, Q), on_elem
            )
    F = Bifunctor(
        base, kar.triple, {X: _at(X, one) for X in objs}, hom_mats, bim_mats, name="Θ"
    )
    # (Z, e_σ) ≅ (Z^σ, e_1) through e_1∘[σ] = [σ]∘e_σ
    witnesses: Dict[str, List[Tuple[str, Vector]]] = {}
    for Z in objs:
        for s in g.elements:
            Zs = ct.action.obj(s, Z)
            arrow = dct.cat.compose(Z, Z, Zs, _tau(ct, dct, Z, s), es[Z][s])
            coords = kar.hom_coordinates(_at(Z, s), _at(Zs, one), ((arrow,),))
            witnesses[_at(Z, s)] = [(Zs, coords)]
    logger.info("Θ built into %d Karoubi objects", len(kar.objects))
    return Theta(F, kar, dct, es, witnesses)


def check_character_duality(
    ct: CrossedTriple,
    chars: CharacterGroup,
    settings: SearchSettings,
    name: str = "character-duality",
) -> List[CheckResult]:
    """Ĝ acts on TG, the e_σ behave, and Θ: add T -> add TGĜ is an equivalence."""
    results = [
        CheckResult.from_validation(
            "character-orthogonality",
            check_orthogonality(chars),
            characters=chars.to_json(),
        )
    ]
    act = hat_action(ct, chars)
    results.append(
        CheckResult.from_validation("character-action", validate_action(act))
    )
    th = theta(ct, chars)
    results.append(check_idempotents(ct, th.double, chars))
    results.append(
        is_equivalence(th.functor, settings, th.density_witnesses, name=name)
    )
    return results


def theta_el_object(ct: CrossedTriple, th: Theta, x: ElObject) -> ElObject:
    """Θx: carrier (X, e_1) summand-wise, element x[1]·e_1."""
    dct, one = th.double, ct.group.unit
    summands = x.summands
    e1 = [th.idempotents[X][one] for X in summands]

    def lift(Xj, Xi, a):
        return dct.embed(Xj, Xi, ct.embed(Xj, Xi, a))

    def lift_element(Xj, Xi, v):
        return dct.embed_element(Xj, Xi, ct.embed_element(Xj, Xi, v))

    idem = tuple(
        tuple(
            e1[i] if i == j else dct.cat.zero(Xj, Xi) for j, Xj in enumerate(summands)
        )
        for i, Xi in enumerate(summands)
    )
    if x.carrier.idem is not None:
        idem = tuple(
            tuple(
                dct.cat.compose(
                    Xj, Xj, Xi, lift(Xj, Xi, x.carrier.idem[i][j]), e1[j]
                )
                for j, Xj in enumerate(summands)
            )
            for i, Xi in enumerate(summands)
        )
    elem = tuple(
        tuple(
            dct.bim.act_right(Xj, Xj, Xi, lift_element(Xj, Xi, x.elem[i][j]), e1[j])
            for j, Xj in enumerate(summands)
        )
        for i, Xi in enumerate(summands)
    )
    return el_object(
        dct.triple, AddObject(summands, idem), elem, name=f"Θ({x.label()})"
    )


def check_elements_duality(
    ct: CrossedTriple,
    chars: CharacterGroup,
    objects: Sequence[ElObject],
    name: str = "elements-duality",
    th: Optional[Theta] = None,
) -> CheckResult:
    """dim El(T)(x, y) = dim El(TGĜ)(Θx, Θy) on every pair of the given fragment."""
    th = th or theta(ct, chars)
    report = ValidationReport(subject=name)
    images = [theta_el_object(ct, th, x) for x in objects]
    dims = []
    for x, tx in zip(objects, images):
        for y, ty in zip(objects, images):
            left = ElHomSpace(ct.base, x, y).dim
            right = ElHomSpace(th.double.triple, tx, ty).dim
            dims.append([x.label(), y.label(), left, right])
            report.tick()
            if left != right:
                report.add(
                    "dimension", x.label(), y.label(), detail=f"{left} vs {right}"
                )
    return CheckResult.from_validation(name, report, dims=dims)
