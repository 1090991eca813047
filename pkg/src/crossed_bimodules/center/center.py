"""The center of a triple, its induced group action, traces and separability.

A center element is a family α_X ∈ A(X, X) commuting with every morphism and
every bimodule element and killed by ∂. The group acts on the center by

    (α^σ)_X = λ⁻¹_{σ,σ⁻¹}(X) ∘ (α_{X^{σ⁻¹}})^σ ∘ λ_{σ,σ⁻¹}(X)

and this action has trivial factors, so the skew group ring ZG is plain.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..api.models import CheckResult, ValidationReport
from ..categories.fincat import BimoduleTriple
from ..crossed.crossed_triple import CrossedTriple
from ..exact import (
    SubspaceBasis,
    Vector,
    kernel_vectors,
    linear_map,
    solve_vector,
    span,
    vec_add,
    vec_sub,
)
from ..groups.action import FactorSystem
from ..groups.finite_group import FiniteGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CenterElement:
    """α = {α_X} stored per object in the category's object order."""

    components: Tuple[Tuple[str, Vector], ...]

    @classmethod
    def from_dict(
        cls, t: BimoduleTriple, values: Mapping[str, Sequence]
    ) -> "CenterElement":
        return cls(tuple((X, tuple(values[X])) for X in t.objects))

    def __getitem__(self, X: str) -> Vector:
        for Y, v in self.components:
            if Y == X:
                return v
        raise KeyError(X)

    def as_dict(self) -> Dict[str, Vector]:
        return dict(self.components)

    def flat(self) -> Vector:
        return tuple(c for _, v in self.components for c in v)

    def to_json(self) -> Dict[str, List[str]]:
        return {X: [str(c) for c in v] for X, v in self.components}


class CenterLayout:
    """Flat coordinates of families (α_X) over the objects of a triple."""

    def __init__(self, t: BimoduleTriple):
        self.triple = t
        self.offsets: Dict[str, int] = {}
        pos = 0
        for X in t.objects:
            self.offsets[X] = pos
            pos += t.cat.dim(X, X)
        self.dim = pos

    def unflatten(self, v: Sequence) -> CenterElement:
        cat = self.triple.cat
        return CenterElement(
            tuple(
                (X, tuple(v[self.offsets[X] : self.offsets[X] + cat.dim(X, X)]))
                for X in self.triple.objects
            )
        )

    def flatten(self, alpha: CenterElement) -> Vector:
        return alpha.flat()


def _defects(t: BimoduleTriple, alpha: CenterElement) -> Vector:
    """Stacked α_Y a − a α_X, α_Y x − x α_X and ∂α_X over all basis a and x."""
    cat, bim = t.cat, t.bim
    out: List = []
    for X in t.objects:
        out.extend(t.diff.apply(X, X, alpha[X]))
        for Y in t.objects:
            for a in cat.basis_vectors(X, Y):
                left = cat.compose(X, Y, Y, alpha[Y], a)
                right = cat.compose(X, X, Y, a, alpha[X])
                out.extend(vec_sub(t.field, left, right))
            for i in range(bim.dim(X, Y)):
                x = bim.unit(X, Y, i)
                left = bim.act_left(X, Y, Y, alpha[Y], x)
                right = bim.act_right(X, X, Y, x, alpha[X])
                out.extend(vec_sub(t.field, left, right))
    return tuple(out)


def is_central(t: BimoduleTriple, alpha: CenterElement) -> bool:
    return all(c == 0 for c in _defects(t, alpha))


def center_basis(
    t: BimoduleTriple, restrict: Optional[Mapping[str, SubspaceBasis]] = None
) -> List[CenterElement]:
    """Basis of Z(T), or of its meet with prescribed subspaces of each A(X, X)."""
    layout = CenterLayout(t)
    field = t.field
    spaces = restrict or {
        X: SubspaceBasis.full(field, t.cat.dim(X, X)) for X in t.objects
    }
    param_offsets: Dict[str, int] = {}
    pos = 0
    for X in t.objects:
        param_offsets[X] = pos
        pos += spaces[X].dim

    def embed(c):
        return tuple(
            v
            for X in t.objects
            for v in spaces[X].combine(
                c[param_offsets[X] : param_offsets[X] + spaces[X].dim]
            )
        )

    rows = len(_defects(t, layout.unflatten((field.zero,) * layout.dim)))
    M = linear_map(field, pos, rows, lambda c: _defects(t, layout.unflatten(embed(c))))
    flat = span(field, layout.dim, [embed(k) for k in kernel_vectors(M)])
    basis = [layout.unflatten(r) for r in flat.rows]
    logger.debug("center of %s has dimension %d", t.name, len(basis))
    return basis


def center_span(t: BimoduleTriple, elements: Iterable[CenterElement]) -> SubspaceBasis:
    return span(t.field, CenterLayout(t).dim, [a.flat() for a in elements])


def center_product(
    t: BimoduleTriple, alpha: CenterElement, beta: CenterElement
) -> CenterElement:
    return CenterElement(
        tuple((X, t.cat.compose(X, X, X, alpha[X], beta[X])) for X in t.objects)
    )


def center_sum(
    t: BimoduleTriple, alpha: CenterElement, beta: CenterElement
) -> CenterElement:
    return CenterElement(
        tuple((X, vec_add(t.field, alpha[X], beta[X])) for X in t.objects)
    )


def center_one(t: BimoduleTriple) -> CenterElement:
    return CenterElement(tuple((X, t.cat.identity(X)) for X in t.objects))


def center_zero(t: BimoduleTriple) -> CenterElement:
    return CenterElement(tuple((X, t.cat.zero(X, X)) for X in t.objects))


def center_act(lam: FactorSystem, s: str, alpha: CenterElement) -> CenterElement:
    """α^σ."""
    act = lam.action
    g, cat = act.group, act.triple.cat
    si = g.inv(s)
    out = []
    for X in act.triple.objects:
        Y = act.obj(si, X)
        W = lam.target(s, si, X)
        image = act.act_morphism(s, Y, Y, alpha[Y])
        v = cat.compose(X, W, W, image, lam.value(s, si, X))
        out.append((X, cat.compose(X, W, X, lam.inverse(s, si, X), v)))
    return CenterElement(tuple(out))


def trace(
    lam: FactorSystem, alpha: CenterElement, subgroup: Optional[FiniteGroup] = None
) -> CenterElement:
    """tr α = Σ_σ α^σ, over `subgroup` when given."""
    t = lam.action.triple
    elems = subgroup.elements if subgroup is not None else lam.action.group.elements
    acc = center_zero(t)
    for s in elems:
        acc = center_sum(t, acc, center_act(lam, s, alpha))
    return acc


def invariant_basis(
    lam: FactorSystem, basis: Optional[List[CenterElement]] = None
) -> List[CenterElement]:
    """Basis of Z(T)^G."""
    t = lam.action.triple
    basis = center_basis(t) if basis is None else basis
    layout = CenterLayout(t)
    field = t.field
    sub = span(field, layout.dim, [a.flat() for a in basis])

    def moved(c):
        alpha = layout.unflatten(sub.combine(c))
        out: List = []
        for s in lam.action.group.elements:
            out.extend(vec_sub(field, center_act(lam, s, alpha).flat(), alpha.flat()))
        return tuple(out)

    M = linear_map(field, sub.dim, layout.dim * len(lam.action.group), moved)
    inv = span(field, layout.dim, [sub.combine(k) for k in kernel_vectors(M)])
    return [layout.unflatten(r) for r in inv.rows]


def is_separable(lam: FactorSystem) -> Optional[CenterElement]:
    """Some α in the center with tr α = 1, or None."""
    t = lam.action.triple
    basis = center_basis(t)
    layout = CenterLayout(t)
    sub = span(t.field, layout.dim, [a.flat() for a in basis])
    M = linear_map(
        t.field,
        sub.dim,
        layout.dim,
        lambda c: trace(lam, layout.unflatten(sub.combine(c))).flat(),
    )
    sol = solve_vector(M, center_one(t).flat())
    group = lam.action.group.name
    if sol is None:
        logger.info("action of %s on %s is not separable", group, t.name)
        return None
    alpha = layout.unflatten(sub.combine(sol))
    logger.info("action of %s on %s is separable", group, t.name)
    return alpha


# -- separability element in ZG ⊗_Z ZG --------------------------------------

SeparabilityElement = Dict[Tuple[str, str], CenterElement]


def separability_element(
    lam: FactorSystem, alpha: CenterElement
) -> SeparabilityElement:
    """t = Σ_σ α^σ[σ] ⊗ [σ⁻¹], stored as the coefficient z_{σ,τ} of [σ] ⊗ [τ]."""
    g = lam.action.group
    return {(s, g.inv(s)): center_act(lam, s, alpha) for s in g.elements}


def _left_multiply(
    lam: FactorSystem, beta: CenterElement, u: str, sep: SeparabilityElement
) -> SeparabilityElement:
    """β[u]·z[σ]⊗[τ] = β z^u [uσ] ⊗ [τ]."""
    t, g = lam.action.triple, lam.action.group
    out: SeparabilityElement = {}
    for (s, v), z in sep.items():
        key = (g.mul(u, s), v)
        term = center_product(t, beta, center_act(lam, u, z))
        out[key] = center_sum(t, out[key], term) if key in out else term
    return out


def _right_multiply(
    lam: FactorSystem, sep: SeparabilityElement, beta: CenterElement, u: str
) -> SeparabilityElement:
    """z[σ]⊗[τ]·β[u] = z β^{στ} [σ] ⊗ [τu]."""
    t, g = lam.action.triple, lam.action.group
    out: SeparabilityElement = {}
    for (s, v), z in sep.items():
        key = (s, g.mul(v, u))
        term = center_product(t, z, center_act(lam, g.mul(s, v), beta))
        out[key] = center_sum(t, out[key], term) if key in out else term
    return out


def _same(t: BimoduleTriple, a: SeparabilityElement, b: SeparabilityElement) -> bool:
    zero = center_zero(t)
    return all(a.get(k, zero) == b.get(k, zero) for k in set(a) | set(b))


def check_separability_element(
    lam: FactorSystem, sep: SeparabilityElement
) -> ValidationReport:
    """μ(t) = 1 and β[τ]·t = t·β[τ] for every basis β of the center and every τ."""
    t, g = lam.action.triple, lam.action.group
    report = ValidationReport(subject="separability element")
    products: Dict[str, CenterElement] = {s: center_zero(t) for s in g.elements}
    for (s, v), z in sep.items():
        key = g.mul(s, v)
        products[key] = center_sum(t, products[key], z)
    for s, z in products.items():
        report.tick()
        expected = center_one(t) if s == g.unit else center_zero(t)
        if z != expected:
            report.add("multiplication", s, detail="μ(t) differs from 1 at this tag")
    for beta in center_basis(t):
        for u in g.elements:
            report.tick()
            left = _left_multiply(lam, beta, u, sep)
            if not _same(t, left, _right_multiply(lam, sep, beta, u)):
                report.add("commutation", u)
    return report


# -- checks ------------------------------------------------------------------


def check_center_action(lam: FactorSystem, name: str = "center-action") -> CheckResult:
    """α^σ central, (α^τ)^σ = α^{στ} and tr α invariant, on a center basis."""
    t, g = lam.action.triple, lam.action.group
    report = ValidationReport(subject=name)
    basis = center_basis(t)
    for k, alpha in enumerate(basis):
        images = {s: center_act(lam, s, alpha) for s in g.elements}
        for s, image in images.items():
            report.tick()
            if not is_central(t, image):
                report.add("not-central", k, s)
            for u in g.elements:
                report.tick()
                if center_act(lam, s, images[u]) != images[g.mul(s, u)]:
                    report.add("composition", k, s, u)
        tr = trace(lam, alpha)
        for s in g.elements:
            report.tick()
            if center_act(lam, s, tr) != tr:
                report.add("trace-invariance", k, s)
    return CheckResult.from_validation(name, report, center_dim=len(basis))


def check_center_invariants(
    ct: CrossedTriple, name: str = "center-invariants"
) -> CheckResult:
    """Z(T)^G at tag 1 equals the tag-1 part of Z(TG); traces land in Z(TG)."""
    lam = ct.factors
    T, TG = ct.base, ct.triple
    field = T.field
    report = ValidationReport(subject=name)
    basis = center_basis(T)
    invariants = invariant_basis(lam, basis)

    def embed(alpha: CenterElement) -> CenterElement:
        return CenterElement(tuple((X, ct.embed(X, X, alpha[X])) for X in T.objects))

    for k, alpha in enumerate(invariants):
        report.tick()
        if not is_central(TG, embed(alpha)):
            report.add("invariant-not-central", k)
    for k, alpha in enumerate(basis):
        report.tick()
        if not is_central(TG, embed(trace(lam, alpha))):
            report.add("trace-not-central", k)
    tag_one = {
        X: span(
            field,
            TG.cat.dim(X, X),
            ct.embedding_matrix(X, X).transpose().to_rows(),
        )
        for X in T.objects
    }
    restricted = center_basis(TG, restrict=tag_one)
    unit = ct.group.unit
    pulled = [
        CenterElement(
            tuple((X, ct.component(X, X, alpha[X], unit)) for X in T.objects)
        )
        for alpha in restricted
    ]
    report.tick()
    if center_span(T, pulled) != center_span(T, invariants):
        report.add(
            "mismatch",
            detail=(
                f"dim Z(T)^G = {len(invariants)}, "
                f"tag-1 part of Z(TG) has dim {len(pulled)}"
            ),
        )
    full = center_basis(TG)
    return CheckResult.from_validation(
        name,
        report,
        center_dim=len(basis),
        invariant_dim=len(invariants),
        crossed_center_dim=len(full),
        crossed_center_tag_one_dim=len(restricted),
    )


def check_subgroup_heredity(
    lam: FactorSystem,
    alpha: CenterElement,
    subgroups: Optional[Iterable[Iterable[str]]] = None,
    name: str = "subgroup-heredity",
) -> CheckResult:
    """β = Σ_{σ∈R} α^σ over right coset representatives of H satisfies tr_H β = 1."""
    t, g = lam.action.triple, lam.action.group
    report = ValidationReport(subject=name)
    one = center_one(t)
    if subgroups is not None:
        subs = [frozenset(h) for h in subgroups]
    else:
        subs = g.subgroups()
    checked = []
    for h in subs:
        H = g.subgroup(h)
        beta = center_zero(t)
        for s in g.right_coset_representatives(H.elements):
            beta = center_sum(t, beta, center_act(lam, s, alpha))
        report.tick()
        if trace(lam, beta, subgroup=H) != one:
            report.add("heredity", *H.elements)
        checked.append(list(H.elements))
    return CheckResult.from_validation(name, report, subgroups=checked)


def check_separability_witness(
    lam: FactorSystem, alpha: CenterElement, name: str = "separability-element"
) -> CheckResult:
    sep = separability_element(lam, alpha)
    report = check_separability_element(lam, sep)
    witness = {f"{s}⊗{u}": z.to_json() for (s, u), z in sep.items()}
    return CheckResult.from_validation(name, report, element=witness)
