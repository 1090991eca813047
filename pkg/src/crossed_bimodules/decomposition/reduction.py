"""How an indecomposable X of A decomposes in the crossed category AG.

Only the stabilizer H = {σ : X^σ ≅ X} matters. With isomorphisms φ_σ: X^σ -> X
the group H acts on A = A(X, X) by T'_σ(a) = φ_σ a^σ φ_σ⁻¹ with factors

    λ'_{σ,τ} = φ_σ ∘ (φ_τ)^σ ∘ λ_{σ,τ}(X) ∘ φ_{στ}⁻¹,

and a[σ] |-> a·φ_σ[σ] identifies A(H, T', λ') with AH(X, X). Over a finite
field D = A/rad A is commutative, so inner automorphisms of D are trivial,
d_ρ = 1 and μ is the image of λ' in D.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..api.models import (
    CheckResult,
    CrossCheck,
    DecompositionReport,
    SearchSettings,
    ValidationReport,
)
from ..categories.additive import AddObject, invert_morphism
from ..categories.search import find_invertible
from ..center.center import is_separable
from ..crossed.crossed_triple import CrossedTriple, build_crossed
from ..errors import PreconditionError, VerificationError
from ..exact import Mat, SubspaceBasis, Vector, kernel_vectors, linear_map, rank, span
from ..groups.action import GroupAction
from ..groups.finite_group import FiniteGroup
from .algebra import AlgebraPresentation, Quotient, endomorphism_algebra, hom_algebra
from .idempotents import central_idempotents, count_simple_components
from .krull_schmidt import decompose_algebra
from .radical import radical, radical_category

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]


@dataclass(frozen=True)
class Stabilizer:
    """H = {σ : X^σ ≅ X} with chosen isomorphisms φ_σ: X^σ -> X."""

    obj: str
    subgroup: FiniteGroup
    witnesses: Dict[str, Vector]
    inconclusive: Tuple[str, ...] = ()

    @property
    def conclusive(self) -> bool:
        return not self.inconclusive


def stabilizer(act: GroupAction, X: str, settings: SearchSettings) -> Stabilizer:
    g, cat = act.group, act.triple.cat
    witnesses: Dict[str, Vector] = {}
    open_: List[str] = []
    for s in g.elements:
        Xs = act.obj(s, X)
        if Xs == X:
            witnesses[s] = cat.identity(X)
            continue
        if cat.dim(Xs, X) != cat.dim(X, Xs):
            continue
        outcome = find_invertible(
            cat.field,
            cat.dim(Xs, X),
            cat.basis_vectors(Xs, X),
            lambda v, Xs=Xs: invert_morphism(cat, Xs, X, v) is not None,
            settings,
        )
        if outcome.found:
            witnesses[s] = outcome.witness
        elif not outcome.exhaustive:
            open_.append(s)
    members = frozenset(witnesses)
    if not g.is_subgroup(members):
        raise VerificationError(
            f"stabilizer of {X} is not closed",
            {"object": X, "elements": sorted(members)},
        )
    H = g.subgroup(members, name=f"Stab({X})")
    if open_:
        logger.warning("isomorphism X^σ ≅ %s undecided for %s", X, open_)
    logger.info("stabilizer of %s has order %d", X, len(H))
    return Stabilizer(X, H, witnesses, tuple(open_))


def _crossed_algebra(
    base: AlgebraPresentation,
    group: FiniteGroup,
    act: Dict[str, Mat],
    factors: Dict[Pair, Vector],
    name: str,
) -> AlgebraPresentation:
    """base(group, act, factors), σ-major basis.

    a[σ]·b[τ] = a·act_σ(b)·factors_{σ,τ}[στ].
    """
    n, G = base.dim, group.elements
    pos = {s: k * n for k, s in enumerate(G)}
    names = [f"{b}[{s}]" for s in G for b in base.names]

    def product(j, i):
        s, t = G[j // n], G[i // n]
        a, b = base.basis_vector(j % n), base.basis_vector(i % n)
        value = base.mul(base.mul(a, act[s].apply(b)), factors[(s, t)])
        out = [base.field.zero] * (n * len(G))
        o = pos[group.mul(s, t)]
        out[o : o + n] = value
        return tuple(out)

    unit = [base.field.zero] * (n * len(G))
    unit[pos[group.unit] : pos[group.unit] + n] = base.unit
    return AlgebraPresentation.from_products(base.field, names, product, unit, name)


@dataclass
class CocycleReduction:
    """The data of the reduction chain at one object.

    Attributes:
        stab: the stabilizer with its φ witnesses
        end: A = A(X, X)
        transport: T'_σ as matrices on A
        factors: λ'_{σ,τ} in A
        residue: D = A/rad A
        residue_action: the induced automorphisms of D
        mu: images of λ' in D
        normal: N = {σ : T'_σ is the identity on D}
        symmetric: H₀ = {σ : μ_{σ,τ} = μ_{τ,σ} for all τ}
        report: factor-system and transport checks
    """

    stab: Stabilizer
    end: AlgebraPresentation
    transport: Dict[str, Mat]
    factors: Dict[Pair, Vector]
    residue: Quotient
    residue_action: Dict[str, Mat]
    mu: Dict[Pair, Vector]
    normal: FrozenSet[str]
    symmetric: FrozenSet[str]
    report: ValidationReport = field(
        default_factory=lambda: ValidationReport(subject="reduction")
    )

    @property
    def subgroup(self) -> FiniteGroup:
        return self.stab.subgroup

    @property
    def residue_dim(self) -> int:
        return self.residue.algebra.dim

    def residue_crossed_algebra(self) -> AlgebraPresentation:
        """DH = D(H, T̄', μ)."""
        return _crossed_algebra(
            self.residue.algebra, self.subgroup, self.residue_action, self.mu, name="DH"
        )

    def reduced_crossed_algebra(self) -> AlgebraPresentation:
        return _crossed_algebra(
            self.end, self.subgroup, self.transport, self.factors, name="A(H,T',λ')"
        )


def _is_field(D: AlgebraPresentation) -> bool:
    if not D.is_commutative():
        return False
    if D.field.is_prime:
        return count_simple_components(D) == 1
    parts, conclusive = central_idempotents(D, random.Random(0))
    return conclusive and len(parts) == 1


def reduce_cocycle(ct: CrossedTriple, stab: Stabilizer) -> CocycleReduction:
    act, lam, cat = ct.action, ct.factors, ct.base.cat
    X, H = stab.obj, stab.subgroup
    field_ = cat.field
    A = hom_algebra(cat, X)
    phi = stab.witnesses
    phi_inv = {
        s: invert_morphism(cat, act.obj(s, X), X, phi[s]) for s in H.elements
    }
    report = ValidationReport(subject=f"reduction at {X}")

    def transport(s: str, a) -> Vector:
        Xs = act.obj(s, X)
        a_s = act.act_morphism(s, X, X, a)
        return cat.compose(X, Xs, X, phi[s], cat.compose(X, Xs, Xs, a_s, phi_inv[s]))

    T = {
        s: linear_map(field_, A.dim, A.dim, lambda a, s=s: transport(s, a))
        for s in H.elements
    }
    factors: Dict[Pair, Vector] = {}
    for s in H.elements:
        for t in H.elements:
            st = H.mul(s, t)
            Xt, Xst = act.obj(t, X), act.obj(st, X)
            Xts, Xs = act.obj(s, Xt), act.obj(s, X)
            phi_t_s = act.act_morphism(s, Xt, X, phi[t])
            factors[(s, t)] = cat.compose_path(
                [X, Xst, Xts, Xs, X],
                [phi_inv[st], lam.value(s, t, X), phi_t_s, phi[s]],
            )
    basis = A.basis_vectors()
    for s in H.elements:
        for a in basis:
            for b in basis:
                report.tick()
                if T[s].apply(A.mul(a, b)) != A.mul(T[s].apply(a), T[s].apply(b)):
                    report.add("transport-multiplicative", s)
        report.tick()
        if T[s].apply(A.unit) != A.unit:
            report.add("transport-unit", s)
    for s in H.elements:
        for t in H.elements:
            st = H.mul(s, t)
            for a in basis:
                report.tick()
                lhs = A.mul(factors[(s, t)], T[st].apply(a))
                rhs = A.mul(T[s].apply(T[t].apply(a)), factors[(s, t)])
                if lhs != rhs:
                    report.add("naturality", s, t)
            for r in H.elements:
                report.tick()
                lhs = A.mul(T[r].apply(factors[(s, t)]), factors[(r, st)])
                rhs = A.mul(factors[(r, s)], factors[(H.mul(r, s), t)])
                if lhs != rhs:
                    report.add("cocycle", r, s, t)
    if not report.ok:
        raise VerificationError(
            f"λ' at {X} is not a factor system for T'",
            {"violations": [v.model_dump() for v in report.violations]},
        )

    J = radical(A)
    for s in H.elements:
        for r in J.rows:
            if not J.contains(T[s].apply(r)):
                raise VerificationError(
                    f"T'_{s} does not preserve rad A({X},{X})", {"element": s}
                )
    q = A.quotient(J)
    D = q.algebra
    if not _is_field(D):
        if D.is_commutative():
            raise PreconditionError(f"{X} is decomposable in the base category")
        raise PreconditionError(
            f"A({X},{X})/rad is not commutative; this reduction is not supported"
        )
    residue_action = {
        s: linear_map(
            field_, D.dim, D.dim, lambda d, s=s: q.project(T[s].apply(q.lift(d)))
        )
        for s in H.elements
    }
    ident = Mat.identity(field_, D.dim)
    normal = frozenset(s for s in H.elements if residue_action[s] == ident)
    mu = {key: q.project(v) for key, v in factors.items()}
    symmetric = frozenset(
        s for s in H.elements if all(mu[(s, t)] == mu[(t, s)] for t in H.elements)
    )
    logger.info(
        "reduction at %s: |H| = %d, |N| = %d, |H0| = %d",
        X,
        len(H),
        len(normal),
        len(symmetric),
    )
    return CocycleReduction(
        stab, A, T, factors, q, residue_action, mu, normal, symmetric, report
    )


def check_reduction_isomorphism(
    ct: CrossedTriple, red: CocycleReduction, name: str = "reduced-crossed-algebra"
) -> CheckResult:
    """a[σ] |-> a·φ_σ[σ] is an algebra isomorphism A(H, T', λ') -> AH(X, X)."""
    X, H = red.stab.obj, red.subgroup
    cat = ct.base.cat
    ctH = build_crossed(ct.base, ct.action.restrict(H), ct.factors.restrict(H))
    source = red.reduced_crossed_algebra()
    n = red.end.dim

    def image(v):
        out = ctH.cat.zero(X, X)
        for k, s in enumerate(H.elements):
            a = v[k * n : (k + 1) * n]
            comp = cat.compose(ct.action.obj(s, X), X, X, a, red.stab.witnesses[s])
            tagged = ctH.tagged(X, X, s, comp)
            out = tuple(cat.field.add(x, y) for x, y in zip(out, tagged))
        return out

    M = linear_map(cat.field, source.dim, ctH.cat.dim(X, X), image)
    report = ValidationReport(subject=name)
    report.tick()
    if M.rows != M.cols or rank(M) != M.cols:
        report.add("bijection", X, detail=f"rank {rank(M)} of a {M.rows}x{M.cols} map")
    basis = source.basis_vectors()
    for u in basis:
        for v in basis:
            report.tick()
            product = ctH.crossed_compose(X, X, X, M.apply(u), M.apply(v))
            if M.apply(source.mul(u, v)) != product:
                report.add("multiplicative", X)
    return CheckResult.from_validation(name, report, dim=source.dim)


def check_residue_center(
    red: CocycleReduction, name: str = "residue-center"
) -> CheckResult:
    """Z(DH) equals {Σ_{σ∈N} a_σ[σ] : T̄_τ(a_σ)μ_{τ,σ} = a_{τστ⁻¹}μ_{τστ⁻¹,τ}}."""
    H = red.subgroup
    D = red.residue.algebra
    DH = red.residue_crossed_algebra()
    n, G = D.dim, H.elements
    center = DH.center()
    N = [s for s in G if s in red.normal]

    def equations(v):
        coeff = {s: v[k * n : (k + 1) * n] for k, s in enumerate(N)}
        out: List = []
        for t in G:
            for s in N:
                c = H.product(t, s, H.inv(t))
                lhs = D.mul(red.residue_action[t].apply(coeff[s]), red.mu[(t, s)])
                rhs = D.mul(coeff[c], red.mu[(c, t)])
                out.extend(D.sub(lhs, rhs))
        return out

    M = linear_map(D.field, n * len(N), n * len(N) * len(G), equations)

    def embed(v):
        out = [D.field.zero] * DH.dim
        for k, s in enumerate(N):
            o = G.index(s) * n
            out[o : o + n] = v[k * n : (k + 1) * n]
        return tuple(out)

    formula = span(D.field, DH.dim, [embed(v) for v in kernel_vectors(M)])
    report = ValidationReport(subject=name)
    report.tick()
    if formula != center:
        report.add(
            "center-formula",
            detail=f"dim Z(DH) = {center.dim}, formula gives {formula.dim}",
        )
    components = None
    if D.field.is_prime:
        components = count_simple_components(DH.subalgebra(center, name="Z(DH)"))
    return CheckResult.from_validation(
        name, report, center_dim=center.dim, simple_components=components
    )


def _cross(
    applicable: bool, predicted: Optional[int], nu: int, reason: str
) -> CrossCheck:
    if not applicable:
        return CrossCheck(applicable=False, reason=reason)
    return CrossCheck(
        applicable=True, predicted=predicted, agrees=predicted == nu, reason=reason
    )


def nu(ct: CrossedTriple, X: str, settings: SearchSettings) -> DecompositionReport:
    """ν_G(X) from AG(X, X) directly, cross-checked against the reduction chain."""
    if not ct.base.field.is_prime:
        raise PreconditionError("ν is only counted over finite fields")
    report = decompose_algebra(
        endomorphism_algebra(ct.cat, AddObject.of(X)), X, settings
    )
    value = report.nu
    stab = stabilizer(ct.action, X, settings)
    H = stab.subgroup
    details = dict(report.details)
    details["stabilizer"] = list(H.elements)
    checks: Dict[str, CrossCheck] = {}
    try:
        red = reduce_cocycle(ct, stab)
    except PreconditionError as e:
        reason = str(e)
        for key in ("symmetric-subgroup", "cyclic-order", "trivial-kernel"):
            checks[key] = CrossCheck(applicable=False, reason=reason)
        report.cross_checks = checks
        report.details = details
        return report
    D = red.residue.algebra
    p = D.field.p
    DH = red.residue_crossed_algebra()
    Z = DH.subalgebra(DH.center(), name="Z(DH)")
    components = count_simple_components(Z)
    split = components == Z.dim
    field_is_k = D.dim == 1
    details.update(
        normal=sorted(red.normal, key=H.elements.index),
        h0=sorted(red.symmetric, key=H.elements.index),
        residue_dim=D.dim,
        center_split=split,
        mu={
            f"{s},{t}": [D.field.format(c) for c in v] for (s, t), v in red.mu.items()
        },
        residue_action_separable=len(red.normal) % p != 0,
    )
    h0_ok = H.is_subgroup(red.symmetric)
    abelian_ok = field_is_k and H.is_abelian and split
    checks["symmetric-subgroup"] = _cross(
        abelian_ok and h0_ok,
        len(red.symmetric),
        value,
        (
            "D = k, H abelian, Z(DH) split"
            if abelian_ok
            else "needs D = k, H abelian and a split Z(DH)"
        ),
    )
    cyclic_ok = (
        field_is_k
        and H.is_cyclic
        and split
        and red.symmetric == frozenset(H.elements)
    )
    checks["cyclic-order"] = _cross(
        cyclic_ok,
        len(H),
        value,
        (
            "D = k, H cyclic, μ symmetric"
            if cyclic_ok
            else "needs D = k, H cyclic, symmetric μ and a split Z(DH)"
        ),
    )
    trivial = red.normal == frozenset({H.unit})
    checks["trivial-kernel"] = _cross(
        trivial,
        1,
        value,
        "N = {1}: DH is central simple" if trivial else "N is not trivial",
    )
    if details["residue_action_separable"]:
        checks["residue-center"] = _cross(
            True, components, value, "simple components of Z(DH)"
        )
    report.cross_checks = checks
    report.details = details
    bad = {k: c for k, c in checks.items() if c.applicable and not c.agrees}
    if bad:
        logger.error("ν cross-check disagreement at %s: %s", X, sorted(bad))
        raise VerificationError(
            f"ν({X}) = {value} disagrees with {sorted(bad)}",
            {
                "object": X,
                "nu": value,
                "predicted": {k: c.predicted for k, c in bad.items()},
            },
        )
    return report


def check_stabilizer_reduction(
    ct: CrossedTriple,
    X: str,
    settings: SearchSettings,
    name: str = "stabilizer-reduction",
) -> CheckResult:
    """AG(X,X)/RG(X,X) ≅ AH(X,X)/RH(X,X) through the inclusion.

    Components a[σ] with σ outside H lie in the radical.
    """
    stab = stabilizer(ct.action, X, settings)
    H = stab.subgroup
    ctH = build_crossed(ct.base, ct.action.restrict(H), ct.factors.restrict(H))
    algG = endomorphism_algebra(ct.cat, AddObject.of(X))
    algH = endomorphism_algebra(ctH.cat, AddObject.of(X))
    JG, JH = radical(algG), radical(algH)
    qG, qH = algG.quotient(JG), algH.quotient(JH)
    report = ValidationReport(subject=name)
    cat = ct.base.cat

    def include(v):
        out = ct.cat.zero(X, X)
        for s in H.elements:
            tagged = ct.tagged(X, X, s, ctH.component(X, X, v, s))
            out = tuple(cat.field.add(a, b) for a, b in zip(out, tagged))
        return out

    def induced(c):
        hom = algH.blocks(qH.lift(c))[0][0]
        return qG.project(algG.coordinates(((include(hom),),)))

    M = linear_map(cat.field, qH.algebra.dim, qG.algebra.dim, induced)
    report.tick()
    if qG.algebra.dim != qH.algebra.dim or rank(M) != qH.algebra.dim:
        report.add(
            "quotient-map",
            X,
            detail=f"dims {qH.algebra.dim} -> {qG.algebra.dim}, rank {rank(M)}",
        )
    for s in ct.group.elements:
        if s in H:
            continue
        Xs = ct.action.obj(s, X)
        for a in cat.basis_vectors(Xs, X):
            report.tick()
            if not JG.contains(ct.tagged(X, X, s, a)):
                report.add("component-not-radical", s)
    if not stab.conclusive:
        return CheckResult(
            name=name,
            status="inconclusive",
            reason=f"isomorphism undecided for {list(stab.inconclusive)}",
        )
    witnesses = dict(subgroup=list(H.elements), quotient_dim=qG.algebra.dim)
    if cat.field.is_prime:
        for label, q in (("nu_g", qG), ("nu_h", qH)):
            S = q.algebra
            witnesses[label] = count_simple_components(S.subalgebra(S.center()))
    return CheckResult.from_validation(name, report, **witnesses)


def check_free_orbit_indecomposable(
    ct: CrossedTriple,
    X: str,
    settings: SearchSettings,
    name: str = "free-orbit-indecomposable",
) -> CheckResult:
    """An indecomposable X with trivial stabilizer stays indecomposable in AG."""
    A = hom_algebra(ct.base.cat, X)
    D = A.quotient(radical(A)).algebra
    if not _is_field(D):
        return CheckResult.skipped(
            name, f"{X} is not indecomposable with commutative residue ring"
        )
    stab = stabilizer(ct.action, X, settings)
    if len(stab.subgroup) != 1:
        return CheckResult.skipped(name, f"stabilizer of {X} is not trivial")
    report = ValidationReport(subject=name)
    dec = decompose_algebra(endomorphism_algebra(ct.cat, AddObject.of(X)), X, settings)
    report.tick()
    if len(dec.summands) != 1:
        report.add("decomposes", X, detail=f"{len(dec.summands)} summands")
    return CheckResult.from_validation(name, report, summands=len(dec.summands))


def crossed_radical_expected(ct: CrossedTriple, rad_base) -> Dict[Pair, SubspaceBasis]:
    """(rad A)G(X, Y) = ⊕_σ rad(X^σ, Y)[σ]."""
    out = {}
    objs = ct.base.objects
    for X in objs:
        for Y in objs:
            vecs = []
            for s in ct.group.elements:
                Xs = ct.action.obj(s, X)
                vecs.extend(ct.tagged(X, Y, s, r) for r in rad_base[(Xs, Y)].rows)
            out[(X, Y)] = span(ct.base.field, ct.cat.dim(X, Y), vecs)
    return out


def check_crossed_radical(
    ct: CrossedTriple, name: str = "crossed-radical"
) -> CheckResult:
    """rad(AG) = (rad A)G blockwise and AG/(rad A)G has zero radical."""
    if is_separable(ct.factors) is None:
        return CheckResult.skipped(name, "action is not separable")
    rad_base = radical_category(ct.base.cat)
    rad_crossed = radical_category(ct.cat)
    expected = crossed_radical_expected(ct, rad_base)
    report = ValidationReport(subject=name)
    for key, sub in expected.items():
        report.tick()
        if sub != rad_crossed[key]:
            report.add(
                "radical-mismatch",
                *key,
                detail=(
                    f"(rad A)G has dim {sub.dim}, "
                    f"rad AG has dim {rad_crossed[key].dim}"
                ),
            )
    objs = list(ct.base.objects)
    whole = endomorphism_algebra(ct.cat, AddObject(tuple(objs)))
    ideal_vecs = []
    for i, Y in enumerate(objs):
        for j, X in enumerate(objs):
            for r in expected[(X, Y)].rows:
                blocks = [[ct.cat.zero(Xs, Ys) for Xs in objs] for Ys in objs]
                blocks[i][j] = r
                ideal_vecs.append(
                    whole.coordinates(tuple(tuple(row) for row in blocks))
                )
    ideal = span(ct.base.field, whole.dim, ideal_vecs)
    residue = radical(whole.quotient(ideal).algebra, verify=False)
    report.tick()
    if residue.dim:
        report.add(
            "not-semisimple", detail=f"ĀG has radical of dimension {residue.dim}"
        )
    return CheckResult.from_validation(
        name,
        report,
        base_radical_dims={f"{X},{Y}": s.dim for (X, Y), s in rad_base.items()},
        crossed_radical_dims={f"{X},{Y}": s.dim for (X, Y), s in rad_crossed.items()},
    )
