"""Φ: El(T) -> El(TG), Ψ: El(TG) -> El(T), their adjunction and a split pair.

Ψ(ξ) lives on the carrier ⊕_σ X^σ, laid out σ-major over the summands of X.
For ξ with components x_ρ, the block of ξ̃ from (τ, k) to (σ, i) is
x_ρ[i][k]^σ · λ_{σ,ρ}(X_k) with ρ = σ⁻¹τ; morphisms follow the same rule.
"""

import logging
from typing import Callable, Dict, Sequence, Tuple

from ..api.models import CheckResult, ValidationReport
from ..categories.additive import AddObject, Blocks, compose_blocks, identity_of
from ..crossed.crossed_triple import CrossedTriple
from ..errors import NotAMorphismError, PreconditionError, VerificationError
from ..exact import Mat, Vector, rank, vec_add
from .el_category import ElHomSpace, ElObject, act_el_object, is_el_morphism

logger = logging.getLogger(__name__)


def _map_blocks(
    src: Sequence[str], dst: Sequence[str], fn: Callable[[int, int], Vector]
) -> Blocks:
    return tuple(tuple(fn(i, j) for j in range(len(src))) for i in range(len(dst)))


# -- Φ -------------------------------------------------------------------


def phi(ct: CrossedTriple, x: ElObject) -> ElObject:
    """Φ(x) = x[1] on the same carrier."""
    s = x.summands
    idem = None
    if x.carrier.idem is not None:
        idem = phi_morphism(ct, s, s, x.carrier.idem)
    elem = _map_blocks(s, s, lambda i, j: ct.embed_element(s[j], s[i], x.elem[i][j]))
    name = f"{x.name}[1]" if x.name else None
    return ElObject(AddObject(s, idem), elem, name)


def phi_morphism(
    ct: CrossedTriple, src: Sequence[str], dst: Sequence[str], a: Blocks
) -> Blocks:
    return _map_blocks(src, dst, lambda i, j: ct.embed(src[j], dst[i], a[i][j]))


def tag_morphism(
    ct: CrossedTriple, s: str, src: Sequence[str], dst: Sequence[str], a: Blocks
) -> Blocks:
    """a[σ] for a: X^σ -> Y given blockwise; src lists the summands of X."""
    return _map_blocks(src, dst, lambda i, j: ct.tagged(src[j], dst[i], s, a[i][j]))


def crossed_component(
    ct: CrossedTriple, s: str, src: Sequence[str], dst: Sequence[str], a: Blocks
) -> Blocks:
    return _map_blocks(
        src, dst, lambda i, j: ct.component(src[j], dst[i], a[i][j], s)
    )


# -- Ψ -------------------------------------------------------------------


def psi_summands(ct: CrossedTriple, summands: Sequence[str]) -> Tuple[str, ...]:
    act = ct.action
    return tuple(act.obj(s, X) for s in ct.group.elements for X in summands)


def _psi_blocks(
    ct: CrossedTriple,
    src: Sequence[str],
    dst: Sequence[str],
    a: Blocks,
    element: bool,
) -> Blocks:
    """The block matrix ã: ⊕_τ X^τ -> ⊕_σ Y^σ of a: X -> Y in AG or BG."""
    g, act, lam = ct.group, ct.action, ct.factors
    base = ct.base
    G = g.elements
    rows = []
    for s in G:
        for i, Y in enumerate(dst):
            row = []
            for t in G:
                r = g.mul(g.inv(s), t)
                for k, X in enumerate(src):
                    Xr = act.obj(r, X)
                    Xt, Xrs, Ys = act.obj(t, X), act.obj(s, Xr), act.obj(s, Y)
                    factor = lam.value(s, r, X)
                    if element:
                        comp = ct.element_component(X, Y, a[i][k], r)
                        moved = act.act_element(s, Xr, Y, comp)
                        v = base.bim.act_right(Xt, Xrs, Ys, moved, factor)
                    else:
                        comp = ct.component(X, Y, a[i][k], r)
                        moved = act.act_morphism(s, Xr, Y, comp)
                        v = base.cat.compose(Xt, Xrs, Ys, moved, factor)
                    row.append(v)
            rows.append(tuple(row))
    return tuple(rows)


def psi(ct: CrossedTriple, xi: ElObject) -> ElObject:
    """ξ̃ on ⊕_σ X^σ."""
    s = xi.summands
    carrier_summands = psi_summands(ct, s)
    idem = None
    if xi.carrier.idem is not None:
        idem = _psi_blocks(ct, s, s, xi.carrier.idem, element=False)
    elem = _psi_blocks(ct, s, s, xi.elem, element=True)
    name = f"Ψ({xi.name})" if xi.name else None
    return ElObject(AddObject(carrier_summands, idem), elem, name)


def psi_morphism(
    ct: CrossedTriple, src: Sequence[str], dst: Sequence[str], a: Blocks
) -> Blocks:
    return _psi_blocks(ct, src, dst, a, element=False)


# -- adjunction ----------------------------------------------------------


def adjoint_forward(
    ct: CrossedTriple, x: ElObject, eta: ElObject, alpha: Blocks
) -> Blocks:
    """β: x -> Ψη, β_{(σ,i),j} = a_{σ⁻¹}[i][j]^σ ∘ λ_{σ,σ⁻¹}(X_j), for α: Φx -> η."""
    if not is_el_morphism(ct.triple, phi(ct, x), eta, alpha):
        raise NotAMorphismError("adjoint_forward needs a morphism Φx -> η")
    g, act, lam, cat = ct.group, ct.action, ct.factors, ct.base.cat
    src, dst = x.summands, eta.summands
    rows = []
    for s in g.elements:
        si = g.inv(s)
        for i, Y in enumerate(dst):
            row = []
            for j, X in enumerate(src):
                a = ct.component(X, Y, alpha[i][j], si)
                Xsi = act.obj(si, X)
                moved = act.act_morphism(s, Xsi, Y, a)
                v = cat.compose(
                    X, act.obj(s, Xsi), act.obj(s, Y), moved, lam.value(s, si, X)
                )
                row.append(v)
            rows.append(tuple(row))
    return tuple(rows)


def adjoint_backward(
    ct: CrossedTriple, x: ElObject, eta: ElObject, beta: Blocks
) -> Blocks:
    """α: Φx -> η with a_σ[i][j] = λ⁻¹_{σ,σ⁻¹}(Y_i) ∘ β_{(σ⁻¹,i),j}^σ."""
    if not is_el_morphism(ct.base, x, psi(ct, eta), beta):
        raise NotAMorphismError("adjoint_backward needs a morphism x -> Ψη")
    g, act, lam, cat = ct.group, ct.action, ct.factors, ct.base.cat
    field = ct.base.field
    src, dst = x.summands, eta.summands
    m = len(dst)
    out = []
    for i, Y in enumerate(dst):
        row = []
        for j, X in enumerate(src):
            total = ct.cat.zero(X, Y)
            for s in g.elements:
                si = g.inv(s)
                b = beta[g.index(si) * m + i][j]
                Ysi = act.obj(si, Y)
                bs = act.act_morphism(s, X, Ysi, b)
                a = cat.compose(
                    act.obj(s, X), act.obj(s, Ysi), Y, lam.inverse(s, si, Y), bs
                )
                total = vec_add(field, total, ct.tagged(X, Y, s, a))
            row.append(total)
        out.append(tuple(row))
    return tuple(out)


def check_adjunction(
    ct: CrossedTriple, x: ElObject, eta: ElObject, name: str = "adjunction"
) -> CheckResult:
    """Both maps on full hom bases.

    Results are morphisms, round trips are identities and dimensions agree.
    """
    report = ValidationReport(subject=name)
    left = ElHomSpace(ct.triple, phi(ct, x), eta)
    peta = psi(ct, eta)
    right = ElHomSpace(ct.base, x, peta)
    report.tick()
    if left.dim != right.dim:
        report.add(
            "dimension", x.label(), eta.label(), detail=f"{left.dim} vs {right.dim}"
        )
    for k, alpha in enumerate(left.basis_blocks()):
        report.tick()
        beta = adjoint_forward(ct, x, eta, alpha)
        if not is_el_morphism(ct.base, x, peta, beta):
            report.add("forward-morphism", k)
        elif adjoint_backward(ct, x, eta, beta) != alpha:
            report.add("round-trip", "backward∘forward", k)
    for k, beta in enumerate(right.basis_blocks()):
        report.tick()
        alpha = adjoint_backward(ct, x, eta, beta)
        if not is_el_morphism(ct.triple, phi(ct, x), eta, alpha):
            report.add("backward-morphism", k)
        elif adjoint_forward(ct, x, eta, alpha) != beta:
            report.add("round-trip", "forward∘backward", k)
    return CheckResult.from_validation(name, report, dims=[left.dim, right.dim])


def check_adjunction_naturality(
    ct: CrossedTriple,
    x: ElObject,
    xp: ElObject,
    eta: ElObject,
    etap: ElObject,
    name: str = "adjunction-naturality",
) -> CheckResult:
    """f(α)∘b = f(α∘Φb) for b: x′ -> x and f(γ∘α) = Ψγ∘f(α) for γ: η -> η′."""
    report = ValidationReport(subject=name)
    T, TG = ct.base, ct.triple
    px = phi(ct, x)
    homs = ElHomSpace(TG, px, eta).basis_blocks()
    for alpha in homs:
        fa = adjoint_forward(ct, x, eta, alpha)
        peta = psi(ct, eta)
        for b in ElHomSpace(T, xp, x).basis_blocks():
            report.tick()
            lhs = compose_blocks(T.cat, xp.summands, x.summands, peta.summands, fa, b)
            pb = phi_morphism(ct, xp.summands, x.summands, b)
            ab = compose_blocks(
                TG.cat, xp.summands, x.summands, eta.summands, alpha, pb
            )
            if lhs != adjoint_forward(ct, xp, eta, ab):
                report.add("naturality-in-x", x.label(), xp.label())
        petap = psi(ct, etap)
        for gamma in ElHomSpace(TG, eta, etap).basis_blocks():
            report.tick()
            ga = compose_blocks(
                TG.cat, x.summands, eta.summands, etap.summands, gamma, alpha
            )
            pg = psi_morphism(ct, eta.summands, etap.summands, gamma)
            rhs = compose_blocks(
                T.cat, x.summands, peta.summands, petap.summands, pg, fa
            )
            if adjoint_forward(ct, x, etap, ga) != rhs:
                report.add("naturality-in-eta", eta.label(), etap.label())
    return CheckResult.from_validation(name, report)


# -- Φ full faithfulness ---------------------------------------------------


def check_phi_fully_faithful(
    ct: CrossedTriple,
    pairs: Sequence[Tuple[ElObject, ElObject]],
    name: str = "phi-fully-faithful",
) -> CheckResult:
    """Σ_σ dim Hom(x^σ, y) = dim Hom(x[1], y[1]); the tagged images span the right."""
    report = ValidationReport(subject=name)
    T, TG = ct.base, ct.triple
    dims = []
    for x, y in pairs:
        target = ElHomSpace(TG, phi(ct, x), phi(ct, y))
        images = []
        total = 0
        for s in ct.group.elements:
            xs = act_el_object(ct.action, s, x)
            space = ElHomSpace(T, xs, y)
            total += space.dim
            for a in space.basis_blocks():
                image = tag_morphism(ct, s, x.summands, y.summands, a)
                report.tick()
                if not is_el_morphism(TG, phi(ct, x), phi(ct, y), image):
                    report.add("image-not-morphism", x.label(), y.label(), s)
                images.append(target.layout.flatten(image))
        dims.append([total, target.dim])
        report.tick()
        if total != target.dim:
            report.add(
                "dimension", x.label(), y.label(), detail=f"{total} vs {target.dim}"
            )
        elif images:
            M = Mat.from_columns(TG.field, target.layout.dim, images)
            if rank(M) != target.dim:
                report.add("span", x.label(), y.label())
    return CheckResult.from_validation(name, report, dims=dims)


# -- split pair ------------------------------------------------------------


def summand_witness(
    ct: CrossedTriple, xi: ElObject, alpha: Dict[str, Vector]
) -> Tuple[Blocks, Blocks]:
    """(ι, π) with ι: ξ -> ΦΨξ, π: ΦΨξ -> ξ and π∘ι = 1_ξ, from α with tr α = 1.

    The carrier of ξ must be plain.
    """
    if not xi.carrier.is_plain:
        raise PreconditionError("summand witnesses are built on plain carriers only")
    g, act, lam = ct.group, ct.action, ct.factors
    X = xi.summands
    big = psi_summands(ct, X)
    pi_rows = []
    for i, Xi in enumerate(X):
        row = []
        for s in g.elements:
            for j, Xj in enumerate(X):
                if i == j:
                    si = g.inv(s)
                    v = ct.tagged(act.obj(s, Xj), Xi, si, lam.inverse(si, s, Xj))
                else:
                    v = ct.cat.zero(act.obj(s, Xj), Xi)
                row.append(v)
        pi_rows.append(tuple(row))
    pi = tuple(pi_rows)
    iota_rows = []
    for s in g.elements:
        for i, Xi in enumerate(X):
            Xis = act.obj(s, Xi)
            row = []
            for j, Xj in enumerate(X):
                if i == j:
                    v = ct.tagged(Xj, Xis, s, alpha[Xis])
                else:
                    v = ct.cat.zero(Xj, Xis)
                row.append(v)
            iota_rows.append(tuple(row))
    iota = tuple(iota_rows)
    target = phi(ct, psi(ct, xi))
    TG = ct.triple
    if not is_el_morphism(TG, target, xi, pi):
        raise VerificationError("π is not a morphism ΦΨξ -> ξ", {"object": xi.label()})
    if not is_el_morphism(TG, xi, target, iota):
        raise VerificationError("ι is not a morphism ξ -> ΦΨξ", {"object": xi.label()})
    if compose_blocks(TG.cat, X, big, X, pi, iota) != identity_of(TG.cat, xi.carrier):
        raise VerificationError("π∘ι is not the identity", {"object": xi.label()})
    return iota, pi
