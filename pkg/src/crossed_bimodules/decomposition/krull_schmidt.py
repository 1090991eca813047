"""Krull–Schmidt decompositions of objects of add A and of El(T).

X = ⊕ e_i X along a lifted unit decomposition of End(X). Two primitive
summands are isomorphic exactly when e_j·End(X)·e_i is not inside the radical;
summands whose primitivity stayed open are compared by a bounded search for
mutually inverse a ∈ e_j A e_i, b ∈ e_i A e_j instead.
"""

import logging
import random
from typing import List, Optional, Sequence, Tuple

from ..api.models import (
    CheckResult,
    DecompositionReport,
    SearchSettings,
    SummandRecord,
    ValidationReport,
)
from ..categories.additive import AddObject
from ..categories.fincat import BimoduleTriple, FinCat
from ..categories.search import find_invertible
from ..elements.el_category import ElObject
from ..errors import VerificationError
from ..exact import (
    SubspaceBasis,
    Vector,
    is_zero_vector,
    linear_map,
    rank,
    solve_vector,
    span,
)
from .algebra import (
    AlgebraPresentation,
    Quotient,
    el_endomorphism_algebra,
    endomorphism_algebra,
)
from .idempotents import UnitDecomposition, count_simple_components, lift_idempotents
from .radical import radical

logger = logging.getLogger(__name__)


def _linked(q: Quotient, s: Sequence, r: Sequence) -> bool:
    """r·(A/rad)·s != 0."""
    S = q.algebra
    return any(not is_zero_vector(S.mul(S.mul(r, b), s)) for b in S.basis_vectors())


def _mutually_inverse(
    alg: AlgebraPresentation, e: Vector, f: Vector, settings: SearchSettings
) -> str:
    """pass / fail / inconclusive for e·A ≅ f·A via a ∈ fAe, b ∈ eAf, ba = e, ab = f."""
    basis = alg.basis_vectors()
    fae = span(alg.field, alg.dim, [alg.mul(alg.mul(f, x), e) for x in basis])
    eaf = span(alg.field, alg.dim, [alg.mul(alg.mul(e, x), f) for x in basis])
    if fae.dim != eaf.dim or not fae.dim:
        return "fail"

    def accept(a: Vector) -> bool:
        def both(c):
            b = eaf.combine(c)
            return alg.mul(b, a) + alg.mul(a, b)

        M = linear_map(alg.field, eaf.dim, 2 * alg.dim, both)
        return solve_vector(M, tuple(e) + tuple(f)) is not None

    return find_invertible(alg.field, alg.dim, list(fae.rows), accept, settings).status


def iso_classes(
    alg: AlgebraPresentation,
    q: Quotient,
    units: UnitDecomposition,
    settings: SearchSettings,
) -> Tuple[List[int], bool]:
    """Class index per summand, and whether every comparison was conclusive."""
    n = len(units.idempotents)
    classes = [-1] * n
    conclusive = True
    reps: List[int] = []
    for i in range(n):
        for c, j in enumerate(reps):
            if units.primitive[i] and units.primitive[j]:
                same = _linked(q, units.residues[j], units.residues[i])
            else:
                status = _mutually_inverse(
                    alg, units.idempotents[j], units.idempotents[i], settings
                )
                conclusive = conclusive and status != "inconclusive"
                same = status == "pass"
            if same:
                classes[i] = c
                break
        if classes[i] < 0:
            classes[i] = len(reps)
            reps.append(i)
    return classes, conclusive


def decompose_algebra(
    alg: AlgebraPresentation,
    label: str,
    settings: SearchSettings,
    rad: Optional[SubspaceBasis] = None,
) -> DecompositionReport:
    """Summands, multiplicities and ν for the unit decomposition of End(X) = alg."""
    field = alg.field
    J = rad if rad is not None else radical(alg)
    q = alg.quotient(J)
    units = lift_idempotents(alg, J, q, rng=random.Random(settings.seed))
    classes, conclusive = iso_classes(alg, q, units, settings)
    summands = []
    for e, cls, prim in zip(units.idempotents, classes, units.primitive):
        summands.append(
            SummandRecord(
                idempotent=[field.format(c) for c in e],
                rank=rank(alg.left_matrix(e)),
                iso_class=cls,
                primitive="yes" if prim else "inconclusive",
            )
        )
    total = sum(s.rank for s in summands)
    if total != alg.dim:
        raise VerificationError(
            f"summand ranks of {label} add up to {total}, not {alg.dim}",
            {"object": label},
        )
    nu = len(set(classes))
    multiplicities = [classes.count(c) for c in range(nu)]
    independent = None
    if field.is_prime:
        S = q.algebra
        center = S.subalgebra(S.center(), name=f"Z({S.name})")
        independent = count_simple_components(center)
        if all(units.primitive) and independent != nu:
            raise VerificationError(
                f"{label}: {nu} isomorphism classes but {independent} simple "
                "components of End/rad",
                {"object": label, "nu": nu, "components": independent},
            )
    logger.info(
        "%s decomposes into %d summands in %d classes", label, len(summands), nu
    )
    return DecompositionReport(
        object=label,
        end_dim=alg.dim,
        rad_dim=J.dim,
        summands=summands,
        multiplicities=multiplicities,
        nu=nu,
        nu_independent=independent,
        details={"iso_search_conclusive": conclusive},
    )


def krull_schmidt(
    cat: FinCat, X: AddObject, settings: SearchSettings, name: Optional[str] = None
) -> DecompositionReport:
    alg = endomorphism_algebra(cat, X)
    return decompose_algebra(alg, name or X.label(), settings)


def el_decompose(
    t: BimoduleTriple, x: ElObject, settings: SearchSettings
) -> DecompositionReport:
    """Krull–Schmidt for an object of El(T), e.g. x[1] in El(TG)."""
    return decompose_algebra(el_endomorphism_algebra(t, x), x.label(), settings)


def check_uniqueness(
    alg: AlgebraPresentation,
    settings: SearchSettings,
    name: str = "krull-schmidt-uniqueness",
) -> CheckResult:
    """Re-decompose on a permuted basis with another seed, match summands up to ≅."""
    report = ValidationReport(subject=name)
    rng = random.Random(settings.seed + 1)
    J = radical(alg)
    q = alg.quotient(J)
    first = lift_idempotents(alg, J, q, rng=random.Random(settings.seed))
    perm = list(range(alg.dim))
    rng.shuffle(perm)
    other = alg.permuted(perm)
    second = lift_idempotents(
        other, radical(other), rng=random.Random(settings.seed + 1)
    )

    def back(v: Vector) -> Vector:
        out = [alg.field.zero] * alg.dim
        for k, c in enumerate(v):
            out[perm[k]] = c
        return tuple(out)

    residues_2 = [q.project(back(e)) for e in second.idempotents]
    signature_1 = sorted(rank(alg.left_matrix(e)) for e in first.idempotents)
    signature_2 = sorted(rank(alg.left_matrix(back(e))) for e in second.idempotents)
    report.tick()
    if signature_1 != signature_2:
        report.add("ranks", detail=f"{signature_1} vs {signature_2}")
    unmatched = list(range(len(residues_2)))
    for i, s in enumerate(first.residues):
        report.tick()
        hit = next(
            (
                j
                for j in unmatched
                if _linked(q, residues_2[j], s) and _linked(q, s, residues_2[j])
            ),
            None,
        )
        if hit is None:
            report.add("unmatched", str(i))
        else:
            unmatched.remove(hit)
    if unmatched:
        report.add("unmatched", *[f"second:{j}" for j in unmatched])
    return CheckResult.from_validation(
        name, report, summands=len(first.idempotents), permutation=perm
    )
