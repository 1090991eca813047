"""Bifunctors between bimodule triples and the equivalence criterion.

F = (F₀, F₁) is stored as an object map plus one matrix per object pair for
morphisms and one for bimodule elements.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..api.models import CheckResult, SearchSettings, ValidationReport
from ..exact import Mat, Vector, is_invertible, is_zero_vector, kernel_vectors
from .additive import invert_morphism
from .fincat import BimoduleTriple, Pair
from .search import find_invertible

logger = logging.getLogger(__name__)


@dataclass
class Bifunctor:
    src: BimoduleTriple
    dst: BimoduleTriple
    obj_map: Dict[str, str]
    hom_mats: Dict[Pair, Mat]
    bim_mats: Dict[Pair, Mat]
    name: str = "F"

    def obj(self, X: str) -> str:
        return self.obj_map[X]

    def hom_matrix(self, X: str, Y: str) -> Mat:
        m = self.hom_mats.get((X, Y))
        if m is None:
            FX, FY = self.obj(X), self.obj(Y)
            return Mat.zeros(
                self.src.field, self.dst.cat.dim(FX, FY), self.src.cat.dim(X, Y)
            )
        return m

    def bim_matrix(self, X: str, Y: str) -> Mat:
        m = self.bim_mats.get((X, Y))
        if m is None:
            FX, FY = self.obj(X), self.obj(Y)
            return Mat.zeros(
                self.src.field, self.dst.bim.dim(FX, FY), self.src.bim.dim(X, Y)
            )
        return m

    def on_morphism(self, X: str, Y: str, a: Sequence) -> Vector:
        return self.hom_matrix(X, Y).apply(a)

    def on_element(self, X: str, Y: str, x: Sequence) -> Vector:
        return self.bim_matrix(X, Y).apply(x)


def identity_bifunctor(t: BimoduleTriple) -> Bifunctor:
    f = t.field
    objs = t.objects
    return Bifunctor(
        t,
        t,
        {X: X for X in objs},
        {(X, Y): Mat.identity(f, t.cat.dim(X, Y)) for X in objs for Y in objs},
        {(X, Y): Mat.identity(f, t.bim.dim(X, Y)) for X in objs for Y in objs},
        name="id",
    )


def validate_bifunctor(F: Bifunctor) -> ValidationReport:
    """Functoriality of F₀, compatibility of F₁ with both actions and with ∂."""
    report = ValidationReport(subject=f"bifunctor {F.name}")
    s, d = F.src, F.dst
    objs = s.objects
    for X in objs:
        if X not in F.obj_map or F.obj(X) not in d.objects:
            report.add("object-map", X, detail="object has no image in the target")
    if not report.ok:
        return report
    for X in objs:
        for Y in objs:
            FX, FY = F.obj(X), F.obj(Y)
            if F.hom_matrix(X, Y).shape != (d.cat.dim(FX, FY), s.cat.dim(X, Y)):
                report.add("shape", X, Y, detail="hom matrix")
            if F.bim_matrix(X, Y).shape != (d.bim.dim(FX, FY), s.bim.dim(X, Y)):
                report.add("shape", X, Y, detail="element matrix")
    if not report.ok:
        return report
    for X in objs:
        report.tick()
        if F.on_morphism(X, X, s.cat.identity(X)) != d.cat.identity(F.obj(X)):
            report.add("identity", X)
    for X in objs:
        for Y in objs:
            for Z in objs:
                FX, FY, FZ = F.obj(X), F.obj(Y), F.obj(Z)
                for i, na in enumerate(s.cat.basis(X, Y)):
                    a = s.cat.unit(X, Y, i)
                    Fa = F.on_morphism(X, Y, a)
                    for j, nb in enumerate(s.cat.basis(Y, Z)):
                        b = s.cat.unit(Y, Z, j)
                        Fb = F.on_morphism(Y, Z, b)
                        report.tick()
                        lhs = F.on_morphism(X, Z, s.cat.compose(X, Y, Z, b, a))
                        if lhs != d.cat.compose(FX, FY, FZ, Fb, Fa):
                            report.add("composition", nb, na)
                    # F₁(x·a) = F₁(x)·F₀(a)
                    for j, nx in enumerate(s.bim.basis(Y, Z)):
                        x = s.bim.unit(Y, Z, j)
                        report.tick()
                        lhs = F.on_element(X, Z, s.bim.act_right(X, Y, Z, x, a))
                        rhs = d.bim.act_right(FX, FY, FZ, F.on_element(Y, Z, x), Fa)
                        if lhs != rhs:
                            report.add("right-action", nx, na)
                # F₁(b·x) = F₀(b)·F₁(x)
                for i, nx in enumerate(s.bim.basis(X, Y)):
                    x = s.bim.unit(X, Y, i)
                    for j, nb in enumerate(s.cat.basis(Y, Z)):
                        b = s.cat.unit(Y, Z, j)
                        report.tick()
                        lhs = F.on_element(X, Z, s.bim.act_left(X, Y, Z, b, x))
                        Fb, Fx = F.on_morphism(Y, Z, b), F.on_element(X, Y, x)
                        rhs = d.bim.act_left(FX, FY, FZ, Fb, Fx)
                        if lhs != rhs:
                            report.add("left-action", nb, nx)
    for X in objs:
        for Y in objs:
            for i, na in enumerate(s.cat.basis(X, Y)):
                a = s.cat.unit(X, Y, i)
                report.tick()
                lhs = F.on_element(X, Y, s.diff.apply(X, Y, a))
                rhs = d.diff.apply(F.obj(X), F.obj(Y), F.on_morphism(X, Y, a))
                if lhs != rhs:
                    report.add("differentiation", na)
    return report


def is_equivalence(
    F: Bifunctor,
    settings: SearchSettings,
    witnesses: Optional[Mapping[str, Sequence[Tuple[str, Vector]]]] = None,
    name: str = "equivalence",
) -> CheckResult:
    """The three-part criterion: fully faithful, ∂-dense, bijective on elements."""
    report = ValidationReport(subject=name)
    s, d = F.src, F.dst
    objs = s.objects
    for X in objs:
        for Y in objs:
            report.tick(2)
            H = F.hom_matrix(X, Y)
            if not H.is_square or not is_invertible(H):
                detail = f"hom map has shape {H.shape}"
                report.add("fully-faithful", X, Y, detail=detail)
            E = F.bim_matrix(X, Y)
            if not E.is_square or not is_invertible(E):
                detail = f"element map has shape {E.shape}"
                report.add("elements-bijective", X, Y, detail=detail)
    witnesses = witnesses or {}
    dense: Dict[str, List[str]] = {}
    inconclusive = []
    for Xp in d.objects:
        found = None
        exhaustive = True
        supplied = {X: [v for (Y, v) in witnesses.get(Xp, ()) if Y == X] for X in objs}
        for X in objs:
            FX = F.obj(X)
            dmat = d.diff.matrix(Xp, FX)
            flat = kernel_vectors(dmat)
            outcome = find_invertible(
                d.field,
                d.cat.dim(Xp, FX),
                flat,
                lambda v, FX=FX: invert_morphism(d.cat, Xp, FX, v) is not None,
                settings,
                candidates=[v for v in supplied[X] if is_zero_vector(dmat.apply(v))],
            )
            if outcome.found:
                found = (X, outcome.witness)
                break
            exhaustive = exhaustive and outcome.exhaustive
        report.tick()
        if found:
            dense[Xp] = [found[0], " ".join(str(c) for c in found[1])]
        elif exhaustive:
            report.add(
                "dense", Xp, detail="no ∂-closed isomorphism onto an image object"
            )
        else:
            inconclusive.append(Xp)
    result = CheckResult.from_validation(name, report, density=dense)
    if result.status == "pass" and inconclusive:
        result.status = "inconclusive"
        result.reason = f"density search inconclusive for {', '.join(inconclusive)}"
        logger.warning(result.reason)
    return result
