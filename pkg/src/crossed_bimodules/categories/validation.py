"""Exhaustive axiom checks for categories, bimodules and triples.

These never raise on a bad structure; every failing basis instance is listed in
the returned ValidationReport.
"""

import logging

from ..api.models import ValidationReport
from ..exact import is_zero_vector, vec_add, vec_sub
from .fincat import Bimodule, BimoduleTriple, FinCat

logger = logging.getLogger(__name__)


def validate_category(c: FinCat) -> ValidationReport:
    report = ValidationReport(subject="category")
    objs = c.objects
    for X in objs:
        for Y in objs:
            for i, name in enumerate(c.basis(X, Y)):
                a = c.unit(X, Y, i)
                report.tick()
                if c.compose(X, Y, Y, c.identity(Y), a) != a:
                    detail = f"1_{Y} ∘ {name} ≠ {name}"
                    report.add("left-identity", name, detail=detail)
                if c.compose(X, X, Y, a, c.identity(X)) != a:
                    detail = f"{name} ∘ 1_{X} ≠ {name}"
                    report.add("right-identity", name, detail=detail)
    for X in objs:
        for Y in objs:
            for Z in objs:
                for W in objs:
                    for i, na in enumerate(c.basis(X, Y)):
                        a = c.unit(X, Y, i)
                        for j, nb in enumerate(c.basis(Y, Z)):
                            b = c.unit(Y, Z, j)
                            ba = c.compose(X, Y, Z, b, a)
                            for k, nc in enumerate(c.basis(Z, W)):
                                cc = c.unit(Z, W, k)
                                report.tick()
                                lhs = c.compose(X, Z, W, cc, ba)
                                rhs = c.compose(X, Y, W, c.compose(Y, Z, W, cc, b), a)
                                if lhs != rhs:
                                    report.add("associativity", nc, nb, na)
    logger.debug(
        "validated category: %d instances, %d violations",
        report.checked,
        len(report.violations),
    )
    return report


def validate_bimodule(bim: Bimodule) -> ValidationReport:
    report = ValidationReport(subject="bimodule")
    c = bim.base
    objs = c.objects
    for X in objs:
        for Y in objs:
            for i, nx in enumerate(bim.basis(X, Y)):
                x = bim.unit(X, Y, i)
                report.tick()
                if bim.act_left(X, Y, Y, c.identity(Y), x) != x:
                    report.add("left-unit", nx)
                if bim.act_right(X, X, Y, x, c.identity(X)) != x:
                    report.add("right-unit", nx)
    for X in objs:
        for Y in objs:
            for Z in objs:
                for W in objs:
                    for i, nx in enumerate(bim.basis(X, Y)):
                        x = bim.unit(X, Y, i)
                        # (b'b)x = b'(bx) with b: Y -> Z, b': Z -> W
                        for j, nb in enumerate(c.basis(Y, Z)):
                            b = c.unit(Y, Z, j)
                            bx = bim.act_left(X, Y, Z, b, x)
                            for k, nb2 in enumerate(c.basis(Z, W)):
                                b2 = c.unit(Z, W, k)
                                report.tick()
                                lhs = bim.act_left(X, Z, W, b2, bx)
                                bb = c.compose(Y, Z, W, b2, b)
                                if lhs != bim.act_left(X, Y, W, bb, x):
                                    report.add("left-associativity", nb2, nb, nx)
                    # x(aa') = (xa)a' with a': X -> Y, a: Y -> Z, x in B(Z, W)
                    for i, nx in enumerate(bim.basis(Z, W)):
                        x = bim.unit(Z, W, i)
                        for j, na in enumerate(c.basis(Y, Z)):
                            a = c.unit(Y, Z, j)
                            xa = bim.act_right(Y, Z, W, x, a)
                            for k, na2 in enumerate(c.basis(X, Y)):
                                a2 = c.unit(X, Y, k)
                                report.tick()
                                lhs = bim.act_right(X, Y, W, xa, a2)
                                aa = c.compose(X, Y, Z, a, a2)
                                if lhs != bim.act_right(X, Z, W, x, aa):
                                    report.add("right-associativity", nx, na, na2)
                    # (bx)a = b(xa) with a: X -> Y, x in B(Y, Z), b: Z -> W
                    for i, nx in enumerate(bim.basis(Y, Z)):
                        x = bim.unit(Y, Z, i)
                        for j, na in enumerate(c.basis(X, Y)):
                            a = c.unit(X, Y, j)
                            xa = bim.act_right(X, Y, Z, x, a)
                            for k, nb in enumerate(c.basis(Z, W)):
                                b = c.unit(Z, W, k)
                                report.tick()
                                bx = bim.act_left(Y, Z, W, b, x)
                                lhs = bim.act_right(X, Y, W, bx, a)
                                rhs = bim.act_left(X, Z, W, b, xa)
                                if lhs != rhs:
                                    report.add("middle-associativity", nb, nx, na)
    return report


def validate_triple(t: BimoduleTriple) -> ValidationReport:
    """Bimodule axioms and the Leibniz rule ∂(ba) = (∂b)a + b(∂a) on basis pairs."""
    report = ValidationReport(subject=f"triple {t.name}")
    report.merge(validate_bimodule(t.bim))
    c, bim, diff = t.cat, t.bim, t.diff
    f = c.field
    objs = c.objects
    for X in objs:
        report.tick()
        if not is_zero_vector(diff.apply(X, X, c.identity(X))):
            report.add("leibniz-unit", f"1_{X}", detail="∂ of an identity is nonzero")
    for X in objs:
        for Y in objs:
            for Z in objs:
                for i, na in enumerate(c.basis(X, Y)):
                    a = c.unit(X, Y, i)
                    da = diff.apply(X, Y, a)
                    for j, nb in enumerate(c.basis(Y, Z)):
                        b = c.unit(Y, Z, j)
                        report.tick()
                        lhs = diff.apply(X, Z, c.compose(X, Y, Z, b, a))
                        rhs = vec_add(
                            f,
                            bim.act_right(X, Y, Z, diff.apply(Y, Z, b), a),
                            bim.act_left(X, Y, Z, b, da),
                        )
                        if lhs != rhs:
                            defect = vec_sub(f, lhs, rhs)
                            report.add("leibniz", nb, na, detail=f"defect {defect}")
    if report.ok:
        logger.info(
            "triple %s passes validation (%d instances)", t.name, report.checked
        )
    else:
        logger.info(
            "triple %s fails validation with %d violations",
            t.name,
            len(report.violations),
        )
    return report
