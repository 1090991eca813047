"""The double A⁽²⁾: a bipartite bimodule over A x A whose elements are morphisms of A.

Objects of A x A are pairs (X, X′), written "X|X′". Morphisms are pairs (a, a′)
with componentwise composition; B̃((X, X′), (Y, Y′)) = A(X, Y′), the pair
(a, a′) acts on the left through a′ and on the right through a. El of this triple
is the category of morphisms of add A.
"""

import logging

from .fincat import Bimodule, BimoduleTriple, Differentiation, FinCat

logger = logging.getLogger(__name__)


def pair_name(X: str, Xp: str) -> str:
    return f"{X}|{Xp}"


def double_bimodule(c: FinCat) -> BimoduleTriple:
    f = c.field
    pairs = [(X, Xp) for X in c.objects for Xp in c.objects]
    names = [pair_name(*p) for p in pairs]

    def split(u, X, Y):
        n = c.dim(X, Y)
        return u[:n], u[n:]

    hom_basis = {}
    for (X, Xp) in pairs:
        for (Y, Yp) in pairs:
            ids = [f"({a},0)" for a in c.basis(X, Y)]
            ids += [f"(0,{a})" for a in c.basis(Xp, Yp)]
            hom_basis[(pair_name(X, Xp), pair_name(Y, Yp))] = ids

    def hdim(P, Q):
        (X, Xp), (Y, Yp) = P, Q
        return c.dim(X, Y) + c.dim(Xp, Yp)

    def units(n):
        return [tuple(f.one if k == i else f.zero for k in range(n)) for i in range(n)]

    comp, left, right = {}, {}, {}
    for P in pairs:
        for Q in pairs:
            for R in pairs:
                (X, Xp), (Y, Yp), (Z, Zp) = P, Q, R
                key = (pair_name(*P), pair_name(*Q), pair_name(*R))
                table = []
                for u in units(hdim(Q, R)):
                    b, bp = split(u, Y, Z)
                    row = []
                    for v in units(hdim(P, Q)):
                        a, ap = split(v, X, Y)
                        first = c.compose(X, Y, Z, b, a)
                        row.append(first + c.compose(Xp, Yp, Zp, bp, ap))
                    table.append(row)
                comp[key] = table
                # (b, b′)·x = b′∘x for x in A(X, Y′)
                ltable = []
                for u in units(hdim(Q, R)):
                    b, bp = split(u, Y, Z)
                    xs = units(c.dim(X, Yp))
                    ltable.append([c.compose(X, Yp, Zp, bp, x) for x in xs])
                left[key] = ltable
                # x·(a, a′) = x∘a for x in A(Y, Z′)
                rtable = []
                for x in units(c.dim(Y, Zp)):
                    rtable.append(
                        [
                            c.compose(X, Y, Zp, x, split(v, X, Y)[0])
                            for v in units(hdim(P, Q))
                        ]
                    )
                right[key] = rtable
    ids = {pair_name(X, Xp): c.identity(X) + c.identity(Xp) for (X, Xp) in pairs}
    cat2 = FinCat(f, names, hom_basis, comp, ids)
    el_basis = {
        (pair_name(X, Xp), pair_name(Y, Yp)): list(c.basis(X, Yp))
        for (X, Xp) in pairs
        for (Y, Yp) in pairs
    }
    bim2 = Bimodule(cat2, el_basis, left, right)
    logger.debug("built the double over %d object pairs", len(pairs))
    return BimoduleTriple(cat2, bim2, Differentiation.zero(bim2), name="double")
