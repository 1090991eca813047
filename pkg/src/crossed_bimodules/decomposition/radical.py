"""Jacobson radical of algebras and of finite categories.

Over Q the radical is the kernel of the trace form (x, y) |-> tr(L_{xy}).
Over F_p it is cut out by the iterated p-trace functionals

    g_i(z) = (tr(L~_z^{p^i}) mod p^{i+1}) / p^i,   i = 0, ..., floor(log_p n),

where L~_z is the integer lift of the left regular matrix of z. Either way the
result is checked to be a nilpotent two-sided ideal with radical-free quotient.
"""

import logging
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..api.models import ValidationReport
from ..categories.additive import AddObject
from ..categories.fincat import FinCat
from ..errors import VerificationError
from ..exact import Mat, SubspaceBasis, Vector, kernel_vectors, span
from .algebra import AlgebraPresentation, endomorphism_algebra

logger = logging.getLogger(__name__)

Radicals = Dict[Tuple[str, str], SubspaceBasis]


def _trace(M: Mat):
    f = M.field
    acc = f.zero
    for i in range(M.rows):
        acc = f.add(acc, M[i, i])
    return acc


def _trace_form_radical(alg: AlgebraPresentation) -> SubspaceBasis:
    basis = alg.basis_vectors()
    rows = [[_trace(alg.left_matrix(alg.mul(a, b))) for b in basis] for a in basis]
    gram = Mat.from_rows(alg.field, rows, alg.dim)
    return span(alg.field, alg.dim, kernel_vectors(gram))


def _lifted_power_trace(M: Mat, exponent: int, modulus: int) -> int:
    """tr(M~^exponent) mod modulus for the entrywise lift of M to [0, p)."""
    base = np.array(M.to_rows(), dtype=np.int64) % modulus
    result = np.identity(M.rows, dtype=np.int64)
    while exponent:
        if exponent & 1:
            result = (result @ base) % modulus
        exponent >>= 1
        if exponent:
            base = (base @ base) % modulus
    return int(np.trace(result)) % modulus


def _p_trace_radical(alg: AlgebraPresentation) -> SubspaceBasis:
    field = alg.field
    p, n = field.p, alg.dim
    basis = alg.basis_vectors()
    current = SubspaceBasis.full(field, n)
    i = 0
    while current.dim and p**i <= n:
        rows = current.rows
        values: List[List[int]] = []
        for v in rows:
            row = []
            for b in basis:
                L = alg.left_matrix(alg.mul(v, b))
                if i == 0:
                    row.append(_trace(L))
                    continue
                t = _lifted_power_trace(L, p**i, p ** (i + 1))
                if t % p**i:
                    raise VerificationError(
                        f"p-trace of order {i} is not divisible by p^{i} "
                        f"in {alg.name}",
                        {"algebra": alg.name, "level": i},
                    )
                row.append(field.element(t // p**i))
            values.append(row)
        # c ranges over coordinates in `rows`; keep c with
        # Σ_k c_k g_i(v_k b) = 0 for all b
        C = Mat.from_rows(field, values, n).transpose()
        current = span(field, n, [current.combine(c) for c in kernel_vectors(C)])
        logger.debug(
            "p-trace level %d leaves dimension %d in %s", i, current.dim, alg.name
        )
        i += 1
    return current


def _compute(alg: AlgebraPresentation) -> SubspaceBasis:
    if alg.dim == 0:
        return SubspaceBasis(alg.field, 0)
    if alg.field.is_prime:
        return _p_trace_radical(alg)
    return _trace_form_radical(alg)


def _ideal_powers(alg: AlgebraPresentation, J: SubspaceBasis) -> List[int]:
    """Dimensions of J, J², ... until zero or stationary."""
    dims = [J.dim]
    power = J
    while power.dim:
        products = [alg.mul(a, b) for a in power.rows for b in J.rows]
        power = span(alg.field, alg.dim, products)
        if power.dim == dims[-1]:
            dims.append(power.dim)
            break
        dims.append(power.dim)
    return dims


def verify_radical(alg: AlgebraPresentation, J: SubspaceBasis) -> ValidationReport:
    """J is a two-sided ideal, nilpotent, and A/J has zero radical."""
    report = ValidationReport(subject=f"radical of {alg.name}")
    basis = alg.basis_vectors()
    for k, r in enumerate(J.rows):
        for i, b in enumerate(basis):
            report.tick(2)
            if not J.contains(alg.mul(b, r)):
                report.add("left-ideal", alg.names[i], str(k))
            if not J.contains(alg.mul(r, b)):
                report.add("right-ideal", str(k), alg.names[i])
    dims = _ideal_powers(alg, J)
    report.tick()
    if dims[-1] != 0:
        report.add("nilpotent", detail=f"powers stabilize at dimension {dims[-1]}")
    if report.ok:
        report.tick()
        residue = _compute(alg.quotient(J).algebra)
        if residue.dim:
            report.add(
                "quotient-radical",
                detail=f"A/J still has a radical of dimension {residue.dim}",
            )
    return report


def radical(alg: AlgebraPresentation, verify: bool = True) -> SubspaceBasis:
    """rad A, always post-verified unless `verify` is off."""
    J = _compute(alg)
    if verify:
        report = verify_radical(alg, J)
        if not report.ok:
            logger.error("radical post-verification failed for %s", alg.name)
            raise VerificationError(
                f"computed radical of {alg.name} failed post-verification",
                {
                    "algebra": alg.name,
                    "violations": [v.model_dump() for v in report.violations],
                },
            )
    logger.debug("rad %s has dimension %d", alg.name, J.dim)
    return J


def nilpotency_index(alg: AlgebraPresentation, J: SubspaceBasis) -> int:
    return len(_ideal_powers(alg, J)) - 1


def _blocks_of(
    cat: FinCat, objects: Sequence[str], alg: AlgebraPresentation, J: SubspaceBasis
) -> Radicals:
    vectors: Dict[Tuple[str, str], List[Vector]] = {
        (X, Y): [] for X in objects for Y in objects
    }
    for r in J.rows:
        blocks = alg.blocks(r)
        for i, Y in enumerate(objects):
            for j, X in enumerate(objects):
                vectors[(X, Y)].append(blocks[i][j])
    return {
        (X, Y): span(cat.field, cat.dim(X, Y), vecs)
        for (X, Y), vecs in vectors.items()
    }


def radical_category(cat: FinCat, verify: bool = True) -> Radicals:
    """rad(X, Y) for every object pair, read off the blocks of rad End(⊕ X).

    With `verify`, every pair is recomputed inside End(X ⊕ Y) and must agree.
    """
    objects = list(cat.objects)
    whole = endomorphism_algebra(cat, AddObject(tuple(objects)))
    rad = _blocks_of(cat, objects, whole, radical(whole))
    if verify:
        for a, X in enumerate(objects):
            for Y in objects[a:]:
                pair = [X] if X == Y else [X, Y]
                local = endomorphism_algebra(cat, AddObject(tuple(pair)))
                small = _blocks_of(cat, pair, local, radical(local))
                for key, sub in small.items():
                    if sub != rad[key]:
                        raise VerificationError(
                            f"radical block {key} depends on the ambient sum",
                            {
                                "pair": list(key),
                                "whole": rad[key].dim,
                                "local": sub.dim,
                            },
                        )
    total = sum(s.dim for s in rad.values())
    logger.info("radical of %s has total dimension %d", cat, total)
    return rad
