"""Idempotents of semisimple algebras and their lifts modulo the radical.

Splitting works through minimal polynomials: if the minimal polynomial of y in
the corner e·A·e factors into pairwise coprime primary parts q_1 ... q_m, the
Chinese remainder theorem yields polynomials E_i with E_i ≡ 1 mod q_i and
E_i ≡ 0 mod q_j, and the E_i(y) are orthogonal idempotents summing to e.
Factorization is done by sympy over GF(p) or QQ.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import Poly, Rational, symbols

from ..errors import PreconditionError, VerificationError
from ..exact import (
    FieldSpec,
    Mat,
    SubspaceBasis,
    Vector,
    is_zero_vector,
    kernel_vectors,
    linear_map,
    span,
)
from .algebra import AlgebraPresentation, Quotient

logger = logging.getLogger(__name__)

_t = symbols("t")

DEFAULT_TRIES = 200


def _to_poly(field: FieldSpec, coeffs: Sequence) -> Poly:
    high_first = list(reversed(tuple(coeffs)))
    if field.is_prime:
        return Poly([int(c) for c in high_first], _t, modulus=field.p)
    fractions = map(Fraction, high_first)
    rationals = [Rational(c.numerator, c.denominator) for c in fractions]
    return Poly(rationals, _t, domain="QQ")


def _from_poly(field: FieldSpec, poly: Poly) -> Tuple:
    coeffs = []
    for c in reversed(poly.all_coeffs()):
        if field.is_prime:
            coeffs.append(field.element(int(c)))
        else:
            coeffs.append(Fraction(int(c.p), int(c.q)))
    return tuple(coeffs)


def primary_factors(field: FieldSpec, coeffs: Sequence) -> List[Poly]:
    """The pairwise coprime prime-power factors of a polynomial."""
    _, factors = _to_poly(field, coeffs).factor_list()
    return [f**m for f, m in factors]


def is_irreducible(field: FieldSpec, coeffs: Sequence) -> bool:
    _, factors = _to_poly(field, coeffs).factor_list()
    return len(factors) == 1 and factors[0][1] == 1


def split_by_element(
    alg: AlgebraPresentation, e: Sequence, y: Sequence
) -> List[Vector]:
    """Orthogonal idempotents summing to e, one per primary factor of minpoly(y)."""
    m_coeffs = alg.min_poly(y, unit=e)
    parts = primary_factors(alg.field, m_coeffs)
    if len(parts) < 2:
        return [tuple(e)]
    m = _to_poly(alg.field, m_coeffs)
    out = []
    for q in parts:
        rest = m.exquo(q)
        _, u, h = q.gcdex(rest)
        if not h.is_one:
            raise VerificationError(
                "primary factors of a minimal polynomial are not coprime"
            )
        # u·rest ≡ 1 mod q and ≡ 0 mod rest
        E = (u * rest).rem(m)
        out.append(alg.evaluate(_from_poly(alg.field, E), y, unit=e))
    return out


# -- commutative semisimple algebras ------------------------------------------


def frobenius_fixed(alg: AlgebraPresentation) -> SubspaceBasis:
    """{z : z^p = z} in a commutative algebra over F_p (a linear condition there)."""
    field = alg.field
    if not field.is_prime:
        raise PreconditionError("the Frobenius map needs a prime field")
    frob = linear_map(field, alg.dim, alg.dim, lambda z: alg.power(z, field.p))
    return span(field, alg.dim, kernel_vectors(frob - Mat.identity(field, alg.dim)))


def _count_idempotents(alg: AlgebraPresentation) -> int:
    field = alg.field
    count = 0
    for coeffs in itertools.product(range(field.p), repeat=alg.dim):
        if alg.mul(coeffs, coeffs) == tuple(coeffs):
            count += 1
    return count


def count_simple_components(
    alg: AlgebraPresentation, cross_check_limit: int = 1_000_000
) -> int:
    """Number of simple components of a commutative semisimple F_p-algebra.

    Equal to dim{z : z^p = z}; on algebras with p^dim within the limit the
    idempotents are also enumerated, and there must be exactly 2^count of them.
    """
    count = frobenius_fixed(alg).dim
    if alg.dim <= 6 and alg.field.p**alg.dim <= cross_check_limit:
        idempotents = _count_idempotents(alg)
        if idempotents != 2**count:
            raise VerificationError(
                f"{alg.name}: Frobenius count {count} disagrees with "
                f"{idempotents} idempotents",
                {"algebra": alg.name, "frobenius": count, "idempotents": idempotents},
            )
    logger.debug("%s has %d simple components", alg.name, count)
    return count


def _random_element(
    alg: AlgebraPresentation, sub: SubspaceBasis, rng: random.Random
) -> Vector:
    return sub.combine([alg.field.random_element(rng) for _ in range(sub.dim)])


def central_idempotents(
    alg: AlgebraPresentation, rng: random.Random, tries: int = DEFAULT_TRIES
) -> Tuple[List[Vector], bool]:
    """Primitive central idempotents of a semisimple algebra.

    The flag tells whether the list is conclusive.
    """
    Z = alg.center()
    zalg = alg.subalgebra(Z, name=f"Z({alg.name})")
    parts = [zalg.unit]
    if alg.field.is_prime:
        fixed = frobenius_fixed(zalg)
        for w in fixed.rows:
            parts = [
                f for e in parts for f in split_by_element(zalg, e, zalg.mul(e, w))
            ]
        if len(parts) != fixed.dim:
            raise VerificationError(
                f"found {len(parts)} central idempotents in {alg.name}, "
                f"expected {fixed.dim}",
                {"algebra": alg.name},
            )
        return [Z.combine(e) for e in parts], True
    # over Q: split until every corner of the center is visibly a field
    done = [False]
    for _ in range(tries):
        if all(done):
            break
        new_parts, new_done = [], []
        for e, finished in zip(parts, done):
            if finished:
                new_parts.append(e)
                new_done.append(True)
                continue
            corner = zalg.corner(e)
            y = _random_element(zalg, corner, rng)
            pieces = split_by_element(zalg, e, y)
            if len(pieces) > 1:
                new_parts.extend(pieces)
                new_done.extend([False] * len(pieces))
            else:
                m = zalg.min_poly(y, unit=e)
                new_parts.append(e)
                field_like = len(m) - 1 == corner.dim and is_irreducible(zalg.field, m)
                new_done.append(field_like)
        parts, done = new_parts, new_done
    if not all(done):
        logger.warning(
            "central idempotents of %s are inconclusive after %d tries",
            alg.name,
            tries,
        )
    return [Z.combine(e) for e in parts], all(done)


def _is_division_corner(alg: AlgebraPresentation, e: Sequence) -> bool:
    """e·A·e commutative inside a simple component, hence a field."""
    corner = alg.corner(e)
    calg = alg.subalgebra(corner, unit=e)
    return calg.is_commutative()


def primitive_idempotents(
    alg: AlgebraPresentation, rng: random.Random, tries: int = DEFAULT_TRIES
) -> Tuple[List[Vector], List[bool]]:
    """A complete orthogonal set of idempotents of a semisimple algebra, with flags.

    A flag is False when no split was found within `tries` random elements but
    the corner was not shown to be a division algebra either.
    """
    central, conclusive = central_idempotents(alg, rng, tries)
    out: List[Vector] = []
    flags: List[bool] = []
    for eps in central:
        queue = [eps]
        while queue:
            e = queue.pop(0)
            if _is_division_corner(alg, e):
                out.append(e)
                flags.append(conclusive)
                continue
            corner = alg.corner(e)
            for _ in range(tries):
                pieces = split_by_element(alg, e, _random_element(alg, corner, rng))
                if len(pieces) > 1:
                    queue.extend(pieces)
                    break
            else:
                logger.warning(
                    "no split of a %d-dimensional corner of %s found",
                    corner.dim,
                    alg.name,
                )
                out.append(e)
                flags.append(False)
    return out, flags


# -- lifting ------------------------------------------------------------------


def newton_idempotent(
    alg: AlgebraPresentation, a: Sequence, limit: Optional[int] = None
) -> Vector:
    """Iterate e <- 3e² - 2e³ from a until e² = e."""
    field = alg.field
    three, two = field.element(3), field.element(2)
    e = tuple(a)
    for _ in range(limit or alg.dim + 2):
        sq = alg.mul(e, e)
        if sq == e:
            return e
        e = alg.sub(alg.scale(three, sq), alg.scale(two, alg.mul(sq, e)))
    if alg.mul(e, e) == e:
        return e
    raise VerificationError(
        f"idempotent lifting did not converge in {alg.name}", {"algebra": alg.name}
    )


@dataclass(frozen=True)
class UnitDecomposition:
    """1 = Σ e_i in A with the images of the e_i in A/rad."""

    idempotents: Tuple[Vector, ...]
    residues: Tuple[Vector, ...]
    primitive: Tuple[bool, ...]


def lift_idempotents(
    alg: AlgebraPresentation,
    rad: SubspaceBasis,
    quotient: Optional[Quotient] = None,
    seeds: Optional[Sequence[Vector]] = None,
    rng: Optional[random.Random] = None,
    tries: int = DEFAULT_TRIES,
) -> UnitDecomposition:
    """Lift a complete orthogonal set from A/rad to A, inside (1 - E)·A·(1 - E).

    Without seeds a complete set of primitive idempotents of A/rad is computed
    first.
    """
    q = quotient or alg.quotient(rad)
    flags: List[bool]
    if seeds is None:
        seeds, flags = primitive_idempotents(q.algebra, rng or random.Random(0), tries)
    else:
        flags = [True] * len(seeds)
    seeds = list(seeds)
    one = alg.unit
    total = alg.zero()
    lifted: List[Vector] = []
    for k, s in enumerate(seeds):
        if k == len(seeds) - 1:
            e = alg.sub(one, total)
        else:
            rest = alg.sub(one, total)
            a = alg.mul(alg.mul(rest, q.lift(s)), rest)
            e = newton_idempotent(alg, a)
        lifted.append(e)
        total = alg.add(total, e)
    _verify_lift(alg, q, lifted, seeds)
    residues = tuple(tuple(s) for s in seeds)
    return UnitDecomposition(tuple(lifted), residues, tuple(flags))


def _verify_lift(
    alg: AlgebraPresentation,
    q: Quotient,
    lifted: Sequence[Vector],
    seeds: Sequence[Vector],
) -> None:
    problems = []
    total = alg.zero()
    for i, e in enumerate(lifted):
        total = alg.add(total, e)
        if not alg.is_idempotent(e):
            problems.append(f"e{i} is not idempotent")
        if q.project(e) != tuple(seeds[i]):
            problems.append(f"e{i} is not congruent to its seed")
        for j, f in enumerate(lifted):
            if i != j and not is_zero_vector(alg.mul(e, f)):
                problems.append(f"e{i}·e{j} != 0")
    if lifted and total != alg.unit:
        problems.append("idempotents do not sum to 1")
    if problems:
        raise VerificationError(
            f"lifted idempotents of {alg.name} are wrong",
            {"algebra": alg.name, "problems": problems},
        )
