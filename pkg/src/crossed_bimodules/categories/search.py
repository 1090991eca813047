"""Bounded search for invertible elements of a subspace.

Over F_p the span is enumerated exhaustively in lexicographic coefficient order
when p^dim fits the budget, and sampled otherwise. Over Q only the supplied
candidates and coefficient vectors in {-1, 0, 1}^dim are tried, so a miss is
never conclusive.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from ..api.models import SearchSettings
from ..exact import FieldSpec, Vector, vec_axpy, vec_zero

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchOutcome:
    witness: Optional[Vector]
    exhaustive: bool
    tried: int

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def status(self) -> str:
        if self.found:
            return "pass"
        return "fail" if self.exhaustive else "inconclusive"


def _combine(field: FieldSpec, ambient: int, basis: Sequence[Vector], coeffs) -> Vector:
    v = vec_zero(field, ambient)
    for c, b in zip(coeffs, basis):
        if c != 0:
            v = vec_axpy(field, c, b, v)
    return v


def find_invertible(
    field: FieldSpec,
    ambient: int,
    basis: Sequence[Vector],
    accept: Callable[[Vector], bool],
    settings: SearchSettings,
    candidates: Iterable[Vector] = (),
) -> SearchOutcome:
    """First vector in span(basis) satisfying `accept`, candidates first."""
    tried = 0
    for v in candidates:
        tried += 1
        if accept(tuple(v)):
            return SearchOutcome(tuple(v), True, tried)
    d = len(basis)
    if d == 0:
        return SearchOutcome(None, True, tried)
    if field.is_prime and field.p ** d <= settings.exhaustive_limit:
        for coeffs in itertools.product(range(field.p), repeat=d):
            if not any(coeffs):
                continue
            tried += 1
            v = _combine(field, ambient, basis, coeffs)
            if accept(v):
                return SearchOutcome(v, True, tried)
        return SearchOutcome(None, True, tried)
    if field.is_prime:
        rng = random.Random(settings.seed)
        for _ in range(settings.sample_size):
            coeffs = [rng.randrange(field.p) for _ in range(d)]
            tried += 1
            v = _combine(field, ambient, basis, coeffs)
            if accept(v):
                return SearchOutcome(v, False, tried)
        logger.warning(
            "sampled %d elements of a %d-dimensional span without a hit", tried, d
        )
        return SearchOutcome(None, False, tried)
    small = (field.element(0), field.element(1), field.element(-1))
    if 3**d <= settings.exhaustive_limit:
        for coeffs in itertools.product(small, repeat=d):
            if not any(coeffs):
                continue
            tried += 1
            v = _combine(field, ambient, basis, coeffs)
            if accept(v):
                return SearchOutcome(v, False, tried)
    logger.warning("no invertible element among %d rational candidates", tried)
    return SearchOutcome(None, False, tried)
