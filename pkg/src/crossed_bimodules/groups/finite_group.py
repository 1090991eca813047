"""Finite groups given by a multiplication table over named elements."""

import itertools
import logging
from functools import cached_property
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from ..api.models import ValidationReport
from ..errors import InstanceError

logger = logging.getLogger(__name__)


class FiniteGroup:
    """A group as a Cayley table on element ids.

    Attributes:
        elements: element ids in input order, followed by every σ-major layout
        unit: id of the neutral element
        table: (σ, τ) -> στ
    """

    def __init__(
        self,
        elements: Sequence[str],
        unit: str,
        table: Mapping[Tuple[str, str], str],
        name: str = "G",
    ):
        self.elements: Tuple[str, ...] = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise InstanceError("duplicate group element ids", "group.elements")
        if unit not in self.elements:
            raise InstanceError(f"unit {unit!r} is not a group element", "group.unit")
        known = set(self.elements)
        for s in self.elements:
            for t in self.elements:
                v = table.get((s, t))
                if v is None:
                    raise InstanceError(f"missing product {s}·{t}", "group.table")
                if v not in known:
                    raise InstanceError(
                        f"product {s}·{t} = {v!r} is not a group element", "group.table"
                    )
        self.unit = unit
        self.table: Dict[Tuple[str, str], str] = {
            (s, t): table[(s, t)] for s in self.elements for t in self.elements
        }
        self.name = name
        self._index = {s: i for i, s in enumerate(self.elements)}

    @classmethod
    def from_rows(
        cls,
        elements: Sequence[str],
        unit: str,
        rows: Sequence[Sequence[str]],
        name: str = "G",
    ) -> "FiniteGroup":
        n = len(elements)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InstanceError(f"group table must be {n}x{n}", "group.table")
        table = {
            (s, t): rows[i][j]
            for i, s in enumerate(elements)
            for j, t in enumerate(elements)
        }
        return cls(elements, unit, table, name)

    @classmethod
    def cyclic(cls, n: int, prefix: str = "g") -> "FiniteGroup":
        """Z/n with elements 1, g, g2, ..., g{n-1}."""
        names = ["1"] + [prefix if k == 1 else f"{prefix}{k}" for k in range(1, n)]
        table = {
            (names[i], names[j]): names[(i + j) % n] for i in range(n) for j in range(n)
        }
        return cls(names, "1", table, name=f"Z/{n}")

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls(["1"], "1", {("1", "1"): "1"}, name="1")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, s: str) -> bool:
        return s in self._index

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={len(self)})"

    def index(self, s: str) -> int:
        return self._index[s]

    def mul(self, s: str, t: str) -> str:
        return self.table[(s, t)]

    def product(self, *elems: str) -> str:
        acc = self.unit
        for s in elems:
            acc = self.mul(acc, s)
        return acc

    @cached_property
    def _inverses(self) -> Dict[str, Optional[str]]:
        out: Dict[str, Optional[str]] = {}
        for s in self.elements:
            out[s] = next(
                (
                    t
                    for t in self.elements
                    if self.mul(s, t) == self.unit and self.mul(t, s) == self.unit
                ),
                None,
            )
        return out

    def inv(self, s: str) -> str:
        t = self._inverses[s]
        if t is None:
            raise InstanceError(f"{s} has no inverse", "group.table")
        return t

    def order(self, s: str) -> int:
        k, x = 1, s
        while x != self.unit:
            x = self.mul(x, s)
            k += 1
            if k > len(self):
                raise InstanceError(
                    f"{s} has no finite order within the group", "group.table"
                )
        return k

    @cached_property
    def is_abelian(self) -> bool:
        elems = self.elements
        return all(self.mul(s, t) == self.mul(t, s) for s in elems for t in elems)

    @cached_property
    def is_cyclic(self) -> bool:
        return any(self.order(s) == len(self) for s in self.elements)

    # -- subgroups ------------------------------------------------------

    def closure(self, generators: Iterable[str]) -> FrozenSet[str]:
        sub = {self.unit}
        frontier = list(generators)
        while frontier:
            s = frontier.pop()
            if s in sub:
                continue
            sub.add(s)
            for t in list(sub):
                for u in (self.mul(s, t), self.mul(t, s)):
                    if u not in sub:
                        frontier.append(u)
        return frozenset(sub)

    def is_subgroup(self, subset: Iterable[str]) -> bool:
        h = set(subset)
        if self.unit not in h:
            return False
        return all(self.mul(s, self.inv(t)) in h for s in h for t in h)

    def subgroup(
        self, subset: Iterable[str], name: Optional[str] = None
    ) -> "FiniteGroup":
        """The subgroup on `subset`, elements kept in the parent's order."""
        h = set(subset)
        if not self.is_subgroup(h):
            raise InstanceError(f"{sorted(h)} is not a subgroup of {self.name}")
        elems = [s for s in self.elements if s in h]
        table = {(s, t): self.mul(s, t) for s in elems for t in elems}
        label = name or f"{self.name}|{len(elems)}"
        return FiniteGroup(elems, self.unit, table, name=label)

    def subgroups(self) -> List[FrozenSet[str]]:
        """All subgroups as joins of cyclic subgroups, by size then first element."""
        cyclic = {self.closure([s]) for s in self.elements}
        found = set(cyclic)
        frontier = set(cyclic)
        while frontier:
            new = set()
            for h in frontier:
                for c in cyclic:
                    j = self.closure(h | c)
                    if j not in found:
                        new.add(j)
            found |= new
            frontier = new
        return sorted(found, key=lambda h: (len(h), sorted(self.index(s) for s in h)))

    def right_coset_representatives(self, h: Iterable[str]) -> List[str]:
        """One σ per right coset Hσ, the first in element order."""
        h = list(h)
        seen = set()
        reps = []
        for s in self.elements:
            if s in seen:
                continue
            reps.append(s)
            seen.update(self.mul(t, s) for t in h)
        return reps


def validate_group(g: FiniteGroup) -> ValidationReport:
    report = ValidationReport(subject=f"group {g.name}")
    for s in g.elements:
        report.tick()
        if g.mul(g.unit, s) != s or g.mul(s, g.unit) != s:
            report.add("unit", s)
        if g._inverses[s] is None:
            report.add("inverse", s, detail="no two-sided inverse")
    for s, t, u in itertools.product(g.elements, repeat=3):
        report.tick()
        if g.mul(g.mul(s, t), u) != g.mul(s, g.mul(t, u)):
            report.add("associativity", s, t, u)
    if not report.ok:
        logger.info(
            "group %s fails validation with %d violations",
            g.name,
            len(report.violations),
        )
    return report
