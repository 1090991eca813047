"""Almost split morphisms and sequences, tested over the declared objects.

Conventions: a = (a_k: X -> Y_k) is left almost split when it is not a split
mono and Σ_k A(Y_k, Z)∘a_k = rad(X, Z) for every Z; b = (b_k: Y_k -> X') is
right almost split when it is not a split epi and Σ_k b_k∘A(Z, Y_k) = rad(Z, X').
A sequence X -> ⊕Y_k -> X' is almost split when a and b are, and both induced
hom sequences are exact at every declared Z.
"""

import logging
from typing import List, NamedTuple, Optional, Sequence

from ..api.models import CheckResult, ValidationReport
from ..categories.additive import split_epi, split_mono
from ..categories.fincat import FinCat
from ..center.center import is_separable
from ..crossed.crossed_triple import CrossedTriple
from ..errors import InstanceError
from ..exact import Mat, SubspaceBasis, Vector, linear_map, rank, span, vec_add
from .radical import Radicals, radical_category

logger = logging.getLogger(__name__)

GENERATORS_PATH = "requests.radical_generators"


class Arrow(NamedTuple):
    src: str
    dst: str
    value: Vector


def _check_arrows(
    cat: FinCat,
    arrows: Sequence[Arrow],
    src: Optional[str] = None,
    dst: Optional[str] = None,
) -> None:
    if not arrows:
        raise InstanceError("an almost split candidate needs at least one component")
    for k, a in enumerate(arrows):
        if src is not None and a.src != src:
            raise InstanceError(f"component {k} starts at {a.src}, expected {src}")
        if dst is not None and a.dst != dst:
            raise InstanceError(f"component {k} ends at {a.dst}, expected {dst}")
        expected = cat.dim(a.src, a.dst)
        if len(a.value) != expected:
            raise InstanceError(
                f"component {k} has {len(a.value)} coordinates, "
                f"A({a.src},{a.dst}) has {expected}"
            )


def generated_from(cat: FinCat, arrows: Sequence[Arrow], Z: str) -> SubspaceBasis:
    """Σ_k A(Y_k, Z)∘a_k inside A(X, Z) for a_k: X -> Y_k."""
    X = arrows[0].src
    vecs: List[Vector] = []
    for a in arrows:
        vecs.extend(
            cat.compose(X, a.dst, Z, c, a.value) for c in cat.basis_vectors(a.dst, Z)
        )
    return span(cat.field, cat.dim(X, Z), vecs)


def generated_into(cat: FinCat, arrows: Sequence[Arrow], Z: str) -> SubspaceBasis:
    """Σ_k b_k∘A(Z, Y_k) inside A(Z, X') for b_k: Y_k -> X'."""
    Xp = arrows[0].dst
    vecs: List[Vector] = []
    for b in arrows:
        vecs.extend(
            cat.compose(Z, b.src, Xp, b.value, c) for c in cat.basis_vectors(Z, b.src)
        )
    return span(cat.field, cat.dim(Z, Xp), vecs)


def is_left_almost_split(
    cat: FinCat, arrows: Sequence[Arrow], rad: Optional[Radicals] = None
) -> ValidationReport:
    _check_arrows(cat, arrows, src=arrows[0].src if arrows else None)
    X = arrows[0].src
    rad = rad or radical_category(cat)
    report = ValidationReport(subject=f"left almost split from {X}")
    report.tick()
    if split_mono(cat, X, [(a.dst, a.value) for a in arrows]):
        report.add("split-mono", X)
    for Z in cat.objects:
        report.tick()
        got = generated_from(cat, arrows, Z)
        want = rad[(X, Z)]
        if got != want:
            report.add(
                "generation",
                X,
                Z,
                detail=f"generated dim {got.dim}, rad({X},{Z}) dim {want.dim}",
            )
    return report


def is_right_almost_split(
    cat: FinCat, arrows: Sequence[Arrow], rad: Optional[Radicals] = None
) -> ValidationReport:
    _check_arrows(cat, arrows, dst=arrows[0].dst if arrows else None)
    Xp = arrows[0].dst
    rad = rad or radical_category(cat)
    report = ValidationReport(subject=f"right almost split into {Xp}")
    report.tick()
    if split_epi(cat, Xp, [(b.src, b.value) for b in arrows]):
        report.add("split-epi", Xp)
    for Z in cat.objects:
        report.tick()
        got = generated_into(cat, arrows, Z)
        want = rad[(Z, Xp)]
        if got != want:
            report.add(
                "generation",
                Z,
                Xp,
                detail=f"generated dim {got.dim}, rad({Z},{Xp}) dim {want.dim}",
            )
    return report


def _concat(parts: Sequence[Vector]) -> Vector:
    out: List = []
    for p in parts:
        out.extend(p)
    return tuple(out)


def _split(v: Sequence, sizes: Sequence[int]) -> List[Vector]:
    out, o = [], 0
    for n in sizes:
        out.append(tuple(v[o : o + n]))
        o += n
    return out


def _exact(first: Mat, second: Mat) -> Optional[str]:
    """0 -> U --first--> V --second--> W exact at U and V."""
    r1 = rank(first)
    if r1 != first.cols:
        return f"not injective (rank {r1} of {first.cols})"
    if not (second @ first).is_zero():
        return "composite is not zero"
    if r1 + rank(second) != first.rows:
        return f"kernel has dimension {first.rows - rank(second)}, image {r1}"
    return None


def is_almost_split_sequence(
    cat: FinCat,
    a: Sequence[Arrow],
    b: Sequence[Arrow],
    rad: Optional[Radicals] = None,
) -> ValidationReport:
    """X --a--> ⊕Y_k --b--> X' with a = Ker b and b = Cok a at every object."""
    if len(a) != len(b) or any(x.dst != y.src for x, y in zip(a, b)):
        raise InstanceError("middle terms of the two maps do not match")
    rad = rad or radical_category(cat)
    X, Xp = a[0].src, b[0].dst
    _check_arrows(cat, b, dst=Xp)
    middle = "+".join(x.dst for x in a)
    report = ValidationReport(subject=f"sequence {X} -> {middle} -> {Xp}")
    report.merge(is_left_almost_split(cat, a, rad))
    report.merge(is_right_almost_split(cat, b, rad))
    field = cat.field
    for Z in cat.objects:
        mid = [cat.dim(Z, x.dst) for x in a]

        def after_a(f):
            return _concat([cat.compose(Z, X, x.dst, x.value, f) for x in a])

        def out_of_mid(g):
            acc = cat.zero(Z, Xp)
            for y, gk in zip(b, _split(g, mid)):
                acc = vec_add(field, acc, cat.compose(Z, y.src, Xp, y.value, gk))
            return acc

        into_mid = linear_map(field, cat.dim(Z, X), sum(mid), after_a)
        report.tick()
        problem = _exact(
            into_mid, linear_map(field, sum(mid), cat.dim(Z, Xp), out_of_mid)
        )
        if problem:
            report.add("kernel", Z, detail=problem)

        mid_op = [cat.dim(y.src, Z) for y in b]

        def before_b(f):
            return _concat([cat.compose(y.src, Xp, Z, f, y.value) for y in b])

        def to_start(g):
            acc = cat.zero(X, Z)
            for x, gk in zip(a, _split(g, mid_op)):
                acc = vec_add(field, acc, cat.compose(X, x.dst, Z, gk, x.value))
            return acc

        from_end = linear_map(field, cat.dim(Xp, Z), sum(mid_op), before_b)
        report.tick()
        problem = _exact(
            from_end, linear_map(field, sum(mid_op), cat.dim(X, Z), to_start)
        )
        if problem:
            report.add("cokernel", Z, detail=problem)
    return report


def embed_arrows(ct: CrossedTriple, arrows: Sequence[Arrow]) -> List[Arrow]:
    """a |-> a[1]."""
    return [Arrow(x.src, x.dst, ct.embed(x.src, x.dst, x.value)) for x in arrows]


def check_almost_split(
    ct: CrossedTriple,
    a: Sequence[Arrow],
    b: Sequence[Arrow],
    name: str = "almost-split-sequence",
) -> List[CheckResult]:
    """The sequence in A, then its image under a |-> a[1] in AG."""
    base = is_almost_split_sequence(ct.base.cat, a, b)
    objects = list(ct.base.objects)
    results = [CheckResult.from_validation(name, base, objects=objects)]
    transfer = f"{name}-transfer"
    if not base.ok:
        results.append(
            CheckResult.skipped(
                transfer, "sequence is not almost split in the base category"
            )
        )
    elif is_separable(ct.factors) is None:
        results.append(CheckResult.skipped(transfer, "action is not separable"))
    else:
        crossed = is_almost_split_sequence(
            ct.cat, embed_arrows(ct, a), embed_arrows(ct, b)
        )
        results.append(CheckResult.from_validation(transfer, crossed, objects=objects))
    return results


def check_radical_generators(
    ct: CrossedTriple,
    X: str,
    generators: Sequence[Arrow],
    side: str = "source",
    name: str = "radical-generators",
) -> CheckResult:
    """{a_i[1]} generate (rad AG)(X, _) (source side) or (rad AG)(_, X) (sink)."""
    if side not in ("source", "sink"):
        raise InstanceError(f"unknown side {side!r}", GENERATORS_PATH)
    if is_separable(ct.factors) is None:
        return CheckResult.skipped(name, "action is not separable")
    base_cat = ct.base.cat
    for k, g in enumerate(generators):
        end = g.src if side == "source" else g.dst
        if end != X:
            raise InstanceError(
                f"generator {k} is not attached to {X}", GENERATORS_PATH
            )
    if generators:
        _check_arrows(base_cat, generators)
    rad_base = radical_category(base_cat)
    rad_crossed = radical_category(ct.cat)
    images = embed_arrows(ct, generators)
    report = ValidationReport(subject=name)
    base_generates = True
    for Z in ct.base.objects:
        key = (X, Z) if side == "source" else (Z, X)
        zero = SubspaceBasis(ct.base.field, base_cat.dim(*key))
        zero_g = SubspaceBasis(ct.base.field, ct.cat.dim(*key))
        if side == "source":
            got_base = generated_from(base_cat, generators, Z) if generators else zero
            got = generated_from(ct.cat, images, Z) if images else zero_g
        else:
            got_base = generated_into(base_cat, generators, Z) if generators else zero
            got = generated_into(ct.cat, images, Z) if images else zero_g
        base_generates = base_generates and got_base == rad_base[key]
        report.tick()
        want = rad_crossed[key]
        if got != want:
            report.add(
                "crossed-generation",
                *key,
                detail=f"generated dim {got.dim}, rad dim {want.dim}",
            )
    logger.info(
        "generators at %s (%s side): base %s, crossed %s",
        X,
        side,
        base_generates,
        report.ok,
    )
    return CheckResult.from_validation(
        name, report, side=side, base_generates=base_generates
    )
