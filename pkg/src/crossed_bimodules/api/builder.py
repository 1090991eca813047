"""Turning a parsed InstanceFile into the mathematical objects, and back.

Every reference is resolved here; failures raise InstanceError with the JSON
location of the offending entry.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..categories.additive import Blocks, is_idempotent_blocks, normalize_object
from ..categories.bifunctor import Bifunctor
from ..categories.fincat import Bimodule, BimoduleTriple, Differentiation, FinCat
from ..categories.validation import validate_bimodule, validate_category
from ..crossed.crossed_triple import CrossedTriple, build_crossed
from ..decomposition.almost_split import Arrow
from ..elements.el_category import ElObject, el_object
from ..errors import InstanceError, PreconditionError
from ..exact import FieldSpec, Mat, Scalar, Vector, unit_vector, vec_scale, vec_zero
from ..groups.action import FactorSystem, GroupAction
from ..groups.finite_group import FiniteGroup
from ..utils.file_utils import digest
from .schema import InstanceFile, SparseVector

logger = logging.getLogger(__name__)

Locator = Dict[str, Tuple[str, str, int]]


@dataclass
class Instance:
    """A built instance.

    Attributes:
        source: the parsed file
        triple: the bimodule triple T
        action, factors: the group data (trivial group when the file has none)
        el_objects, objects, sequences, generators, subgroups: resolved requests
        el_objects_skipped: why the requested El objects were not built, if so
    """

    source: InstanceFile
    field: FieldSpec
    triple: BimoduleTriple
    group: FiniteGroup
    action: GroupAction
    factors: FactorSystem
    el_objects: List[ElObject] = field(default_factory=list)
    objects: List[str] = field(default_factory=list)
    sequences: List[Tuple[List[Arrow], List[Arrow]]] = field(default_factory=list)
    generators: List[Tuple[str, str, List[Arrow]]] = field(default_factory=list)
    zeta: Optional[Scalar] = None
    subgroups: List[FiniteGroup] = field(default_factory=list)
    el_objects_skipped: Optional[str] = None

    @property
    def name(self) -> str:
        return self.source.name

    @cached_property
    def digest(self) -> str:
        return digest(self.source.to_json())

    @cached_property
    def crossed(self) -> CrossedTriple:
        return build_crossed(self.triple, self.action, self.factors)

    @property
    def requested_objects(self) -> List[str]:
        return self.objects or list(self.triple.objects)


def _locator(spaces, where: str) -> Tuple[Dict[Tuple[str, str], List[str]], Locator]:
    basis: Dict[Tuple[str, str], List[str]] = {}
    locator: Locator = {}
    for n, space in enumerate(spaces):
        key = (space.src, space.dst)
        if key in basis:
            raise InstanceError(
                f"space ({space.src}, {space.dst}) is declared twice", f"{where}.{n}"
            )
        basis[key] = list(space.basis)
        for i, b in enumerate(space.basis):
            locator[b] = (space.src, space.dst, i)
    return basis, locator


def _vector(
    f: FieldSpec, ids: Sequence[str], sparse: SparseVector, where: str
) -> Vector:
    out = list(vec_zero(f, len(ids)))
    index = {b: i for i, b in enumerate(ids)}
    for b, c in sparse.items():
        if b not in index:
            raise InstanceError(f"{b!r} is not a basis id of the target space", where)
        out[index[b]] = f.element(c)
    return tuple(out)


def _find(locator: Locator, name: str, where: str) -> Tuple[str, str, int]:
    try:
        return locator[name]
    except KeyError:
        raise InstanceError(f"unknown basis id {name!r}", where)


def _bilinear_tables(
    f, entries, outer_loc, inner_loc, target_basis, outer_dim, inner_dim, where
):
    """Structure tables from entries (outer id, inner id, value)."""
    tables: Dict[Tuple[str, str, str], List[List[Vector]]] = {}
    for n, (outer, inner, value) in enumerate(entries):
        Y, Z, j = _find(outer_loc, outer, f"{where}.{n}")
        X, Y2, i = _find(inner_loc, inner, f"{where}.{n}")
        if Y != Y2:
            raise InstanceError(
                f"{outer!r} starts at {Y} but {inner!r} ends at {Y2}", f"{where}.{n}"
            )
        key = (X, Y, Z)
        if key not in tables:
            zero = vec_zero(f, len(target_basis.get((X, Z), ())))
            tables[key] = [[zero] * inner_dim(X, Y) for _ in range(outer_dim(Y, Z))]
        tables[key][j][i] = _vector(
            f, target_basis.get((X, Z), ()), value, f"{where}.{n}.value"
        )
    return tables


def build_field(source: InstanceFile) -> FieldSpec:
    try:
        if source.field.kind == "prime":
            return FieldSpec.prime(source.field.p)
        return FieldSpec.rational()
    except InstanceError as e:
        raise InstanceError(str(e), "field")


def build_triple(source: InstanceFile, f: FieldSpec) -> BimoduleTriple:
    cs = source.category
    known = set(cs.objects)
    for n, space in enumerate(cs.homs):
        for X in (space.src, space.dst):
            if X not in known:
                raise InstanceError(f"unknown object {X!r}", f"category.homs.{n}")
    hom_basis, hom_loc = _locator(cs.homs, "category.homs")
    hdim = lambda X, Y: len(hom_basis.get((X, Y), ()))  # noqa: E731
    comp = _bilinear_tables(
        f,
        [(c.outer, c.inner, c.value) for c in cs.composition],
        hom_loc,
        hom_loc,
        hom_basis,
        hdim,
        hdim,
        "category.composition",
    )
    ids = {}
    for X in cs.objects:
        if hdim(X, X) and X not in cs.identities:
            raise InstanceError(f"missing identity of {X}", "category.identities")
        ids[X] = _vector(
            f,
            hom_basis.get((X, X), ()),
            cs.identities.get(X, {}),
            f"category.identities.{X}",
        )
    for X in cs.identities:
        if X not in known:
            raise InstanceError(f"unknown object {X!r}", "category.identities")
    cat = FinCat(f, cs.objects, hom_basis, comp, ids)

    bs = source.bimodule
    if bs.regular:
        bim = Bimodule.regular(cat)
        el_basis, el_loc = hom_basis, hom_loc
    else:
        for n, space in enumerate(bs.elements):
            for X in (space.src, space.dst):
                if X not in known:
                    raise InstanceError(
                        f"unknown object {X!r}", f"bimodule.elements.{n}"
                    )
        el_basis, el_loc = _locator(bs.elements, "bimodule.elements")
        edim = lambda X, Y: len(el_basis.get((X, Y), ()))  # noqa: E731
        left = _bilinear_tables(
            f,
            [(a.morphism, a.element, a.value) for a in bs.left],
            hom_loc,
            el_loc,
            el_basis,
            hdim,
            edim,
            "bimodule.left",
        )
        right = _bilinear_tables(
            f,
            [(a.element, a.morphism, a.value) for a in bs.right],
            el_loc,
            hom_loc,
            el_basis,
            edim,
            hdim,
            "bimodule.right",
        )
        bim = Bimodule(cat, el_basis, left, right)

    columns: Dict[Tuple[str, str], List[Vector]] = {}
    for n, m in enumerate(source.differentiation.maps):
        X, Y, i = _find(hom_loc, m.morphism, f"differentiation.maps.{n}")
        cols = columns.setdefault((X, Y), [bim.zero(X, Y)] * cat.dim(X, Y))
        cols[i] = _vector(
            f, bim.basis(X, Y), m.value, f"differentiation.maps.{n}.value"
        )
    maps = {
        key: Mat.from_columns(f, bim.dim(*key), cols) for key, cols in columns.items()
    }
    triple = BimoduleTriple(cat, bim, Differentiation(bim, maps), name=source.name)
    logger.debug("built %r", triple)
    return triple


def build_group(source: InstanceFile) -> FiniteGroup:
    if source.group is None:
        if source.action or source.factors.scalar or source.factors.morphisms:
            raise InstanceError("action or factors given without a group", "group")
        return FiniteGroup.trivial()
    g = source.group
    return FiniteGroup.from_rows(g.elements, g.unit, g.table, name="G")


def _action_matrix(
    f, src_space, dst_space, ids_src, ids_dst, images, fixed, where
) -> Mat:
    cols = []
    for i, a in enumerate(ids_src):
        if a in images:
            cols.append(_vector(f, ids_dst, images[a], f"{where}.{a}"))
        elif fixed:
            cols.append(unit_vector(f, len(ids_src), i))
        else:
            raise InstanceError(
                f"{a!r} moves from {src_space} to {dst_space} and needs an image",
                where,
            )
    return Mat.from_columns(f, len(ids_dst), cols)


def build_action(
    source: InstanceFile, triple: BimoduleTriple, group: FiniteGroup
) -> GroupAction:
    cat, bim, f = triple.cat, triple.bim, triple.field
    known = set(triple.objects)
    functors = {}
    for s, entry in source.action.items():
        where = f"action.{s}"
        if s not in group:
            raise InstanceError(f"unknown group element {s!r}", where)
        for X, Xs in entry.objects.items():
            if X not in known or Xs not in known:
                raise InstanceError(
                    f"unknown object in {X!r} -> {Xs!r}", f"{where}.objects"
                )
        obj_map = {X: entry.objects.get(X, X) for X in triple.objects}
        for a in entry.morphisms:
            _locate(cat, a, f"{where}.morphisms")
        for x in entry.elements:
            _locate(bim, x, f"{where}.elements")
        hom_mats, bim_mats = {}, {}
        for X in triple.objects:
            for Y in triple.objects:
                Xs, Ys = obj_map[X], obj_map[Y]
                fixed = Xs == X and Ys == Y
                if cat.dim(X, Y) or cat.dim(Xs, Ys):
                    hom_mats[(X, Y)] = _action_matrix(
                        f,
                        (X, Y),
                        (Xs, Ys),
                        cat.basis(X, Y),
                        cat.basis(Xs, Ys),
                        entry.morphisms,
                        fixed,
                        f"{where}.morphisms",
                    )
                if bim.dim(X, Y) or bim.dim(Xs, Ys):
                    bim_mats[(X, Y)] = _action_matrix(
                        f,
                        (X, Y),
                        (Xs, Ys),
                        bim.basis(X, Y),
                        bim.basis(Xs, Ys),
                        entry.elements,
                        fixed,
                        f"{where}.elements",
                    )
        functors[s] = Bifunctor(
            triple, triple, obj_map, hom_mats, bim_mats, name=f"T_{s}"
        )
    return GroupAction(triple, group, functors)


def _locate(space, name: str, where: str) -> Tuple[str, str, int]:
    try:
        return space.locate(name)
    except InstanceError as e:
        raise InstanceError(str(e), where)


def build_factors(source: InstanceFile, action: GroupAction) -> FactorSystem:
    fs = source.factors
    cat, g, f = action.triple.cat, action.group, action.triple.field
    values: Dict[Tuple[str, str, str], Vector] = {}
    for n, entry in enumerate(fs.scalar):
        where = f"factors.scalar.{n}"
        if entry.s not in g or entry.t not in g:
            raise InstanceError(
                f"unknown group element in ({entry.s}, {entry.t})", where
            )
        if not action.fixes_objects:
            raise InstanceError(
                "scalar factors need an action that fixes every object", where
            )
        c = f.element(entry.value)
        for X in cat.objects:
            values[(entry.s, entry.t, X)] = vec_scale(f, c, cat.identity(X))
    for n, entry in enumerate(fs.morphisms):
        where = f"factors.morphisms.{n}"
        if entry.s not in g or entry.t not in g:
            raise InstanceError(
                f"unknown group element in ({entry.s}, {entry.t})", where
            )
        if entry.object not in cat.objects:
            raise InstanceError(f"unknown object {entry.object!r}", where)
        src = action.obj(g.mul(entry.s, entry.t), entry.object)
        dst = action.obj_path(entry.object, entry.s, entry.t)
        values[(entry.s, entry.t, entry.object)] = _vector(
            f, cat.basis(src, dst), entry.value, f"{where}.value"
        )
    return FactorSystem(action, values)


def _blocks(f: FieldSpec, rows, carrier: Sequence[str], basis, where: str) -> Blocks:
    return tuple(
        tuple(
            _vector(f, basis(X, Y), rows[i][j], f"{where}.{i}.{j}")
            for j, X in enumerate(carrier)
        )
        for i, Y in enumerate(carrier)
    )


def build_el_objects(
    source: InstanceFile, triple: BimoduleTriple
) -> Tuple[List[ElObject], Optional[str]]:
    """Requested El objects, or none and a reason when the triple breaks its laws.

    Ids and shapes are always resolved; absorption by the carrier idempotent is
    only meaningful once composition and the actions are lawful.
    """
    cat, f = triple.cat, triple.field
    lawful = not source.requests.el_objects or (
        validate_category(cat).ok and validate_bimodule(triple.bim).ok
    )
    out = []
    for n, req in enumerate(source.requests.el_objects):
        where = f"requests.el_objects.{n}"
        for X in req.carrier:
            if X not in cat.objects:
                raise InstanceError(f"unknown object {X!r}", f"{where}.carrier")
        idem = None
        if req.idempotent is not None:
            idem = _blocks(
                f, req.idempotent, req.carrier, cat.basis, f"{where}.idempotent"
            )
            if lawful and not is_idempotent_blocks(cat, req.carrier, idem):
                raise PreconditionError(
                    f"{where}.idempotent: carrier of {req.name} is not idempotent"
                )
        carrier = normalize_object(cat, req.carrier, idem, req.name)
        elem = _blocks(
            f, req.element, req.carrier, triple.bim.basis, f"{where}.element"
        )
        if not lawful:
            continue
        try:
            out.append(el_object(triple, carrier, elem, req.name))
        except InstanceError as e:
            raise InstanceError(str(e), where)
    if not lawful:
        logger.warning(
            "skipping %d requested El objects: the triple breaks its laws",
            len(source.requests.el_objects),
        )
        return [], "requested El objects need a lawful category and bimodule"
    return out, None


def _arrow(cat: FinCat, sparse: SparseVector, where: str) -> Arrow:
    if not sparse:
        raise InstanceError(
            "a zero component has no endpoints; give at least one basis id", where
        )
    ends = set()
    for b in sparse:
        X, Y, _ = _locate(cat, b, where)
        ends.add((X, Y))
    if len(ends) != 1:
        raise InstanceError(
            "component mixes basis ids from different hom spaces", where
        )
    X, Y = ends.pop()
    return Arrow(X, Y, _vector(cat.field, cat.basis(X, Y), sparse, where))


def _arrows(cat: FinCat, value, where: str) -> List[Arrow]:
    parts = value if isinstance(value, list) else [value]
    return [_arrow(cat, part, f"{where}.{k}") for k, part in enumerate(parts)]


def build_requests(inst: Instance) -> None:
    source, triple = inst.source, inst.triple
    cat = triple.cat
    req = source.requests
    for X in req.objects:
        if X not in cat.objects:
            raise InstanceError(f"unknown object {X!r}", "requests.objects")
    inst.objects = list(req.objects)
    inst.el_objects, inst.el_objects_skipped = build_el_objects(source, triple)
    for n, seq in enumerate(req.ar_sequences):
        where = f"requests.ar_sequences.{n}"
        inst.sequences.append(
            (_arrows(cat, seq.a, f"{where}.a"), _arrows(cat, seq.b, f"{where}.b"))
        )
    for n, gen in enumerate(req.radical_generators):
        where = f"requests.radical_generators.{n}"
        if gen.object not in cat.objects:
            raise InstanceError(f"unknown object {gen.object!r}", where)
        arrows = []
        for b in gen.morphisms:
            X, Y, i = _locate(cat, b, where)
            arrows.append(Arrow(X, Y, unit_vector(inst.field, cat.dim(X, Y), i)))
        inst.generators.append((gen.object, gen.side, arrows))
    if req.zeta is not None:
        inst.zeta = inst.field.element(req.zeta)
    for n, subset in enumerate(req.subgroups):
        unknown = [s for s in subset if s not in inst.group]
        if unknown:
            raise InstanceError(
                f"unknown group elements {unknown}", f"requests.subgroups.{n}"
            )
        inst.subgroups.append(inst.group.subgroup(subset, name=f"H{n}"))


def build_instance(source: InstanceFile) -> Instance:
    f = build_field(source)
    triple = build_triple(source, f)
    group = build_group(source)
    action = build_action(source, triple, group)
    factors = build_factors(source, action)
    inst = Instance(
        source=source,
        field=f,
        triple=triple,
        group=group,
        action=action,
        factors=factors,
    )
    build_requests(inst)
    logger.info(
        "instance %s: %d objects, group of order %d",
        source.name,
        len(triple.objects),
        len(group),
    )
    return inst


# -- serialization ------------------------------------------------------


def _sparse(f: FieldSpec, ids: Sequence[str], pairs) -> Dict[str, str]:
    return {ids[k]: f.format(c) for k, c in pairs if c != 0}


def _dense_sparse(
    f: FieldSpec, ids: Sequence[str], v: Sequence[Scalar]
) -> Dict[str, str]:
    return _sparse(f, ids, enumerate(v))


def _table_entries(
    f, tables: Mapping, outer_basis, inner_basis, target_basis
) -> List[Tuple[str, str, Dict[str, str]]]:
    out = []
    for (X, Y, Z), table in tables.items():
        outer, inner, target = outer_basis(Y, Z), inner_basis(X, Y), target_basis(X, Z)
        for j, row in enumerate(table):
            for i, w in enumerate(row):
                value = _sparse(f, target, w)
                if value:
                    out.append((outer[j], inner[i], value))
    return out


def triple_to_instance(triple: BimoduleTriple, name: Optional[str] = None) -> dict:
    """The instance JSON of a bare triple (no group), bimodule written out."""
    cat, bim, f = triple.cat, triple.bim, triple.field
    field_json = {"kind": "prime", "p": f.p} if f.is_prime else {"kind": "rational"}
    homs = [
        {"src": X, "dst": Y, "basis": list(ids)}
        for (X, Y), ids in cat.hom_basis.items()
    ]
    composition = [
        {"outer": b, "inner": a, "value": v}
        for b, a, v in _table_entries(
            f, cat.composition_tables(), cat.basis, cat.basis, cat.basis
        )
    ]
    elements = [
        {"src": X, "dst": Y, "basis": list(ids)}
        for (X, Y), ids in bim.el_basis.items()
    ]
    left = [
        {"morphism": b, "element": x, "value": v}
        for b, x, v in _table_entries(
            f, bim.left_tables(), cat.basis, bim.basis, bim.basis
        )
    ]
    right = [
        {"element": x, "morphism": a, "value": v}
        for x, a, v in _table_entries(
            f, bim.right_tables(), bim.basis, cat.basis, bim.basis
        )
    ]
    maps = []
    for (X, Y), m in triple.diff.maps.items():
        for i, a in enumerate(cat.basis(X, Y)):
            value = _dense_sparse(f, bim.basis(X, Y), m.col(i))
            if value:
                maps.append({"morphism": a, "value": value})
    return {
        "name": name or triple.name,
        "field": field_json,
        "category": {
            "objects": list(cat.objects),
            "homs": homs,
            "identities": {
                X: _dense_sparse(f, cat.basis(X, X), cat.identity(X))
                for X in cat.objects
            },
            "composition": composition,
        },
        "bimodule": {"elements": elements, "left": left, "right": right},
        "differentiation": {"maps": maps},
    }
