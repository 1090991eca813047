import pytest

from crossed_bimodules.api.builder import build_instance, triple_to_instance
from crossed_bimodules.api.models import SearchSettings
from crossed_bimodules.api.schema import parse_instance
from crossed_bimodules.categories import (
    AddMorphism,
    AddObject,
    add_compose,
    compose_blocks,
    double_bimodule,
    identity_bifunctor,
    identity_of,
    invert_morphism,
    is_equivalence,
    karoubi_subcategory,
    split_epi,
    split_idempotent,
    split_mono,
    validate_bifunctor,
    validate_category,
    validate_triple,
)
from crossed_bimodules.errors import InstanceError, NotAMorphismError
from crossed_bimodules.fixtures import load_fixture


def build(name):
    return build_instance(load_fixture(name))


@pytest.fixture(scope="module")
def a2():
    return build("a2").triple


@pytest.fixture(scope="module")
def dual3():
    return build("dual3").triple


def test_a2_structure(a2):
    cat = a2.cat
    assert cat.objects == ("v1", "v2")
    assert cat.dim("v1", "v2") == 1
    assert cat.dim("v2", "v1") == 0
    a = cat.unit("v1", "v2", 0)
    assert cat.compose("v1", "v1", "v2", a, cat.identity("v1")) == a
    assert cat.compose("v1", "v2", "v2", cat.identity("v2"), a) == a
    assert validate_category(cat).ok
    assert validate_triple(a2).ok


def test_dual_numbers(dual3):
    cat = dual3.cat
    t = cat.unit("o", "o", 1)
    assert cat.compose("o", "o", "o", t, t) == (0, 0)
    report = validate_category(cat)
    assert report.ok and report.checked > 0


def test_leibniz_violation_is_reported():
    triple = build("dual3_deriv").triple
    assert validate_category(triple.cat).ok
    report = validate_triple(triple)
    assert not report.ok
    assert "leibniz" in {v.kind for v in report.violations}


def test_broken_identity_is_reported():
    data = load_fixture("dual3").to_json()
    comp = data["category"]["composition"]
    data["category"]["composition"] = [
        c for c in comp if (c["outer"], c["inner"]) != ("t", "1")
    ]
    triple = build_instance(parse_instance(data)).triple
    kinds = {v.kind for v in validate_category(triple.cat).violations}
    assert kinds == {"right-identity"}


def test_invertibility(a2):
    cat = a2.cat
    assert invert_morphism(cat, "v1", "v1", cat.identity("v1")) == cat.identity("v1")
    assert invert_morphism(cat, "v1", "v2", cat.unit("v1", "v2", 0)) is None


def test_block_composition(a2):
    cat = a2.cat
    X = AddObject(("v1", "v2"))
    one = identity_of(cat, X)
    assert compose_blocks(cat, X.summands, X.summands, X.summands, one, one) == one


def test_identity_bifunctor_is_an_equivalence(a2):
    F = identity_bifunctor(a2)
    assert validate_bifunctor(F).ok
    result = is_equivalence(F, SearchSettings())
    assert result.status == "pass"


def test_triple_round_trip(a2):
    data = triple_to_instance(a2, name="a2-copy")
    again = build_instance(parse_instance(data)).triple
    assert again.objects == a2.objects
    for X in a2.objects:
        for Y in a2.objects:
            assert again.cat.dim(X, Y) == a2.cat.dim(X, Y)
            assert again.bim.dim(X, Y) == a2.bim.dim(X, Y)
    assert validate_triple(again).ok


def test_unknown_basis_id_in_composition():
    data = load_fixture("a2").to_json()
    data["category"]["composition"].append(
        {"outer": "b", "inner": "e1", "value": {"a": "1"}}
    )
    with pytest.raises(InstanceError) as err:
        build_instance(parse_instance(data))
    assert err.value.location.startswith("category.composition")


def first_summand_projection(cat):
    return (
        (cat.identity("v1"), cat.zero("v2", "v1")),
        (cat.zero("v1", "v2"), cat.zero("v2", "v2")),
    )


def test_split_idempotent(a2):
    cat = a2.cat
    X = AddObject(("v1", "v2"))
    e = first_summand_projection(cat)
    Y, iota, pi = split_idempotent(cat, AddMorphism(X, X, e))
    assert Y.idem == e
    assert add_compose(cat, pi, iota).blocks == identity_of(cat, Y)
    assert add_compose(cat, iota, pi).blocks == e
    same, _, _ = split_idempotent(cat, AddMorphism(X, X, identity_of(cat, X)))
    assert same == X


def test_nilpotent_is_not_split(a2):
    cat = a2.cat
    X = AddObject(("v1", "v2"))
    n = (
        (cat.zero("v1", "v1"), cat.zero("v2", "v1")),
        (cat.unit("v1", "v2", 0), cat.zero("v2", "v2")),
    )
    with pytest.raises(NotAMorphismError):
        split_idempotent(cat, AddMorphism(X, X, n))


def test_karoubi_subcategory(a2):
    cat = a2.cat
    E = AddObject(("v1", "v2"), first_summand_projection(cat), "E")
    k = karoubi_subcategory(a2, {"P": AddObject.of("v1"), "E": E})
    kcat = k.triple.cat
    assert kcat.objects == ("P", "E")
    assert [kcat.dim("P", Q) for Q in ("P", "E")] == [1, 1]
    assert [kcat.dim("E", Q) for Q in ("P", "E")] == [1, 1]
    assert validate_triple(k.triple).ok
    assert k.hom_blocks("E", "E", kcat.identity("E")) == E.idem
    with pytest.raises(InstanceError):
        karoubi_subcategory(a2, {})


def test_double_bimodule(a2):
    double = double_bimodule(a2.cat)
    assert len(double.objects) == 4
    assert double.cat.dim("v1|v1", "v2|v2") == 2
    assert double.bim.dim("v1|v1", "v2|v2") == 1
    assert double.bim.dim("v2|v2", "v1|v1") == 0
    assert double.bim.dim("v2|v1", "v1|v1") == 0
    assert validate_triple(double).ok


def test_split_mono_and_epi(a2):
    cat = a2.cat
    assert split_mono(cat, "v1", [("v1", cat.identity("v1"))])
    assert split_epi(cat, "v1", [("v1", cat.identity("v1"))])
    a = cat.basis_vectors("v1", "v2")[0]
    assert not split_mono(cat, "v1", [("v2", a)])
    assert not split_epi(cat, "v2", [("v1", a)])
    assert split_mono(cat, "v1", [("v2", a), ("v1", cat.identity("v1"))])
