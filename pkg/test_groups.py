import random

import pytest

from crossed_bimodules.api.builder import build_instance
from crossed_bimodules.api.schema import parse_instance
from crossed_bimodules.errors import InstanceError, PreconditionError
from crossed_bimodules.fixtures import load_fixture
from crossed_bimodules.groups import (
    FactorSystem,
    FiniteGroup,
    derived_identity_holds,
    perturb_factor_system,
    validate_action,
    validate_factor_system,
    validate_group,
)


def build(name):
    return build_instance(load_fixture(name))


def test_cyclic_group():
    g = FiniteGroup.cyclic(4)
    assert g.elements == ("1", "g", "g2", "g3")
    assert g.order("g") == 4 and g.order("g2") == 2
    assert g.inv("g") == "g3"
    assert g.is_abelian and g.is_cyclic
    assert g.subgroups() == [
        frozenset({"1"}),
        frozenset({"1", "g2"}),
        frozenset(g.elements),
    ]
    assert g.right_coset_representatives({"1", "g2"}) == ["1", "g"]
    assert validate_group(g).ok


def test_klein_four_group():
    g = build("point5_v4tw").group
    assert len(g) == 4
    assert g.is_abelian and not g.is_cyclic
    assert len(g.subgroups()) == 5
    h = g.subgroup({"1", "a"})
    assert h.elements == ("1", "a")
    with pytest.raises(InstanceError):
        g.subgroup({"1", "a", "b"})


def test_table_without_inverses():
    g = FiniteGroup.from_rows(["1", "x"], "1", [["1", "x"], ["x", "x"]])
    report = validate_group(g)
    assert {v.kind for v in report.violations} == {"inverse"}


def test_trivial_and_twisted_factor_systems():
    names = ("point3_z2triv", "point3_z2tw", "point5_v4tw", "dual3_z2", "swap_double")
    for name in names:
        inst = build(name)
        assert validate_action(inst.action).ok, name
        assert validate_factor_system(inst.factors).ok, name
        assert derived_identity_holds(inst.factors).ok, name


def test_swapping_action():
    inst = build("swap_double")
    act = inst.action
    assert act.obj("g", "u") == "v"
    assert act.obj_path("u", "g", "g") == "u"
    assert not act.fixes_objects
    assert act.act_morphism("g", "u", "u", (1,)) == (1,)


def test_unnormalized_factors_are_rejected():
    inst = build("point3_z2triv")
    lam = FactorSystem.from_scalars(inst.action, {("g", "1"): 2})
    kinds = {v.kind for v in validate_factor_system(lam).violations}
    assert "normalization" in kinds


def test_scalar_factors_need_fixed_objects():
    data = load_fixture("swap_double").to_json()
    data["factors"] = {"scalar": [{"s": "g", "t": "g", "value": "2"}]}
    with pytest.raises(InstanceError) as err:
        build_instance(parse_instance(data))
    assert err.value.location == "factors.scalar.0"


def test_unknown_group_element_in_factors():
    data = load_fixture("point3_z2tw").to_json()
    data["factors"]["scalar"][0]["s"] = "h"
    with pytest.raises(InstanceError):
        build_instance(parse_instance(data))


def test_perturbation():
    inst = build("point3_z2tw")
    lam, key, c = perturb_factor_system(inst.factors, random.Random(7))
    assert c not in (0, 1)
    expected = tuple(inst.field.mul(c, v) for v in inst.factors.values[key])
    assert lam.values[key] == expected
    with pytest.raises(PreconditionError):
        perturb_factor_system(build("point3_z2_f2").factors, random.Random(0))
