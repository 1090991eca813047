import pytest

from crossed_bimodules.api.builder import build_instance
from crossed_bimodules.api.models import SearchSettings
from crossed_bimodules.categories import AddObject, compose_blocks, identity_of
from crossed_bimodules.center import is_separable
from crossed_bimodules.checks import (
    AdjunctionCheck,
    ElHomCheck,
    InducedActionCheck,
    PsiCheck,
    SummandCheck,
)
from crossed_bimodules.elements import (
    ElHomSpace,
    act_el_object,
    check_adjunction,
    check_adjunction_naturality,
    check_phi_fully_faithful,
    el_isomorphic,
    el_object,
    induced_action,
    is_el_morphism,
    phi,
    psi,
    summand_witness,
)
from crossed_bimodules.errors import InstanceError
from crossed_bimodules.fixtures import load_fixture
from crossed_bimodules.groups import validate_action, validate_factor_system
from crossed_bimodules.verification import VerificationContext

GENERATION = {"el_objects": 4, "adjoint_samples": 8, "perturbations": 4}


def build(name):
    return build_instance(load_fixture(name))


def by_name(inst):
    return {x.name: x for x in inst.el_objects}


@pytest.fixture(scope="module")
def dual3_z2():
    return build("dual3_z2")


def test_dual_number_hom_spaces():
    inst = build("dual3")
    t, objs = inst.triple, by_name(inst)
    x, u = objs["x"], objs["u"]
    assert ElHomSpace(t, x, x).dim == 2
    assert ElHomSpace(t, u, u).dim == 2
    # 1 + t is a unit, so nothing maps x to u
    assert ElHomSpace(t, x, u).dim == 0
    for a in ElHomSpace(t, x, x).basis_blocks():
        assert is_el_morphism(t, x, x, a)


def test_element_must_be_absorbed_by_the_idempotent():
    t = build("a2").triple
    one = ((t.cat.identity("v1"),),)
    x = el_object(t, AddObject(("v1",), one), ((t.bim.unit("v1", "v1", 0),),), name="x")
    assert x.label() == "x"
    zero = ((t.cat.zero("v1", "v1"),),)
    with pytest.raises(InstanceError):
        el_object(t, AddObject(("v1",), zero), ((t.bim.unit("v1", "v1", 0),),))


def test_twisted_object_is_not_isomorphic(dual3_z2):
    t, x = dual3_z2.triple, by_name(dual3_z2)["x"]
    xg = act_el_object(dual3_z2.action, "g", x)
    assert xg.elem == (((0, 2),),)
    assert ElHomSpace(t, xg, x).dim == 1
    outcome = el_isomorphic(t, x, xg, SearchSettings())
    assert not outcome.found and outcome.status == "fail"
    assert el_isomorphic(t, x, x, SearchSettings()).found


def test_phi_embeds_at_the_unit(dual3_z2):
    ct, x = dual3_z2.crossed, by_name(dual3_z2)["x"]
    assert phi(ct, x).elem == (((0, 1, 0, 0),),)
    assert phi(ct, x).name == "x[1]"
    assert psi(ct, phi(ct, x)).summands == ("o", "o")


def test_phi_is_fully_faithful(dual3_z2):
    ct, x = dual3_z2.crossed, by_name(dual3_z2)["x"]
    result = check_phi_fully_faithful(ct, [(x, x)])
    assert result.status == "pass"
    assert result.witnesses["dims"] == [[3, 3]]


def test_adjunction(dual3_z2):
    ct, objs = dual3_z2.crossed, by_name(dual3_z2)
    x, u = objs["x"], objs["u"]
    for eta in (phi(ct, x), phi(ct, u)):
        result = check_adjunction(ct, x, eta)
        assert result.status == "pass", result.violations
        left, right = result.witnesses["dims"]
        assert left == right
    result = check_adjunction_naturality(ct, x, u, phi(ct, x), phi(ct, u))
    assert result.status == "pass"


def test_summand_witness(dual3_z2):
    ct, x = dual3_z2.crossed, by_name(dual3_z2)["x"]
    alpha = is_separable(dual3_z2.factors)
    assert alpha is not None
    xi = phi(ct, x)
    iota, pi = summand_witness(ct, xi, alpha.as_dict())
    big = psi(ct, xi).summands
    composite = compose_blocks(ct.cat, xi.summands, big, xi.summands, pi, iota)
    assert composite == identity_of(ct.cat, xi.carrier)


def test_induced_action_on_orbit_closure(dual3_z2):
    objs = list(dual3_z2.el_objects)
    frag, act, lam = induced_action(dual3_z2.action, dual3_z2.factors, objs)
    assert len(frag.objects) == 4
    assert act.obj("g", "x") == "x^g"
    assert act.obj("g", "x^g") == "x"
    assert validate_action(act).ok
    assert validate_factor_system(lam).ok


def test_unit_fixes_named_el_objects():
    inst = build("point3_z2triv")
    x = by_name(inst)["x"]
    assert x.carrier.name == "x"
    assert act_el_object(inst.action, "1", x) == x
    frag, act, _ = induced_action(inst.action, inst.factors, [x])
    assert list(frag.objects) == ["x"]
    assert act.obj("1", "x") == "x"
    assert validate_action(act).ok


@pytest.mark.parametrize("name", ["point3_z2triv", "dual3_z2", "swap_double"])
def test_induced_action_check_passes(name):
    context = VerificationContext(build(name), SearchSettings(), GENERATION)
    results = InducedActionCheck().run(context)
    failed = [r for r in results if r.status == "fail"]
    assert all(r.status in ("pass", "skipped") for r in results), failed


@pytest.mark.parametrize("check", [ElHomCheck, PsiCheck, AdjunctionCheck, SummandCheck])
def test_element_checks_pass(check):
    context = VerificationContext(build("dual3_z2"), SearchSettings(), GENERATION)
    results = check().run(context)
    assert results
    failed = [r for r in results if r.status == "fail"]
    assert all(r.status in ("pass", "skipped") for r in results), failed
