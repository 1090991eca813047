import random

import pytest

from crossed_bimodules.api.builder import build_instance
from crossed_bimodules.api.models import SearchSettings
from crossed_bimodules.checks import CocycleAssociativityCheck, CrossedTripleCheck
from crossed_bimodules.crossed import build_crossed, check_associativity
from crossed_bimodules.fixtures import load_fixture
from crossed_bimodules.groups import (
    FactorSystem,
    perturb_factor_system,
    validate_factor_system,
)
from crossed_bimodules.verification import VerificationContext

GENERATION = {"el_objects": 4, "adjoint_samples": 8, "perturbations": 6}


def build(name):
    return build_instance(load_fixture(name))


def context_for(name):
    return VerificationContext(build(name), SearchSettings(), GENERATION)


@pytest.fixture(scope="module")
def twisted():
    return build("point3_z2tw").crossed


def test_tagged_basis(twisted):
    assert list(twisted.cat.basis("o", "o")) == ["1[1]", "1[g]"]
    assert twisted.embed("o", "o", (1,)) == (1, 0)
    assert twisted.group_element("o", "g") == (0, 1)
    assert twisted.cat.identity("o") == (1, 0)


def test_group_elements_multiply_through_factors(twisted):
    g = twisted.group_element("o", "g")
    assert twisted.crossed_compose("o", "o", "o", g, g) == (2, 0)


def test_untwisted_square_is_the_unit():
    ct = build("point3_z2triv").crossed
    g = ct.group_element("o", "g")
    assert ct.crossed_compose("o", "o", "o", g, g) == (1, 0)


def test_swapping_action_moves_homs():
    ct = build("swap_double").crossed
    assert ct.cat.dim("u", "u") == 1
    assert ct.cat.dim("u", "v") == 1
    assert ct.hom_layout("u", "v").sizes == {"1": 0, "g": 1}
    g = ct.group_element("u", "g")
    back = ct.group_element("v", "g")
    assert ct.crossed_compose("u", "v", "u", back, g) == ct.cat.identity("u")


@pytest.mark.parametrize(
    "name",
    [
        "point3_z2triv",
        "point3_z2tw",
        "point5_v4tw",
        "dual3_z2",
        "ardual_z2",
        "swap_double",
    ],
)
def test_crossed_triples_are_associative(name):
    report = check_associativity(build(name).crossed)
    assert report.ok, report.violations


def test_unnormalized_factors_break_the_unit():
    inst = build("point3_z2triv")
    lam = FactorSystem.from_scalars(inst.action, {("g", "1"): 2})
    assert not validate_factor_system(lam).ok
    assert not check_associativity(build_crossed(inst.triple, inst.action, lam)).ok


def test_degenerate_factors_are_reported():
    inst = build("point3_z2triv")
    lam = FactorSystem.from_scalars(inst.action, {("g", "g"): 0})
    report = check_associativity(build_crossed(inst.triple, inst.action, lam))
    assert "degenerate" in {v.kind for v in report.violations}


def test_cocycles_are_exactly_the_associative_factor_systems():
    inst = build("point5_v4tw")
    rng = random.Random(3)
    for _ in range(5):
        lam, _, _ = perturb_factor_system(inst.factors, rng)
        cocycle = validate_factor_system(lam).ok
        crossed = build_crossed(inst.triple, inst.action, lam)
        associative = check_associativity(crossed).ok
        assert cocycle == associative


def test_crossed_triple_check_round_trips():
    [result] = CrossedTripleCheck().run(context_for("point3_z2tw"))
    assert result.status == "pass"
    assert result.witnesses["dims"] == {"o,o": 2}
    assert result.witnesses["instance"]["name"] == "point3_z2tw-crossed"


def test_cocycle_associativity_check():
    [result] = CocycleAssociativityCheck().run(context_for("point5_z4"))
    assert result.status == "pass"
    assert result.witnesses["candidates"] == 1 + GENERATION["perturbations"]


def test_cocycle_associativity_check_on_f2_is_skipped():
    [result] = CocycleAssociativityCheck().run(context_for("point3_z2_f2"))
    assert result.status == "skipped"
