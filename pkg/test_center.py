import pytest

from crossed_bimodules.api.builder import build_instance
from crossed_bimodules.api.models import SearchSettings
from crossed_bimodules.center import (
    center_act,
    center_basis,
    center_one,
    check_center_action,
    check_separability_witness,
    check_center_invariants,
    check_subgroup_heredity,
    invariant_basis,
    is_central,
    is_separable,
    trace,
)
from crossed_bimodules.checks import SeparabilityCheck, SubgroupHeredityCheck
from crossed_bimodules.fixtures import load_fixture
from crossed_bimodules.verification import VerificationContext

GENERATION = {"el_objects": 4, "adjoint_samples": 8, "perturbations": 4}


def build(name):
    return build_instance(load_fixture(name))


@pytest.mark.parametrize(
    "name, dim", [("dual3", 2), ("a2", 1), ("swap_double", 2), ("point5", 1)]
)
def test_center_dimension(name, dim):
    t = build(name).triple
    basis = center_basis(t)
    assert len(basis) == dim
    assert all(is_central(t, alpha) for alpha in basis)


def test_sign_action_on_dual_numbers():
    inst = build("dual3_z2")
    t = inst.triple
    alpha = next(a for a in center_basis(t) if a["o"] == (0, 1))
    assert center_act(inst.factors, "g", alpha)["o"] == (0, 2)
    assert trace(inst.factors, alpha)["o"] == (0, 0)
    assert [a["o"] for a in invariant_basis(inst.factors)] == [(1, 0)]
    assert check_center_action(inst.factors).status == "pass"


def test_invariants_match_the_crossed_center():
    result = check_center_invariants(build("dual3_z2").crossed)
    assert result.status == "pass"
    assert result.witnesses["center_dim"] == 2
    assert result.witnesses["invariant_dim"] == 1


def test_separability():
    alpha = is_separable(build("point3_z2triv").factors)
    assert alpha is not None
    assert alpha["o"] == (2,)
    assert is_separable(build("point3_z2_f2").factors) is None


def test_swapping_action_is_separable():
    inst = build("swap_double")
    alpha = is_separable(inst.factors)
    assert alpha is not None
    assert trace(inst.factors, alpha) == center_one(inst.triple)
    assert len(invariant_basis(inst.factors)) == 1


@pytest.mark.parametrize(
    "name", ["point3_z2tw", "point5_v4tw", "dual3_z2", "swap_double"]
)
def test_separability_element(name):
    lam = build(name).factors
    result = check_separability_witness(lam, is_separable(lam))
    assert result.status == "pass", result.violations


def test_heredity_over_all_subgroups():
    lam = build("point5_v4tw").factors
    result = check_subgroup_heredity(lam, is_separable(lam))
    assert result.status == "pass"
    assert len(result.witnesses["subgroups"]) == 5


def test_separability_checks():
    context = VerificationContext(build("point5_z4"), SearchSettings(), GENERATION)
    [sep] = SeparabilityCheck().run(context)
    assert sep.status == "pass"
    assert "alpha" in sep.witnesses
    [heredity] = SubgroupHeredityCheck().run(context)
    assert heredity.status == "pass"
    assert len(heredity.witnesses["subgroups"]) == 3
