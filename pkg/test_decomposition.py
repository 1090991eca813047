import pytest

from crossed_bimodules.api.builder import build_instance
from crossed_bimodules.api.models import SearchSettings
from crossed_bimodules.api.schema import parse_instance
from crossed_bimodules.categories import AddObject
from crossed_bimodules.checks import (
    KrullSchmidtCheck,
    NuCheck,
    RadicalCheck,
    StabilizerReductionCheck,
)
from crossed_bimodules.decomposition import (
    check_crossed_radical,
    check_free_orbit_indecomposable,
    check_uniqueness,
    count_simple_components,
    el_decompose,
    endomorphism_algebra,
    hom_algebra,
    krull_schmidt,
    lift_idempotents,
    nu,
    radical,
    radical_category,
    stabilizer,
    validate_algebra,
    verify_radical,
)
from crossed_bimodules.elements import phi
from crossed_bimodules.errors import PreconditionError
from crossed_bimodules.fixtures import load_fixture
from crossed_bimodules.verification import VerificationContext

SETTINGS = SearchSettings()
GENERATION = {"el_objects": 4, "adjoint_samples": 8, "perturbations": 4}


def build(name):
    return build_instance(load_fixture(name))


def context_for(name):
    return VerificationContext(build(name), SETTINGS, GENERATION)


def test_dual_numbers_radical():
    alg = hom_algebra(build("dual3").triple.cat, "o")
    assert validate_algebra(alg).ok
    J = radical(alg)
    assert J.dim == 1
    assert J.contains((0, 1))
    assert verify_radical(alg, J).ok


def test_radical_of_the_a2_category():
    rad = radical_category(build("a2").triple.cat)
    assert rad[("v1", "v2")].dim == 1
    assert rad[("v1", "v1")].dim == 0
    assert rad[("v2", "v2")].dim == 0


def test_krull_schmidt_on_a_sum():
    cat = build("a2").triple.cat
    X = AddObject(("v1", "v1", "v2"))
    dec = krull_schmidt(cat, X, SETTINGS)
    assert dec.end_dim == 7
    assert dec.rad_dim == 2
    assert len(dec.summands) == 3
    assert dec.nu == 2
    assert sorted(dec.multiplicities) == [1, 2]
    assert dec.nu_independent == 2
    assert check_uniqueness(endomorphism_algebra(cat, X), SETTINGS).status == "pass"


@pytest.mark.parametrize(
    "name, obj, expected",
    [
        ("point3_z2triv", "o", 2),
        ("point3_z2tw", "o", 1),
        ("point5_z4", "o", 4),
        ("point5_v4tw", "o", 1),
        ("swap_double", "u", 1),
    ],
)
def test_nu(name, obj, expected):
    dec = nu(build(name).crossed, obj, SETTINGS)
    assert dec.nu == expected
    assert all(c.agrees for c in dec.cross_checks.values() if c.applicable)


def test_twisted_klein_four_has_trivial_symmetric_part():
    dec = nu(build("point5_v4tw").crossed, "o", SETTINGS)
    assert dec.details["h0"] == ["1"]
    assert dec.details["stabilizer"] == ["1", "a", "b", "c"]


def test_nu_needs_a_finite_field():
    data = load_fixture("point3_z2triv").to_json()
    data["field"] = {"kind": "rational"}
    data["requests"].pop("zeta", None)
    ct = build_instance(parse_instance(data)).crossed
    with pytest.raises(PreconditionError):
        nu(ct, "o", SETTINGS)


def test_stabilizer_of_a_moved_object():
    act = build("swap_double").action
    stab = stabilizer(act, "u", SETTINGS)
    assert stab.subgroup.elements == ("1",)
    assert stab.conclusive


def test_el_decompose():
    inst = build("dual3_z2")
    ct = inst.crossed
    x = next(x for x in inst.el_objects if x.name == "x")
    dec = el_decompose(ct.triple, phi(ct, x), SETTINGS)
    assert dec.end_dim == 3
    assert sum(s.rank for s in dec.summands) == dec.end_dim


def test_radical_check():
    results = RadicalCheck().run(context_for("ardual_z2"))
    assert [r.name for r in results] == ["radical:base", "radical:crossed"]
    assert all(r.status == "pass" for r in results)


def test_krull_schmidt_check():
    results = KrullSchmidtCheck().run(context_for("point3_z2triv"))
    assert len(results) == 4
    assert all(r.status == "pass" for r in results)


def test_nu_check_reports_the_value():
    [result] = NuCheck().run(context_for("point3_z2triv"))
    assert result.status == "pass"
    assert result.witnesses["nu"] == 2


def test_stabilizer_reduction_check():
    results = StabilizerReductionCheck().run(context_for("point5_v4tw"))
    names = [r.name for r in results]
    assert names == [
        "stabilizer-reduction:o",
        "free-orbit:o",
        "cocycle-reduction:o",
        "reduced-crossed-algebra:o",
        "residue-center:o",
    ]
    assert all(r.status in ("pass", "skipped") for r in results)


def test_crossed_radical_is_the_tagged_base_radical():
    result = check_crossed_radical(build("dual3_z2").crossed)
    assert result.status == "pass"
    assert result.witnesses["base_radical_dims"] == {"o,o": 1}
    assert result.witnesses["crossed_radical_dims"] == {"o,o": 2}


def test_crossed_radical_needs_separability():
    assert check_crossed_radical(build("point3_z2_f2").crossed).status == "skipped"


def test_free_orbit_stays_indecomposable():
    ct = build("swap_double").crossed
    result = check_free_orbit_indecomposable(ct, "u", SETTINGS)
    assert result.status == "pass"
    assert result.witnesses["summands"] == 1
    ct = build("point3_z2triv").crossed
    fixed = check_free_orbit_indecomposable(ct, "o", SETTINGS)
    assert fixed.status == "skipped"


def test_group_algebra_in_characteristic_two_lifts_only_the_unit():
    alg = hom_algebra(build("point3_z2_f2").crossed.cat, "o")
    J = radical(alg)
    assert J.dim == 1
    assert J.contains((1, 1))
    units = lift_idempotents(alg, J)
    assert units.idempotents == (alg.unit,)
    assert units.primitive == (True,)


@pytest.mark.parametrize("name, expected", [("point3_z2tw", 1), ("point3_z2triv", 2)])
def test_count_simple_components(name, expected):
    alg = hom_algebra(build(name).crossed.cat, "o")
    assert radical(alg).dim == 0
    assert count_simple_components(alg) == expected
