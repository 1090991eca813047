import itertools
from fractions import Fraction

import pytest

from crossed_bimodules.api.builder import build_instance
from crossed_bimodules.api.models import SearchSettings
from crossed_bimodules.characters import (
    character_group,
    check_elements_duality,
    check_idempotents,
    check_orthogonality,
    check_character_duality,
    double_crossed,
    find_root,
    theta,
)
from crossed_bimodules.checks import CharacterDualityCheck, ElementsDualityCheck
from crossed_bimodules.errors import PreconditionError
from crossed_bimodules.exact import FieldSpec
from crossed_bimodules.fixtures import load_fixture
from crossed_bimodules.groups import FiniteGroup
from crossed_bimodules.verification import VerificationContext

F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
GENERATION = {"el_objects": 4, "adjoint_samples": 8, "perturbations": 4}


def build(name):
    return build_instance(load_fixture(name))


def symmetric_group():
    perms = list(itertools.permutations(range(3)))
    names = ["".join(map(str, p)) for p in perms]
    table = {}
    for p, a in zip(perms, names):
        for q, b in zip(perms, names):
            table[(a, b)] = "".join(str(p[q[i]]) for i in range(3))
    return FiniteGroup(names, "012", table, name="S3")


def test_roots_of_unity():
    assert find_root(F5, 4) == 2
    assert find_root(F5, 4, zeta=3) == 3
    assert find_root(FieldSpec.rational(), 2) == Fraction(-1)
    with pytest.raises(PreconditionError):
        find_root(F5, 4, zeta=4)
    with pytest.raises(PreconditionError):
        find_root(F3, 4)
    with pytest.raises(PreconditionError):
        find_root(FieldSpec.rational(), 3)


def test_cyclic_characters():
    chars = character_group(FiniteGroup.cyclic(4), F5, 2)
    assert len(chars.characters) == 4
    assert chars("chi1", "g") == 2
    assert chars("chi0", "g3") == 1
    assert chars.dual.is_cyclic
    assert check_orthogonality(chars).ok


def test_klein_four_characters_are_signs():
    g = build("point5_v4tw").group
    chars = character_group(g, F5)
    assert {chars(chi, s) for chi in chars.characters for s in g.elements} == {1, 4}
    assert not chars.dual.is_cyclic


def test_non_abelian_group_has_no_dual():
    with pytest.raises(PreconditionError):
        character_group(symmetric_group(), FieldSpec.prime(7))


def test_idempotents_split_the_double_construction():
    ct = build("point3_z2triv").crossed
    chars = character_group(ct.group, F3, 2)
    dct = double_crossed(ct, chars)
    assert dct.cat.dim("o", "o") == 4
    result = check_idempotents(ct, dct, chars)
    assert result.status == "pass", result.violations


@pytest.mark.parametrize("name", ["point3_z2triv", "point3_z2tw", "swap_double"])
def test_theta_is_an_equivalence(name):
    ct = build(name).crossed
    chars = character_group(ct.group, ct.base.field, 2)
    results = check_character_duality(ct, chars, SearchSettings())
    assert [r.name for r in results] == [
        "character-orthogonality",
        "character-action",
        "character-idempotents",
        "character-duality",
    ]
    failed = [r.name for r in results if r.status != "pass"]
    assert not failed, failed


def test_elements_duality_preserves_hom_dimensions():
    inst = build("dual3_z2")
    ct = inst.crossed
    chars = character_group(ct.group, F3, 2)
    th = theta(ct, chars)
    result = check_elements_duality(ct, chars, list(inst.el_objects), th=th)
    assert result.status == "pass"
    dims = {(x, y): left for x, y, left, _ in result.witnesses["dims"]}
    assert dims[("x", "x")] == 2
    assert dims[("x", "u")] == 0


def test_character_checks_through_the_context():
    context = VerificationContext(build("point5_v4tw"), SearchSettings(), GENERATION)
    results = CharacterDualityCheck().run(context) + ElementsDualityCheck().run(context)
    assert all(r.status == "pass" for r in results)
