import pytest

from crossed_bimodules.api.builder import build_instance
from crossed_bimodules.decomposition import (
    Arrow,
    check_almost_split,
    check_radical_generators,
    embed_arrows,
    is_almost_split_sequence,
    is_left_almost_split,
    is_right_almost_split,
)
from crossed_bimodules.errors import InstanceError
from crossed_bimodules.fixtures import load_fixture


def build(name):
    return build_instance(load_fixture(name))


@pytest.fixture(scope="module")
def ardual():
    return build("ardual")


def test_requested_sequence_is_almost_split(ardual):
    [(a, b)] = ardual.sequences
    assert [x.src for x in a] == ["S"] and [y.dst for y in b] == ["S"]
    cat = ardual.triple.cat
    assert is_left_almost_split(cat, a).ok
    assert is_right_almost_split(cat, b).ok
    assert is_almost_split_sequence(cat, a, b).ok


def test_zero_map_is_not_right_almost_split(ardual):
    cat = ardual.triple.cat
    [(a, _)] = ardual.sequences
    zero = [Arrow("P", "S", cat.zero("P", "S"))]
    assert not is_right_almost_split(cat, zero).ok
    assert not is_almost_split_sequence(cat, a, zero).ok


def test_mismatched_middle_terms(ardual):
    cat = ardual.triple.cat
    [(a, _)] = ardual.sequences
    with pytest.raises(InstanceError):
        is_almost_split_sequence(cat, a, [Arrow("S", "S", cat.identity("S"))])


def test_sequence_transfers_to_the_crossed_category():
    inst = build("ardual_z2")
    [(a, b)] = inst.sequences
    ct = inst.crossed
    images = embed_arrows(ct, a)
    assert images[0].value == ct.embed("S", "P", a[0].value)
    results = check_almost_split(ct, a, b, name="ar")
    assert [r.name for r in results] == ["ar", "ar-transfer"]
    assert all(r.status == "pass" for r in results)


@pytest.mark.parametrize("name", ["ardual", "ardual_z2"])
def test_radical_generators_survive(name):
    inst = build(name)
    [(X, side, arrows)] = inst.generators
    result = check_radical_generators(inst.crossed, X, arrows, side)
    assert result.status == "pass"
    assert result.witnesses["base_generates"] is True


def test_unknown_generator_side(ardual):
    [(X, _, arrows)] = ardual.generators
    with pytest.raises(InstanceError):
        check_radical_generators(ardual.crossed, X, arrows, "middle")


def test_identity_is_not_almost_split(ardual):
    cat = ardual.triple.cat
    identity = [Arrow("S", "S", cat.identity("S"))]
    left = is_left_almost_split(cat, identity)
    right = is_right_almost_split(cat, identity)
    assert "split-mono" in {v.kind for v in left.violations}
    assert "split-epi" in {v.kind for v in right.violations}


def test_dropped_generator_fails(ardual):
    [(X, side, arrows)] = ardual.generators
    partial = [a for a in arrows if a.dst == X]
    assert 0 < len(partial) < len(arrows)
    result = check_radical_generators(ardual.crossed, X, partial, side)
    assert result.status == "fail"
    assert result.witnesses["base_generates"] is False
    assert ("P", "S") in {tuple(v.where) for v in result.violations}
