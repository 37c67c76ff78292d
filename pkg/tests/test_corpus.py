import pytest

from strengthlab import corpus
from strengthlab.core import validate_category
from strengthlab.errors import GenerationFailed, ParamOutOfBounds, UnknownInstance


def test_registry_names():
    assert corpus.instance_names() == sorted([
        "bool2", "finpos", "finset", "finsetpt", "finsetpt-cartesian", "finsetpt-smash",
        "klexc", "writer-z2", "z2act",
    ])


@pytest.mark.parametrize("name", ["finset", "finsetpt-smash", "finpos", "z2act", "bool2"])
def test_every_instance_is_a_valid_category(name):
    assert validate_category(corpus.build(name).category).passed


def test_unknown_instance():
    with pytest.raises(UnknownInstance):
        corpus.build("sets")


@pytest.mark.parametrize("name, params", [
    ("finset", {"E": 9}),
    ("finset", {"probe": [0, 0]}),
    ("finset", {"probe": "ab"}),
    ("finset", {"colour": 1}),
    ("z2act", {"modulus": 5}),
    ("klexc", {"E": 0}),
])
def test_parameters_out_of_bounds(name, params):
    with pytest.raises(ParamOutOfBounds):
        corpus.build(name, **params)


def test_instance_spec_merges_params():
    b = corpus.build(corpus.InstanceSpec.of("finset", E=1))
    assert b.params["E"] == 1
    assert len(b.extras["E"].carrier) == 1


def test_z2act_types_follow_the_modulus():
    b = corpus.build("z2act", modulus=3)
    assert sorted(b.types) == ["M", "Unit", "Z3"]
    assert len(b.types["Z3"].carrier) == 3


def test_finset_without_exceptions_has_no_raise():
    b = corpus.build("finset", E=0)
    assert "raise" not in b.ops
    assert "flip" in b.ops


def test_random_categories_are_deterministic():
    a, b = corpus.random_category(7), corpus.random_category(7)
    assert a.objects == b.objects
    assert [a.hom(x, y) for x in a.objects for y in a.objects] == \
        [b.hom(x, y) for x in b.objects for y in b.objects]


def test_random_category_can_give_up():
    with pytest.raises(GenerationFailed):
        corpus.random_category(1, max_hom=0, retries=3)
