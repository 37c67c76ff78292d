import pytest
from hypothesis import given, settings, strategies as st

from strengthlab.core import (
    Bounds,
    ConcreteCategory,
    FunctorData,
    Monoid,
    Morphism,
    NaturalData,
    Obj,
    Report,
    ThinCategory,
    compose_functors,
    current_bounds,
    identity_functor,
    identity_natural,
    opposite_category,
    product_category,
    validate_category,
    validate_functor,
    validate_natural,
)
from strengthlab.corpus import random_category
from strengthlab.errors import EmptyProbe, HomBoundExceeded, PartialComposition

from conftest import bump


@pytest.fixture(scope="module")
def finset():
    fs = ConcreteCategory("finset")
    fs.probe = tuple(fs.make(range(n), label=str(n)) for n in range(3))
    return fs


def test_hom_sizes_match_counting(finset):
    # |hom(m, n)| = n^m
    for x in finset.probe:
        for y in finset.probe:
            assert len(finset.hom(x, y)) == len(y.carrier) ** len(x.carrier)


def test_finset_is_a_category(finset):
    rep = validate_category(finset)
    assert rep.passed
    assert rep.result("associativity").instances > 0


def test_objects_are_interned():
    a = Obj((0, 1), label="two")
    b = Obj((0, 1))
    assert a is b


def test_obj_rejects_bad_orders():
    with pytest.raises(ValueError):
        Obj((0, 1), order={(0, 0), (1, 1), (0, 1), (1, 0)})
    with pytest.raises(ValueError):
        Obj((0, 1), order={(0, 1)})


def test_posets_count_monotone_maps():
    fp = ConcreteCategory("pos", ordered=True)
    chain = fp.make((0, 1), order={(0, 0), (1, 1), (0, 1)})
    disc = fp.make((0, 1))
    assert len(fp.hom(chain, chain)) == 3
    assert len(fp.hom(disc, chain)) == 4
    assert len(fp.hom(chain, disc)) == 2


def test_pointed_maps_fix_the_point():
    pt = ConcreteCategory("pt", pointed=True)
    a = Obj(("*", "a"), point="*")
    assert len(pt.hom(a, a)) == 2
    assert all(f("*") == "*" for f in pt.hom(a, a))


def test_equivariant_maps():
    z2 = Monoid((0, 1), 0, lambda a, b: (a + b) % 2)
    cat = ConcreteCategory("z2", monoid=z2)
    reg = cat.make((0, 1), action={(x, k): (x + k) % 2 for x in (0, 1) for k in (0, 1)})
    triv = cat.make((0,))
    assert len(cat.hom(reg, reg)) == 2
    assert len(cat.hom(reg, triv)) == 1
    assert cat.hom(triv, reg) == []


def test_monoid_rejects_non_associative():
    with pytest.raises(ValueError):
        table = {(0, a): a for a in range(3)} | {(a, 0): a for a in range(3)}
        table |= {(1, 1): 2, (1, 2): 1, (2, 1): 2, (2, 2): 2}
        Monoid((0, 1, 2), 0, table)


def test_thin_category():
    b2 = ThinCategory("b2", (0, 1), lambda a, c: a <= c)
    assert validate_category(b2).passed
    assert b2.hom(1, 0) == []


def test_opposite_is_involutive(finset):
    op = opposite_category(finset)
    assert opposite_category(op) is finset
    assert validate_category(op).passed


def test_product_category(finset):
    p = product_category(finset, finset)
    p.probe = p.probe[:4]
    assert validate_category(p).passed


def test_functor_and_natural_validate(finset):
    F = identity_functor(finset)
    assert validate_functor(F).passed
    assert validate_functor(compose_functors(F, F)).passed
    assert validate_natural(identity_natural(F)).passed


def test_broken_functor_is_refuted(finset):
    # collapses endomorphisms to identities, which breaks composition
    def mor(f):
        return finset.identity(f.cod) if f.dom == f.cod else f

    F = FunctorData(finset, finset, lambda x: x, mor)
    rep = validate_functor(F)
    assert rep.failed_laws() == ["composition"]


def test_natural_transformation_counterexample(finset):
    F = identity_functor(finset)
    two = finset.probe[2]

    def comp(x):
        if x is two:
            return Morphism(two, two, (1, 0))
        return finset.identity(x)

    rep = validate_natural(NaturalData(F, F, comp))
    assert not rep.passed
    assert rep.failures()[0].counterexample["morphism"] is not None


def test_empty_probe_raises():
    c = ConcreteCategory("empty")
    with pytest.raises(EmptyProbe):
        validate_category(c)


def test_hom_cap(monkeypatch):
    monkeypatch.setenv("STRENGTHLAB_BOUNDS", "10")
    assert current_bounds() == Bounds(hom_cap=10)
    fs = ConcreteCategory("finset")
    x = fs.make(range(3))
    with pytest.raises(HomBoundExceeded):
        fs.hom(x, x)


def test_bounds_parsing(monkeypatch):
    monkeypatch.setenv("STRENGTHLAB_BOUNDS", "hom=5,search=7")
    assert current_bounds() == Bounds(5, 7)
    monkeypatch.setenv("STRENGTHLAB_BOUNDS", "depth=3")
    with pytest.raises(ValueError):
        current_bounds()


def test_report_keeps_first_counterexample():
    rep = Report("demo", ["w"])
    rep.run("always", ((True, {}) for _ in range(3)))
    rep.run("sometimes", iter([(True, {}), (False, {"at": 1}), (False, {"at": 2})]))
    assert rep.failed_laws() == ["sometimes"]
    assert rep.result("sometimes").counterexample == {"at": 1}
    d = rep.to_dict()
    assert d["window"] == ["w"]


def test_partial_composition(finset):
    a, b = finset.probe[1], finset.probe[2]
    f = finset.hom(a, b)[0]
    with pytest.raises(PartialComposition):
        finset.compose(f, f)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_random_categories_are_categories(seed):
    c = random_category(seed)
    assert validate_category(c).passed
