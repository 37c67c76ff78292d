import pytest

from strengthlab.core import ConcreteCategory, Obj, ThinCategory
from strengthlab.monoidal import (
    ConcreteCoproducts,
    ConcreteProducts,
    ThinCoproducts,
    ThinProducts,
    check_coproducts,
    check_products,
    cartesian_monoidal,
    cocartesian_monoidal,
    smash_monoidal,
    validate_monoidal,
)

from conftest import bundle


@pytest.fixture(scope="module")
def finset():
    fs = ConcreteCategory("finset")
    fs.probe = tuple(fs.make(range(n), label=str(n)) for n in range(3))
    return fs


def test_cartesian_and_cocartesian(finset):
    P, S = ConcreteProducts(finset), ConcreteCoproducts(finset)
    assert check_products(finset, P).passed
    assert check_coproducts(finset, S).passed
    assert validate_monoidal(cartesian_monoidal(finset, P)).passed
    assert validate_monoidal(cocartesian_monoidal(finset, S)).passed


def test_product_sizes(finset):
    P = ConcreteProducts(finset)
    for a in finset.probe:
        for b in finset.probe:
            assert len(P.product(a, b)[0].carrier) == len(a.carrier) * len(b.carrier)


def test_smash_product():
    pt = ConcreteCategory("pt", pointed=True)
    pt.probe = (Obj(("*",), point="*"), Obj(("*", "a"), point="*"))
    m = smash_monoidal(pt)
    assert validate_monoidal(m).passed
    a = pt.probe[1]
    # a ∧ a has the base point and the single pair of non-base elements
    assert len(m.obj(a, a).carrier) == 2


def test_smash_needs_points(finset):
    with pytest.raises(ValueError):
        smash_monoidal(finset)


def test_thin_structures():
    b2 = ThinCategory("b2", (0, 1), lambda a, c: a <= c)
    assert validate_monoidal(cartesian_monoidal(b2, ThinProducts(b2, min, 1))).passed
    assert validate_monoidal(cocartesian_monoidal(b2, ThinCoproducts(b2, max, 0))).passed


@pytest.mark.parametrize("name", ["finset", "finsetpt-cartesian", "finsetpt-smash", "z2act",
                                  "bool2", "finpos"])
def test_corpus_monoidal_structures(name):
    assert validate_monoidal(bundle(name).monoidal).passed
