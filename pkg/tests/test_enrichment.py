import pytest

from strengthlab.core import Morphism
from strengthlab.enrichment import (
    Adjunction,
    EnrichedMonadData,
    Enrichment,
    bundle_adjunction,
    bundle_enrichment,
    comparison,
    convert_functor,
    convert_monad,
    function_object,
    same_enriched_functor,
    same_enriched_monad,
    validate_adjunction,
    validate_enriched_functor,
    validate_enriched_monad,
    validate_enrichment,
)
from strengthlab.strength import same_ctxform
from strengthlab.strongmonad import same_strong_monad

from conftest import bump, bundle

CLOSED = ["finset", "z2act", "finsetpt-smash", "bool2"]


@pytest.mark.parametrize("name", CLOSED)
@pytest.mark.parametrize("kind", ["hom", "power"])
def test_adjunctions_validate(name, kind):
    assert validate_adjunction(bundle_adjunction(bundle(name), kind)).passed


@pytest.mark.parametrize("name", CLOSED)
def test_enrichments_validate(name):
    assert validate_enrichment(bundle_enrichment(bundle(name))).passed


def test_function_object_sizes():
    b = bundle("finset")
    for x in b.probe:
        for y in b.probe:
            assert len(function_object(b.category, x, y).carrier) == len(y.carrier) ** len(x.carrier)


def test_pointed_function_object():
    b = bundle("finsetpt-smash")
    p2 = b.probe[1]
    # pointed maps P2 -> P2: the zero map and the identity
    assert len(function_object(b.category, p2, p2, smash=True).carrier) == 2


def test_m_set_function_object_is_conjugation():
    b = bundle("z2act")
    reg = b.extras["regular"]
    h = function_object(b.category, reg, reg)
    # (f·m)(x) = f(x·m⁻¹)·m: the swap-commuting maps are the fixed points
    fixed = [f for f in h.carrier if h.act(f, 1) == f]
    assert len(fixed) == 2


def test_heyting_implication():
    b = bundle("bool2")
    adj = bundle_adjunction(b, "hom")
    assert [adj.right_obj(a, c) for a in (0, 1) for c in (0, 1)] == [1, 1, 0, 1]


def test_not_closed_instance_is_refused():
    with pytest.raises(Exception):
        bundle_adjunction(bundle("finsetpt-cartesian"), "hom")


def test_comparison_is_invertible():
    b = bundle("finset")
    e = bundle_enrichment(b)
    two = b.probe[2]
    m = comparison(e, b.action, e.vadjunction, two, two, two)
    assert b.category.inverse(m) is not None


def test_evaluation_round_trip():
    b = bundle("finset")
    adj = bundle_adjunction(b, "hom")
    two = b.probe[2]
    a = b.action
    for f in b.category.hom(a.obj(two, two), two):
        assert adj.bwd(two, two, two, adj.fwd(two, two, two, f)) == f


@pytest.mark.parametrize("monad", ["identity", "terminal", "exc", "maybe"])
def test_enriched_monads_round_trip(monad):
    b = bundle("finset")
    e = bundle_enrichment(b)
    m = b.monads[monad]
    em = convert_monad("toEnriched", m, e)
    assert validate_enriched_monad(em).passed
    assert same_strong_monad(convert_monad("toStrong", em, e), m) is None
    again = convert_monad("toEnriched", convert_monad("toStrong", em, e), e)
    assert same_enriched_monad(again, em) is None


@pytest.mark.parametrize("functor", ["constE", "const1", "const0"])
def test_enriched_functors_round_trip(functor):
    b = bundle("finset")
    e = bundle_enrichment(b)
    cf = b.ctxfunctors[functor]
    ef = convert_functor("toEnriched", cf, e)
    assert validate_enriched_functor(ef).passed
    back = convert_functor("toStrong", ef, e)
    assert same_ctxform(back, cf) is None
    assert same_enriched_functor(convert_functor("toEnriched", back, e), ef) is None


def test_j_mutant_breaks_the_enrichment():
    b = bundle("finset")
    e = bundle_enrichment(b)
    two = b.probe[2]
    j = lambda x: bump(e.j(x)) if x is two else e.j(x)
    mut = Enrichment(e.v, e.c, e.obj, e.mor, j, e.M)
    assert not validate_enrichment(mut).passed


def test_transpose_mutant_breaks_the_adjunction():
    b = bundle("finset")
    adj = bundle_adjunction(b, "hom")
    two = b.probe[2]

    def fwd(g, x, y, f):
        r = adj.fwd(g, x, y, f)
        return bump(r) if (g, x, y) == (two, two, two) and f == b.category.hom(f.dom, y)[0] else r

    mut = Adjunction(adj.act, "hom", adj.right_obj, fwd, adj.bwd)
    assert not validate_adjunction(mut).passed


def test_bind_mutant_breaks_the_enriched_monad():
    b = bundle("finset")
    e = bundle_enrichment(b)
    em = convert_monad("toEnriched", b.monads["maybe"], e)
    one = b.probe[1]
    bind = lambda x, y: bump(em.bind(x, y)) if (x, y) == (one, one) else em.bind(x, y)
    mut = EnrichedMonadData(e, em.T, em.eta, bind)
    assert not validate_enriched_monad(mut).passed
