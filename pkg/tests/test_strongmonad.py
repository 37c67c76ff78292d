import random

import pytest
from hypothesis import given, settings, strategies as st

from strengthlab.action import enumerate_wfc, is_functionally_complete
from strengthlab.core import identity_functor, identity_natural, validate_category
from strengthlab.errors import Item3DiagramFailed
from strengthlab.strength import same_strength, strength_from_wfc, validate_strength
from strengthlab.strongmonad import (
    Algebra,
    KleisliCategory,
    KleisliStrongMonad,
    StronglyFreeCandidate,
    falg_category,
    is_algebraically_free,
    is_strongly_free,
    item3_diagrams,
    kleisli_lifting,
    lifting_square,
    lifting_to_strength,
    monad_from_strongly_free,
    monad_to_strength,
    same_monad,
    same_strong_monad,
    strength_to_monad,
    underlying_monad,
    unique_strong_monad_wp,
    validate_monad,
    validate_strong_monad,
    validate_strong_monad_morphism,
)
from strengthlab.powering import em_category, exception_algebra_iso

from conftest import bump, bundle

MONADS = [("finset", m) for m in ("identity", "terminal", "exc", "maybe")]
MONADS += [("z2act", m) for m in ("identity", "terminal", "str", "strprime")]
MONADS += [("finsetpt-cartesian", "identity"), ("finsetpt-smash", "terminal"),
           ("bool2", "identity"), ("finpos", "terminal")]


@pytest.mark.parametrize("name,monad", MONADS)
def test_corpus_monads_are_strong(name, monad):
    m = bundle(name).monads[monad]
    assert validate_strong_monad(m).passed
    assert validate_monad(underlying_monad(m)).passed


def test_kleisli_category_of_maybe():
    b = bundle("finset", probe=(0, 1))
    kl = KleisliCategory(underlying_monad(b.monads["maybe"]))
    assert validate_category(kl).passed


def test_exception_extension_propagates():
    b = bundle("finset")
    m = b.monads["exc"]
    one = b.probe[1]
    g = b.products.terminal()
    f = m.act.c.hom(m.act.obj(g, one), m.T(one))[0]
    ext = m.extend(g, one, f)
    for (gamma, v) in ext.dom.carrier:
        if v[0] == "inr":
            assert ext((gamma, v)) == v


def test_writer_forms_differ_at_a_witness():
    b = bundle("writer-z2")
    s1 = monad_to_strength(b.monads["str"])
    s2 = monad_to_strength(b.monads["strprime"])
    reg = b.extras["regular"]
    # str(γ, (x, m)) = ((γ, x), m) and str'(γ, (x, m)) = ((γ·m, x), m)
    for (g, (x, m)) in s1(reg, reg).dom.carrier:
        assert s1(reg, reg)((g, (x, m))) == ((g, x), m)
        assert s2(reg, reg)((g, (x, m))) == (((g + m) % 2, x), m)
    assert s1(reg, reg)((0, (0, 1))) != s2(reg, reg)((0, (0, 1)))
    assert same_strong_monad(b.monads["str"], b.monads["strprime"]) is not None
    assert same_monad(underlying_monad(b.monads["str"]), underlying_monad(b.monads["strprime"])) is None


def test_identity_is_not_a_strong_morphism_between_writer_forms():
    b = bundle("writer-z2")
    s1, s2 = b.monads["str"], b.monads["strprime"]
    t = identity_natural(underlying_monad(s1).functor)
    assert validate_strong_monad_morphism(t, s1, s1)
    assert not validate_strong_monad_morphism(t, s1, s2)


@pytest.mark.parametrize("name,monad", [("finset", "maybe"), ("writer-z2", "str"),
                                        ("writer-z2", "strprime")])
def test_strength_and_lifting_round_trips(name, monad):
    b = bundle(name)
    m = b.monads[monad]
    um = underlying_monad(m)
    s = monad_to_strength(m)
    assert validate_strength(s).passed
    v = strength_to_monad(um, s)
    assert v and same_strong_monad(v.detail, m) is None
    lift = kleisli_lifting(m)
    assert lifting_square(lift, b.action, lift.c)
    assert same_strength(lifting_to_strength(lift, b.action, um), s) is None


def test_identity_monad_with_star_strength_fails_the_unit_triangle():
    b = bundle("finsetpt-cartesian")
    s = strength_from_wfc(identity_functor(b.category), b.wfcs["pt"], b.action)
    v = strength_to_monad(underlying_monad(b.monads["identity"]), s)
    assert not v
    assert v.witness["diagram"] == "η-triangle"


def test_unique_strong_monad_over_well_pointed():
    b = bundle("finset")
    m = b.monads["exc"]
    sm = unique_strong_monad_wp(underlying_monad(m), monad_to_strength(m))
    assert same_strong_monad(sm, m) is None


def test_unique_strong_monad_refuses_non_well_pointed():
    b = bundle("finsetpt-cartesian")
    m = b.monads["identity"]
    with pytest.raises(ValueError):
        unique_strong_monad_wp(underlying_monad(m), monad_to_strength(m))


def _exc_candidate(b):
    S, E = b.coproducts, b.extras["E"]

    def cand(x):
        A, i1, i2 = S.coproduct(x, E)
        return StronglyFreeCandidate(x, Algebra(A, i2), i1)

    return cand


def test_strongly_free_exception_algebras():
    b = bundle("finset")
    F = b.ctxfunctors["constE"]
    cand = _exc_candidate(b)
    for x in b.probe:
        assert is_strongly_free(F, cand(x))
    m = monad_from_strongly_free(F, cand)
    assert validate_strong_monad(m).passed
    assert same_strong_monad(m, b.monads["exc"]) is None


def test_non_free_candidate_is_rejected():
    b = bundle("finset")
    S, E, c = b.coproducts, b.extras["E"], b.category
    one = b.probe[1]
    A, i1, i2 = S.coproduct(one, E)
    A2, j1, _ = S.coproduct(A, E)
    bad = StronglyFreeCandidate(one, Algebra(A2, c.compose(j1, i2)), c.compose(j1, i1))
    assert not is_strongly_free(b.ctxfunctors["constE"], bad)


def test_exception_monad_is_algebraically_free():
    b = bundle("finset")
    um = underlying_monad(b.monads["exc"])
    em = em_category(um)
    falg = falg_category(b.functors["constE"], b.probe)
    iso = exception_algebra_iso(um, b.coproducts, b.extras["E"], em, falg)
    assert is_algebraically_free(um, b.functors["constE"], iso)
    assert len(em.probe) == len(falg.probe)


def test_extension_mutant_is_refuted():
    b = bundle("finset", probe=(0, 1))
    m = b.monads["maybe"]
    one = b.probe[1]
    g = one

    def extend(gg, x, f):
        r = m.extend(gg, x, f)
        return bump(r) if (gg, x) == (g, one) else r

    mut = KleisliStrongMonad(m.act, m.T, m.eta, extend, name="mutant")
    assert not validate_strong_monad(mut).passed


def test_item3_diagrams_for_corpus_strengths():
    b = bundle("finset")
    for name in ("exc", "maybe", "identity"):
        m = b.monads[name]
        assert item3_diagrams(underlying_monad(m), monad_to_strength(m))


WINDOW_INSTANCES = ["finset", "finsetpt-cartesian", "finsetpt-smash", "bool2", "finpos"]


def _subset(rng, items):
    items = list(items)
    k = rng.randint(1, len(items))
    return tuple(sorted(rng.sample(items, k), key=items.index))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(WINDOW_INSTANCES), st.integers(0, 2**32 - 1))
def test_identity_strong_via_wfc_implies_fc(name, seed):
    """If some WFC structure makes the identity monad strong, the window is FC."""
    b = bundle(name)
    a = b.action
    rng = random.Random(seed)
    objs = _subset(rng, b.probe)
    ctxs = _subset(rng, a.ctx_probe)
    if a.v.unit not in ctxs:
        ctxs += (a.v.unit,)
    idm = underlying_monad(b.monads["identity"])
    F = identity_functor(b.category)
    for w in enumerate_wfc(a, ctxs, objs, codomains="second"):
        s = strength_from_wfc(F, w, a)
        if item3_diagrams(idm, s, ctxs, objs):
            assert is_functionally_complete(a, ctxs, objs)
