import pytest
from hypothesis import given, settings, strategies as st

from strengthlab.core import Morphism, identity_functor
from strengthlab.strength import (
    Strength,
    blocking_pair,
    compose_strong,
    ctxform_from_wfc,
    ctxform_to_strength,
    enumerate_strengths,
    forced_strength,
    same_ctxform,
    same_strength,
    strength_from_wfc,
    strength_to_ctxform,
    validate_ctxform,
    validate_strength,
)

from conftest import bump, bundle


def test_square_has_exactly_the_forced_strength():
    b = bundle("finset")
    F, a = b.functors["square"], b.action
    found = enumerate_strengths(F, a, a)
    forced = forced_strength(F, a, a)
    assert len(found) == 1 and forced
    assert same_strength(found[0], forced.detail) is None
    assert same_strength(found[0], b.strengths["square"]) is None


def test_square_strength_formula():
    # str(γ, (x, x')) = ((γ, x), (γ, x'))
    b = bundle("finset")
    s = b.strengths["square"]
    g, x = b.probe[2], b.probe[2]
    comp = s(g, x)
    for gamma, (u, v) in comp.dom.carrier:
        assert comp((gamma, (u, v))) == ((gamma, u), (gamma, v))


def test_discretization_has_no_strength():
    b = bundle("finpos")
    F, a = b.functors["disc"], b.action
    assert enumerate_strengths(F, a, a) == []
    forced = forced_strength(F, a, a)
    assert not forced
    g, x = forced.witness["blocking Γ"], forced.witness["blocking X"]
    assert (g, x) == blocking_pair(F, a, a)


def test_blocking_pair_explained():
    # disc(Γ▷X) is discrete while Γ▷disc(X) keeps Γ's order; a map between
    # them that is the identity on elements is not monotone when Γ is a chain
    b = bundle("finpos")
    g, x = blocking_pair(b.functors["disc"], b.action, b.action)
    assert g.order != {(e, e) for e in g.carrier}


def test_pointed_identity_has_two_strengths():
    b = bundle("finsetpt-cartesian")
    a = b.action
    F = b.strengths["identity"].functor
    found = enumerate_strengths(F, a, a)
    assert len(found) == 2
    for name in ("identity", "star"):
        assert sum(same_strength(s, b.strengths[name]) is None for s in found) == 1
    assert not forced_strength(F, a, a)


def test_star_strength_table():
    b = bundle("finsetpt-cartesian")
    s = b.strengths["star"]
    p2 = b.probe[1]
    comp = s(p2, p2)
    assert all(comp((g, x)) == ("*", x) for g, x in comp.dom.carrier)
    assert validate_strength(s).passed


@pytest.mark.parametrize("name", ["identity", "square", "constE"])
def test_finset_strengths_validate(name):
    b = bundle("finset")
    assert validate_strength(b.strengths[name]).passed


def test_ctxform_round_trip():
    b = bundle("finset")
    s = b.strengths["square"]
    cf = strength_to_ctxform(s)
    assert validate_ctxform(cf).passed
    assert same_strength(ctxform_to_strength(cf, s.functor), s) is None


def test_wfc_strength_matches_forced():
    b = bundle("finset")
    F = b.functors["square"]
    s = strength_from_wfc(F, b.wfcs["fc"], b.action)
    assert same_strength(s, b.strengths["square"]) is None


def test_pointed_wfc_gives_star_strength():
    # Φ evaluates at the base point, so the identity map yields (γ, x) ↦ (⋆, x)
    b = bundle("finsetpt-cartesian")
    F = identity_functor(b.category)
    s = strength_from_wfc(F, b.wfcs["pt"], b.action)
    assert validate_strength(s).passed
    assert same_strength(s, b.strengths["star"]) is None


def test_strong_composition():
    b = bundle("finset")
    sq = strength_to_ctxform(b.strengths["square"])
    ce = b.ctxfunctors["constE"]
    both = compose_strong(sq, ce)
    assert validate_ctxform(both).passed
    assert validate_ctxform(compose_strong(ce, sq)).passed


def test_wfc_ctxform_is_strong():
    b = bundle("finset")
    cf = ctxform_from_wfc(b.functors["square"], b.wfcs["fc"], b.action)
    assert same_ctxform(cf, strength_to_ctxform(b.strengths["square"])) is None


def test_strength_mutant_is_refuted():
    b = bundle("finset")
    s = b.strengths["square"]
    key = (b.probe[2], b.probe[2])

    def comp(g, x):
        return bump(s(g, x)) if (g, x) == key else s(g, x)

    m = Strength(s.functor, s.act_c, s.act_d, comp)
    assert not validate_strength(m).passed


@settings(max_examples=15, deadline=None)
@given(st.sets(st.integers(0, 2), min_size=1, max_size=3),
       st.sampled_from(["identity", "square", "constE"]))
def test_functionally_complete_windows_force_unique_strengths(sizes, functor):
    # over a functionally complete window every functor has exactly one strength
    b = bundle("finset", probe=tuple(sorted(sizes)))
    F, a = b.functors[functor], b.action
    found = enumerate_strengths(F, a, a)
    assert len(found) == 1
    assert same_strength(found[0], b.strengths[functor]) is None
