import pytest

from strengthlab.core import identity_natural
from strengthlab.enrichment import bundle_adjunction
from strengthlab.powering import (
    NoStrengthToConvert,
    Powering,
    PoweredMonadData,
    action_from_powering,
    check_powered_monad_morphism,
    convert_powered_functor,
    convert_powered_monad,
    em_category,
    em_lifting,
    exception_algebra_iso,
    free_powered_monad,
    lift_powering_to_falg,
    lifting_u_square,
    powered_monad_from_lifting,
    powering_from_action,
    same_action,
    same_powered_functor,
    same_powered_monad,
    symmetric_powerings_iso,
    validate_powered_functor,
    validate_powered_monad,
    validate_powering,
)
from strengthlab.strength import same_ctxform
from strengthlab.strongmonad import falg_category, is_algebraically_free, same_monad, same_strong_monad, underlying_monad

from conftest import bump, bundle


def powering(name):
    b = bundle(name)
    if "test_powering" not in b.extras:
        b.extras["test_powering"] = powering_from_action(b.action, bundle_adjunction(b, "power"))
    return b.extras["test_powering"]


@pytest.mark.parametrize("name", ["finset", "z2act", "finsetpt-smash", "bool2"])
def test_powerings_validate_and_give_back_the_action(name):
    b = bundle(name)
    pw = powering(name)
    assert validate_powering(pw).passed
    assert same_action(action_from_powering(pw, pw.adjunction), b.action) is None


def test_finpos_powering_on_a_small_window():
    b = bundle("finpos")
    pw = powering("finpos")
    chain = b.probe[0]
    assert validate_powering(pw, ctx_probe=(chain, b.monoidal.unit), probe=(chain,)).passed


def test_power_of_sets_is_exponentiation():
    b = bundle("finset")
    pw = powering("finset")
    for g in b.probe:
        for x in b.probe:
            assert len(pw.obj(g, x).carrier) == len(x.carrier) ** len(g.carrier)


def test_symmetric_powerings_are_isomorphic():
    pw = powering("finset")
    assert symmetric_powerings_iso(pw, pw)


@pytest.mark.parametrize("monad", ["identity", "terminal", "exc", "maybe"])
def test_powered_monads_round_trip(monad):
    b = bundle("finset")
    pw = powering("finset")
    m = b.monads[monad]
    pm = convert_powered_monad("toPowered", m, pw)
    assert validate_powered_monad(pm).passed
    assert same_strong_monad(convert_powered_monad("toStrong", pm, pw), m) is None
    assert same_monad(pm.underlying(), underlying_monad(m)) is None


def test_writer_powered_round_trip():
    b = bundle("writer-z2")
    pw = powering("writer-z2")
    for name in ("str", "strprime"):
        pm = convert_powered_monad("toPowered", b.monads[name], pw)
        assert validate_powered_monad(pm).passed
        assert same_strong_monad(convert_powered_monad("toStrong", pm, pw), b.monads[name]) is None


@pytest.mark.parametrize("functor", ["constE", "const1"])
def test_powered_functors_round_trip(functor):
    b = bundle("finset")
    pw = powering("finset")
    cf = b.ctxfunctors[functor]
    pf = convert_powered_functor("toPowered", cf, pw)
    assert validate_powered_functor(pf).passed
    back = convert_powered_functor("toStrong", pf, pw)
    assert same_ctxform(back, cf) is None
    assert same_powered_functor(convert_powered_functor("toPowered", back, pw), pf) is None


def test_bare_functor_needs_a_unique_strength():
    b = bundle("finset")
    pw = powering("finset")
    pf = convert_powered_functor("toPowered", b.functors["square"], pw)
    assert validate_powered_functor(pf).passed


def test_functor_without_strength_is_refused():
    b = bundle("finpos")
    with pytest.raises(NoStrengthToConvert):
        convert_powered_functor("toPowered", b.functors["disc"], powering("finpos"))


@pytest.mark.parametrize("monad", ["identity", "terminal", "maybe"])
def test_em_liftings(monad):
    b = bundle("finset", probe=(0, 1, 2))
    pw = powering("finset")
    pm = convert_powered_monad("toPowered", b.monads[monad], pw)
    lifted = em_lifting(pm)
    assert validate_powering(lifted).passed
    assert lifting_u_square(lifted)
    back = powered_monad_from_lifting(lifted, pm.underlying(), pw)
    assert same_powered_monad(back, pm) is None


def test_pextend_mutant_is_refuted():
    b = bundle("finset")
    pw = powering("finset")
    pm = convert_powered_monad("toPowered", b.monads["maybe"], pw)
    two = b.probe[2]

    def pext(g, x, y, f):
        r = pm.pextend(g, x, y, f)
        return bump(r, at=len(r.table) - 1) if g is two else r

    mut = PoweredMonadData(pw, pm.T, pm.eta, pext, name="mutant")
    assert not validate_powered_monad(mut).passed


def test_monad_morphism_identity():
    b = bundle("finset")
    pw = powering("finset")
    pm = convert_powered_monad("toPowered", b.monads["maybe"], pw)
    t = identity_natural(pm.underlying().functor)
    assert check_powered_monad_morphism(t, pm, pm)


def test_falg_lifting_for_constant_functor():
    b = bundle("finset")
    pw = powering("finset")
    pf = convert_powered_functor("toPowered", b.ctxfunctors["constE"], pw)
    lf = lift_powering_to_falg(pf, pw)
    assert validate_powering(lf).passed
    assert lifting_u_square(lf)


def test_free_powered_monad_is_exceptions():
    b = bundle("finset")
    pw = powering("finset")
    exc = b.monads["exc"]
    um = underlying_monad(exc)
    em = em_category(um)
    falg = falg_category(b.functors["constE"], b.probe)
    iso = exception_algebra_iso(um, b.coproducts, b.extras["E"], em, falg)
    assert is_algebraically_free(um, b.functors["constE"], iso)
    pf = convert_powered_functor("toPowered", b.ctxfunctors["constE"], pw)
    fpm = free_powered_monad(pf, um, iso, pw)
    assert validate_powered_monad(fpm).passed
    assert all(fpm.certificates.values())
    assert same_strong_monad(convert_powered_monad("toStrong", fpm, pw), exc) is None


def test_i_mutant_breaks_the_powering():
    pw = powering("finset")
    two = bundle("finset").probe[2]
    i = lambda x: bump(pw.i(x)) if x is two else pw.i(x)
    mut = Powering(pw.v, pw.c, pw.obj, pw.mor, i, pw.p)
    assert not validate_powering(mut).passed
