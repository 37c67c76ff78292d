import pytest

from strengthlab.biaction import (
    Biaction,
    Bistrength,
    bistrength_from_symmetry,
    check_bistrong_natural,
    is_commutative_monad,
    kock_composites,
    lax_monoidal_from_commutative,
    self_biaction,
    validate_biaction,
    validate_bistrength,
    validate_right_action,
    writer_bistrength,
)
from strengthlab.errors import LaxLawFailed, NoBraiding
from strengthlab.monoidal import MonoidalStructure
from strengthlab.strongmonad import monad_to_strength, underlying_monad

from conftest import bump, bundle


def _writer(name="str"):
    b = bundle("writer-z2")
    m = b.monads[name]
    ba = self_biaction(m.act.v)
    return b, m, ba, writer_bistrength(m, ba, b.extras["monoid"])


def _sym(b, name):
    m = b.monads[name]
    return m, bistrength_from_symmetry(monad_to_strength(m), m.act.v)


@pytest.mark.parametrize("name", ["finset", "writer-z2", "finsetpt-smash", "bool2"])
def test_self_biactions_validate(name):
    b = bundle(name)
    ba = self_biaction(b.monoidal)
    assert validate_right_action(ba.right).passed
    assert validate_biaction(ba).passed


def test_middle_map_mutant_is_caught():
    b = bundle("finset")
    m = b.monoidal
    two = b.probe[2]
    good = self_biaction(m)

    def mid(g, x, d):
        f = m.assoc(g, x, d)
        return bump(f, at=0) if (g, x, d) == (two, two, two) else f

    bad = Biaction(good.left, good.right, mid, name="mutant")
    rep = validate_biaction(bad)
    assert not rep.passed
    assert "naturality" in rep.failed_laws()


@pytest.mark.parametrize("monad", ["str", "strprime"])
def test_writer_bistrength_is_commutative(monad):
    _, m, _, w = _writer(monad)
    assert validate_bistrength(w).passed
    assert is_commutative_monad(m, w)


def test_writer_right_strength_formula():
    # strᴿ((x, m), δ) = ((x, δ*m), m) on the regular Z2-set
    b, m, _, w = _writer("str")
    reg = b.extras["regular"]
    t = w.right(reg, reg)
    for ((x, k), d) in t.dom.carrier:
        assert t(((x, k), d)) == ((x, (d + k) % 2), k)


def test_writer_right_strength_is_not_the_mirrored_one():
    b, m, _, w = _writer("str")
    _, sym = _sym(b, "str")
    reg = b.extras["regular"]
    assert w.right(reg, reg).table != sym.right(reg, reg).table
    # for the twisted monad the two coincide
    _, _, _, w2 = _writer("strprime")
    _, sym2 = _sym(b, "strprime")
    assert w2.right(reg, reg).table == sym2.right(reg, reg).table


def test_exceptions_with_two_names_are_not_commutative():
    b = bundle("finset")
    m, bs = _sym(b, "exc")
    assert validate_bistrength(bs).passed
    v = is_commutative_monad(m, bs)
    assert not v
    w = v.witness
    assert w["law"] == "Kock square"
    # both sides raise, and the composites disagree on which exception wins
    assert {w["str then strᴿ"], w["strᴿ then str"]} == {("inr", "e0"), ("inr", "e1")}
    first, second = kock_composites(underlying_monad(m), bs, w["X"], w["Y"])
    assert first(w["input"]) != second(w["input"])


@pytest.mark.parametrize("monad", ["maybe", "identity", "terminal"])
def test_commutative_finset_monads(monad):
    m, bs = _sym(bundle("finset"), monad)
    assert is_commutative_monad(m, bs)


def test_single_exception_is_commutative():
    m, bs = _sym(bundle("finset", E=1), "exc")
    assert is_commutative_monad(m, bs)


def test_lax_monoidal_structure_of_a_commutative_monad():
    _, m, _, w = _writer("str")
    data, rep = lax_monoidal_from_commutative(m, w)
    assert rep.passed, rep.summary()
    assert data.phi0 == data.monad.eta(m.act.v.unit)


def test_lax_laws_fail_loudly_for_exceptions():
    m, bs = _sym(bundle("finset"), "exc")
    with pytest.raises(LaxLawFailed):
        lax_monoidal_from_commutative(m, bs)
    _, rep = lax_monoidal_from_commutative(m, bs, strict=False)
    assert not rep.passed


def test_no_braiding_means_no_mirrored_strength():
    b = bundle("finset")
    m = b.monoidal
    plain = MonoidalStructure(m.base, m.unit, m.obj, m.mor, m.lam, m.rho, m.assoc, name="plain")
    with pytest.raises(NoBraiding):
        bistrength_from_symmetry(b.strengths["identity"], plain)


def test_right_strength_mutant_is_caught():
    b, m, ba, w = _writer("str")
    reg = b.extras["regular"]

    def right(x, d):
        t = w.right(x, d)
        return bump(t, at=0) if (x, d) == (reg, reg) else t

    bad = Bistrength(w.left, right, ba, name="mutant")
    assert not validate_bistrength(bad).passed


def test_identity_is_bistrong_natural():
    b, m, _, w = _writer("str")
    und = underlying_monad(m)
    t = lambda x: und.functor.mor(b.category.identity(x))
    assert check_bistrong_natural(t, w, w)
