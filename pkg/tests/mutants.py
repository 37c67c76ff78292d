"""Single-entry mutants, one per validator.

Each entry builds a structure that passes its validator and a copy with a
single table entry changed, and returns both validation results.  The mutation
and the law it is expected to break are given in the docstring.
"""

import os

from strengthlab.action import LeftAction, WFCStructure, validate_action, validate_wfc
from strengthlab.biaction import (
    Biaction,
    Bistrength,
    RightAction,
    right_self_action,
    self_biaction,
    validate_biaction,
    validate_bistrength,
    validate_right_action,
    writer_bistrength,
)
from strengthlab.cli import load_instance
from strengthlab.core import (
    FunctorData,
    NaturalData,
    identity_functor,
    identity_natural,
    validate_category,
    validate_functor,
    validate_natural,
)
from strengthlab.enrichment import (
    Adjunction,
    EnrichedMonadData,
    Enrichment,
    bundle_adjunction,
    bundle_enrichment,
    convert_monad,
    validate_adjunction,
    validate_enriched_monad,
    validate_enrichment,
)
from strengthlab.errors import ValidationFailed
from strengthlab.monoidal import MonoidalStructure, validate_monoidal
from strengthlab.powering import (
    Powering,
    PoweredMonadData,
    convert_powered_monad,
    powering_from_action,
    validate_powered_monad,
    validate_powering,
)
from strengthlab.strength import Strength, validate_strength
from strengthlab.strongmonad import (
    KleisliStrongMonad,
    MonadData,
    underlying_monad,
    validate_monad,
    validate_strong_monad,
)

from conftest import bump, bundle

FIX = os.path.join(os.path.dirname(__file__), "fixtures")
CATALOG = []


def mutant(module):
    def register(fn):
        CATALOG.append((module, fn.__name__, fn))
        return fn
    return register


def _two():
    b = bundle("finset")
    return b, b.probe[2]


@mutant("core")
def category_table():
    """Compose table of the two-object fixture with ``e∘e`` changed from ``e``
    to ``id_A``; associativity fails at ``(g, e, e)``."""
    good = validate_category(load_instance(os.path.join(FIX, "two_objects.inst")).category)
    try:
        bad = validate_category(load_instance(os.path.join(FIX, "two_objects_mutant.inst")).category)
    except ValidationFailed as e:
        bad = e.report
    return good, bad


@mutant("core")
def functor_on_swap():
    """Identity functor on finset sending the swap of 2 to the constant 0;
    preservation of composition fails at swap∘swap."""
    b, two = _two()
    F = identity_functor(b.category)
    swap = next(f for f in b.category.hom(two, two) if f.table == (1, 0))
    bad = FunctorData(F.source, F.target, F.obj, lambda f: bump(f) if f == swap else f)
    return validate_functor(F), validate_functor(bad)


@mutant("core")
def natural_component():
    """Identity transformation with the component at 2 changed to ``(1, 1)``;
    naturality fails against the constant maps."""
    b, two = _two()
    t = identity_natural(identity_functor(b.category))
    bad = NaturalData(t.source, t.target, lambda x: bump(t(x)) if x is two else t(x))
    return validate_natural(t), validate_natural(bad)


@mutant("monoidal")
def associator_entry():
    """Cartesian associator on finset with one entry of ``α(2, 2, 2)`` bumped,
    so the component is no longer invertible."""
    b, two = _two()
    m = b.monoidal

    def assoc(a, c, d):
        f = m.assoc(a, c, d)
        return bump(f) if (a, c, d) == (two, two, two) else f

    bad = MonoidalStructure(m.base, m.unit, m.obj, m.mor, m.lam, m.rho, assoc, m._braid, name="mutant")
    return validate_monoidal(m), validate_monoidal(bad)


@mutant("action")
def action_unitor():
    """``λ_2`` of the self-action of finset with its first entry bumped."""
    b, two = _two()
    a = b.action
    bad = LeftAction(a.v, a.c, a.obj, a.mor, lambda x: bump(a.lam(x)) if x is two else a.lam(x),
                     a.assoc)
    return validate_action(a), validate_action(bad)


@mutant("action")
def wfc_section():
    """The FC section of finset with the first entry of ``Φ(ζ)`` bumped for
    every family on ``(2, 2, 2)``; the section law ``pointfun ∘ Φ = id`` fails."""
    b, two = _two()
    w = b.wfcs["fc"]

    def phi(z):
        r = w(z)
        return bump(r) if (z.ctx, z.dom, z.cod) == (two, two, two) else r

    return validate_wfc(w), validate_wfc(WFCStructure(w.action, phi, name="mutant"))


@mutant("strength")
def strength_component():
    """Square strength on finset with one entry of ``str(2, 2)`` bumped."""
    b, two = _two()
    s = b.strengths["square"]
    bad = Strength(s.functor, s.act_c, s.act_d,
                   lambda g, x: bump(s(g, x)) if (g, x) == (two, two) else s(g, x))
    return validate_strength(s), validate_strength(bad)


@mutant("strongmonad")
def monad_multiplication():
    """Ordinary maybe monad with ``μ_1`` changed on its first entry."""
    b, _ = _two()
    one = b.probe[1]
    um = underlying_monad(b.monads["maybe"])
    bad = MonadData(um.functor, um.eta, lambda x: bump(um.mu(x)) if x is one else um.mu(x))
    return validate_monad(um), validate_monad(bad)


@mutant("strongmonad")
def kleisli_extension():
    """Strong Kleisli extension of maybe with one entry of ``f*`` bumped at
    context 1 and object 1."""
    b = bundle("finset", probe=(0, 1))
    m = b.monads["maybe"]
    one = b.probe[1]

    def extend(g, x, f):
        r = m.extend(g, x, f)
        return bump(r) if (g, x) == (one, one) else r

    return validate_strong_monad(m), validate_strong_monad(
        KleisliStrongMonad(m.act, m.T, m.eta, extend, name="mutant"))


@mutant("enrichment")
def adjunction_transpose():
    """Currying on finset with the forward transpose of one map out of
    ``2×2`` bumped at one entry."""
    b, two = _two()
    adj = bundle_adjunction(b, "hom")

    def fwd(g, x, y, f):
        r = adj.fwd(g, x, y, f)
        return bump(r) if (g, x, y) == (two, two, two) and f == b.category.hom(f.dom, y)[0] else r

    bad = Adjunction(adj.act, "hom", adj.right_obj, fwd, adj.bwd)
    return validate_adjunction(adj), validate_adjunction(bad)


@mutant("enrichment")
def enrichment_identity():
    """Identity element ``j_2 : 1 -> C(2, 2)`` of the self-enrichment moved
    to another endomorphism."""
    b, two = _two()
    e = bundle_enrichment(b)
    bad = Enrichment(e.v, e.c, e.obj, e.mor, lambda x: bump(e.j(x)) if x is two else e.j(x), e.M)
    return validate_enrichment(e), validate_enrichment(bad)


@mutant("enrichment")
def enriched_bind():
    """Enriched bind of maybe with one entry of ``bind(1, 1)`` bumped."""
    b, _ = _two()
    one = b.probe[1]
    e = bundle_enrichment(b)
    em = convert_monad("toEnriched", b.monads["maybe"], e)
    bad = EnrichedMonadData(e, em.T, em.eta,
                            lambda x, y: bump(em.bind(x, y)) if (x, y) == (one, one) else em.bind(x, y))
    return validate_enriched_monad(em), validate_enriched_monad(bad)


def _powering():
    b = bundle("finset")
    if "mutant_powering" not in b.extras:
        b.extras["mutant_powering"] = powering_from_action(b.action, bundle_adjunction(b, "power"))
    return b.extras["mutant_powering"]


@mutant("powering")
def powering_unit():
    """Powering unit ``i_2 : 2 -> I⋔2`` with its first entry bumped."""
    _, two = _two()
    pw = _powering()
    bad = Powering(pw.v, pw.c, pw.obj, pw.mor, lambda x: bump(pw.i(x)) if x is two else pw.i(x), pw.p)
    return validate_powering(pw), validate_powering(bad)


@mutant("powering")
def powered_extension():
    """Powered extension of maybe with the last entry of ``pextend`` bumped
    whenever the context is 2."""
    b, two = _two()
    pw = _powering()
    pm = convert_powered_monad("toPowered", b.monads["maybe"], pw)

    def pext(g, x, y, f):
        r = pm.pextend(g, x, y, f)
        return bump(r, at=len(r.table) - 1) if g is two else r

    return validate_powered_monad(pm), validate_powered_monad(
        PoweredMonadData(pw, pm.T, pm.eta, pext, name="mutant"))


@mutant("biaction")
def right_unitor():
    """Right self-action of finset with ``ρ_2 : 2 -> 2×1`` collapsed at its
    first entry, so it is not invertible."""
    b, two = _two()
    r = right_self_action(b.monoidal)
    bad = RightAction(r.v, r.c, r.obj, r.mor, lambda x: bump(r.rho(x)) if x is two else r.rho(x),
                      r.assoc, name="mutant")
    return validate_right_action(r), validate_right_action(bad)


@mutant("biaction")
def biaction_middle():
    """Middle map ``(2▷2)◁2 -> 2▷(2◁2)`` of the self-biaction with one entry bumped."""
    b, two = _two()
    m = b.monoidal
    ba = self_biaction(m)

    def mid(g, x, d):
        f = ba.mid(g, x, d)
        return bump(f) if (g, x, d) == (two, two, two) else f

    return validate_biaction(ba), validate_biaction(Biaction(ba.left, ba.right, mid, name="mutant"))


@mutant("biaction")
def writer_right_strength():
    """Writer right strength on the regular Z2-set with one entry of
    ``strᴿ(Z2, Z2)`` bumped."""
    b = bundle("writer-z2")
    m = b.monads["str"]
    ba = self_biaction(m.act.v)
    w = writer_bistrength(m, ba, b.extras["monoid"])
    reg = b.extras["regular"]

    def right(x, d):
        t = w.right(x, d)
        return bump(t) if (x, d) == (reg, reg) else t

    return validate_bistrength(w), validate_bistrength(Bistrength(w.left, right, ba, name="mutant"))


def verdict(result):
    passed = getattr(result, "passed", None)
    return bool(result) if passed is None else passed
