"""Monads, Kleisli categories and strong monads in Kleisli-extension form."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .action import LeftAction, is_well_pointed
from .core import (
    Category,
    FunctorData,
    Morphism,
    NaturalData,
    Report,
    Verdict,
    _probe,
    comp,
    describe,
    validate_functor,
    validate_natural,
)
from .errors import Item3DiagramFailed, LiftingSquareBroken, NoMediator
from .monoidal import Coproducts
from .strength import (
    CtxFunctorData,
    Strength,
    check_strong_naturality,
    check_strong_naturality_ctx,
    strength_to_ctxform,
    underlying_functor,
)


class MonadData:
    def __init__(self, functor: FunctorData, unit: Callable, mult: Callable, name="T"):
        self.functor = functor
        self.name = name
        ident = FunctorData(functor.source, functor.source, lambda x: x, lambda f: f, name="Id")
        twice = FunctorData(functor.source, functor.source,
                            lambda x: functor.obj(functor.obj(x)),
                            lambda f: functor.mor(functor.mor(f)), name=f"{name}{name}")
        self.unit = unit if isinstance(unit, NaturalData) else NaturalData(ident, functor, unit, name="η")
        self.mult = mult if isinstance(mult, NaturalData) else NaturalData(twice, functor, mult, name="μ")

    @property
    def base(self):
        return self.functor.source

    def T(self, x):
        return self.functor.obj(x)

    def eta(self, x):
        return self.unit(x)

    def mu(self, x):
        return self.mult(x)

    def __repr__(self):
        return f"<Monad {self.name} on {self.base.name}>"


def validate_monad(m: MonadData, probe=None) -> Report:
    c = m.base
    objs = _probe(c, probe)
    rep = validate_functor(m.functor, objs)
    rep.subject = f"monad {m.name}"
    rep.extend(validate_natural(m.unit, objs), "η ")
    rep.extend(validate_natural(m.mult, objs), "μ ")

    def unit_laws():
        for x in objs:
            tx = m.T(x)
            yield c.compose(m.mu(x), m.functor.mor(m.eta(x))) == c.identity(tx), {"X": x, "side": "μ∘Tη"}
            yield c.compose(m.mu(x), m.eta(tx)) == c.identity(tx), {"X": x, "side": "μ∘ηT"}

    def assoc_law():
        for x in objs:
            lhs = c.compose(m.mu(x), m.functor.mor(m.mu(x)))
            rhs = c.compose(m.mu(x), m.mu(m.T(x)))
            yield lhs == rhs, {"X": x}

    rep.run("unit laws", unit_laws())
    rep.run("associativity", assoc_law())
    return rep


# ---------------------------------------------------------------------------
# Kleisli categories


@dataclass(frozen=True)
class KlMor:
    """A Kleisli morphism ``X -> Y`` carried by ``under : X -> TY``."""

    dom: Any
    cod: Any
    under: Any

    def __str__(self):
        return f"kl({self.under})"


class KleisliCategory(Category):
    def __init__(self, monad: MonadData, probe=None, name=None):
        self.monad = monad
        self.name = name or f"Kl({monad.name})"
        self.probe = tuple(monad.base.probe if probe is None else probe)
        self._homs = {}
        self._eta_back = {}

    def contains(self, x):
        return self.monad.base.contains(x)

    def hom(self, x, y):
        key = (x, y)
        hit = self._homs.get(key)
        if hit is None:
            hit = self._homs[key] = [KlMor(x, y, u) for u in self.monad.base.hom(x, self.monad.T(y))]
        return hit

    def identity(self, x):
        return KlMor(x, x, self.monad.eta(x))

    def compose(self, g, f):
        from .errors import PartialComposition
        if f.cod != g.dom:
            raise PartialComposition(f"cannot compose {g} after {f}")
        m, b = self.monad, self.monad.base
        u = b.compose(m.mu(g.cod), b.compose(m.functor.mor(g.under), f.under))
        return KlMor(f.dom, g.cod, u)

    def pure(self, f):
        """``K f = η ∘ f``."""
        return KlMor(f.dom, f.cod, self.monad.base.compose(self.monad.eta(f.cod), f))

    def unpure(self, f):
        """The base morphism ``f0`` with ``f = K f0``, or ``None``."""
        e = self.monad.eta(f.cod)
        if not isinstance(e, Morphism):
            return None
        back = self._eta_back.get(f.cod)
        if back is None:
            back = self._eta_back[f.cod] = {v: k for k, v in e.items()}
            if len(back) != len(e.table):
                back = self._eta_back[f.cod] = {}
        try:
            return Morphism(f.dom, f.cod, (back[v] for v in f.under.table))
        except KeyError:
            return None

    def inverse(self, f):
        # pure isomorphisms invert in the base; anything else falls back to search
        f0 = self.unpure(f)
        if f0 is not None:
            inv = self.monad.base.inverse(f0)
            if inv is not None:
                return self.pure(inv)
        return super().inverse(f)

    def solve(self, dom, cod, constraints=(), where=None):
        pure, rest = [], []
        for h, k in constraints:
            h0 = self.unpure(h)
            if h0 is None:
                rest.append((h, k))
            else:
                pure.append((h0, k.under))
        out = []
        for u in self.monad.base.solve(dom, self.monad.T(cod), pure):
            ku = KlMor(dom, cod, u)
            if all(self.compose(ku, h) == k for h, k in rest):
                if where is None or where(ku):
                    out.append(ku)
        return out


def kleisli_category(m: MonadData, probe=None) -> KleisliCategory:
    return KleisliCategory(m, probe)


def kleisli_inclusion(kl: KleisliCategory) -> FunctorData:
    return FunctorData(kl.monad.base, kl, lambda x: x, kl.pure, name="K")


class KleisliCoproducts(Coproducts):
    """Coproducts in a Kleisli category, inherited from the base."""

    def __init__(self, kl: KleisliCategory, base: Coproducts):
        self.kl, self.base = kl, base

    def coproduct(self, a, b):
        s, i1, i2 = self.base.coproduct(a, b)
        return s, self.kl.pure(i1), self.kl.pure(i2)

    def copair(self, f, g):
        s, _, _ = self.base.coproduct(f.dom, g.dom)
        return KlMor(s, f.cod, self.base.copair(f.under, g.under))

    def initial(self):
        return self.base.initial()

    def absurd(self, x):
        return self.kl.pure(self.base.absurd(x))


# ---------------------------------------------------------------------------
# strong monads


class KleisliStrongMonad:
    """Unit ``eta(X)`` and strong extension ``extend(G, X, f) : G▷TX -> TY``
    for ``f : G▷X -> TY``."""

    def __init__(self, act: LeftAction, obj: Callable, unit: Callable, extend: Callable, name="T"):
        self.act = act
        self._obj, self._unit, self._extend = obj, unit, extend
        self.name = name
        self._cache = {}

    def T(self, x):
        key = ("T", x)
        try:
            return self._cache[key]
        except KeyError:
            r = self._cache[key] = self._obj(x)
            return r

    def eta(self, x):
        key = ("η", x)
        try:
            return self._cache[key]
        except KeyError:
            r = self._cache[key] = self._unit(x)
            return r

    def extend(self, g, x, f):
        key = ("*", g, x, f)
        try:
            return self._cache[key]
        except KeyError:
            r = self._cache[key] = self._extend(g, x, f)
            return r

    def __repr__(self):
        return f"<StrongMonad {self.name}>"


def validate_strong_monad(m: KleisliStrongMonad, ctx_probe=None, probe=None) -> Report:
    a = m.act
    c, V, v = a.c, a.v.base, a.v
    ctxs = tuple(a.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    I = v.unit
    rep = Report(f"strong monad {m.name}", ctxs + objs)
    homs = {(g, x, y): c.hom(a.obj(g, x), m.T(y)) for g in ctxs for x in objs for y in objs}

    def typing():
        for x in objs:
            e = m.eta(x)
            yield (e.dom == x and e.cod == m.T(x)), {"η at": x}
        for (g, x, y), fs in homs.items():
            for f in fs:
                h = m.extend(g, x, f)
                yield (h.dom == a.obj(g, m.T(x)) and h.cod == m.T(y)), {"f": f, "f*": h}

    def nat_ctx():
        for d in ctxs:
            for g in ctxs:
                for s in V.hom(d, g):
                    for x in objs:
                        for y in objs:
                            for f in homs[g, x, y]:
                                lhs = m.extend(d, x, c.compose(f, a.ctx(s, x)))
                                rhs = c.compose(m.extend(g, x, f), a.ctx(s, m.T(x)))
                                yield lhs == rhs, {"σ": s, "f": f}

    def unit_left():
        # (η ∘ λ)* = λ
        for x in objs:
            lhs = m.extend(I, x, c.compose(m.eta(x), a.lam(x)))
            yield lhs == a.lam(m.T(x)), {"X": x}

    def unit_right():
        # f* ∘ (Γ ▷ η) = f
        for (g, x, y), fs in homs.items():
            for f in fs:
                yield c.compose(m.extend(g, x, f), a.on(g, m.eta(x))) == f, {"f": f}

    def assoc():
        # g* ∘ (Γ' ▷ f*) ∘ α = (g* ∘ (Γ' ▷ f) ∘ α)*
        for g2, g in itertools.product(ctxs, repeat=2):
            gg = v.obj(g2, g)
            for x, y, z in itertools.product(objs, repeat=3):
                for f in homs[g, x, y]:
                    fs = m.extend(g, x, f)
                    for h in homs[g2, y, z]:
                        hs = m.extend(g2, y, h)
                        lhs = comp(c, hs, a.on(g2, fs), a.assoc(g2, g, m.T(x)))
                        rhs = m.extend(gg, x, comp(c, hs, a.on(g2, f), a.assoc(g2, g, x)))
                        yield lhs == rhs, {"Γ'": g2, "Γ": g, "f": f, "g": h}

    if not rep.run("typing", typing()):
        return rep
    rep.run("naturality in Γ", nat_ctx())
    rep.run("unit (λ)", unit_left())
    rep.run("unit (η)", unit_right())
    rep.run("associativity", assoc())
    return rep


def monad_ctxform(m: KleisliStrongMonad) -> CtxFunctorData:
    """``T⟨Γ⟩f = (η ∘ f)*``."""
    c = m.act.c
    return CtxFunctorData(m.act, m.act, m.T,
                          lambda g, x, f: m.extend(g, x, c.compose(m.eta(f.cod), f)), name=m.name)


def underlying_monad(m: KleisliStrongMonad) -> MonadData:
    """``μ_X = (λ_TX)* ∘ λ⁻¹_TTX``."""
    a = m.act
    c, I = a.c, a.v.unit
    F = underlying_functor(monad_ctxform(m))

    def mu(x):
        tx = m.T(x)
        return c.compose(m.extend(I, tx, a.lam(tx)), a.lam_inv(m.T(tx)))

    return MonadData(F, m.eta, mu, name=m.name)


def monad_to_strength(m: KleisliStrongMonad) -> Strength:
    """``str_{Γ,X} = (η_{Γ▷X})*``."""
    a = m.act
    F = underlying_functor(monad_ctxform(m))
    return Strength(F, a, a, lambda g, x: m.extend(g, x, m.eta(a.obj(g, x))),
                    name=f"str[{m.name}]")


def item3_diagrams(monad: MonadData, s: Strength, ctx_probe=None, probe=None) -> Verdict:
    """The η-triangle and μ-rectangle relating a strength to a monad."""
    a = s.act_c
    c = a.c
    T = monad.functor
    ctxs = tuple(a.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    window = ctxs + objs
    for g in ctxs:
        for x in objs:
            gx = a.obj(g, x)
            lhs = c.compose(s(g, x), a.on(g, monad.eta(x)))
            if lhs != monad.eta(gx):
                return Verdict(False, {"diagram": "η-triangle", "Γ": g, "X": x,
                                       "str∘(Γ▷η)": lhs, "η": monad.eta(gx)}, window)
    for g in ctxs:
        for x in objs:
            gx = a.obj(g, x)
            lhs = c.compose(s(g, x), a.on(g, monad.mu(x)))
            rhs = comp(c, monad.mu(gx), T.mor(s(g, x)), s(g, monad.T(x)))
            if lhs != rhs:
                return Verdict(False, {"diagram": "μ-rectangle", "Γ": g, "X": x,
                                       "str∘(Γ▷μ)": lhs, "μ∘Tstr∘str": rhs}, window)
    return Verdict(True, None, window)


def strength_to_monad(monad: MonadData, s: Strength, ctx_probe=None, probe=None) -> Verdict:
    """Check the item-3 diagrams; on success ``detail`` is the strong monad
    with ``f* = μ_Y ∘ T f ∘ str_{Γ,X}``."""
    v = item3_diagrams(monad, s, ctx_probe, probe)
    if not v:
        return v
    c = s.act_c.c
    T = monad.functor
    act = s.act_c

    def extend(g, x, f):
        y = _base_of(monad, f.cod)
        return comp(c, monad.mu(y), T.mor(f), s(g, x))

    sm = KleisliStrongMonad(act, monad.T, monad.eta, extend, name=monad.name)
    sm._source_monad = monad
    return Verdict(True, None, v.window, detail=sm)


def _base_of(monad: MonadData, ty):
    """Recover ``Y`` from ``TY`` via the functor's object cache or the probe."""
    hit = getattr(monad, "_tinv", None)
    if hit is None:
        hit = monad._tinv = {}
    if ty in hit:
        return hit[ty]
    for x, tx in list(monad.functor._ocache.items()):
        hit[tx] = x
    if ty in hit:
        return hit[ty]
    for x in monad.base.probe:
        hit[monad.T(x)] = x
    if ty in hit:
        return hit[ty]
    inv = getattr(monad, "unT", None)
    if inv is not None:
        y = inv(ty)
        hit[ty] = y
        return y
    raise KeyError(f"cannot recover Y from TY = {ty}")


def same_strong_monad(m1: KleisliStrongMonad, m2: KleisliStrongMonad, ctx_probe=None, probe=None):
    """First ``(Γ, X, f)`` where the extensions differ, or ``None``."""
    a = m1.act
    c = a.c
    ctxs = tuple(a.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    for x in objs:
        if m1.T(x) != m2.T(x) or m1.eta(x) != m2.eta(x):
            return (x,)
    for g in ctxs:
        for x in objs:
            for y in objs:
                for f in c.hom(a.obj(g, x), m1.T(y)):
                    if m1.extend(g, x, f) != m2.extend(g, x, f):
                        return (g, x, f)
    return None


def same_monad(m1: MonadData, m2: MonadData, probe=None):
    c = m1.base
    objs = _probe(c, probe)
    for x in objs:
        if m1.T(x) != m2.T(x) or m1.eta(x) != m2.eta(x) or m1.mu(x) != m2.mu(x):
            return x
        for y in objs:
            for f in c.hom(x, y):
                if m1.functor.mor(f) != m2.functor.mor(f):
                    return f
    return None


# ---------------------------------------------------------------------------
# Kleisli liftings


def kleisli_lifting(m: KleisliStrongMonad, kl: Optional[KleisliCategory] = None,
                    monad: Optional[MonadData] = None) -> LeftAction:
    """``σ ▷_T f = str_{Γ',Y} ∘ (σ ▷ f)`` on the Kleisli category."""
    a = m.act
    c = a.c
    monad = monad or underlying_monad(m)
    kl = kl or KleisliCategory(monad)
    s = monad_to_strength(m)

    def mor(sg, f):
        u = c.compose(s(sg.cod, f.cod), a.mor(sg, f.under))
        return KlMor(a.obj(sg.dom, f.dom), a.obj(sg.cod, f.cod), u)

    lift = LeftAction(a.v, kl, a.obj, mor, lambda x: kl.pure(a.lam(x)),
                      lambda g2, g, x: kl.pure(a.assoc(g2, g, x)), name=f"{a.name}_T",
                      ctx_probe=a.ctx_probe)
    lift.kleisli = kl
    return lift


def lifting_square(lift: LeftAction, base: LeftAction, kl: KleisliCategory, ctx_probe=None,
                   probe=None) -> Verdict:
    """Does ``K ∘ ▷ = ▷_T ∘ (V × K)`` hold on the window?"""
    ctxs = tuple(base.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(base.c, probe)
    V = base.v.base
    window = ctxs + objs
    for g in ctxs:
        for x in objs:
            if lift.obj(g, x) != base.obj(g, x):
                return Verdict(False, {"object": (g, x)}, window)
            if lift.lam(x) != kl.pure(base.lam(x)):
                return Verdict(False, {"λ at": x}, window)
    for g2, g, x in itertools.product(ctxs, ctxs, objs):
        if lift.assoc(g2, g, x) != kl.pure(base.assoc(g2, g, x)):
            return Verdict(False, {"α at": (g2, g, x)}, window)
    for d in ctxs:
        for g in ctxs:
            for s in V.hom(d, g):
                for x in objs:
                    for y in objs:
                        for f in base.c.hom(x, y):
                            if lift.mor(s, kl.pure(f)) != kl.pure(base.mor(s, f)):
                                return Verdict(False, {"σ": s, "f": f}, window)
    return Verdict(True, None, window)


def lifting_to_strength(lift: LeftAction, base: LeftAction, monad: MonadData, ctx_probe=None,
                        probe=None) -> Strength:
    """``str_{Γ,X} = Γ ▷_T id_TX`` read back in the base category."""
    kl = lift.c
    sq = lifting_square(lift, base, kl, ctx_probe, probe)
    if not sq:
        raise LiftingSquareBroken(f"lifting square fails: {sq.witness}")
    V = base.v.base

    def comp_(g, x):
        tx = monad.T(x)
        idt = KlMor(tx, x, base.c.identity(tx))
        return lift.mor(V.identity(g), idt).under

    return Strength(monad.functor, base, base, comp_, name=f"str[{lift.name}]")


# ---------------------------------------------------------------------------
# morphisms of strong monads


def validate_strong_monad_morphism(t: NaturalData, s: KleisliStrongMonad, d: KleisliStrongMonad,
                                   ctx_probe=None, probe=None) -> Verdict:
    """Check the four equivalent conditions on a monad morphism and that they agree."""
    a = s.act
    c = a.c
    ctxs = tuple(a.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    window = ctxs + objs
    ms, md = underlying_monad(s), underlying_monad(d)

    # plain monad morphism
    for x in objs:
        if c.compose(t(x), ms.eta(x)) != md.eta(x):
            return Verdict(False, {"reason": "not a monad morphism (unit)", "X": x}, window)
        lhs = c.compose(t(x), ms.mu(x))
        rhs = comp(c, md.mu(x), md.functor.mor(t(x)), t(ms.T(x)))
        if lhs != rhs:
            return Verdict(False, {"reason": "not a monad morphism (multiplication)", "X": x}, window)

    # (1) extension condition
    c1 = Verdict(True, None, window)
    for g in ctxs:
        for x in objs:
            for y in objs:
                for f in c.hom(a.obj(g, x), s.T(y)):
                    lhs = c.compose(t(y), s.extend(g, x, f))
                    rhs = c.compose(d.extend(g, x, c.compose(t(y), f)), a.on(g, t(x)))
                    if lhs != rhs:
                        c1 = Verdict(False, {"Γ": g, "f": f}, window)
                        break
                if not c1:
                    break
            if not c1:
                break
        if not c1:
            break
    # (2) strong natural transformation in context form
    c2 = check_strong_naturality_ctx(t, monad_ctxform(s), monad_ctxform(d), ctxs, objs)
    # (3) strength square
    c3 = check_strong_naturality(t, monad_to_strength(s), monad_to_strength(d), ctxs, objs)
    # (4) Kleisli lifting square
    kls, kld = KleisliCategory(ms), KleisliCategory(md)
    ls, ld = kleisli_lifting(s, kls, ms), kleisli_lifting(d, kld, md)
    V = a.v.base

    def kl_t(f):
        return KlMor(f.dom, f.cod, c.compose(t(f.cod), f.under))

    c4 = Verdict(True, None, window)
    for d0 in ctxs:
        for g in ctxs:
            for sg in V.hom(d0, g):
                for x in objs:
                    for y in objs:
                        for f in kls.hom(x, y):
                            if kl_t(ls.mor(sg, f)) != ld.mor(sg, kl_t(f)):
                                c4 = Verdict(False, {"σ": sg, "f": f}, window)
                                break
                        if not c4:
                            break
                    if not c4:
                        break
                if not c4:
                    break
            if not c4:
                break
    verdicts = {"extension": c1.value, "strong natural": c2.value, "strength square": c3.value,
                "lifting square": c4.value}
    agree = len(set(verdicts.values())) == 1
    if not agree:
        raise Item3DiagramFailed(f"equivalent conditions disagree on this window: {verdicts}")
    witness = None
    if not c1:
        witness = dict(c1.witness, **{"failing": [k for k, v in verdicts.items() if not v]})
    return Verdict(c1.value, witness, window, detail=verdicts)


# ---------------------------------------------------------------------------
# algebras and strongly free algebras


@dataclass(frozen=True)
class Algebra:
    carrier: Any
    structure: Any

    def __str__(self):
        return f"({self.carrier}, {self.structure})"


FAlgebra = Algebra


@dataclass(frozen=True)
class AlgMor:
    dom: Algebra
    cod: Algebra
    under: Any

    def __str__(self):
        return str(self.under)


class AlgebraCategory(Category):
    """Algebras ``FA -> A`` for an endofunctor, optionally filtered by laws."""

    def __init__(self, functor: FunctorData, carriers, law=None, name=None):
        self.functor = functor
        self.base = functor.source
        self.law = law
        self.name = name or f"{functor.name}-Alg"
        objs = []
        for a in carriers:
            for s in self.base.hom(functor.obj(a), a):
                alg = Algebra(a, s)
                if law is None or law(alg):
                    objs.append(alg)
        self.objects = tuple(objs)
        self.probe = self.objects
        self._homs = {}

    def contains(self, x):
        return isinstance(x, Algebra) and (self.law is None or self.law(x))

    def hom(self, x, y):
        key = (x, y)
        hit = self._homs.get(key)
        if hit is None:
            b, F = self.base, self.functor
            hit = [AlgMor(x, y, h) for h in b.hom(x.carrier, y.carrier)
                   if b.compose(h, x.structure) == b.compose(y.structure, F.mor(h))]
            self._homs[key] = hit
        return hit

    def identity(self, x):
        return AlgMor(x, x, self.base.identity(x.carrier))

    def inverse(self, f):
        # the inverse of an algebra map that is invertible downstairs is an algebra map
        g = self.base.inverse(f.under)
        return None if g is None else AlgMor(f.cod, f.dom, g)

    def compose(self, g, f):
        return AlgMor(f.dom, g.cod, self.base.compose(g.under, f.under))


def falg_category(F: FunctorData, carriers) -> AlgebraCategory:
    return AlgebraCategory(F, carriers, name=f"{F.name}-Alg")


def forgetful(cat: AlgebraCategory) -> FunctorData:
    return FunctorData(cat, cat.base, lambda a: a.carrier, lambda h: h.under, name="U")


@dataclass(frozen=True)
class StronglyFreeCandidate:
    base: Any
    algebra: Algebra
    inject: Any


def _mediators(F: CtxFunctorData, g, cand: StronglyFreeCandidate, B, b, gm):
    """All ``h : Γ▷A -> B`` with ``h∘(Γ▷inject) = gm`` and ``h∘(Γ▷a) = b∘F⟨Γ⟩h``."""
    act = F.act_c
    c = act.c
    A, a = cand.algebra.carrier, cand.algebra.structure
    cons = [(act.on(g, cand.inject), gm)]
    if getattr(F, "constant", False):
        # F⟨Γ⟩h does not depend on h, so the algebra square pins entries too
        dom = act.obj(g, A)
        if dom.carrier and not B.carrier:
            return []
        h0 = Morphism(dom, B, (B.carrier[0] for _ in dom.carrier)) if dom.carrier else Morphism(dom, B, ())
        cons.append((act.on(g, a), c.compose(b, F.ctx(g, A, h0))))
    out = []
    for h in c.solve(act.obj(g, A), B, cons):
        if c.compose(h, act.on(g, a)) == c.compose(b, F.ctx(g, A, h)):
            out.append(h)
    return out


def is_strongly_free(F: CtxFunctorData, cand: StronglyFreeCandidate, ctx_probe=None,
                     probe=None) -> Verdict:
    act = F.act_c
    c = act.c
    ctxs = tuple(act.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    window = ctxs + objs
    X = cand.base
    for g in ctxs:
        for B in objs:
            for b in c.hom(F.obj(B), B):
                for gm in c.hom(act.obj(g, X), B):
                    hs = _mediators(F, g, cand, B, b, gm)
                    if len(hs) != 1:
                        return Verdict(False, {"Γ": g, "algebra": Algebra(B, b), "g": gm,
                                               "mediators": len(hs)}, window)
    return Verdict(True, None, window)


def monad_from_strongly_free(F: CtxFunctorData, assignment: Callable, name="T") -> KleisliStrongMonad:
    """Unit from the injections; ``f*`` is the unique mediator into ``(TY, a_Y)``."""
    act = F.act_c
    cands = {}

    def cand(x):
        r = cands.get(x)
        if r is None:
            r = cands[x] = assignment(x)
        return r

    back = {}

    def T(x):
        t = cand(x).algebra.carrier
        back[t] = x
        return t

    def extend(g, x, f):
        y = back.get(f.cod)
        if y is None:
            raise NoMediator(f"codomain {f.cod} is not a free algebra carrier seen so far")
        cy = cand(y)
        hs = _mediators(F, g, cand(x), cy.algebra.carrier, cy.algebra.structure, f)
        if len(hs) != 1:
            raise NoMediator(f"{len(hs)} mediators for {f} in context {g}")
        return hs[0]

    m = KleisliStrongMonad(act, T, lambda x: cand(x).inject, extend, name=name)
    m.candidate = cand
    return m


def is_algebraically_free(m: MonadData, F: FunctorData, iso, em=None, falg=None,
                          carriers=None) -> Verdict:
    """``iso = (Phi, Psi)`` between T-algebras and F-algebras over the same carriers."""
    Phi, Psi = iso
    em = em or Phi.source
    falg = falg or Phi.target
    window = tuple(em.probe) + tuple(falg.probe)
    by_carrier_e, by_carrier_f = {}, {}
    for o in em.probe:
        by_carrier_e[o.carrier] = by_carrier_e.get(o.carrier, 0) + 1
    for o in falg.probe:
        by_carrier_f[o.carrier] = by_carrier_f.get(o.carrier, 0) + 1
    if by_carrier_e != by_carrier_f:
        return Verdict(False, {"reason": "algebra counts per carrier differ",
                               "T-algebras": by_carrier_e, "F-algebras": by_carrier_f}, window)
    for o in em.probe:
        p = Phi.obj(o)
        if not falg.contains(p) or p.carrier != o.carrier:
            return Verdict(False, {"reason": "Phi leaves F-Alg or changes carrier", "algebra": o}, window)
        if Psi.obj(p) != o:
            return Verdict(False, {"reason": "Psi∘Phi ≠ id", "algebra": o}, window)
    for o in falg.probe:
        q = Psi.obj(o)
        if not em.contains(q) or q.carrier != o.carrier:
            return Verdict(False, {"reason": "Psi leaves T-Alg or changes carrier", "algebra": o}, window)
        if Phi.obj(q) != o:
            return Verdict(False, {"reason": "Phi∘Psi ≠ id", "algebra": o}, window)
    for x in em.probe:
        for y in em.probe:
            for h in em.hom(x, y):
                ph = Phi.mor(h)
                if ph.under != h.under or Psi.mor(ph) != h:
                    return Verdict(False, {"reason": "morphism not preserved", "h": h}, window)
    for x in falg.probe:
        for y in falg.probe:
            for h in falg.hom(x, y):
                ph = Psi.mor(h)
                if ph.under != h.under or Phi.mor(ph) != h:
                    return Verdict(False, {"reason": "morphism not preserved", "h": h}, window)
    return Verdict(True, None, window)


def unique_strong_monad_wp(monad: MonadData, s: Strength, ctx_probe=None, probe=None,
                           morphisms=()) -> KleisliStrongMonad:
    """Over a well-pointed action a strength for T makes it strong in exactly one way."""
    act = s.act_c
    wp = is_well_pointed(act, ctx_probe, probe)
    if not wp:
        raise ValueError(f"action is not well-pointed on this window: {wp.witness}")
    v = strength_to_monad(monad, s, ctx_probe, probe)
    if not v:
        raise Item3DiagramFailed(f"item-3 diagram failed over a well-pointed action: {v.witness}")
    sm = v.detail
    for t, src, dst in morphisms:
        r = validate_strong_monad_morphism(t, src, dst, ctx_probe, probe)
        if not r:
            raise Item3DiagramFailed(f"monad morphism not strong over a well-pointed action: {r.witness}")
    return sm


__all__ = [
    "MonadData", "validate_monad", "KlMor", "KleisliCategory", "kleisli_category",
    "kleisli_inclusion", "KleisliCoproducts", "KleisliStrongMonad", "validate_strong_monad",
    "monad_ctxform", "underlying_monad", "monad_to_strength", "item3_diagrams",
    "strength_to_monad", "same_strong_monad", "same_monad", "kleisli_lifting", "lifting_square",
    "lifting_to_strength", "validate_strong_monad_morphism", "Algebra", "FAlgebra", "AlgMor",
    "AlgebraCategory", "falg_category", "forgetful", "StronglyFreeCandidate", "is_strongly_free",
    "monad_from_strongly_free", "is_algebraically_free", "unique_strong_monad_wp",
]
