"""Powerings ``Γ⋔X`` of C over V, powered functors and monads, liftings to
Eilenberg-Moore and F-algebra categories, and free powered monads."""

from __future__ import annotations

import itertools
from typing import Callable, Optional

from .action import LeftAction
from .core import (
    FunctorData,
    NaturalData,
    OppositeCategory,
    ProductCategory,
    Report,
    Verdict,
    _probe,
    comp,
)
from .enrichment import Adjunction
from .errors import LiftingSquareBroken
from .strength import CtxFunctorData, Strength, enumerate_strengths, strength_to_ctxform
from .strongmonad import (
    Algebra,
    AlgebraCategory,
    AlgMor,
    KleisliStrongMonad,
    MonadData,
    StronglyFreeCandidate,
    is_strongly_free,
)


class Powering:
    """``pw_obj(G, X) = G⋔X``, ``pw_mor(s, f) = s⋔f`` (``s : D -> G`` in V gives
    ``G⋔X -> D⋔Y``), ``i(X) : X -> I⋔X`` and
    ``p(G, G2, X) : G⋔(G2⋔X) -> (G2⊗G)⋔X``."""

    def __init__(self, v, c, pw_obj: Callable, pw_mor: Callable, i: Callable, p: Callable,
                 name="⋔", ctx_probe=None):
        self.v, self.c = v, c
        self._pobj, self._pmor, self._i, self._p = pw_obj, pw_mor, i, p
        self.name = name
        base = list(v.base.probe if ctx_probe is None else ctx_probe)
        if v.unit not in base:
            base.append(v.unit)
        self.ctx_probe = tuple(base)
        self._cache = {}
        self.pw = FunctorData(
            ProductCategory(OppositeCategory(v.base), c), c,
            lambda q: self.obj(q[0], q[1]),
            lambda pm: self.mor(pm.first.arrow, pm.second), name=name)

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            r = self._cache[key] = fn()
            return r

    def obj(self, g, x):
        return self._memo(("o", g, x), lambda: self._pobj(g, x))

    def mor(self, s, f):
        return self._memo(("m", s, f), lambda: self._pmor(s, f))

    def on(self, g, f):
        """``G⋔f``."""
        return self.mor(self.v.base.identity(g), f)

    def ctx(self, s, x):
        """``s⋔X``."""
        return self.mor(s, self.c.identity(x))

    def i(self, x):
        return self._memo(("i", x), lambda: self._i(x))

    def p(self, g, g2, x):
        return self._memo(("p", g, g2, x), lambda: self._p(g, g2, x))

    def _inv(self, f):
        def go():
            r = self.c.inverse(f)
            if r is None:
                raise ValueError(f"structure map {f} is not invertible")
            return r
        return self._memo(("inv", f), go)

    def i_inv(self, x):
        return self._inv(self.i(x))

    def p_inv(self, g, g2, x):
        return self._inv(self.p(g, g2, x))

    def __repr__(self):
        return f"<Powering {self.name} of {self.c.name} over {self.v.name}>"


def validate_powering(pw: Powering, ctx_probe=None, probe=None) -> Report:
    v, c = pw.v, pw.c
    V = v.base
    ctxs = tuple(pw.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    I = v.unit
    rep = Report(f"powering {pw.name}", ctxs + objs)

    def functoriality():
        for g, x in itertools.product(ctxs, objs):
            yield pw.mor(V.identity(g), c.identity(x)) == c.identity(pw.obj(g, x)), {"Γ": g, "X": x}
        for d, g in itertools.product(ctxs, repeat=2):
            for s in V.hom(d, g):
                for x, y in itertools.product(objs, repeat=2):
                    for f in c.hom(x, y):
                        lhs = pw.mor(s, f)
                        rhs = c.compose(pw.ctx(s, y), pw.on(g, f))
                        yield lhs == rhs, {"σ": s, "f": f}

    def nat_i():
        for x, y in itertools.product(objs, repeat=2):
            for f in c.hom(x, y):
                yield c.compose(pw.i(y), f) == c.compose(pw.on(I, f), pw.i(x)), {"f": f}

    def nat_p():
        for g, g2 in itertools.product(ctxs, repeat=2):
            for x, y in itertools.product(objs, repeat=2):
                for f in c.hom(x, y):
                    lhs = c.compose(pw.p(g, g2, y), pw.on(g, pw.on(g2, f)))
                    rhs = c.compose(pw.on(v.obj(g2, g), f), pw.p(g, g2, x))
                    yield lhs == rhs, {"in": "X", "f": f}
            for x in objs:
                for d in ctxs:
                    for s in V.hom(d, g):
                        lhs = c.compose(pw.p(d, g2, x), pw.ctx(s, pw.obj(g2, x)))
                        rhs = c.compose(pw.ctx(v.mor(V.identity(g2), s), x), pw.p(g, g2, x))
                        yield lhs == rhs, {"in": "Γ", "σ": s}
                    for s in V.hom(d, g2):
                        lhs = c.compose(pw.p(g, d, x), pw.on(g, pw.ctx(s, x)))
                        rhs = c.compose(pw.ctx(v.mor(s, V.identity(g)), x), pw.p(g, g2, x))
                        yield lhs == rhs, {"in": "Γ'", "σ": s}

    def invertible():
        for x in objs:
            yield c.inverse(pw.i(x)) is not None, {"map": "i", "X": x}
        for g, g2, x in itertools.product(ctxs, ctxs, objs):
            yield c.inverse(pw.p(g, g2, x)) is not None, {"map": "p", "Γ": g, "Γ'": g2, "X": x}

    def coh_lam():
        for g, x in itertools.product(ctxs, objs):
            lhs = c.compose(pw.p(g, I, x), pw.on(g, pw.i(x)))
            yield lhs == pw.ctx(v.lam(g), x), {"Γ": g, "X": x}

    def coh_rho():
        for g, x in itertools.product(ctxs, objs):
            lhs = comp(c, pw.ctx(v.rho(g), x), pw.p(I, g, x), pw.i(pw.obj(g, x)))
            yield lhs == c.identity(pw.obj(g, x)), {"Γ": g, "X": x}

    def coh_assoc():
        for g1, g2, g3 in itertools.product(ctxs, repeat=3):
            for x in objs:
                lhs = comp(c, pw.ctx(v.assoc(g1, g2, g3), x), pw.p(v.obj(g2, g3), g1, x),
                           pw.p(g3, g2, pw.obj(g1, x)))
                rhs = c.compose(pw.p(g3, v.obj(g1, g2), x), pw.on(g3, pw.p(g2, g1, x)))
                yield lhs == rhs, {"Γ1": g1, "Γ2": g2, "Γ3": g3, "X": x}

    rep.run("functoriality of ⋔", functoriality())
    rep.run("naturality i", nat_i())
    rep.run("naturality p", nat_p())
    if rep.run("invertibility", invertible()):
        rep.run("unit coherence (λ)", coh_lam())
        rep.run("unit coherence (ρ)", coh_rho())
        rep.run("associativity", coh_assoc())
    return rep


def powering_from_action(act: LeftAction, adj: Adjunction) -> Powering:
    """``i`` transposes ``λ``; ``p`` transposes ``ev ∘ (G2▷ev) ∘ α``."""
    if adj.kind != "power":
        raise ValueError("powering_from_action needs the Γ▷− ⊣ Γ⋔− adjunction")
    v, c = act.v, act.c

    def i(x):
        return adj.fwd(v.unit, x, x, act.lam(x))

    def p(g, g2, x):
        inner = adj.right_obj(g, adj.right_obj(g2, x))
        body = comp(c, adj.ev(g2, x), act.on(g2, adj.ev(g, adj.right_obj(g2, x))),
                    act.assoc(g2, g, inner))
        return adj.fwd(v.obj(g2, g), inner, x, body)

    pw = Powering(v, c, adj.right_obj, adj.right_mor, i, p, name=adj.name, ctx_probe=act.ctx_probe)
    pw.adjunction = adj
    return pw


def action_from_powering(pw: Powering, adj: Adjunction) -> LeftAction:
    """Recover ``λ`` and ``α`` by transposing ``i`` and ``p`` back."""
    a0, v, c = adj.act, pw.v, pw.c

    def lam(x):
        return adj.bwd(v.unit, x, x, pw.i(x))

    def assoc(g2, g, x):
        gx = a0.obj(g, x)
        y = a0.obj(g2, gx)
        h = comp(c, pw.p(g, g2, y), pw.on(g, adj.coev(g2, gx)), adj.coev(g, x))
        return adj.bwd(v.obj(g2, g), x, y, h)

    return LeftAction(v, c, a0.obj, a0.mor, lam, assoc, name=a0.name, ctx_probe=a0.ctx_probe)


def same_action(a1: LeftAction, a2: LeftAction, ctx_probe=None, probe=None):
    """First ``(Γ, ..., X)`` where the structure maps differ, else ``None``."""
    ctxs = tuple(a1.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(a1.c, probe)
    for x in objs:
        if a1.lam(x) != a2.lam(x):
            return ("λ", x)
    for g2, g, x in itertools.product(ctxs, ctxs, objs):
        if a1.assoc(g2, g, x) != a2.assoc(g2, g, x):
            return ("α", g2, g, x)
    return None


def same_powering(p1: Powering, p2: Powering, ctx_probe=None, probe=None):
    ctxs = tuple(p1.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(p1.c, probe)
    for x in objs:
        if p1.i(x) != p2.i(x):
            return ("i", x)
    for g, g2, x in itertools.product(ctxs, ctxs, objs):
        if p1.obj(g, x) != p2.obj(g, x) or p1.p(g, g2, x) != p2.p(g, g2, x):
            return ("p", g, g2, x)
    return None


def symmetric_powerings_iso(p1: Powering, p2: Powering, ctx_probe=None, probe=None) -> Verdict:
    """Componentwise isomorphism of two powerings' objects ``Γ⋔X``."""
    c = p1.c
    ctxs = tuple(p1.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    isos = {}
    for g, x in itertools.product(ctxs, objs):
        a, b = p1.obj(g, x), p2.obj(g, x)
        found = None
        if a == b:
            found = c.identity(a)
        else:
            for f in c.hom(a, b):
                if c.inverse(f) is not None:
                    found = f
                    break
        if found is None:
            return Verdict(False, {"Γ": g, "X": x}, ctxs + objs)
        isos[g, x] = found
    return Verdict(True, None, ctxs + objs, detail=isos)


# ---------------------------------------------------------------------------
# powered functors


class PoweredFunctorData:
    """``pctx(G, X, Y, f)`` sends ``f : X -> G⋔Y`` to ``FX -> G⋔FY``."""

    def __init__(self, p_c: Powering, p_d: Powering, obj: Callable, pctx: Callable, name="F"):
        self.p_c, self.p_d = p_c, p_d
        self._obj, self._pctx = obj, pctx
        self.name = name
        self._cache = {}

    def obj(self, x):
        key = ("o", x)
        if key not in self._cache:
            self._cache[key] = self._obj(x)
        return self._cache[key]

    def pctx(self, g, x, y, f):
        key = ("p", g, x, y, f)
        if key not in self._cache:
            self._cache[key] = self._pctx(g, x, y, f)
        return self._cache[key]

    def mor(self, f):
        """Underlying functor: ``F₀ f = i⁻¹ ∘ F⟨I⟩(i ∘ f)``."""
        pc, pd = self.p_c, self.p_d
        I = pc.v.unit
        lifted = self.pctx(I, f.dom, f.cod, pc.c.compose(pc.i(f.cod), f))
        return pd.c.compose(pd.i_inv(self.obj(f.cod)), lifted)

    def underlying(self) -> FunctorData:
        return FunctorData(self.p_c.c, self.p_d.c, self.obj, self.mor, name=self.name)

    def __repr__(self):
        return f"<PoweredFunctor {self.name}>"


def validate_powered_functor(f: PoweredFunctorData, ctx_probe=None, probe=None) -> Report:
    pc, pd = f.p_c, f.p_d
    c, d, V, v = pc.c, pd.c, pc.v.base, pc.v
    ctxs = tuple(pc.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    I = v.unit
    rep = Report(f"powered functor {f.name}", ctxs + objs)

    def unit():
        for x in objs:
            yield f.pctx(I, x, x, pc.i(x)) == pd.i(f.obj(x)), {"X": x}

    def nat_ctx():
        for dl, g in itertools.product(ctxs, repeat=2):
            for s in V.hom(dl, g):
                for x, y in itertools.product(objs, repeat=2):
                    for h in c.hom(x, pc.obj(g, y)):
                        lhs = f.pctx(dl, x, y, c.compose(pc.ctx(s, y), h))
                        rhs = d.compose(pd.ctx(s, f.obj(y)), f.pctx(g, x, y, h))
                        yield lhs == rhs, {"σ": s, "f": h}

    def composite():
        for g, g2 in itertools.product(ctxs, repeat=2):
            for x, y, z in itertools.product(objs, repeat=3):
                for h in c.hom(x, pc.obj(g, y)):
                    for k in c.hom(y, pc.obj(g2, z)):
                        whole = comp(c, pc.p(g, g2, z), pc.on(g, k), h)
                        lhs = f.pctx(v.obj(g2, g), x, z, whole)
                        rhs = comp(d, pd.p(g, g2, f.obj(z)), pd.on(g, f.pctx(g2, y, z, k)),
                                   f.pctx(g, x, y, h))
                        yield lhs == rhs, {"Γ": g, "Γ'": g2, "f": h, "g": k}

    rep.run("unit (i)", unit())
    rep.run("naturality in Γ", nat_ctx())
    rep.run("composite (p)", composite())
    return rep


def strong_to_powered(cf: CtxFunctorData, p_c: Powering, p_d: Powering) -> PoweredFunctorData:
    ac, ad = p_c.adjunction, p_d.adjunction

    def pctx(g, x, y, f):
        return ad.fwd(g, cf.obj(x), cf.obj(y), cf.ctx(g, x, ac.bwd(g, x, y, f)))

    out = PoweredFunctorData(p_c, p_d, cf.obj, pctx, name=cf.name)
    out.constant = getattr(cf, "constant", False)
    return out


def powered_to_strong(pf: PoweredFunctorData, act_c: Optional[LeftAction] = None,
                      act_d: Optional[LeftAction] = None) -> CtxFunctorData:
    ac, ad = pf.p_c.adjunction, pf.p_d.adjunction

    def ctx(g, x, f):
        y = f.cod
        return ad.bwd(g, pf.obj(x), pf.obj(y), pf.pctx(g, x, y, ac.fwd(g, x, y, f)))

    out = CtxFunctorData(act_c or ac.act, act_d or ad.act, pf.obj, ctx, name=pf.name)
    out.constant = getattr(pf, "constant", False)
    return out


class NoStrengthToConvert(ValueError):
    pass


def convert_powered_functor(direction: str, data, p_c: Powering, p_d: Optional[Powering] = None):
    """``toPowered`` accepts a context-form functor, a strength, or a bare functor
    (which is converted only if its strength is found and unique)."""
    p_d = p_d or p_c
    if direction == "toPowered":
        if isinstance(data, Strength):
            data = strength_to_ctxform(data)
        elif isinstance(data, FunctorData):
            ac, ad = p_c.adjunction.act, p_d.adjunction.act
            found = enumerate_strengths(data, ac, ad, limit=2)
            if len(found) != 1:
                raise NoStrengthToConvert(
                    f"{data.name} has {len(found) if found else 'no'} strength(s) on this window; "
                    "nothing canonical to convert")
            data = strength_to_ctxform(found[0])
        return strong_to_powered(data, p_c, p_d)
    if direction == "toStrong":
        return powered_to_strong(data)
    raise ValueError(f"direction must be toPowered or toStrong, not {direction!r}")


def same_powered_functor(f1: PoweredFunctorData, f2: PoweredFunctorData, ctx_probe=None, probe=None):
    pc = f1.p_c
    ctxs = tuple(pc.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(pc.c, probe)
    for g, x, y in itertools.product(ctxs, objs, objs):
        for h in pc.c.hom(x, pc.obj(g, y)):
            if f1.pctx(g, x, y, h) != f2.pctx(g, x, y, h):
                return (g, x, y, h)
    return None


def check_powered_naturality(t: NaturalData, f: PoweredFunctorData, g: PoweredFunctorData,
                             ctx_probe=None, probe=None) -> Verdict:
    """``(Γ⋔τ_Y) ∘ F⟨Γ⟩h = G⟨Γ⟩h ∘ τ_X``... read with codomain ``Γ⋔GY``."""
    pc, pd = f.p_c, f.p_d
    c, d = pc.c, pd.c
    ctxs = tuple(pc.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    for gm, x, y in itertools.product(ctxs, objs, objs):
        for h in c.hom(x, pc.obj(gm, y)):
            lhs = d.compose(pd.on(gm, t(y)), f.pctx(gm, x, y, h))
            rhs = d.compose(g.pctx(gm, x, y, h), t(x))
            if lhs != rhs:
                return Verdict(False, {"Γ": gm, "f": h}, ctxs + objs)
    return Verdict(True, None, ctxs + objs)


# ---------------------------------------------------------------------------
# powered monads


class PoweredMonadData:
    """``pextend(G, X, Y, f)`` sends ``f : X -> G⋔TY`` to ``TX -> G⋔TY``."""

    def __init__(self, pw: Powering, obj: Callable, unit: Callable, pextend: Callable, name="T"):
        self.pw = pw
        self._obj, self._unit, self._pext = obj, unit, pextend
        self.name = name
        self._cache = {}
        self._back = {}

    def T(self, x):
        key = ("T", x)
        if key not in self._cache:
            t = self._cache[key] = self._obj(x)
            self._back.setdefault(t, x)
        return self._cache[key]

    def eta(self, x):
        key = ("η", x)
        if key not in self._cache:
            self._cache[key] = self._unit(x)
        return self._cache[key]

    def pextend(self, g, x, y, f):
        key = ("e", g, x, y, f)
        if key not in self._cache:
            self._cache[key] = self._pext(g, x, y, f)
        return self._cache[key]

    def pctx(self, g, x, y, f):
        """``T⟨Γ⟩f = ((Γ⋔η) ∘ f)^⋔`` for ``f : X -> Γ⋔Y``."""
        pw = self.pw
        return self.pextend(g, x, y, pw.c.compose(pw.on(g, self.eta(y)), f))

    def functor(self) -> PoweredFunctorData:
        return PoweredFunctorData(self.pw, self.pw, self.T, self.pctx, name=self.name)

    def mu(self, x):
        pw = self.pw
        tx = self.T(x)
        return pw.c.compose(pw.i_inv(tx), self.pextend(pw.v.unit, tx, x, pw.i(tx)))

    def underlying(self) -> MonadData:
        F = self.functor().underlying()
        return MonadData(F, self.eta, self.mu, name=self.name)

    def __repr__(self):
        return f"<PoweredMonad {self.name}>"


def validate_powered_monad(m: PoweredMonadData, ctx_probe=None, probe=None) -> Report:
    pw = m.pw
    c, v, V = pw.c, pw.v, pw.v.base
    ctxs = tuple(pw.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    I = v.unit
    rep = Report(f"powered monad {m.name}", ctxs + objs)

    def nat_ctx():
        for dl, g in itertools.product(ctxs, repeat=2):
            for s in V.hom(dl, g):
                for x, y in itertools.product(objs, repeat=2):
                    ty = m.T(y)
                    for f in c.hom(x, pw.obj(g, ty)):
                        lhs = m.pextend(dl, x, y, c.compose(pw.ctx(s, ty), f))
                        rhs = c.compose(pw.ctx(s, ty), m.pextend(g, x, y, f))
                        yield lhs == rhs, {"σ": s, "f": f}

    def unit_i():
        for x in objs:
            tx = m.T(x)
            lhs = m.pextend(I, x, x, c.compose(pw.i(tx), m.eta(x)))
            yield lhs == pw.i(tx), {"X": x}

    def unit_eta():
        for g, x, y in itertools.product(ctxs, objs, objs):
            for f in c.hom(x, pw.obj(g, m.T(y))):
                yield c.compose(m.pextend(g, x, y, f), m.eta(x)) == f, {"Γ": g, "f": f}

    def assoc():
        for g, g2 in itertools.product(ctxs, repeat=2):
            for x, y, z in itertools.product(objs, repeat=3):
                tz = m.T(z)
                for k in c.hom(y, pw.obj(g2, tz)):
                    post = c.compose(pw.p(g, g2, tz), pw.on(g, m.pextend(g2, y, z, k)))
                    for f in c.hom(x, pw.obj(g, m.T(y))):
                        lhs = c.compose(post, m.pextend(g, x, y, f))
                        rhs = m.pextend(v.obj(g2, g), x, z, c.compose(post, f))
                        yield lhs == rhs, {"Γ": g, "Γ'": g2, "f": f, "g": k}

    rep.run("naturality in Γ", nat_ctx())
    rep.run("unit (i)", unit_i())
    rep.run("unit (η)", unit_eta())
    rep.run("associativity (p)", assoc())
    return rep


def check_powered_monad_morphism(t: NaturalData, s: PoweredMonadData, d: PoweredMonadData,
                                 ctx_probe=None, probe=None) -> Verdict:
    """``τ∘η = η`` and ``(Γ⋔τ_Y) ∘ f^⋔ = ((Γ⋔τ_Y) ∘ f)^⋔ ∘ τ_X``."""
    pw = s.pw
    c = pw.c
    ctxs = tuple(pw.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    window = ctxs + objs
    for x in objs:
        if c.compose(t(x), s.eta(x)) != d.eta(x):
            return Verdict(False, {"X": x, "law": "τ∘η = η"}, window)
    for g, x, y in itertools.product(ctxs, objs, objs):
        post = pw.on(g, t(y))
        for f in c.hom(x, pw.obj(g, s.T(y))):
            lhs = c.compose(post, s.pextend(g, x, y, f))
            rhs = c.compose(d.pextend(g, x, y, c.compose(post, f)), t(x))
            if lhs != rhs:
                return Verdict(False, {"Γ": g, "f": f, "law": "extension square"}, window)
    return Verdict(True, None, window)


def strong_monad_to_powered(m: KleisliStrongMonad, pw: Powering) -> PoweredMonadData:
    adj = pw.adjunction

    def pextend(g, x, y, f):
        ty = m.T(y)
        return adj.fwd(g, m.T(x), ty, m.extend(g, x, adj.bwd(g, x, ty, f)))

    return PoweredMonadData(pw, m.T, m.eta, pextend, name=m.name)


def powered_monad_to_strong(pm: PoweredMonadData, act: Optional[LeftAction] = None) -> KleisliStrongMonad:
    adj = pm.pw.adjunction

    def extend(g, x, f):
        y = _recover(pm, f.cod)
        return adj.bwd(g, pm.T(x), f.cod, pm.pextend(g, x, y, adj.fwd(g, x, f.cod, f)))

    return KleisliStrongMonad(act or adj.act, pm.T, pm.eta, extend, name=pm.name)


def _recover(pm, ty):
    if ty not in pm._back:
        for x in pm.pw.c.probe:
            pm.T(x)
    try:
        return pm._back[ty]
    except KeyError:
        raise KeyError(f"{ty} is not T of any object seen so far") from None


def convert_powered_monad(direction: str, data, pw: Powering, act: Optional[LeftAction] = None):
    if direction == "toPowered":
        return strong_monad_to_powered(data, pw)
    if direction == "toStrong":
        return powered_monad_to_strong(data, act)
    raise ValueError(f"direction must be toPowered or toStrong, not {direction!r}")


def same_powered_monad(m1: PoweredMonadData, m2: PoweredMonadData, ctx_probe=None, probe=None):
    pw = m1.pw
    ctxs = tuple(pw.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(pw.c, probe)
    for x in objs:
        if m1.T(x) != m2.T(x) or m1.eta(x) != m2.eta(x):
            return (x,)
    for g, x, y in itertools.product(ctxs, objs, objs):
        for f in pw.c.hom(x, pw.obj(g, m1.T(y))):
            if m1.pextend(g, x, y, f) != m2.pextend(g, x, y, f):
                return (g, x, y, f)
    return None


# ---------------------------------------------------------------------------
# Eilenberg-Moore categories and liftings


def em_category(m: MonadData, carriers=None) -> AlgebraCategory:
    """T-algebras over the probe carriers, found by hom search plus the two laws."""
    c = m.base
    carriers = c.probe if carriers is None else carriers

    def law(alg):
        a, A = alg.structure, alg.carrier
        if c.compose(a, m.eta(A)) != c.identity(A):
            return False
        return c.compose(a, m.mu(A)) == c.compose(a, m.functor.mor(a))

    return AlgebraCategory(m.functor, carriers, law=law, name=f"EM({m.name})")


def _lift(pw: Powering, cat: AlgebraCategory, structure: Callable, name: str) -> Powering:
    """Powering on algebras with carrier ``Γ⋔A`` and the given structure map."""
    c = pw.c

    def obj(g, alg):
        return Algebra(pw.obj(g, alg.carrier), structure(g, alg))

    def mor(s, h):
        d, g = s.dom, s.cod
        return AlgMor(obj(g, h.dom), obj(d, h.cod), pw.mor(s, h.under))

    def i(alg):
        return AlgMor(alg, obj(pw.v.unit, alg), pw.i(alg.carrier))

    def p(g, g2, alg):
        return AlgMor(obj(g, obj(g2, alg)), obj(pw.v.obj(g2, g), alg), pw.p(g, g2, alg.carrier))

    out = Powering(pw.v, cat, obj, mor, i, p, name=name, ctx_probe=pw.ctx_probe)
    out.base_powering = pw
    return out


def em_lifting(m: PoweredMonadData, em: Optional[AlgebraCategory] = None) -> Powering:
    """``Γ⋔_T (A, a) = (Γ⋔A, (Γ⋔a) ∘ T⟨Γ⟩id)``.

    Raises ``LiftingSquareBroken`` if a lifted object fails the algebra laws
    (which happens when ``m`` is not a powered monad)."""
    pw = m.pw
    c = pw.c
    em = em or em_category(m.underlying())

    def structure(g, alg):
        a, A = alg.structure, alg.carrier
        gA = pw.obj(g, A)
        return c.compose(pw.on(g, a), m.pctx(g, gA, A, c.identity(gA)))

    lifted = _lift(pw, em, structure, name=f"{pw.name}_{m.name}")
    lifted.monad = m
    for g in lifted.ctx_probe:
        for alg in em.probe:
            o = lifted.obj(g, alg)
            if not em.law(o):
                raise LiftingSquareBroken(f"{g}⋔{alg} is not a {m.name}-algebra")
    return lifted


def lifting_u_square(lifted: Powering, ctx_probe=None, probe=None) -> Verdict:
    """``U(Γ⋔_T A) = Γ⋔UA`` on objects, morphisms, ``i`` and ``p``."""
    pw = lifted.base_powering
    cat = lifted.c
    ctxs = tuple(lifted.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(cat, probe)
    window = ctxs + objs
    V = pw.v.base
    for a in objs:
        if lifted.i(a).under != pw.i(a.carrier):
            return Verdict(False, {"map": "i", "algebra": a}, window)
    for g, a in itertools.product(ctxs, objs):
        if lifted.obj(g, a).carrier != pw.obj(g, a.carrier):
            return Verdict(False, {"map": "⋔ on objects", "Γ": g, "algebra": a}, window)
        for g2 in ctxs:
            if lifted.p(g, g2, a).under != pw.p(g, g2, a.carrier):
                return Verdict(False, {"map": "p", "Γ": g, "Γ'": g2, "algebra": a}, window)
        for d in ctxs:
            for s in V.hom(d, g):
                for b in objs:
                    for h in cat.hom(a, b):
                        if lifted.mor(s, h).under != pw.mor(s, h.under):
                            return Verdict(False, {"map": "⋔ on morphisms", "σ": s, "h": h}, window)
    return Verdict(True, None, window)


def powered_monad_from_lifting(lifted: Powering, monad: MonadData, pw: Powering,
                               name=None) -> PoweredMonadData:
    """``f^⋔ = structure(Γ⋔_T (TY, μ_Y)) ∘ Tf``."""
    c = pw.c

    def pextend(g, x, y, f):
        free = Algebra(monad.T(y), monad.mu(y))
        return c.compose(lifted.obj(g, free).structure, monad.functor.mor(f))

    return PoweredMonadData(pw, monad.T, monad.eta, pextend, name=name or monad.name)


def check_em_morphism_square(t: NaturalData, ls: Powering, ld: Powering, ctx_probe=None) -> Verdict:
    """``τ^*`` (restriction along ``τ : S -> T``) commutes with the lifted powerings.

    ``ls`` lifts to S-algebras, ``ld`` to T-algebras; ``τ^*(B, b) = (B, b∘τ_B)``."""
    c = ld.base_powering.c
    ctxs = tuple(ld.ctx_probe if ctx_probe is None else ctx_probe)
    window = ctxs + tuple(ld.c.probe)

    def restrict(alg):
        return Algebra(alg.carrier, c.compose(alg.structure, t(alg.carrier)))

    for g in ctxs:
        for alg in ld.c.probe:
            lhs = restrict(ld.obj(g, alg))
            rhs = ls.obj(g, restrict(alg))
            if lhs != rhs:
                return Verdict(False, {"Γ": g, "algebra": alg}, window)
    return Verdict(True, None, window)


def lift_powering_to_falg(F: PoweredFunctorData, pw: Optional[Powering] = None, carriers=None,
                          falg: Optional[AlgebraCategory] = None) -> Powering:
    """``Γ⋔_F (A, a) = (Γ⋔A, (Γ⋔a) ∘ F⟨Γ⟩id)`` on F₀-algebras."""
    pw = pw or F.p_c
    c = pw.c
    falg = falg or AlgebraCategory(F.underlying(), c.probe if carriers is None else carriers,
                                   name=f"{F.name}-Alg")

    def structure(g, alg):
        A, a = alg.carrier, alg.structure
        gA = pw.obj(g, A)
        return c.compose(pw.on(g, a), F.pctx(g, gA, A, c.identity(gA)))

    out = _lift(pw, falg, structure, name=f"{pw.name}_{F.name}")
    out.functor = F
    return out


def transport_powering(lifted: Powering, iso, target: AlgebraCategory) -> Powering:
    """Carry a powering of F-Alg to T-Alg along ``iso = (Phi, Psi)``."""
    Phi, Psi = iso

    def obj(g, alg):
        return Psi.obj(lifted.obj(g, Phi.obj(alg)))

    def mor(s, h):
        return Psi.mor(lifted.mor(s, Phi.mor(h)))

    def i(alg):
        return Psi.mor(lifted.i(Phi.obj(alg)))

    def p(g, g2, alg):
        return Psi.mor(lifted.p(g, g2, Phi.obj(alg)))

    out = Powering(lifted.v, target, obj, mor, i, p, name=lifted.name, ctx_probe=lifted.ctx_probe)
    out.base_powering = lifted.base_powering
    return out


def exception_algebra_iso(monad: MonadData, S, e, em: AlgebraCategory, falg: AlgebraCategory):
    """``Phi(B, a) = (B, a∘inr)`` and ``Psi(B, b) = (B, [id, b])`` between
    ``(−+E)``-algebras and ``Δ_E``-algebras."""
    c = monad.base

    def phi(alg):
        _, _, inr = S.coproduct(alg.carrier, e)
        return Algebra(alg.carrier, c.compose(alg.structure, inr))

    def psi(alg):
        return Algebra(alg.carrier, S.copair(c.identity(alg.carrier), alg.structure))

    Phi = FunctorData(em, falg, phi, lambda h: AlgMor(phi(h.dom), phi(h.cod), h.under), name="Φ")
    Psi = FunctorData(falg, em, psi, lambda h: AlgMor(psi(h.dom), psi(h.cod), h.under), name="Ψ")
    return Phi, Psi


def free_powered_monad(F: PoweredFunctorData, m: MonadData, iso, pw: Optional[Powering] = None,
                       certify=True, ctx_probe=None, probe=None) -> PoweredMonadData:
    """Transport the F-algebra powering across ``iso`` and read off ``(−)^⋔``.

    With ``certify`` and a powering built from an action, every free algebra
    ``(TX, μ_X)`` in the window is checked to be strongly free for the
    context form of ``F``; the verdicts are stored on ``.certificates``."""
    Phi, Psi = iso
    pw = pw or F.p_c
    lf = lift_powering_to_falg(F, pw, falg=Phi.target)
    lifted = transport_powering(lf, iso, Phi.source)
    out = powered_monad_from_lifting(lifted, m, pw, name=m.name)
    out.lifting = lifted
    out.certificates = {}
    if certify and getattr(pw, "adjunction", None) is not None:
        cf = powered_to_strong(F)
        for x in _probe(pw.c, probe):
            cand = StronglyFreeCandidate(x, Phi.obj(Algebra(m.T(x), m.mu(x))), m.eta(x))
            out.certificates[x] = is_strongly_free(cf, cand, ctx_probe, probe)
    return out


__all__ = [
    "Powering", "validate_powering", "powering_from_action", "action_from_powering",
    "same_action", "same_powering", "symmetric_powerings_iso", "PoweredFunctorData",
    "validate_powered_functor", "strong_to_powered", "powered_to_strong", "NoStrengthToConvert",
    "convert_powered_functor", "same_powered_functor", "check_powered_naturality",
    "PoweredMonadData", "validate_powered_monad", "check_powered_monad_morphism",
    "strong_monad_to_powered", "powered_monad_to_strong", "convert_powered_monad",
    "same_powered_monad", "em_category", "em_lifting", "lifting_u_square",
    "powered_monad_from_lifting", "check_em_morphism_square", "lift_powering_to_falg",
    "transport_powering", "exception_algebra_iso", "free_powered_monad",
]
