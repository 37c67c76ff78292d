"""Strengths, context-indexed functors and strength search."""

from __future__ import annotations

import itertools
from typing import Callable, Optional

from .action import LeftAction, WFCStructure, family, pointfun
from .core import (
    FunctorData,
    NaturalData,
    Report,
    Verdict,
    _probe,
    comp,
    current_bounds,
)
from .errors import SearchBoundExceeded, WindowError


class Strength:
    """``str(G, X) : G ▷_D FX -> F(G ▷_C X)`` for a functor ``F : C -> D``."""

    def __init__(self, functor: FunctorData, act_c: LeftAction, act_d: LeftAction,
                 component: Callable, name="str"):
        self.functor = functor
        self.act_c = act_c
        self.act_d = act_d
        self._component = component
        self.name = name
        self._cache = {}

    def __call__(self, g, x):
        try:
            return self._cache[g, x]
        except KeyError:
            r = self._cache[g, x] = self._component(g, x)
            return r

    def __repr__(self):
        return f"<Strength {self.name} for {self.functor.name}>"


class TableStrength(Strength):
    def __init__(self, functor, act_c, act_d, table, window=(), name="str"):
        self.table = dict(table)
        self.window = tuple(window)

        def comp_(g, x):
            try:
                return self.table[g, x]
            except KeyError:
                raise WindowError(f"no component recorded at ({g}, {x})") from None

        super().__init__(functor, act_c, act_d, comp_, name=name)

    def __eq__(self, other):
        return isinstance(other, TableStrength) and self.table == other.table

    def __hash__(self):
        return hash(frozenset(self.table.items()))


class CtxFunctorData:
    """A strong functor in context form: ``ctx(G, X, f) : G ▷_D FX -> FY``
    for ``f : G ▷_C X -> Y``."""

    def __init__(self, act_c: LeftAction, act_d: LeftAction, obj: Callable, ctx: Callable, name="F"):
        self.act_c = act_c
        self.act_d = act_d
        self._obj = obj
        self._ctx = ctx
        self.name = name
        self._ocache = {}
        self._mcache = {}

    def obj(self, x):
        try:
            return self._ocache[x]
        except KeyError:
            r = self._ocache[x] = self._obj(x)
            return r

    def ctx(self, g, x, f):
        key = (g, x, f)
        try:
            return self._mcache[key]
        except KeyError:
            r = self._mcache[key] = self._ctx(g, x, f)
            return r

    def __repr__(self):
        return f"<CtxFunctor {self.name}>"


def strength_window(act_c: LeftAction, ctx_probe=None, probe=None):
    """Contexts (with the unit) and the objects ``X`` and ``G▷X`` a strength is checked on."""
    ctxs = tuple(act_c.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(act_c.c, probe)
    second = list(objs)
    for g in ctxs:
        for x in objs:
            gx = act_c.obj(g, x)
            if gx not in second:
                second.append(gx)
    return ctxs, objs, tuple(second)


def validate_strength(s: Strength, ctx_probe=None, probe=None, deep=True) -> Report:
    """Naturality, unit and associativity laws on a window.

    With ``deep`` the naturality laws also range over the objects ``G▷X``
    that the associativity law touches.
    """
    F, ac, ad = s.functor, s.act_c, s.act_d
    C, D, V = ac.c, ad.c, ac.v.base
    ctxs, objs, second = strength_window(ac, ctx_probe, probe)
    xs = second if deep else objs
    rep = Report(f"strength {s.name} for {F.name}", ctxs + objs)
    I = ac.v.unit

    def typing():
        for g in ctxs:
            for x in xs:
                t = s(g, x)
                ok = t.dom == ad.obj(g, F.obj(x)) and t.cod == F.obj(ac.obj(g, x))
                yield ok, {"at": (g, x), "component": t}

    def nat_x():
        for g in ctxs:
            for x in xs:
                for x2 in xs:
                    for u in C.hom(x, x2):
                        lhs = D.compose(F.mor(ac.on(g, u)), s(g, x))
                        rhs = D.compose(s(g, x2), ad.on(g, F.mor(u)))
                        yield lhs == rhs, {"Γ": g, "u": u}

    def nat_ctx():
        for d in ctxs:
            for g in ctxs:
                for sg in V.hom(d, g):
                    for x in xs:
                        lhs = D.compose(F.mor(ac.ctx(sg, x)), s(d, x))
                        rhs = D.compose(s(g, x), ad.ctx(sg, F.obj(x)))
                        yield lhs == rhs, {"σ": sg, "X": x}

    def unit():
        for x in xs:
            yield D.compose(F.mor(ac.lam(x)), s(I, x)) == ad.lam(F.obj(x)), {"X": x}

    def assoc():
        for g2, g, x in itertools.product(ctxs, ctxs, objs):
            lhs = D.compose(F.mor(ac.assoc(g2, g, x)), s(ac.v.obj(g2, g), x))
            rhs = comp(D, s(g2, ac.obj(g, x)), ad.on(g2, s(g, x)), ad.assoc(g2, g, F.obj(x)))
            yield lhs == rhs, {"at": (g2, g, x)}

    if not rep.run("typing", typing()):
        return rep
    rep.run("naturality in X", nat_x())
    rep.run("naturality in Γ", nat_ctx())
    rep.run("unit", unit())
    rep.run("associativity", assoc())
    return rep


def validate_ctxform(cf: CtxFunctorData, ctx_probe=None, probe=None) -> Report:
    ac, ad = cf.act_c, cf.act_d
    C, D, V = ac.c, ad.c, ac.v.base
    ctxs = tuple(ac.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(C, probe)
    rep = Report(f"context form {cf.name}", ctxs + objs)
    I = ac.v.unit

    def typing():
        for g in ctxs:
            for x in objs:
                for y in objs:
                    for f in C.hom(ac.obj(g, x), y):
                        h = cf.ctx(g, x, f)
                        ok = h.dom == ad.obj(g, cf.obj(x)) and h.cod == cf.obj(y)
                        yield ok, {"f": f, "image": h}

    def nat_ctx():
        for d in ctxs:
            for g in ctxs:
                for sg in V.hom(d, g):
                    for x in objs:
                        for y in objs:
                            for f in C.hom(ac.obj(g, x), y):
                                lhs = cf.ctx(d, x, C.compose(f, ac.ctx(sg, x)))
                                rhs = D.compose(cf.ctx(g, x, f), ad.ctx(sg, cf.obj(x)))
                                yield lhs == rhs, {"σ": sg, "f": f}

    def unit():
        for x in objs:
            yield cf.ctx(I, x, ac.lam(x)) == ad.lam(cf.obj(x)), {"X": x}

    def assoc():
        for g2, g in itertools.product(ctxs, repeat=2):
            gg = ac.v.obj(g2, g)
            for x, y, z in itertools.product(objs, repeat=3):
                for f in C.hom(ac.obj(g, x), y):
                    ff = cf.ctx(g, x, f)
                    for h in C.hom(ac.obj(g2, y), z):
                        lhs = cf.ctx(gg, x, comp(C, h, ac.on(g2, f), ac.assoc(g2, g, x)))
                        rhs = comp(D, cf.ctx(g2, y, h), ad.on(g2, ff), ad.assoc(g2, g, cf.obj(x)))
                        yield lhs == rhs, {"Γ'": g2, "Γ": g, "f": f, "g": h}

    if not rep.run("typing", typing()):
        return rep
    rep.run("naturality in Γ", nat_ctx())
    rep.run("unit", unit())
    rep.run("associativity", assoc())
    return rep


def underlying_functor(cf: CtxFunctorData) -> FunctorData:
    """``F₀ f = F⟨I⟩(f ∘ λ_X) ∘ λ⁻¹_FX``."""
    ac, ad = cf.act_c, cf.act_d
    I = ac.v.unit

    def mor(f):
        return ad.c.compose(cf.ctx(I, f.dom, ac.c.compose(f, ac.lam(f.dom))), ad.lam_inv(cf.obj(f.dom)))

    return FunctorData(ac.c, ad.c, cf.obj, mor, name=cf.name)


def strength_to_ctxform(s: Strength) -> CtxFunctorData:
    """``F⟨G⟩f = Ff ∘ str_{G,X}``."""
    F, D = s.functor, s.act_d.c
    return CtxFunctorData(s.act_c, s.act_d, F.obj,
                          lambda g, x, f: D.compose(F.mor(f), s(g, x)), name=F.name)


def ctxform_to_strength(cf: CtxFunctorData, functor: Optional[FunctorData] = None) -> Strength:
    """``str_{G,X} = F⟨G⟩ id_{G▷X}``."""
    F = functor if functor is not None else underlying_functor(cf)
    ac = cf.act_c
    return Strength(F, ac, cf.act_d,
                    lambda g, x: cf.ctx(g, x, ac.c.identity(ac.obj(g, x))), name=f"str[{cf.name}]")


def identity_ctxform(act: LeftAction) -> CtxFunctorData:
    return CtxFunctorData(act, act, lambda x: x, lambda g, x, f: f, name="Id")


def identity_strength(act: LeftAction) -> Strength:
    from .core import identity_functor
    return Strength(identity_functor(act.c), act, act,
                    lambda g, x: act.c.identity(act.obj(g, x)), name="id")


def compose_strong(g: CtxFunctorData, f: CtxFunctorData) -> CtxFunctorData:
    """``(G·F)⟨Γ⟩h = G⟨Γ⟩(F⟨Γ⟩h)``."""
    return CtxFunctorData(
        f.act_c, g.act_d,
        lambda x: g.obj(f.obj(x)),
        lambda gam, x, h: g.ctx(gam, f.obj(x), f.ctx(gam, x, h)),
        name=f"{g.name}·{f.name}",
    )


def same_strength(s1: Strength, s2: Strength, ctx_probe=None, probe=None, deep=True):
    """First window pair where two strengths differ, or ``None``."""
    ctxs, objs, second = strength_window(s1.act_c, ctx_probe, probe)
    for g in ctxs:
        for x in (second if deep else objs):
            if s1(g, x) != s2(g, x):
                return (g, x)
    return None


def same_ctxform(f1: CtxFunctorData, f2: CtxFunctorData, ctx_probe=None, probe=None):
    ac = f1.act_c
    ctxs = tuple(ac.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(ac.c, probe)
    for g in ctxs:
        for x in objs:
            if f1.obj(x) != f2.obj(x):
                return (g, x)
            for y in objs:
                for f in ac.c.hom(ac.obj(g, x), y):
                    if f1.ctx(g, x, f) != f2.ctx(g, x, f):
                        return (g, x, f)
    return None


def check_strong_naturality(t: NaturalData, sf: Strength, sg: Strength, ctx_probe=None,
                            probe=None) -> Verdict:
    """``τ_{G▷X} ∘ str^F = str^G ∘ (G ▷ τ_X)`` on the window."""
    ac, ad = sf.act_c, sf.act_d
    D = ad.c
    ctxs = tuple(ac.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(ac.c, probe)
    for g in ctxs:
        for x in objs:
            lhs = D.compose(t(ac.obj(g, x)), sf(g, x))
            rhs = D.compose(sg(g, x), ad.on(g, t(x)))
            if lhs != rhs:
                return Verdict(False, {"Γ": g, "X": x, "τ∘str": lhs, "str∘(Γ▷τ)": rhs}, ctxs + objs)
    return Verdict(True, None, ctxs + objs)


def check_strong_naturality_ctx(t: NaturalData, ff: CtxFunctorData, fg: CtxFunctorData,
                                ctx_probe=None, probe=None) -> Verdict:
    """Context-form condition ``τ_Y ∘ F⟨G⟩f = G⟨G⟩f ∘ (G ▷ τ_X)``."""
    ac, ad = ff.act_c, ff.act_d
    C, D = ac.c, ad.c
    ctxs = tuple(ac.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(C, probe)
    for g in ctxs:
        for x in objs:
            for y in objs:
                for f in C.hom(ac.obj(g, x), y):
                    if D.compose(t(y), ff.ctx(g, x, f)) != D.compose(fg.ctx(g, x, f), ad.on(g, t(x))):
                        return Verdict(False, {"Γ": g, "f": f}, ctxs + objs)
    return Verdict(True, None, ctxs + objs)


# ---------------------------------------------------------------------------
# search


def _unit_component(F, ac, ad, x):
    # str_{I,X} = (Fλ_X)⁻¹ ∘ λ_FX
    D = ad.c
    inv = D.inverse(F.mor(ac.lam(x)))
    if inv is None:
        return None
    return D.compose(inv, ad.lam(F.obj(x)))


def _tensor_component(F, ac, ad, table, g2, g, x):
    D = ad.c
    inv = D.inverse(F.mor(ac.assoc(g2, g, x)))
    return comp(D, inv, table[g2, ac.obj(g, x)], ad.on(g2, table[g, x]), ad.assoc(g2, g, F.obj(x)))


def enumerate_strengths(F: FunctorData, act_c: LeftAction, act_d: LeftAction, ctx_probe=None,
                        probe=None, limit=None) -> list:
    """All strengths on the window, in search order.

    Components at the unit are forced by the unit law and components at
    tensor contexts by the associativity law.  The rest are searched with
    table entries pinned by naturality against components already chosen.
    """
    C, D, V = act_c.c, act_d.c, act_c.v.base
    ctxs, objs, second = strength_window(act_c, ctx_probe, probe)
    I = act_c.v.unit
    cap = current_bounds().search_cap
    keys = [(g, x) for g in ctxs for x in second]
    # the unit first, then small contexts, probe objects before composite ones
    keys.sort(key=lambda k: (k[0] != I, ctxs.index(k[0]), second.index(k[1])))
    sig = {(d, g): V.hom(d, g) for d in ctxs for g in ctxs}
    us = {(x, y): C.hom(x, y) for x in second for y in second}
    Fu = {}

    def Fmor(u):
        r = Fu.get(u)
        if r is None:
            r = Fu[u] = F.mor(u)
        return r

    results = []
    steps = [0]

    def candidates(key, table):
        g, x = key
        dom, cod = act_d.obj(g, F.obj(x)), F.obj(act_c.obj(g, x))
        if g == I:
            fixed = _unit_component(F, act_c, act_d, x)
            if fixed is None:
                return []
            cands = [fixed]
        else:
            cons = []
            for d in ctxs:
                if (d, x) in table:
                    for s in sig[d, g]:
                        cons.append((act_d.ctx(s, F.obj(x)), D.compose(Fmor(act_c.ctx(s, x)), table[d, x])))
            for x2 in second:
                if (g, x2) in table:
                    for u in us[x2, x]:
                        cons.append((act_d.on(g, Fmor(u)), D.compose(Fmor(act_c.on(g, u)), table[g, x2])))
            cands = D.solve(dom, cod, cons)
        out = []
        for t in cands:
            if _consistent(key, t, table):
                out.append(t)
        return out

    def _consistent(key, t, table):
        g, x = key
        for g2 in ctxs:
            if (g2, x) in table:
                for s in sig[g, g2]:
                    if D.compose(Fmor(act_c.ctx(s, x)), t) != D.compose(table[g2, x], act_d.ctx(s, F.obj(x))):
                        return False
                for s in sig[g2, g]:
                    if D.compose(Fmor(act_c.ctx(s, x)), table[g2, x]) != D.compose(t, act_d.ctx(s, F.obj(x))):
                        return False
        for x2 in second:
            if (g, x2) in table:
                for u in us[x, x2]:
                    if D.compose(Fmor(act_c.on(g, u)), t) != D.compose(table[g, x2], act_d.on(g, Fmor(u))):
                        return False
                for u in us[x2, x]:
                    if D.compose(Fmor(act_c.on(g, u)), table[g, x2]) != D.compose(t, act_d.on(g, Fmor(u))):
                        return False
        return True

    def finish(table):
        full = dict(table)
        for g2, g, x in itertools.product(ctxs, ctxs, objs):
            gg = act_c.v.obj(g2, g)
            val = _tensor_component(F, act_c, act_d, table, g2, g, x)
            if full.setdefault((gg, x), val) != val:
                return None
        s = TableStrength(F, act_c, act_d, full, ctxs + objs, name=f"str{len(results)}")
        if not validate_strength(s, ctxs, objs):
            return None
        return s

    def search(i, table):
        steps[0] += 1
        if steps[0] > cap:
            raise SearchBoundExceeded(f"strength search exceeded {cap} steps")
        if i == len(keys):
            s = finish(table)
            if s is not None:
                results.append(s)
            return
        key = keys[i]
        for t in candidates(key, table):
            table[key] = t
            search(i + 1, table)
            del table[key]
            if limit is not None and len(results) >= limit:
                return

    search(0, {})
    return results


def blocking_pair(F: FunctorData, act_c: LeftAction, act_d: LeftAction, ctx_probe=None, probe=None):
    """First window pair with no component compatible with its forced pins."""
    D = act_d.c
    ctxs, objs, second = strength_window(act_c, ctx_probe, probe)
    for g in ctxs:
        for x in second:
            if not _forced_candidates(F, act_c, act_d, g, x):
                return (g, x)
    return None


def _forced_candidates(F, act_c, act_d, g, x):
    """Morphisms whose point family is ``γ ↦ F(pointfun(id_{G▷X}) γ)``."""
    C, D = act_c.c, act_d.c
    gx = act_c.obj(g, x)
    want = [F.mor(h) for h in act_c.point_maps(g, x)]
    return D.solve(act_d.obj(g, F.obj(x)), F.obj(gx), list(zip(act_d.point_maps(g, F.obj(x)), want)))


def forced_strength(F: FunctorData, act_c: LeftAction, act_d: LeftAction, ctx_probe=None,
                    probe=None) -> Verdict:
    """The only possible strength over a well-pointed action, if it exists.

    ``value`` is true when every window component exists uniquely and the
    family validates; ``detail`` is then the strength.  Otherwise the
    witness names the blocking pair or the failed law.
    """
    ctxs, objs, second = strength_window(act_c, ctx_probe, probe)
    window = ctxs + objs
    keys = [(g, x) for g in ctxs for x in second]
    keys += [(act_c.v.obj(g2, g), x) for g2 in ctxs for g in ctxs for x in objs]
    table = {}
    for g, x in keys:
        if (g, x) in table:
            continue
        cands = _forced_candidates(F, act_c, act_d, g, x)
        if not cands:
            return Verdict(False, {"blocking Γ": g, "blocking X": x, "reason": "no morphism has the forced point family"}, window)
        if len(cands) > 1:
            return Verdict(False, {"Γ": g, "X": x, "reason": "forced component not unique (action not well-pointed here)"}, window)
        table[g, x] = cands[0]
    s = TableStrength(F, act_c, act_d, table, window, name="str!")
    rep = validate_strength(s, ctxs, objs)
    if not rep:
        bad = rep.failures()[0]
        return Verdict(False, dict(bad.counterexample or {}, law=bad.law), window, detail=rep)
    return Verdict(True, None, window, detail=s)


def ctxform_from_wfc(F: FunctorData, w: WFCStructure, act_c: LeftAction) -> CtxFunctorData:
    """``F̂⟨Γ⟩f = Φ_Γ(γ ↦ F(pointfun(f) γ))``."""
    ad = w.action

    def ctx(g, x, f):
        zeta = pointfun(act_c, g, x, f)
        return w(family(ad, g, F.obj(x), F.obj(f.cod), lambda p: F.mor(zeta(p))))

    return CtxFunctorData(act_c, ad, F.obj, ctx, name=f"{F.name}^")


def strength_from_wfc(F: FunctorData, w: WFCStructure, act_c: LeftAction) -> Strength:
    return ctxform_to_strength(ctxform_from_wfc(F, w, act_c), functor=F)


__all__ = [
    "Strength", "TableStrength", "CtxFunctorData", "strength_window", "validate_strength",
    "validate_ctxform", "underlying_functor", "strength_to_ctxform", "ctxform_to_strength",
    "identity_ctxform", "identity_strength", "compose_strong", "same_strength", "same_ctxform",
    "check_strong_naturality", "check_strong_naturality_ctx", "enumerate_strengths",
    "blocking_pair", "forced_strength", "ctxform_from_wfc", "strength_from_wfc",
]
