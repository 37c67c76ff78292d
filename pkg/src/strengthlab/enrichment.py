"""Enrichments over V, enriched functors and monads, and their exchange with
actions along explicit transposition bijections."""

from __future__ import annotations

import itertools
from typing import Callable, Optional

from .action import LeftAction
from .core import (
    ConcreteCategory,
    FunctorData,
    Fun,
    Morphism,
    NaturalData,
    Obj,
    OpMor,
    OppositeCategory,
    PairMor,
    ProductCategory,
    Report,
    ThinCategory,
    ThinMor,
    Verdict,
    _probe,
    comp,
)
from .errors import ComparisonNotIso
from .monoidal import STAR
from .strength import CtxFunctorData
from .strongmonad import KleisliStrongMonad


# ---------------------------------------------------------------------------
# adjunctions as transposition tables


class Adjunction:
    """Transposition bijections for an action ``▷``.

    kind ``"hom"``:   ``C(G▷X, Y) ≅ V(G, X⊸Y)``, ``right_obj(X, Y) = X⊸Y`` in V.
    kind ``"power"``: ``C(G▷X, Y) ≅ C(X, G⋔Y)``, ``right_obj(G, Y) = G⋔Y`` in C.

    ``fwd(G, X, Y, f)`` transposes ``f : G▷X -> Y`` and ``bwd(G, X, Y, h)``
    transposes back.
    """

    def __init__(self, act: LeftAction, kind: str, right_obj: Callable, fwd: Callable,
                 bwd: Callable, name=None):
        if kind not in ("hom", "power"):
            raise ValueError(f"unknown adjunction kind {kind!r}")
        self.act = act
        self.kind = kind
        self._robj, self._fwd, self._bwd = right_obj, fwd, bwd
        self.name = name or ("⊸" if kind == "hom" else "⋔")
        self._cache = {}

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            r = self._cache[key] = fn()
            return r

    def right_obj(self, a, y):
        return self._memo(("o", a, y), lambda: self._robj(a, y))

    def fwd(self, g, x, y, f):
        return self._memo(("f", g, x, y, f), lambda: self._fwd(g, x, y, f))

    def bwd(self, g, x, y, h):
        return self._memo(("b", g, x, y, h), lambda: self._bwd(g, x, y, h))

    # derived structure -----------------------------------------------------

    def ev(self, a, y):
        """Counit: ``(X⊸Y)▷X -> Y`` (hom, ``a = X``) or ``G▷(G⋔Y) -> Y`` (power, ``a = G``)."""
        r = self.right_obj(a, y)
        if self.kind == "hom":
            return self.bwd(r, a, y, self.act.v.base.identity(r))
        return self.bwd(a, r, y, self.act.c.identity(r))

    def coev(self, g, x):
        """Unit: ``G -> X⊸(G▷X)`` (hom) or ``X -> G⋔(G▷X)`` (power)."""
        gx = self.act.obj(g, x)
        return self.fwd(g, x, gx, self.act.c.identity(gx))

    def right_mor(self, u, w):
        """hom: ``u⊸w : X⊸Y -> X'⊸Y'`` for ``u : X'->X``, ``w : Y->Y'``.
        power: ``u⋔w : G⋔Y -> D⋔Y'`` for ``u : D->G`` in V, ``w : Y->Y'``."""
        def go():
            a, c = self.act, self.act.c
            if self.kind == "hom":
                x2, x = u.dom, u.cod
                y, y2 = w.dom, w.cod
                r = self.right_obj(x, y)
                return self.fwd(r, x2, y2, comp(c, w, self.ev(x, y), a.on(r, u)))
            d, g = u.dom, u.cod
            y, y2 = w.dom, w.cod
            r = self.right_obj(g, y)
            return self.fwd(d, r, y2, comp(c, w, self.ev(g, y), a.ctx(u, r)))
        return self._memo(("m", u, w), go)

    def __repr__(self):
        return f"<Adjunction {self.kind} {self.name} for {self.act.name}>"


def validate_adjunction(adj: Adjunction, ctx_probe=None, probe=None) -> Report:
    a = adj.act
    c, V = a.c, a.v.base
    ctxs = tuple(a.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    rep = Report(f"adjunction {adj.name}", ctxs + objs)
    hom_side = adj.kind == "hom"

    def right_hom(g, x, y):
        if hom_side:
            return V.hom(g, adj.right_obj(x, y))
        return c.hom(x, adj.right_obj(g, y))

    def bijection():
        for g, x, y in itertools.product(ctxs, objs, objs):
            fs = c.hom(a.obj(g, x), y)
            hs = right_hom(g, x, y)
            image = [adj.fwd(g, x, y, f) for f in fs]
            yield len(set(image)) == len(fs) and set(image) == set(hs), \
                {"Γ": g, "X": x, "Y": y, "left": len(fs), "right": len(hs)}
            for f, h in zip(fs, image):
                yield adj.bwd(g, x, y, h) == f, {"Γ": g, "f": f, "round trip": "bwd∘fwd"}
            for h in hs:
                yield adj.fwd(g, x, y, adj.bwd(g, x, y, h)) == h, {"Γ": g, "h": h, "round trip": "fwd∘bwd"}

    def nat_ctx():
        for d, g in itertools.product(ctxs, repeat=2):
            for s in V.hom(d, g):
                for x, y in itertools.product(objs, repeat=2):
                    for f in c.hom(a.obj(g, x), y):
                        lhs = adj.fwd(d, x, y, c.compose(f, a.ctx(s, x)))
                        if hom_side:
                            rhs = V.compose(adj.fwd(g, x, y, f), s)
                        else:
                            rhs = c.compose(adj.right_mor(s, c.identity(y)), adj.fwd(g, x, y, f))
                        yield lhs == rhs, {"σ": s, "f": f}

    def nat_x():
        for g in ctxs:
            for x2, x, y in itertools.product(objs, repeat=3):
                for u in c.hom(x2, x):
                    for f in c.hom(a.obj(g, x), y):
                        lhs = adj.fwd(g, x2, y, c.compose(f, a.on(g, u)))
                        if hom_side:
                            rhs = V.compose(adj.right_mor(u, c.identity(y)), adj.fwd(g, x, y, f))
                        else:
                            rhs = c.compose(adj.fwd(g, x, y, f), u)
                        yield lhs == rhs, {"u": u, "f": f}

    def nat_y():
        for g in ctxs:
            for x, y, y2 in itertools.product(objs, repeat=3):
                for w in c.hom(y, y2):
                    for f in c.hom(a.obj(g, x), y):
                        lhs = adj.fwd(g, x, y2, c.compose(w, f))
                        if hom_side:
                            rhs = V.compose(adj.right_mor(c.identity(x), w), adj.fwd(g, x, y, f))
                        else:
                            rhs = c.compose(adj.right_mor(V.identity(g), w), adj.fwd(g, x, y, f))
                        yield lhs == rhs, {"w": w, "f": f}

    if rep.run("bijection", bijection()):
        rep.run("naturality in Γ", nat_ctx())
        rep.run("naturality in X", nat_x())
        rep.run("naturality in Y", nat_y())
    return rep


# ---------------------------------------------------------------------------
# concrete internal homs


def _inverse_in(monoid, m):
    for k in monoid.elements:
        if monoid.mul(m, k) == monoid.unit and monoid.mul(k, m) == monoid.unit:
            return k
    raise ValueError(f"{m!r} has no inverse; function objects need a group")


def function_object(cat: ConcreteCategory, idx: Obj, y: Obj, smash=False) -> Obj:
    """All functions ``idx -> y`` as an object of ``cat`` (pointed maps when ``smash``).

    For posets only monotone maps are kept, ordered pointwise.  For M-sets the
    action is conjugation ``(f·m)(i) = f(i·m⁻¹)·m``.
    """
    funs = []
    for vals in itertools.product(y.carrier, repeat=len(idx.carrier)):
        f = Fun(vals)
        if smash and idx.carrier and f[idx.index[idx.point]] != y.point:
            continue
        if cat.ordered and not all(y.leq(f[idx.index[a]], f[idx.index[b]]) for a, b in idx.order):
            continue
        funs.append(f)
    order = None
    if cat.ordered:
        order = {(f, g) for f in funs for g in funs if all(y.leq(a, b) for a, b in zip(f, g))}
    point = None
    if cat.pointed:
        point = Fun(y.point for _ in idx.carrier)
    action = None
    if cat.monoid is not None:
        M = cat.monoid
        action = {}
        for f in funs:
            for m in M.elements:
                mi = _inverse_in(M, m)
                action[f, m] = Fun(y.act(f[idx.index[idx.act(i, mi)]], m) for i in idx.carrier)
    label = f"[{idx},{y}]" if (idx.label or y.label) else None
    return cat.make(funs, point=point, order=order, action=action, label=label)


def concrete_adjunction(act: LeftAction, kind="hom", smash=False) -> Adjunction:
    """Currying for a cartesian (or smash) self-action of finite decorated sets."""
    cat = act.c

    def pair(gam, g, v, x):
        if smash and (gam == g.point or v == x.point):
            return STAR
        return (gam, v)

    if kind == "hom":
        def robj(x, y):
            return function_object(cat, x, y, smash)

        def fwd(g, x, y, f):
            r = robj(x, y)
            return Morphism.from_fn(g, r, lambda gam: Fun(f(pair(gam, g, v, x)) for v in x.carrier))

        def bwd(g, x, y, h):
            def go(e):
                if e == STAR and smash:
                    return y.point
                gam, v = e
                return h(gam)[x.index[v]]
            return Morphism.from_fn(act.obj(g, x), y, go)
    else:
        def robj(g, y):
            return function_object(cat, g, y, smash)

        def fwd(g, x, y, f):
            r = robj(g, y)
            return Morphism.from_fn(x, r, lambda v: Fun(f(pair(gam, g, v, x)) for gam in g.carrier))

        def bwd(g, x, y, h):
            def go(e):
                if e == STAR and smash:
                    return y.point
                gam, v = e
                return h(v)[g.index[gam]]
            return Morphism.from_fn(act.obj(g, x), y, go)

    return Adjunction(act, kind, robj, fwd, bwd, name=("⊸" if kind == "hom" else "⋔"))


def heyting_adjunction(act: LeftAction, implies: Callable, meet: Callable, kind="hom") -> Adjunction:
    """Residuation ``γ∧x ≤ y  iff  γ ≤ x⇒y`` on a thin category."""

    if kind == "hom":
        def robj(x, y):
            return implies(x, y)

        def fwd(g, x, y, f):
            return ThinMor(g, implies(x, y))
    else:
        def robj(g, y):
            return implies(g, y)

        def fwd(g, x, y, f):
            return ThinMor(x, implies(g, y))

    def bwd(g, x, y, h):
        return ThinMor(meet(g, x), y)

    return Adjunction(act, kind, robj, fwd, bwd, name=("⇒" if kind == "hom" else "⋔"))


def bundle_adjunction(bundle, kind="hom") -> Adjunction:
    """The transposition data registered for a corpus bundle."""
    if bundle.closed in ("cartesian", "smash"):
        return concrete_adjunction(bundle.action, kind, smash=bundle.closed == "smash")
    if bundle.closed == "heyting":
        return heyting_adjunction(bundle.action, lambda a, b: max(1 - a, b), min, kind)
    raise ValueError(f"{bundle.name} has no internal hom registered")


# ---------------------------------------------------------------------------
# enrichments


class Enrichment:
    """Hom objects ``X⊸Y`` in V with identities ``j`` and composition
    ``M(X, Y, Z) : (Y⊸Z)⊗(X⊸Y) -> X⊸Z``."""

    def __init__(self, v, c, hom_obj: Callable, hom_mor: Callable, j: Callable, M: Callable,
                 name="⊸"):
        self.v, self.c = v, c
        self._hobj, self._hmor, self._j, self._M = hom_obj, hom_mor, j, M
        self.name = name
        self._cache = {}
        self.hom = FunctorData(
            ProductCategory(OppositeCategory(c), c), v.base,
            lambda p: self.obj(p[0], p[1]),
            lambda pm: self.mor(pm.first.arrow, pm.second), name=name)

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            r = self._cache[key] = fn()
            return r

    def obj(self, x, y):
        return self._memo(("o", x, y), lambda: self._hobj(x, y))

    def mor(self, u, w):
        """``u⊸w : X⊸Y -> X'⊸Y'`` for ``u : X' -> X`` and ``w : Y -> Y'``."""
        return self._memo(("m", u, w), lambda: self._hmor(u, w))

    def post(self, x, w):
        return self.mor(self.c.identity(x), w)

    def pre(self, u, y):
        return self.mor(u, self.c.identity(y))

    def j(self, x):
        return self._memo(("j", x), lambda: self._j(x))

    def M(self, x, y, z):
        return self._memo(("M", x, y, z), lambda: self._M(x, y, z))

    def jhat(self, f):
        """``ĵ f = (X⊸f) ∘ j_X``."""
        return self.v.base.compose(self.post(f.dom, f), self.j(f.dom))

    def __repr__(self):
        return f"<Enrichment {self.name} of {self.c.name} over {self.v.name}>"


def validate_enrichment(e: Enrichment, probe=None) -> Report:
    c, v = e.c, e.v
    V = v.base
    objs = _probe(c, probe)
    I = v.unit
    rep = Report(f"enrichment {e.name}", objs)

    def jhat():
        for x, y in itertools.product(objs, repeat=2):
            fs = c.hom(x, y)
            image = [e.jhat(f) for f in fs]
            pts = V.hom(I, e.obj(x, y))
            yield len(set(image)) == len(fs) and set(image) == set(pts), \
                {"X": x, "Y": y, "C(X,Y)": len(fs), "V(I,X⊸Y)": len(pts)}

    def functoriality():
        for x, y in itertools.product(objs, repeat=2):
            yield e.mor(c.identity(x), c.identity(y)) == V.identity(e.obj(x, y)), {"X": x, "Y": y}
        for x2, x, y, y2 in itertools.product(objs, repeat=4):
            for u in c.hom(x2, x):
                for w in c.hom(y, y2):
                    lhs = e.mor(u, w)
                    rhs = V.compose(e.pre(u, y2), e.post(x, w))
                    yield lhs == rhs, {"u": u, "w": w}

    def nat_j():
        for x, y in itertools.product(objs, repeat=2):
            for f in c.hom(x, y):
                yield (V.compose(e.post(x, f), e.j(x)) == V.compose(e.pre(f, y), e.j(y)),
                       {"f": f})

    def nat_m():
        for x, y, z in itertools.product(objs, repeat=3):
            m = e.M(x, y, z)
            yz, xy = e.obj(y, z), e.obj(x, y)
            for x2 in objs:
                for u in c.hom(x2, x):
                    lhs = V.compose(e.M(x2, y, z), v.mor(V.identity(yz), e.pre(u, y)))
                    yield lhs == V.compose(e.pre(u, z), m), {"in": "X", "u": u}
            for z2 in objs:
                for w in c.hom(z, z2):
                    lhs = V.compose(e.M(x, y, z2), v.mor(e.post(y, w), V.identity(xy)))
                    yield lhs == V.compose(e.post(x, w), m), {"in": "Z", "w": w}
            for y2 in objs:
                for t in c.hom(y, y2):
                    lhs = V.compose(m, v.mor(e.pre(t, z), V.identity(xy)))
                    rhs = V.compose(e.M(x, y2, z), v.mor(V.identity(e.obj(y2, z)), e.post(x, t)))
                    yield lhs == rhs, {"in": "Y", "t": t}

    def unit_left():
        for x, y in itertools.product(objs, repeat=2):
            xy = e.obj(x, y)
            lhs = V.compose(e.M(x, y, y), v.mor(e.j(y), V.identity(xy)))
            yield lhs == v.lam(xy), {"X": x, "Y": y}

    def unit_right():
        for x, y in itertools.product(objs, repeat=2):
            xy = e.obj(x, y)
            lhs = comp(V, e.M(x, x, y), v.mor(V.identity(xy), e.j(x)), v.rho(xy))
            yield lhs == V.identity(xy), {"X": x, "Y": y}

    def assoc():
        for w, x, y, z in itertools.product(objs, repeat=4):
            yz, xy, wx = e.obj(y, z), e.obj(x, y), e.obj(w, x)
            lhs = V.compose(e.M(w, x, z), v.mor(e.M(x, y, z), V.identity(wx)))
            rhs = comp(V, e.M(w, y, z), v.mor(V.identity(yz), e.M(w, x, y)), v.assoc(yz, xy, wx))
            yield lhs == rhs, {"W": w, "X": x, "Y": y, "Z": z}

    rep.run("ĵ bijection", jhat())
    rep.run("functoriality of ⊸", functoriality())
    rep.run("naturality j", nat_j())
    rep.run("naturality M", nat_m())
    rep.run("unit coherence (left)", unit_left())
    rep.run("unit coherence (right)", unit_right())
    rep.run("associativity", assoc())
    return rep


def enrichment_from_action(act: LeftAction, adj: Adjunction, vadj: Adjunction, ctx_probe=None,
                           probe=None, check=True) -> Enrichment:
    """``j`` transposes ``λ``; ``M`` transposes ``ev ∘ (Y⊸Z ▷ ev) ∘ α``.

    ``vadj`` is the internal hom of V (right adjoint to ``−⊗G``), used to
    form the comparison ``(G▷X)⊸Y -> G⊸(X⊸Y)`` which must be invertible.
    """
    c, v = act.c, act.v
    V = v.base

    def j(x):
        return adj.fwd(v.unit, x, x, act.lam(x))

    def M(x, y, z):
        yz, xy = adj.right_obj(y, z), adj.right_obj(x, y)
        a = v.obj(yz, xy)
        body = comp(c, adj.ev(y, z), act.on(yz, adj.ev(x, y)), act.assoc(yz, xy, x))
        return adj.fwd(a, x, z, body)

    e = Enrichment(v, c, adj.right_obj, adj.right_mor, j, M, name=adj.name)
    e.adjunction, e.vadjunction = adj, vadj
    if check:
        ctxs = tuple(act.ctx_probe if ctx_probe is None else ctx_probe)
        objs = _probe(c, probe)
        for g, x, y in itertools.product(ctxs, objs, objs):
            cmp_ = comparison(e, act, vadj, g, x, y)
            if V.inverse(cmp_) is None:
                raise ComparisonNotIso(f"comparison (Γ▷X)⊸Y -> Γ⊸(X⊸Y) not invertible at "
                                       f"Γ={g}, X={x}, Y={y}: {cmp_}")
    return e


def comparison(e: Enrichment, act: LeftAction, vadj: Adjunction, g, x, y):
    """``(G▷X)⊸Y -> G⊸(X⊸Y)``: transpose of ``M ∘ (id ⊗ coev)``."""
    v, V = e.v, e.v.base
    gx = act.obj(g, x)
    b = e.obj(gx, y)
    coev = e.adjunction.coev(g, x)
    body = V.compose(e.M(x, gx, y), v.mor(V.identity(b), coev))
    return vadj.fwd(b, g, e.obj(x, y), body)


# ---------------------------------------------------------------------------
# enriched functors and naturals


class EnrichedFunctorData:
    def __init__(self, e_c: Enrichment, e_d: Enrichment, obj: Callable, fmap: Callable, name="F"):
        self.e_c, self.e_d = e_c, e_d
        self._obj, self._fmap = obj, fmap
        self.name = name
        self._cache = {}

    def obj(self, x):
        key = ("o", x)
        if key not in self._cache:
            self._cache[key] = self._obj(x)
        return self._cache[key]

    def fmap(self, x, y):
        key = ("f", x, y)
        if key not in self._cache:
            self._cache[key] = self._fmap(x, y)
        return self._cache[key]

    def __repr__(self):
        return f"<EnrichedFunctor {self.name}>"


def validate_enriched_functor(f: EnrichedFunctorData, probe=None) -> Report:
    ec, ed = f.e_c, f.e_d
    V, v = ec.v.base, ec.v
    objs = _probe(ec.c, probe)
    rep = Report(f"enriched functor {f.name}", objs)

    def units():
        for x in objs:
            yield V.compose(f.fmap(x, x), ec.j(x)) == ed.j(f.obj(x)), {"X": x}

    def composition():
        for x, y, z in itertools.product(objs, repeat=3):
            lhs = V.compose(f.fmap(x, z), ec.M(x, y, z))
            rhs = V.compose(ed.M(f.obj(x), f.obj(y), f.obj(z)), v.mor(f.fmap(y, z), f.fmap(x, y)))
            yield lhs == rhs, {"X": x, "Y": y, "Z": z}

    rep.run("j preservation", units())
    rep.run("M preservation", composition())
    return rep


def check_enriched_naturality(t: NaturalData, f: EnrichedFunctorData, g: EnrichedFunctorData,
                              probe=None) -> Verdict:
    """``(FX⊸τ_Y) ∘ fmap^F = (τ_X⊸GY) ∘ fmap^G``."""
    ed = f.e_d
    V = ed.v.base
    objs = _probe(f.e_c.c, probe)
    for x, y in itertools.product(objs, repeat=2):
        lhs = V.compose(ed.post(f.obj(x), t(y)), f.fmap(x, y))
        rhs = V.compose(ed.pre(t(x), g.obj(y)), g.fmap(x, y))
        if lhs != rhs:
            return Verdict(False, {"X": x, "Y": y, "left": lhs, "right": rhs}, objs)
    return Verdict(True, None, objs)


def strong_to_enriched(cf: CtxFunctorData, e_c: Enrichment, e_d: Enrichment) -> EnrichedFunctorData:
    """``fmap_{X,Y}`` transposes ``F⟨X⊸Y⟩ ev_{X,Y}``."""
    ac, ad = e_c.adjunction, e_d.adjunction

    def fmap(x, y):
        r = ac.right_obj(x, y)
        return ad.fwd(r, cf.obj(x), cf.obj(y), cf.ctx(r, x, ac.ev(x, y)))

    return EnrichedFunctorData(e_c, e_d, cf.obj, fmap, name=cf.name)


def enriched_to_strong(ef: EnrichedFunctorData, act_c: LeftAction, act_d: LeftAction) -> CtxFunctorData:
    """``F⟨G⟩f`` transposes ``fmap ∘ f♯`` back."""
    ac, ad = ef.e_c.adjunction, ef.e_d.adjunction
    V = act_c.v.base

    def ctx(g, x, f):
        y = f.cod
        h = V.compose(ef.fmap(x, y), ac.fwd(g, x, y, f))
        return ad.bwd(g, ef.obj(x), ef.obj(y), h)

    return CtxFunctorData(act_c, act_d, ef.obj, ctx, name=ef.name)


def convert_functor(direction: str, data, e_c: Enrichment, e_d: Optional[Enrichment] = None,
                    act_c: Optional[LeftAction] = None, act_d: Optional[LeftAction] = None):
    e_d = e_d or e_c
    if direction == "toEnriched":
        return strong_to_enriched(data, e_c, e_d)
    if direction == "toStrong":
        return enriched_to_strong(data, act_c or e_c.adjunction.act, act_d or e_d.adjunction.act)
    raise ValueError(f"direction must be toEnriched or toStrong, not {direction!r}")


def same_enriched_functor(f1: EnrichedFunctorData, f2: EnrichedFunctorData, probe=None):
    objs = _probe(f1.e_c.c, probe)
    for x, y in itertools.product(objs, repeat=2):
        if f1.obj(x) != f2.obj(x) or f1.fmap(x, y) != f2.fmap(x, y):
            return (x, y)
    return None


# ---------------------------------------------------------------------------
# enriched monads


class EnrichedMonadData:
    def __init__(self, e: Enrichment, obj: Callable, unit: Callable, bind: Callable, name="T"):
        self.e = e
        self._obj, self._unit, self._bind = obj, unit, bind
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

    def bind(self, x, y):
        """``bind_{X,Y} : X⊸TY -> TX⊸TY``."""
        key = ("b", x, y)
        if key not in self._cache:
            self._cache[key] = self._bind(x, y)
        return self._cache[key]

    def __repr__(self):
        return f"<EnrichedMonad {self.name}>"


def validate_enriched_monad(m: EnrichedMonadData, probe=None) -> Report:
    """The three bind diagrams."""
    e = m.e
    V, v = e.v.base, e.v
    objs = _probe(e.c, probe)
    rep = Report(f"enriched monad {m.name}", objs)

    def unit_right():
        for x, y in itertools.product(objs, repeat=2):
            lhs = V.compose(e.pre(m.eta(x), m.T(y)), m.bind(x, y))
            yield lhs == V.identity(e.obj(x, m.T(y))), {"X": x, "Y": y}

    def unit_left():
        for x in objs:
            lhs = comp(V, m.bind(x, x), e.post(x, m.eta(x)), e.j(x))
            yield lhs == e.j(m.T(x)), {"X": x}

    def assoc():
        for x, y, z in itertools.product(objs, repeat=3):
            tx, ty, tz = m.T(x), m.T(y), m.T(z)
            lhs = comp(V, m.bind(x, z), e.M(x, ty, tz),
                       v.mor(m.bind(y, z), V.identity(e.obj(x, ty))))
            rhs = V.compose(e.M(tx, ty, tz), v.mor(m.bind(y, z), m.bind(x, y)))
            yield lhs == rhs, {"X": x, "Y": y, "Z": z}

    rep.run("unit (η⊸T)", unit_right())
    rep.run("unit (j)", unit_left())
    rep.run("associativity", assoc())
    return rep


def check_enriched_monad_morphism(t: NaturalData, s: EnrichedMonadData, d: EnrichedMonadData,
                                  probe=None) -> Verdict:
    e = s.e
    V, C = e.v.base, e.c
    objs = _probe(C, probe)
    for x in objs:
        if C.compose(t(x), s.eta(x)) != d.eta(x):
            return Verdict(False, {"X": x, "law": "τ∘η = η"}, objs)
    for x, y in itertools.product(objs, repeat=2):
        lhs = V.compose(e.post(s.T(x), t(y)), s.bind(x, y))
        rhs = comp(V, e.pre(t(x), d.T(y)), d.bind(x, y), e.post(x, t(y)))
        if lhs != rhs:
            return Verdict(False, {"X": x, "Y": y, "law": "bind square"}, objs)
    return Verdict(True, None, objs)


def strong_monad_to_enriched(m: KleisliStrongMonad, e: Enrichment) -> EnrichedMonadData:
    """``bind_{X,Y}`` transposes ``(ev_{X,TY})*``."""
    adj = e.adjunction

    def bind(x, y):
        ty = m.T(y)
        r = adj.right_obj(x, ty)
        return adj.fwd(r, m.T(x), ty, m.extend(r, x, adj.ev(x, ty)))

    return EnrichedMonadData(e, m.T, m.eta, bind, name=m.name)


def enriched_monad_to_strong(em: EnrichedMonadData, act: Optional[LeftAction] = None) -> KleisliStrongMonad:
    """``f* = (bind ∘ f♯)♭``."""
    adj = em.e.adjunction
    act = act or adj.act
    V = act.v.base

    def extend(g, x, f):
        y = _recover(em, f.cod)
        h = V.compose(em.bind(x, y), adj.fwd(g, x, f.cod, f))
        return adj.bwd(g, em.T(x), f.cod, h)

    return KleisliStrongMonad(act, em.T, em.eta, extend, name=em.name)


def _recover(em, ty):
    """Find ``Y`` with ``TY = ty`` among objects seen so far and the probe."""
    if ty not in em._back:
        for x in em.e.c.probe:
            em.T(x)
    try:
        return em._back[ty]
    except KeyError:
        raise KeyError(f"{ty} is not T of any object seen so far") from None


def convert_monad(direction: str, data, e: Enrichment, act: Optional[LeftAction] = None):
    if direction == "toEnriched":
        return strong_monad_to_enriched(data, e)
    if direction == "toStrong":
        return enriched_monad_to_strong(data, act)
    raise ValueError(f"direction must be toEnriched or toStrong, not {direction!r}")


def same_enriched_monad(m1: EnrichedMonadData, m2: EnrichedMonadData, probe=None):
    objs = _probe(m1.e.c, probe)
    for x in objs:
        if m1.T(x) != m2.T(x) or m1.eta(x) != m2.eta(x):
            return (x,)
    for x, y in itertools.product(objs, repeat=2):
        if m1.bind(x, y) != m2.bind(x, y):
            return (x, y)
    return None


def bundle_enrichment(bundle, check=True) -> Enrichment:
    """Enrichment of a closed corpus bundle, derived from its self-action."""
    adj = bundle_adjunction(bundle, "hom")
    return enrichment_from_action(bundle.action, adj, adj, check=check)


__all__ = [
    "Adjunction", "validate_adjunction", "function_object", "concrete_adjunction",
    "heyting_adjunction", "bundle_adjunction", "Enrichment", "validate_enrichment",
    "enrichment_from_action", "comparison", "EnrichedFunctorData", "validate_enriched_functor",
    "check_enriched_naturality", "strong_to_enriched", "enriched_to_strong", "convert_functor",
    "same_enriched_functor", "EnrichedMonadData", "validate_enriched_monad",
    "check_enriched_monad_morphism", "strong_monad_to_enriched", "enriched_monad_to_strong",
    "convert_monad", "same_enriched_monad", "bundle_enrichment",
]
