"""Left actions, points, and the point-based completeness criteria.

For an action ``▷`` of (V, I, ⊗) on C, a point of a context G is a
V-morphism ``I -> G``.  Applying ``f : G▷X -> Y`` to points gives the family
``pointfun(f)(g) = f ∘ (g▷X) ∘ λ⁻¹_X``.  The action is well-pointed when this
is injective and functionally complete when it is bijective; a weak
functional completeness structure is a coherent choice of section.
"""

from __future__ import annotations

import itertools
from typing import Callable, Optional

from .core import Category, Report, Verdict, _check_cap, _probe, comp, describe
from .errors import SearchBoundExceeded, WindowError
from .monoidal import MonoidalStructure, tensor_id_left, tensor_id_right


class LeftAction:
    """``act(G, X) = G▷X`` with ``lam(X) : I▷X -> X`` and
    ``assoc(G2, G, X) : (G2⊗G)▷X -> G2▷(G▷X)``."""

    def __init__(self, v: MonoidalStructure, c: Category, act_obj: Callable, act_mor: Callable,
                 lam: Callable, assoc: Callable, name="▷", ctx_probe=None):
        self.v = v
        self.c = c
        self.name = name
        self._aobj, self._amor, self._lam, self._assoc = act_obj, act_mor, lam, assoc
        self._cache = {}
        # contexts quantified over: the V probe, plus the unit
        base = list(v.base.probe if ctx_probe is None else ctx_probe)
        if v.unit not in base:
            base.append(v.unit)
        self.ctx_probe = tuple(base)

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            val = self._cache[key] = fn()
            return val

    def obj(self, g, x):
        return self._memo(("o", g, x), lambda: self._aobj(g, x))

    def mor(self, s, f):
        """``s ▷ f`` for a V-morphism ``s`` and a C-morphism ``f``."""
        return self._memo(("m", s, f), lambda: self._amor(s, f))

    def ctx(self, s, x):
        """``s ▷ X``."""
        return self.mor(s, self.c.identity(x))

    def on(self, g, f):
        """``G ▷ f``."""
        return self.mor(self.v.base.identity(g), f)

    def lam(self, x):
        return self._memo(("l", x), lambda: self._lam(x))

    def assoc(self, g2, g, x):
        return self._memo(("a", g2, g, x), lambda: self._assoc(g2, g, x))

    def _inv(self, f):
        def go():
            r = self.c.inverse(f)
            if r is None:
                raise ValueError(f"structure map {f} is not invertible")
            return r
        return self._memo(("inv", f), go)

    def lam_inv(self, x):
        return self._inv(self.lam(x))

    def assoc_inv(self, g2, g, x):
        return self._inv(self.assoc(g2, g, x))

    # points ---------------------------------------------------------------

    def points(self, g):
        return self._memo(("pts", g), lambda: tuple(self.v.base.hom(self.v.unit, g)))

    def point_maps(self, g, x):
        """``(γ▷X) ∘ λ⁻¹_X : X -> G▷X`` for each point γ of G."""
        return self._memo(
            ("pm", g, x),
            lambda: tuple(self.c.compose(self.ctx(p, x), self.lam_inv(x)) for p in self.points(g)),
        )

    def __repr__(self):
        return f"<LeftAction {self.name}: {self.v.base.name} on {self.c.name}>"


def self_action(m: MonoidalStructure, name=None) -> LeftAction:
    return LeftAction(m, m.base, m.obj, m.mor, m.lam, m.assoc, name=name or m.name)


def validate_action(a: LeftAction, ctx_probe=None, probe=None) -> Report:
    v, c, V = a.v, a.c, a.v.base
    ctxs = tuple(a.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    rep = Report(f"action {a.name}", tuple(ctxs) + tuple(objs))
    I = v.unit
    vm = [s for x in ctxs for y in ctxs for s in V.hom(x, y)]
    cm = [f for x in objs for y in objs for f in c.hom(x, y)]

    def typing():
        for x in objs:
            l = a.lam(x)
            yield (l.dom == a.obj(I, x) and l.cod == x), {"λ at": x}
        for g2, g, x in itertools.product(ctxs, ctxs, objs):
            t = a.assoc(g2, g, x)
            ok = t.dom == a.obj(v.obj(g2, g), x) and t.cod == a.obj(g2, a.obj(g, x))
            yield ok, {"α at": (g2, g, x)}

    def functoriality():
        for g in ctxs:
            for x in objs:
                yield a.mor(V.identity(g), c.identity(x)) == c.identity(a.obj(g, x)), {"at": (g, x)}
        vpairs = [(s, t) for s in vm for t in vm if s.cod == t.dom]
        cpairs = [(f, h) for f in cm for h in cm if f.cod == h.dom]
        for s, t in vpairs:
            ts = V.compose(t, s)
            for f, h in cpairs:
                lhs = a.mor(ts, c.compose(h, f))
                rhs = c.compose(a.mor(t, h), a.mor(s, f))
                yield lhs == rhs, {"t": t, "s": s, "h": h, "f": f}

    def invertible():
        for x in objs:
            yield c.inverse(a.lam(x)) is not None, {"λ at": x}
        for g2, g, x in itertools.product(ctxs, ctxs, objs):
            yield c.inverse(a.assoc(g2, g, x)) is not None, {"α at": (g2, g, x)}

    def nat_lam():
        iid = V.identity(I)
        for f in cm:
            yield c.compose(f, a.lam(f.dom)) == c.compose(a.lam(f.cod), a.mor(iid, f)), {"f": f}

    def nat_assoc():
        for s2 in vm:
            for s in vm:
                ss = v.mor(s2, s)
                for f in cm:
                    lhs = c.compose(a.assoc(s2.cod, s.cod, f.cod), a.mor(ss, f))
                    rhs = c.compose(a.mor(s2, a.mor(s, f)), a.assoc(s2.dom, s.dom, f.dom))
                    yield lhs == rhs, {"s'": s2, "s": s, "f": f}

    def unit_left():
        # λ_{G▷X} ∘ α_{I,G,X} = λ_G ▷ X
        for g, x in itertools.product(ctxs, objs):
            lhs = c.compose(a.lam(a.obj(g, x)), a.assoc(I, g, x))
            yield lhs == a.ctx(v.lam(g), x), {"at": (g, x)}

    def unit_right():
        # (G▷λ_X) ∘ α_{G,I,X} ∘ (ρ_G▷X) = id
        for g, x in itertools.product(ctxs, objs):
            path = comp(c, a.on(g, a.lam(x)), a.assoc(g, I, x), a.ctx(v.rho(g), x))
            yield path == c.identity(a.obj(g, x)), {"at": (g, x)}

    def pentagon():
        for g1, g2, g3, x in itertools.product(ctxs, ctxs, ctxs, objs):
            lhs = c.compose(a.assoc(g1, g2, a.obj(g3, x)), a.assoc(v.obj(g1, g2), g3, x))
            rhs = comp(c, a.on(g1, a.assoc(g2, g3, x)), a.assoc(g1, v.obj(g2, g3), x),
                       a.ctx(v.assoc(g1, g2, g3), x))
            yield lhs == rhs, {"at": (g1, g2, g3, x)}

    if not rep.run("typing", typing()):
        return rep
    rep.run("action functoriality", functoriality())
    rep.run("invertibility", invertible())
    rep.run("naturality λ", nat_lam())
    rep.run("naturality α", nat_assoc())
    rep.run("unit coherence (λ)", unit_left())
    rep.run("unit coherence (ρ)", unit_right())
    rep.run("pentagon", pentagon())
    return rep


# ---------------------------------------------------------------------------
# points


class PointFamily:
    """A function ζ from the points of a context to C(X, Y)."""

    __slots__ = ("ctx", "dom", "cod", "points", "values", "_hash")

    def __init__(self, ctx, dom, cod, points, values):
        self.ctx, self.dom, self.cod = ctx, dom, cod
        self.points = tuple(points)
        self.values = tuple(values)
        if len(self.points) != len(self.values):
            raise ValueError("point family must be total")
        self._hash = hash((ctx, dom, cod, self.values))

    def __call__(self, p):
        return self.values[self.points.index(p)]

    def items(self):
        return zip(self.points, self.values)

    def __eq__(self, other):
        return (isinstance(other, PointFamily) and self._hash == other._hash
                and (self.ctx, self.dom, self.cod, self.values)
                == (other.ctx, other.dom, other.cod, other.values))

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "{" + ", ".join(f"{describe(p)} ↦ {describe(f)}" for p, f in self.items()) + "}"

    __repr__ = __str__


def family(a: LeftAction, g, x, y, fn: Callable) -> PointFamily:
    pts = a.points(g)
    return PointFamily(g, x, y, pts, [fn(p) for p in pts])


def pointfun(a: LeftAction, g, x, f) -> PointFamily:
    """Apply ``f : G▷X -> Y`` to every point of ``G``."""
    c = a.c
    return PointFamily(g, x, f.cod, a.points(g), [c.compose(f, h) for h in a.point_maps(g, x)])


def all_families(a: LeftAction, g, x, y) -> list:
    pts = a.points(g)
    hs = a.c.hom(x, y)
    _check_cap(len(hs) ** len(pts))
    return [PointFamily(g, x, y, pts, vals) for vals in itertools.product(hs, repeat=len(pts))]


def preimages(a: LeftAction, g, x, zeta: PointFamily) -> list:
    """All ``f : G▷X -> Y`` whose point family is ``zeta``."""
    return a.c.solve(a.obj(g, x), zeta.cod, list(zip(a.point_maps(g, x), zeta.values)))


def reindex(a: LeftAction, zeta: PointFamily, s) -> PointFamily:
    """``ζ·σ : δ ↦ ζ(σ∘δ)`` for ``σ : D -> G``."""
    V = a.v.base
    return family(a, s.dom, zeta.dom, zeta.cod, lambda d: zeta(V.compose(s, d)))


def _windows(a, ctx_probe, probe):
    ctxs = tuple(a.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(a.c, probe)
    return ctxs, objs


def is_well_pointed(a: LeftAction, ctx_probe=None, probe=None) -> Verdict:
    ctxs, objs = _windows(a, ctx_probe, probe)
    window = ctxs + objs
    for g in ctxs:
        for x in objs:
            for y in objs:
                seen = {}
                for f in a.c.hom(a.obj(g, x), y):
                    k = pointfun(a, g, x, f)
                    if k in seen:
                        return Verdict(False, {"context": g, "X": x, "Y": y, "f": seen[k], "g": f,
                                               "common family": k}, window)
                    seen[k] = f
    return Verdict(True, None, window)


class WFCStructure:
    """An assignment ``phi(G, X, Y, ζ) : G▷X -> Y``."""

    def __init__(self, action: LeftAction, phi: Callable, name="Φ"):
        self.action = action
        self._phi = phi
        self.name = name
        self._cache = {}

    def __call__(self, zeta: PointFamily):
        try:
            return self._cache[zeta]
        except KeyError:
            r = self._cache[zeta] = self._phi(zeta)
            return r

    def __repr__(self):
        return f"<WFC {self.name} for {self.action.name}>"


def fc_inverse(a: LeftAction, name="Φ") -> WFCStructure:
    """The section obtained by solving ``pointfun f = ζ`` (unique when FC)."""

    def phi(zeta):
        sols = preimages(a, zeta.ctx, zeta.dom, zeta)
        if len(sols) != 1:
            raise ValueError(f"{len(sols)} preimages for {zeta}")
        return sols[0]

    return WFCStructure(a, phi, name=name)


def is_functionally_complete(a: LeftAction, ctx_probe=None, probe=None) -> Verdict:
    ctxs, objs = _windows(a, ctx_probe, probe)
    window = ctxs + objs
    wp = is_well_pointed(a, ctxs, objs)
    if not wp:
        return Verdict(False, dict(wp.witness, reason="not well-pointed"), window)
    for g in ctxs:
        for x in objs:
            for y in objs:
                hit = {pointfun(a, g, x, f) for f in a.c.hom(a.obj(g, x), y)}
                for zeta in all_families(a, g, x, y):
                    if zeta not in hit:
                        return Verdict(False, {"context": g, "X": x, "Y": y, "family": zeta,
                                               "reason": "no morphism with this point family"}, window)
    return Verdict(True, None, window, detail=fc_inverse(a))


def validate_wfc(w: WFCStructure, ctx_probe=None, probe=None) -> Report:
    a = w.action
    c, V, v = a.c, a.v.base, a.v
    ctxs, objs = _windows(a, ctx_probe, probe)
    rep = Report(f"wfc {w.name}", ctxs + objs)
    fams = {(g, x, y): all_families(a, g, x, y) for g in ctxs for x in objs for y in objs}

    def section():
        for (g, x, y), zs in fams.items():
            for z in zs:
                f = w(z)
                ok = f.dom == a.obj(g, x) and f.cod == y and pointfun(a, g, x, f) == z
                yield ok, {"family": z, "Φ": f}

    def nat_ctx():
        for g in ctxs:
            for d in ctxs:
                for s in V.hom(d, g):
                    for x in objs:
                        for y in objs:
                            for z in fams[g, x, y]:
                                lhs = w(reindex(a, z, s))
                                rhs = c.compose(w(z), a.ctx(s, x))
                                yield lhs == rhs, {"σ": s, "family": z}

    def nat_x():
        for g in ctxs:
            for x2 in objs:
                for x in objs:
                    for u in c.hom(x2, x):
                        for y in objs:
                            for z in fams[g, x, y]:
                                lhs = c.compose(w(z), a.on(g, u))
                                rhs = w(family(a, g, x2, y, lambda p: c.compose(z(p), u)))
                                yield lhs == rhs, {"u": u, "family": z}

    def nat_y():
        for g in ctxs:
            for x in objs:
                for y in objs:
                    for y2 in objs:
                        for t in c.hom(y, y2):
                            for z in fams[g, x, y]:
                                lhs = c.compose(t, w(z))
                                rhs = w(family(a, g, x, y2, lambda p: c.compose(t, z(p))))
                                yield lhs == rhs, {"v": t, "family": z}

    def multiplicative():
        for g2, g, x, y in itertools.product(ctxs, ctxs, objs, objs):
            for z in all_families(a, v.obj(g2, g), x, y):
                ok, info = _mult_instance(a, w, g2, g, x, y, z)
                yield ok, info

    rep.run("section", section())
    rep.run("naturality in Γ", nat_ctx())
    rep.run("naturality in X", nat_x())
    rep.run("naturality in Y", nat_y())
    rep.run("multiplicativity", multiplicative())
    return rep


def _inner_family(a, g2, g, x, y, zeta, p2):
    """``γ ↦ ζ((γ'⊗γ) ∘ ρ_I)`` for a fixed point ``γ'``."""
    v, V = a.v, a.v.base
    r = v.rho(v.unit)
    return family(a, g, x, y, lambda p: zeta(V.compose(v.mor(p2, p), r)))


def _mult_instance(a, w, g2, g, x, y, zeta):
    c, v = a.c, a.v
    gx = a.obj(g, x)
    outer = family(a, g2, gx, y, lambda p2: w(_inner_family(a, g2, g, x, y, zeta, p2)))
    rhs = c.compose(w(outer), a.assoc(g2, g, x))
    lhs = w(zeta)
    return lhs == rhs, {"Γ'": g2, "Γ": g, "family": zeta}


# ---------------------------------------------------------------------------
# enumeration


class TableWFC(WFCStructure):
    """A WFC assignment tabulated on a window; lookups outside it fail."""

    def __init__(self, action, table, window, name="Φ"):
        self.table = dict(table)
        self.window = window

        def phi(zeta):
            try:
                return self.table[zeta]
            except KeyError:
                raise WindowError(f"no value recorded for {zeta}") from None

        super().__init__(action, phi, name=name)

    def __eq__(self, other):
        return isinstance(other, TableWFC) and self.table == other.table

    def __hash__(self):
        return hash(frozenset(self.table.items()))


def enumerate_wfc(a: LeftAction, ctx_probe=None, probe=None, limit=None, codomains="probe") -> list:
    """Every WFC assignment on the window, found by propagation search.

    Variables are ``Φ(ζ)`` for contexts in the window and objects ``X`` in
    the probe or of the form ``G▷X``; each ranges over the preimages of ζ.
    Naturality in Γ, X and Y propagates determined values; multiplicativity
    determines the values at tensor contexts, which are then checked.
    With ``codomains="second"`` the codomains ``G▷X`` are also tabulated
    for probe ``X`` (enough to derive a strength for the identity functor).
    """
    ctxs, objs = _windows(a, ctx_probe, probe)
    c, v, V = a.c, a.v, a.v.base
    cap = _search_cap()
    xs = list(objs)
    for g in ctxs:
        for x in objs:
            gx = a.obj(g, x)
            if gx not in xs:
                xs.append(gx)
    keys = [(g, x, y) for g in ctxs for x in xs for y in objs]
    if codomains == "second":
        keys += [(g, x, y) for g in ctxs for x in objs for y in xs if y not in objs]
    elif codomains != "probe":
        raise ValueError(f"codomains must be 'probe' or 'second', not {codomains!r}")
    domains = {}
    for g, x, y in keys:
        for z in all_families(a, g, x, y):
            domains[z] = preimages(a, g, x, z)
    for z, dom in domains.items():
        if not dom:
            return []
    probe_set = set(objs)
    sigmas = [s for d in ctxs for g in ctxs for s in V.hom(d, g)]

    def consequences(z, f):
        g, x, y = z.ctx, z.dom, z.cod
        for s in sigmas:
            if s.cod == g:
                yield reindex(a, z, s), c.compose(f, a.ctx(s, x))
        if x in probe_set:
            for x2 in objs:
                for u in c.hom(x2, x):
                    yield (family(a, g, x2, y, lambda p: c.compose(z(p), u)),
                           c.compose(f, a.on(g, u)))
        for y2 in objs:
            for t in c.hom(y, y2):
                yield family(a, g, x, y2, lambda p: c.compose(t, z(p))), c.compose(t, f)

    mults = [(g2, g, x, y, z) for g2, g, x, y in itertools.product(ctxs, ctxs, objs, objs)
             for z in all_families(a, v.obj(g2, g), x, y)]

    def propagate(assign, z, f):
        stack = [(z, f)]
        while stack:
            z, f = stack.pop()
            have = assign.get(z)
            if have is not None:
                if have != f:
                    return False
                continue
            if z not in domains or f not in domains[z]:
                return False
            assign[z] = f
            stack.extend(consequences(z, f))
        return True

    order = sorted(domains, key=lambda z: (len(domains[z]), z.ctx != v.unit))
    results = []
    steps = [0]

    def mult_ok(assign):
        tab = dict(assign)
        for g2, g, x, y, z in mults:
            inner = [tab[_inner_family(a, g2, g, x, y, z, p2)] for p2 in a.points(g2)]
            outer = PointFamily(g2, a.obj(g, x), y, a.points(g2), inner)
            val = c.compose(tab[outer], a.assoc(g2, g, x))
            if pointfun(a, v.obj(g2, g), x, val) != z:
                return None
            if tab.setdefault(z, val) != val:
                return None
        return tab

    def search(i, assign):
        steps[0] += 1
        if steps[0] > cap:
            raise SearchBoundExceeded(f"WFC search exceeded {cap} steps")
        while i < len(order) and order[i] in assign:
            i += 1
        if i == len(order):
            tab = mult_ok(assign)
            if tab is not None:
                results.append(TableWFC(a, tab, ctxs + objs, name=f"Φ{len(results)}"))
            return
        z = order[i]
        for f in domains[z]:
            trial = dict(assign)
            if propagate(trial, z, f):
                search(i + 1, trial)
                if limit is not None and len(results) >= limit:
                    return

    search(0, {})
    return results


def _search_cap():
    from .core import current_bounds
    return current_bounds().search_cap


__all__ = [
    "LeftAction", "self_action", "validate_action", "PointFamily", "family", "pointfun",
    "all_families", "preimages", "reindex", "is_well_pointed", "WFCStructure", "fc_inverse",
    "is_functionally_complete", "validate_wfc", "TableWFC", "enumerate_wfc",
]
