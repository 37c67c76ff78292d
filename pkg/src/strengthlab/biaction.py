"""Right actions, biactions, bistrengths and commutative monads."""

from __future__ import annotations

import itertools
from typing import Callable, Optional

from .action import LeftAction, self_action
from .core import Morphism, Report, Verdict, _probe, comp
from .errors import LaxLawFailed, NoBraiding
from .monoidal import MonoidalStructure
from .strength import Strength
from .strongmonad import KleisliStrongMonad, MonadData, monad_to_strength, underlying_monad


class RightAction:
    """``X◁G`` with ``rho(X) : X -> X◁I`` and ``assoc(X, G, G2) : (X◁G)◁G2 -> X◁(G⊗G2)``."""

    def __init__(self, v: MonoidalStructure, c, act_obj: Callable, act_mor: Callable,
                 rho: Callable, assoc: Callable, name="◁", ctx_probe=None):
        self.v, self.c = v, c
        self.name = name
        self._aobj, self._amor, self._rho, self._assoc = act_obj, act_mor, rho, assoc
        self._cache = {}
        base = list(v.base.probe if ctx_probe is None else ctx_probe)
        if v.unit not in base:
            base.append(v.unit)
        self.ctx_probe = tuple(base)

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            r = self._cache[key] = fn()
            return r

    def obj(self, x, g):
        return self._memo(("o", x, g), lambda: self._aobj(x, g))

    def mor(self, f, s):
        return self._memo(("m", f, s), lambda: self._amor(f, s))

    def on(self, f, g):
        """``f ◁ G``."""
        return self.mor(f, self.v.base.identity(g))

    def ctx(self, x, s):
        """``X ◁ s``."""
        return self.mor(self.c.identity(x), s)

    def rho(self, x):
        return self._memo(("r", x), lambda: self._rho(x))

    def assoc(self, x, g, g2):
        return self._memo(("a", x, g, g2), lambda: self._assoc(x, g, g2))

    def __repr__(self):
        return f"<RightAction {self.name}: {self.v.base.name} on {self.c.name}>"


def right_self_action(m: MonoidalStructure, name=None) -> RightAction:
    """``◁ = ⊗`` with ``ρ`` and ``α`` of the monoidal structure."""
    return RightAction(m, m.base, m.obj, m.mor, m.rho, m.assoc, name=name or m.name)


def validate_right_action(r: RightAction, ctx_probe=None, probe=None) -> Report:
    v, c = r.v, r.c
    V = v.base
    ctxs = tuple(r.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    I = v.unit
    rep = Report(f"right action {r.name}", ctxs + objs)

    def functoriality():
        for x, g in itertools.product(objs, ctxs):
            yield r.mor(c.identity(x), V.identity(g)) == c.identity(r.obj(x, g)), {"X": x, "Γ": g}

    def naturality():
        for x, y in itertools.product(objs, repeat=2):
            for f in c.hom(x, y):
                yield c.compose(r.rho(y), f) == c.compose(r.on(f, I), r.rho(x)), {"map": "ρ", "f": f}
                for g, g2 in itertools.product(ctxs, repeat=2):
                    lhs = c.compose(r.assoc(y, g, g2), r.on(r.on(f, g), g2))
                    rhs = c.compose(r.on(f, v.obj(g, g2)), r.assoc(x, g, g2))
                    yield lhs == rhs, {"map": "α", "f": f, "Γ": g, "Γ'": g2}

    def invertible():
        for x in objs:
            yield c.inverse(r.rho(x)) is not None, {"map": "ρ", "X": x}
            for g, g2 in itertools.product(ctxs, repeat=2):
                yield c.inverse(r.assoc(x, g, g2)) is not None, {"map": "α", "X": x, "Γ": g, "Γ'": g2}

    def units():
        for x, g in itertools.product(objs, ctxs):
            xg = r.obj(x, g)
            top = c.compose(r.assoc(x, g, I), r.rho(xg))
            yield top == r.ctx(x, v.rho(g)), {"triangle": "upper", "X": x, "Γ": g}
            bottom = comp(c, r.ctx(x, v.lam(g)), r.assoc(x, I, g), r.on(r.rho(x), g))
            yield bottom == c.identity(xg), {"triangle": "lower", "X": x, "Γ": g}

    def pentagon():
        for x in objs:
            for g3, g2, g1 in itertools.product(ctxs, repeat=3):
                lhs = c.compose(r.assoc(x, g3, v.obj(g2, g1)), r.assoc(r.obj(x, g3), g2, g1))
                rhs = comp(c, r.ctx(x, v.assoc(g3, g2, g1)), r.assoc(x, v.obj(g3, g2), g1),
                           r.on(r.assoc(x, g3, g2), g1))
                yield lhs == rhs, {"X": x, "Γ3": g3, "Γ2": g2, "Γ1": g1}

    rep.run("functoriality", functoriality())
    rep.run("naturality", naturality())
    if rep.run("invertibility", invertible()):
        rep.run("unit coherence", units())
        rep.run("associativity", pentagon())
    return rep


class Biaction:
    """A left and a right action with ``mid(G, X, D) : (G▷X)◁D -> G▷(X◁D)``."""

    def __init__(self, left: LeftAction, right: RightAction, mid: Callable, name=None):
        self.left, self.right = left, right
        self._mid = mid
        self.v, self.c = left.v, left.c
        self.name = name or f"({left.name},{right.name})"
        self._cache = {}

    def mid(self, g, x, d):
        key = (g, x, d)
        if key not in self._cache:
            self._cache[key] = self._mid(g, x, d)
        return self._cache[key]

    def __repr__(self):
        return f"<Biaction {self.name}>"


def self_biaction(m: MonoidalStructure) -> Biaction:
    """``▷ = ◁ = ⊗`` with the associator in the middle."""
    return Biaction(self_action(m), right_self_action(m), m.assoc, name=f"({m.name},{m.name})")


def validate_biaction(b: Biaction, ctx_probe=None, probe=None) -> Report:
    L, R, v, c = b.left, b.right, b.v, b.c
    V = v.base
    ctxs = tuple(L.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(c, probe)
    I = v.unit
    rep = Report(f"biaction {b.name}", ctxs + objs)

    def naturality():
        for g, d in itertools.product(ctxs, repeat=2):
            for x, y in itertools.product(objs, repeat=2):
                for f in c.hom(x, y):
                    lhs = c.compose(b.mid(g, y, d), R.on(L.on(g, f), d))
                    rhs = c.compose(L.on(g, R.on(f, d)), b.mid(g, x, d))
                    yield lhs == rhs, {"f": f, "Γ": g, "Δ": d}
        for x in objs:
            for g, g2, d in itertools.product(ctxs, repeat=3):
                for s in V.hom(g, g2):
                    lhs = c.compose(b.mid(g2, x, d), R.on(L.ctx(s, x), d))
                    rhs = c.compose(L.ctx(s, R.obj(x, d)), b.mid(g, x, d))
                    yield lhs == rhs, {"σ in Γ": s, "X": x, "Δ": d}
                for s in V.hom(d, g2):
                    lhs = c.compose(b.mid(g, x, g2), R.ctx(L.obj(g, x), s))
                    rhs = c.compose(L.on(g, R.ctx(x, s)), b.mid(g, x, d))
                    yield lhs == rhs, {"σ in Δ": s, "X": x, "Γ": g}

    def invertible():
        for g, x, d in itertools.product(ctxs, objs, ctxs):
            yield c.inverse(b.mid(g, x, d)) is not None, {"Γ": g, "X": x, "Δ": d}

    def unit_left():
        for x, d in itertools.product(objs, ctxs):
            lhs = c.compose(L.lam(R.obj(x, d)), b.mid(I, x, d))
            yield lhs == R.on(L.lam(x), d), {"X": x, "Δ": d}

    def unit_right():
        for g, x in itertools.product(ctxs, objs):
            lhs = c.compose(b.mid(g, x, I), R.rho(L.obj(g, x)))
            yield lhs == L.on(g, R.rho(x)), {"Γ": g, "X": x}

    def assoc_left():
        for g, g2, d in itertools.product(ctxs, repeat=3):
            for x in objs:
                lhs = c.compose(L.assoc(g, g2, R.obj(x, d)), b.mid(v.obj(g, g2), x, d))
                rhs = comp(c, L.on(g, b.mid(g2, x, d)), b.mid(g, L.obj(g2, x), d),
                           R.on(L.assoc(g, g2, x), d))
                yield lhs == rhs, {"Γ": g, "Γ'": g2, "X": x, "Δ": d}

    def assoc_right():
        for g, d, d2 in itertools.product(ctxs, repeat=3):
            for x in objs:
                lhs = comp(c, L.on(g, R.assoc(x, d, d2)), b.mid(g, R.obj(x, d), d2),
                           R.on(b.mid(g, x, d), d2))
                rhs = c.compose(b.mid(g, x, v.obj(d, d2)), R.assoc(L.obj(g, x), d, d2))
                yield lhs == rhs, {"Γ": g, "X": x, "Δ": d, "Δ'": d2}

    rep.run("naturality", naturality())
    if rep.run("invertibility", invertible()):
        rep.run("unit (λ)", unit_left())
        rep.run("unit (ρ)", unit_right())
        rep.run("associativity (left)", assoc_left())
        rep.run("associativity (right)", assoc_right())
    return rep


class Bistrength:
    """A left strength paired with ``right(X, D) : FX◁D -> F(X◁D)``."""

    def __init__(self, left: Strength, right: Callable, ba_c: Biaction, ba_d: Optional[Biaction] = None,
                 name=None):
        self.left = left
        self.functor = left.functor
        self._right = right
        self.ba_c = ba_c
        self.ba_d = ba_d or ba_c
        self.name = name or f"({left.name},strᴿ)"
        self._cache = {}

    def right(self, x, d):
        key = (x, d)
        if key not in self._cache:
            self._cache[key] = self._right(x, d)
        return self._cache[key]

    def __repr__(self):
        return f"<Bistrength {self.name} for {self.functor.name}>"


def validate_right_strength(b: Bistrength, ctx_probe=None, probe=None) -> Report:
    F = b.functor
    Rc, Rd = b.ba_c.right, b.ba_d.right
    C, D, V, v = Rc.c, Rd.c, Rc.v.base, Rc.v
    ctxs = tuple(Rc.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(C, probe)
    I = v.unit
    rep = Report(f"right strength of {b.name}", ctxs + objs)

    def typing():
        for x, d in itertools.product(objs, ctxs):
            t = b.right(x, d)
            yield t.dom == Rd.obj(F.obj(x), d) and t.cod == F.obj(Rc.obj(x, d)), {"at": (x, d)}

    def naturality():
        for d in ctxs:
            for x, y in itertools.product(objs, repeat=2):
                for u in C.hom(x, y):
                    lhs = D.compose(F.mor(Rc.on(u, d)), b.right(x, d))
                    rhs = D.compose(b.right(y, d), Rd.on(F.mor(u), d))
                    yield lhs == rhs, {"u": u, "Δ": d}
        for x in objs:
            for d, d2 in itertools.product(ctxs, repeat=2):
                for s in V.hom(d, d2):
                    lhs = D.compose(F.mor(Rc.ctx(x, s)), b.right(x, d))
                    rhs = D.compose(b.right(x, d2), Rd.ctx(F.obj(x), s))
                    yield lhs == rhs, {"σ": s, "X": x}

    def unit():
        for x in objs:
            yield D.compose(b.right(x, I), Rd.rho(F.obj(x))) == F.mor(Rc.rho(x)), {"X": x}

    def assoc():
        for x in objs:
            for d, d2 in itertools.product(ctxs, repeat=2):
                lhs = comp(D, F.mor(Rc.assoc(x, d, d2)), b.right(Rc.obj(x, d), d2),
                           Rd.on(b.right(x, d), d2))
                rhs = D.compose(b.right(x, v.obj(d, d2)), Rd.assoc(F.obj(x), d, d2))
                yield lhs == rhs, {"X": x, "Δ": d, "Δ'": d2}

    if rep.run("typing", typing()):
        rep.run("naturality", naturality())
        rep.run("unit", unit())
        rep.run("associativity", assoc())
    return rep


def validate_bistrength(b: Bistrength, ctx_probe=None, probe=None, left=False) -> Report:
    """Right-strength laws plus the compatibility hexagon.  With ``left`` the
    left strength is validated here too (otherwise it is a precondition)."""
    from .strength import validate_strength

    F, s = b.functor, b.left
    Lc, Rc, Ld, Rd = b.ba_c.left, b.ba_c.right, b.ba_d.left, b.ba_d.right
    C, D = Lc.c, Ld.c
    ctxs = tuple(Lc.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(C, probe)
    rep = Report(f"bistrength {b.name}", ctxs + objs)
    if left:
        rep.extend(validate_strength(s, ctx_probe, probe), prefix="left ")
    rep.extend(validate_right_strength(b, ctx_probe, probe), prefix="right ")

    def hexagon():
        for g, x, d in itertools.product(ctxs, objs, ctxs):
            lhs = comp(D, F.mor(b.ba_c.mid(g, x, d)), b.right(Lc.obj(g, x), d), Rd.on(s(g, x), d))
            rhs = comp(D, s(g, Rc.obj(x, d)), Ld.on(g, b.right(x, d)), b.ba_d.mid(g, F.obj(x), d))
            yield lhs == rhs, {"Γ": g, "X": x, "Δ": d}

    if rep.passed:
        rep.run("hexagon", hexagon())
    return rep


def bistrength_from_symmetry(s: Strength, m: MonoidalStructure, ba: Optional[Biaction] = None) -> Bistrength:
    """``strᴿ_{X,D} = F c_{D,X} ∘ str_{D,X} ∘ c_{FX,D}``."""
    if not m.has_braiding:
        raise NoBraiding(f"{m.name} has no braiding to mirror {s.name}")
    F = s.functor
    V = m.base

    def right(x, d):
        return comp(V, F.mor(m.braiding(d, x)), s(d, x), m.braiding(F.obj(x), d))

    return Bistrength(s, right, ba or self_biaction(m), name=f"sym({s.name})")


def check_bistrong_natural(t, b1: Bistrength, b2: Bistrength, ctx_probe=None, probe=None) -> Verdict:
    """Left strong and right strong: ``t`` commutes with both strength families."""
    s1, s2 = b1.left, b2.left
    Lc, Rc, Ld, Rd = b1.ba_c.left, b1.ba_c.right, b1.ba_d.left, b1.ba_d.right
    D = Ld.c
    ctxs = tuple(Lc.ctx_probe if ctx_probe is None else ctx_probe)
    objs = _probe(Lc.c, probe)
    for g, x in itertools.product(ctxs, objs):
        if D.compose(t(Lc.obj(g, x)), s1(g, x)) != D.compose(s2(g, x), Ld.on(g, t(x))):
            return Verdict(False, {"side": "left", "Γ": g, "X": x}, ctxs + objs)
        if D.compose(t(Rc.obj(x, g)), b1.right(x, g)) != D.compose(b2.right(x, g), Rd.on(t(x), g)):
            return Verdict(False, {"side": "right", "X": x, "Δ": g}, ctxs + objs)
    return Verdict(True, None, ctxs + objs)


# ---------------------------------------------------------------------------
# commutative monads


def _monad_parts(m):
    if isinstance(m, KleisliStrongMonad):
        return underlying_monad(m)
    return m


def kock_composites(monad: MonadData, b: Bistrength, x, y):
    """``(μ ∘ T strᴿ ∘ str, μ ∘ T str ∘ strᴿ) : TX⊗TY -> T(X⊗Y)``."""
    s = b.left
    V = monad.base
    R = b.ba_c.right
    L = b.ba_c.left
    xy = L.obj(x, y)
    tx, ty = monad.T(x), monad.T(y)
    first = comp(V, monad.mu(xy), monad.functor.mor(b.right(x, y)), s(tx, y))
    second = comp(V, monad.mu(R.obj(x, y)), monad.functor.mor(s(x, y)), b.right(x, ty))
    return first, second


def is_commutative_monad(m, b: Bistrength, ctx_probe=None, probe=None, check_units=True) -> Verdict:
    """η, μ bistrong and the Kock square commutes for all ``(X, Y)`` on the window.

    The witness of a failure names ``(X, Y)`` and the first element where the
    two composites differ."""
    monad = _monad_parts(m)
    L, R = b.ba_c.left, b.ba_c.right
    V = monad.base
    objs = tuple(L.ctx_probe if probe is None else probe)
    window = objs
    if check_units:
        s = b.left
        T = monad.T
        for x, d in itertools.product(objs, repeat=2):
            if V.compose(s(d, x), L.on(d, monad.eta(x))) != monad.eta(L.obj(d, x)):
                return Verdict(False, {"law": "η left strong", "Γ": d, "X": x}, window)
            if V.compose(b.right(x, d), R.on(monad.eta(x), d)) != monad.eta(R.obj(x, d)):
                return Verdict(False, {"law": "η right strong", "X": x, "Δ": d}, window)
            lhs = comp(V, monad.mu(L.obj(d, x)), monad.functor.mor(s(d, x)), s(d, T(x)))
            if lhs != V.compose(s(d, x), L.on(d, monad.mu(x))):
                return Verdict(False, {"law": "μ left strong", "Γ": d, "X": x}, window)
            lhs = comp(V, monad.mu(R.obj(x, d)), monad.functor.mor(b.right(x, d)), b.right(T(x), d))
            if lhs != V.compose(b.right(x, d), R.on(monad.mu(x), d)):
                return Verdict(False, {"law": "μ right strong", "X": x, "Δ": d}, window)
    for x, y in itertools.product(objs, repeat=2):
        first, second = kock_composites(monad, b, x, y)
        if first != second:
            where = next(e for e in first.dom.carrier if first(e) != second(e))
            return Verdict(False, {"law": "Kock square", "X": x, "Y": y, "input": where,
                                   "str then strᴿ": first(where), "strᴿ then str": second(where)},
                           window)
    return Verdict(True, None, window)


class LaxMonoidalData:
    def __init__(self, monad: MonadData, m: MonoidalStructure, phi: Callable, phi0):
        self.monad, self.m = monad, m
        self._phi = phi
        self.phi0 = phi0
        self._cache = {}

    def phi(self, x, y):
        if (x, y) not in self._cache:
            self._cache[x, y] = self._phi(x, y)
        return self._cache[x, y]


def lax_monoidal_from_commutative(m, b: Bistrength, probe=None, strict=True):
    """Laxity ``φ_{X,Y}`` = the Kock composite and ``φ₀ = η_I``, with the lax
    monoidal functor laws and compatibility with ``η``, ``μ`` checked.

    Returns ``(data, report)``.  With ``strict`` a failing law raises
    ``LaxLawFailed``, since the laws are a theorem for commutative monads."""
    monad = _monad_parts(m)
    mon = b.ba_c.left.v
    V = mon.base
    T, Tm = monad.T, monad.functor.mor
    I = mon.unit
    data = LaxMonoidalData(monad, mon, lambda x, y: kock_composites(monad, b, x, y)[0], monad.eta(I))
    phi = data.phi
    objs = tuple(b.ba_c.left.ctx_probe if probe is None else probe)
    rep = Report("lax monoidal", objs)

    def naturality():
        for x, x2, y, y2 in itertools.product(objs, repeat=4):
            for f in V.hom(x, x2):
                for g in V.hom(y, y2):
                    lhs = V.compose(Tm(mon.mor(f, g)), phi(x, y))
                    rhs = V.compose(phi(x2, y2), mon.mor(Tm(f), Tm(g)))
                    yield lhs == rhs, {"f": f, "g": g}

    def assoc():
        for x, y, z in itertools.product(objs, repeat=3):
            lhs = comp(V, Tm(mon.assoc(x, y, z)), phi(mon.obj(x, y), z),
                       mon.mor(phi(x, y), V.identity(T(z))))
            rhs = comp(V, phi(x, mon.obj(y, z)), mon.mor(V.identity(T(x)), phi(y, z)),
                       mon.assoc(T(x), T(y), T(z)))
            yield lhs == rhs, {"X": x, "Y": y, "Z": z}

    def units():
        for x in objs:
            tx = T(x)
            lhs = comp(V, Tm(mon.lam(x)), phi(I, x), mon.mor(data.phi0, V.identity(tx)))
            yield lhs == mon.lam(tx), {"side": "left", "X": x}
            lhs = comp(V, phi(x, I), mon.mor(V.identity(tx), data.phi0), mon.rho(tx))
            yield lhs == Tm(mon.rho(x)), {"side": "right", "X": x}

    def monad_compat():
        for x, y in itertools.product(objs, repeat=2):
            xy = mon.obj(x, y)
            yield (V.compose(phi(x, y), mon.mor(monad.eta(x), monad.eta(y))) == monad.eta(xy),
                   {"law": "η", "X": x, "Y": y})
            lhs = V.compose(phi(x, y), mon.mor(monad.mu(x), monad.mu(y)))
            rhs = comp(V, monad.mu(xy), Tm(phi(x, y)), phi(T(x), T(y)))
            yield lhs == rhs, {"law": "μ", "X": x, "Y": y}

    rep.run("naturality", naturality())
    rep.run("associativity", assoc())
    rep.run("unit", units())
    rep.run("monad compatibility", monad_compat())
    if strict and not rep.passed:
        raise LaxLawFailed(rep.summary())
    return data, rep


# ---------------------------------------------------------------------------
# the writer bistrength


def writer_bistrength(m: KleisliStrongMonad, ba: Biaction, monoid) -> Bistrength:
    """``str(γ, (x, m)) = ((γ, x), m)`` and ``strᴿ((x, m), δ) = ((x, δ*m), m)``."""
    s = monad_to_strength(m)
    act = ba.left

    def right(x, d):
        dom = ba.right.obj(m.T(x), d)
        cod = m.T(act.obj(x, d))
        return Morphism.from_fn(dom, cod, lambda e: ((e[0][0], d.act(e[1], e[0][1])), e[0][1]))

    return Bistrength(s, right, ba, name="writer")


__all__ = [
    "RightAction", "right_self_action", "validate_right_action", "Biaction", "self_biaction",
    "validate_biaction", "Bistrength", "validate_right_strength", "validate_bistrength",
    "bistrength_from_symmetry", "check_bistrong_natural", "kock_composites",
    "is_commutative_monad", "LaxMonoidalData", "lax_monoidal_from_commutative",
    "writer_bistrength",
]
