"""Monoidal structures, product/coproduct choosers and coherence checking."""

from __future__ import annotations

import itertools
from typing import Callable, Optional

from .core import (
    Category,
    ConcreteCategory,
    FunctorData,
    Morphism,
    Obj,
    ProductCategory,
    Report,
    ThinCategory,
    ThinMor,
    _probe,
    comp,
)
from .errors import NotACoproduct, NotAProduct, UnitOutsideProbeClosure


class MonoidalStructure:
    """Tensor, unit and structural isomorphisms on a category.

    ``lam(G) : I⊗G -> G``, ``rho(G) : G -> G⊗I`` (note the direction) and
    ``assoc(A, B, C) : (A⊗B)⊗C -> A⊗(B⊗C)``.
    """

    def __init__(self, base: Category, unit, tensor_obj: Callable, tensor_mor: Callable,
                 lam: Callable, rho: Callable, assoc: Callable, braiding: Optional[Callable] = None,
                 name: str = "⊗"):
        self.base = base
        self.unit = unit
        self.name = name
        self._tobj = tensor_obj
        self._tmor = tensor_mor
        self._lam, self._rho, self._assoc, self._braid = lam, rho, assoc, braiding
        self._cache = {}
        self.tensor = FunctorData(
            ProductCategory(base, base), base,
            lambda p: self.obj(*p),
            lambda pm: self.mor(pm.first, pm.second),
            name=name,
        )

    @property
    def has_braiding(self):
        return self._braid is not None

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            v = self._cache[key] = fn()
            return v

    def obj(self, a, b):
        return self._memo(("o", a, b), lambda: self._tobj(a, b))

    def mor(self, f, g):
        return self._memo(("m", f, g), lambda: self._tmor(f, g))

    def lam(self, g):
        return self._memo(("l", g), lambda: self._lam(g))

    def rho(self, g):
        return self._memo(("r", g), lambda: self._rho(g))

    def assoc(self, a, b, c):
        return self._memo(("a", a, b, c), lambda: self._assoc(a, b, c))

    def braiding(self, a, b):
        if self._braid is None:
            return None
        return self._memo(("c", a, b), lambda: self._braid(a, b))

    def _inv(self, tag, f):
        def go():
            g = self.base.inverse(f)
            if g is None:
                raise ValueError(f"{tag} component {f} is not invertible")
            return g
        return self._memo(("inv", f), go)

    def lam_inv(self, g):
        return self._inv("λ", self.lam(g))

    def rho_inv(self, g):
        return self._inv("ρ", self.rho(g))

    def assoc_inv(self, a, b, c):
        return self._inv("α", self.assoc(a, b, c))

    def __repr__(self):
        return f"<Monoidal {self.name} on {self.base.name}>"


def tensor_id_left(m: MonoidalStructure, a, f):
    """``a ⊗ f``."""
    return m.mor(m.base.identity(a), f)


def tensor_id_right(m: MonoidalStructure, f, b):
    """``f ⊗ b``."""
    return m.mor(f, m.base.identity(b))


def _homs(c: Category, objs):
    return [f for x in objs for y in objs for f in c.hom(x, y)]


def validate_monoidal(m: MonoidalStructure, probe=None) -> Report:
    c = m.base
    objs = _probe(c, probe)
    if not c.contains(m.unit):
        raise UnitOutsideProbeClosure(f"unit {m.unit} does not belong to {c.name}")
    rep = Report(f"monoidal {m.name} on {c.name}", objs)
    mors = _homs(c, objs)
    I = m.unit

    def functoriality():
        for a in objs:
            for b in objs:
                yield m.mor(c.identity(a), c.identity(b)) == c.identity(m.obj(a, b)), {"a": a, "b": b}
        for x, y, z in itertools.product(objs, repeat=3):
            for f in c.hom(x, y):
                for g in c.hom(y, z):
                    gf = c.compose(g, f)
                    for x2, y2, z2 in itertools.product(objs, repeat=3):
                        for f2 in c.hom(x2, y2):
                            for g2 in c.hom(y2, z2):
                                lhs = m.mor(gf, c.compose(g2, f2))
                                rhs = c.compose(m.mor(g, g2), m.mor(f, f2))
                                yield lhs == rhs, {"g": g, "f": f, "g'": g2, "f'": f2}

    def invertible():
        for a in objs:
            yield c.inverse(m.lam(a)) is not None, {"λ at": a}
            yield c.inverse(m.rho(a)) is not None, {"ρ at": a}
        for a, b, d in itertools.product(objs, repeat=3):
            yield c.inverse(m.assoc(a, b, d)) is not None, {"α at": (a, b, d)}

    def typing():
        for a in objs:
            l, r = m.lam(a), m.rho(a)
            yield (l.dom == m.obj(I, a) and l.cod == a), {"λ at": a}
            yield (r.dom == a and r.cod == m.obj(a, I)), {"ρ at": a}
        for a, b, d in itertools.product(objs, repeat=3):
            t = m.assoc(a, b, d)
            ok = t.dom == m.obj(m.obj(a, b), d) and t.cod == m.obj(a, m.obj(b, d))
            yield ok, {"α at": (a, b, d)}

    def nat_unitors():
        iid = c.identity(I)
        for f in mors:
            yield (c.compose(f, m.lam(f.dom)) == c.compose(m.lam(f.cod), m.mor(iid, f))), {"λ square at": f}
            yield (c.compose(m.rho(f.cod), f) == c.compose(m.mor(f, iid), m.rho(f.dom))), {"ρ square at": f}

    def nat_assoc():
        for f in mors:
            for g in mors:
                fg = m.mor(f, g)
                for h in mors:
                    lhs = c.compose(m.assoc(f.cod, g.cod, h.cod), m.mor(fg, h))
                    rhs = c.compose(m.mor(f, m.mor(g, h)), m.assoc(f.dom, g.dom, h.dom))
                    yield lhs == rhs, {"f": f, "g": g, "h": h}

    def triangle():
        for a, b in itertools.product(objs, repeat=2):
            path = comp(c, tensor_id_left(m, a, m.lam(b)), m.assoc(a, I, b), tensor_id_right(m, m.rho(a), b))
            yield path == c.identity(m.obj(a, b)), {"objects": (a, b)}

    def unit_instance():
        # derived instance: λ_{A⊗B} ∘ α_{I,A,B} = λ_A ⊗ B
        for a, b in itertools.product(objs, repeat=2):
            lhs = c.compose(m.lam(m.obj(a, b)), m.assoc(I, a, b))
            yield lhs == tensor_id_right(m, m.lam(a), b), {"objects": (a, b)}

    def pentagon():
        for a, b, d, e in itertools.product(objs, repeat=4):
            lhs = c.compose(m.assoc(a, b, m.obj(d, e)), m.assoc(m.obj(a, b), d, e))
            rhs = comp(c, tensor_id_left(m, a, m.assoc(b, d, e)),
                       m.assoc(a, m.obj(b, d), e),
                       tensor_id_right(m, m.assoc(a, b, d), e))
            yield lhs == rhs, {"objects": (a, b, d, e)}

    def braid():
        for a, b in itertools.product(objs, repeat=2):
            cab, cba = m.braiding(a, b), m.braiding(b, a)
            ok = cab.dom == m.obj(a, b) and cab.cod == m.obj(b, a)
            yield ok and c.compose(cba, cab) == c.identity(m.obj(a, b)), {"objects": (a, b)}
        for f in mors:
            for g in mors:
                lhs = c.compose(m.braiding(f.cod, g.cod), m.mor(f, g))
                rhs = c.compose(m.mor(g, f), m.braiding(f.dom, g.dom))
                yield lhs == rhs, {"f": f, "g": g}

    if not rep.run("typing", typing()):
        return rep
    rep.run("tensor functoriality", functoriality())
    rep.run("invertibility", invertible())
    rep.run("naturality λ ρ", nat_unitors())
    rep.run("naturality α", nat_assoc())
    rep.run("triangle", triangle())
    rep.run("unit coherence instance", unit_instance())
    rep.run("pentagon", pentagon())
    if m.has_braiding:
        rep.run("braiding", braid())
    return rep


# ---------------------------------------------------------------------------
# choosers


class Products:
    """Chosen binary products and a terminal object."""

    def product(self, a, b):
        raise NotImplementedError

    def pair(self, f, g):
        raise NotImplementedError

    def terminal(self):
        raise NotImplementedError

    def bang(self, x):
        raise NotImplementedError


class Coproducts:
    """Chosen binary coproducts and an initial object."""

    def coproduct(self, a, b):
        raise NotImplementedError

    def copair(self, f, g):
        raise NotImplementedError

    def initial(self):
        raise NotImplementedError

    def absurd(self, x):
        raise NotImplementedError


UNIT = ()


class ConcreteProducts(Products):
    """Cartesian products of decorated sets; decorations act componentwise."""

    def __init__(self, cat: ConcreteCategory):
        self.cat = cat
        self._cache = {}

    def product(self, a, b):
        hit = self._cache.get((a, b))
        if hit is not None:
            return hit
        carrier = tuple((x, y) for x in a for y in b)
        point = (a.point, b.point) if self.cat.pointed else None
        order = None
        if self.cat.ordered:
            order = {((x1, y1), (x2, y2)) for x1, x2 in a.order for y1, y2 in b.order}
        action = None
        if self.cat.monoid is not None:
            action = {((x, y), k): (a.act(x, k), b.act(y, k))
                      for x, y in carrier for k in self.cat.monoid.elements}
        p = Obj(carrier, point=point, order=order, action=action, monoid=self.cat.monoid,
                label=f"({a}×{b})" if (a.label or b.label) else None)
        p1 = Morphism(p, a, (x for x, _ in carrier))
        p2 = Morphism(p, b, (y for _, y in carrier))
        out = self._cache[a, b] = (p, p1, p2)
        return out

    def pair(self, f, g):
        p, _, _ = self.product(f.cod, g.cod)
        return Morphism(f.dom, p, zip(f.table, g.table))

    def terminal(self):
        return self.cat.make((UNIT,), point=UNIT, label="1")

    def bang(self, x):
        return Morphism(x, self.terminal(), (UNIT for _ in x.carrier))


class ConcreteCoproducts(Coproducts):
    """Tagged disjoint unions of plain finite sets."""

    def __init__(self, cat: ConcreteCategory):
        if cat.pointed or cat.ordered or cat.monoid is not None:
            raise ValueError("tagged unions are only provided for undecorated sets")
        self.cat = cat

    def coproduct(self, a, b):
        s = Obj(tuple(("inl", x) for x in a) + tuple(("inr", y) for y in b),
                label=f"({a}+{b})" if (a.label or b.label) else None)
        return (s, Morphism(a, s, (("inl", x) for x in a)),
                Morphism(b, s, (("inr", y) for y in b)))

    def copair(self, f, g):
        s, _, _ = self.coproduct(f.dom, g.dom)
        return Morphism(s, f.cod, f.table + g.table)

    def initial(self):
        return Obj((), label="0")

    def absurd(self, x):
        return Morphism(self.initial(), x, ())


class ThinProducts(Products):
    """Meets in a finite lattice viewed as a thin category."""

    def __init__(self, cat: ThinCategory, meet, top):
        self.cat, self.meet, self.top = cat, meet, top

    def product(self, a, b):
        p = self.meet(a, b)
        return p, ThinMor(p, a), ThinMor(p, b)

    def pair(self, f, g):
        return ThinMor(f.dom, self.meet(f.cod, g.cod))

    def terminal(self):
        return self.top

    def bang(self, x):
        return ThinMor(x, self.top)


class ThinCoproducts(Coproducts):
    def __init__(self, cat: ThinCategory, join, bottom):
        self.cat, self.join, self.bottom = cat, join, bottom

    def coproduct(self, a, b):
        s = self.join(a, b)
        return s, ThinMor(a, s), ThinMor(b, s)

    def copair(self, f, g):
        return ThinMor(self.join(f.dom, g.dom), f.cod)

    def initial(self):
        return self.bottom

    def absurd(self, x):
        return ThinMor(self.bottom, x)


def check_products(c: Category, products: Products, probe=None) -> Report:
    """Universality of the chosen cones against every probe test object."""
    objs = _probe(c, probe)
    rep = Report(f"products on {c.name}", objs)
    one = products.terminal()

    def terminal():
        for z in objs:
            yield len(c.hom(z, one)) == 1, {"object": z}

    def cones():
        for a, b in itertools.product(objs, repeat=2):
            p, p1, p2 = products.product(a, b)
            for z in objs:
                seen = {}
                for u in c.hom(z, p):
                    key = (c.compose(p1, u), c.compose(p2, u))
                    if key in seen:
                        yield False, {"pair": (a, b), "test": z, "u": u, "u'": seen[key]}
                        return
                    seen[key] = u
                want = len(c.hom(z, a)) * len(c.hom(z, b))
                yield len(seen) == want, {"pair": (a, b), "test": z}
                for f in c.hom(z, a):
                    for g in c.hom(z, b):
                        h = products.pair(f, g)
                        yield (c.compose(p1, h) == f and c.compose(p2, h) == g), {"f": f, "g": g}

    rep.run("terminal", terminal())
    rep.run("product universality", cones())
    return rep


def check_coproducts(c: Category, coproducts: Coproducts, probe=None) -> Report:
    objs = _probe(c, probe)
    rep = Report(f"coproducts on {c.name}", objs)
    zero = coproducts.initial()

    def initial():
        for z in objs:
            yield len(c.hom(zero, z)) == 1, {"object": z}

    def cocones():
        for a, b in itertools.product(objs, repeat=2):
            s, i1, i2 = coproducts.coproduct(a, b)
            for z in objs:
                seen = {}
                for u in c.hom(s, z):
                    key = (c.compose(u, i1), c.compose(u, i2))
                    if key in seen:
                        yield False, {"pair": (a, b), "test": z, "u": u, "u'": seen[key]}
                        return
                    seen[key] = u
                want = len(c.hom(a, z)) * len(c.hom(b, z))
                yield len(seen) == want, {"pair": (a, b), "test": z}
                for f in c.hom(a, z):
                    for g in c.hom(b, z):
                        h = coproducts.copair(f, g)
                        yield (c.compose(h, i1) == f and c.compose(h, i2) == g), {"f": f, "g": g}

    rep.run("initial", initial())
    rep.run("coproduct universality", cocones())
    return rep


def cartesian_monoidal(c: Category, products: Products, check=True, name="×") -> MonoidalStructure:
    """Structure maps induced by the universal property of chosen products."""
    if check:
        rep = check_products(c, products)
        if not rep:
            raise NotAProduct(rep.summary() + f" {rep.failures()[0].counterexample}")
    P = products.product
    pair = products.pair
    one = products.terminal()

    def tmor(f, g):
        _, p1, p2 = P(f.dom, g.dom)
        return pair(c.compose(f, p1), c.compose(g, p2))

    def lam(x):
        return P(one, x)[2]

    def rho(x):
        return pair(c.identity(x), products.bang(x))

    def assoc(a, b, d):
        ab, p1, p2 = P(a, b)
        _, q1, q2 = P(ab, d)
        return pair(c.compose(p1, q1), pair(c.compose(p2, q1), q2))

    def braid(a, b):
        _, p1, p2 = P(a, b)
        return pair(p2, p1)

    return MonoidalStructure(c, one, lambda a, b: P(a, b)[0], tmor, lam, rho, assoc, braid, name=name)


def cocartesian_monoidal(c: Category, coproducts: Coproducts, check=True, name="+") -> MonoidalStructure:
    if check:
        rep = check_coproducts(c, coproducts)
        if not rep:
            raise NotACoproduct(rep.summary() + f" {rep.failures()[0].counterexample}")
    S = coproducts.coproduct
    copair = coproducts.copair
    zero = coproducts.initial()

    def tmor(f, g):
        _, i1, i2 = S(f.cod, g.cod)
        return copair(c.compose(i1, f), c.compose(i2, g))

    def lam(x):
        return copair(coproducts.absurd(x), c.identity(x))

    def rho(x):
        return S(x, zero)[1]

    def assoc(a, b, d):
        bd, j1, j2 = S(b, d)
        _, k1, k2 = S(a, bd)
        return copair(copair(k1, c.compose(k2, j1)), c.compose(k2, j2))

    def braid(a, b):
        _, i1, i2 = S(b, a)
        return copair(i2, i1)

    return MonoidalStructure(c, zero, lambda a, b: S(a, b)[0], tmor, lam, rho, assoc, braid, name=name)


# ---------------------------------------------------------------------------
# the smash product of pointed sets

STAR = "*"


def smash_monoidal(c: ConcreteCategory) -> MonoidalStructure:
    """Smash product: pairs of non-base elements plus a base point.

    The unit is the two-element pointed set ``{*, 1}``.
    """
    if not c.pointed:
        raise ValueError("smash product needs pointed sets")
    unit = Obj((STAR, 1), point=STAR, label="S0")

    def sm(a, b):
        pairs = tuple((x, y) for x in a if x != a.point for y in b if y != b.point)
        return Obj((STAR,) + pairs, point=STAR,
                   label=f"({a}∧{b})" if (a.label or b.label) else None)

    def tmor(f, g):
        d = sm(f.dom, g.dom)
        cod = sm(f.cod, g.cod)

        def go(e):
            if e == STAR:
                return STAR
            x, y = f(e[0]), g(e[1])
            if x == f.cod.point or y == g.cod.point:
                return STAR
            return (x, y)
        return Morphism.from_fn(d, cod, go)

    def lam(x):
        return Morphism.from_fn(sm(unit, x), x, lambda e: x.point if e == STAR else e[1])

    def rho(x):
        return Morphism.from_fn(x, sm(x, unit), lambda e: STAR if e == x.point else (e, 1))

    def assoc(a, b, d):
        return Morphism.from_fn(sm(sm(a, b), d), sm(a, sm(b, d)),
                                lambda e: STAR if e == STAR else (e[0][0], (e[0][1], e[1])))

    def braid(a, b):
        return Morphism.from_fn(sm(a, b), sm(b, a), lambda e: STAR if e == STAR else (e[1], e[0]))

    return MonoidalStructure(c, unit, sm, tmor, lam, rho, assoc, braid, name="∧")


def twisted_lambda(m: MonoidalStructure, auto: Callable) -> MonoidalStructure:
    """A copy of ``m`` whose λ is post-composed with ``auto(G)`` (for mutation tests)."""
    c = m.base
    return MonoidalStructure(
        c, m.unit, m.obj, m.mor,
        lambda g: c.compose(auto(g), m.lam(g)), m.rho, m.assoc,
        m._braid, name=m.name + "~",
    )


__all__ = [
    "MonoidalStructure", "validate_monoidal", "tensor_id_left", "tensor_id_right",
    "Products", "Coproducts", "ConcreteProducts", "ConcreteCoproducts", "ThinProducts",
    "ThinCoproducts", "check_products", "check_coproducts", "cartesian_monoidal",
    "cocartesian_monoidal", "smash_monoidal", "STAR", "UNIT", "twisted_lambda",
]
