"""Named example instances and a random category generator.

Every bundle carries a category, a left action on it (a self-action unless
stated otherwise) and whatever functors, strengths, strong monads and WFC
structures are registered for it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Optional

from .action import LeftAction, WFCStructure, fc_inverse, self_action
from .core import (
    Category,
    ConcreteCategory,
    FunctorData,
    Monoid,
    Morphism,
    Obj,
    TableCategory,
    ThinCategory,
    identity_functor,
)
from .errors import GenerationFailed, ParamOutOfBounds, UnknownInstance
from .monoidal import (
    ConcreteCoproducts,
    ConcreteProducts,
    Coproducts,
    Products,
    ThinCoproducts,
    ThinProducts,
    cartesian_monoidal,
    cocartesian_monoidal,
    smash_monoidal,
)
from .strength import CtxFunctorData, Strength, identity_strength
from .strongmonad import (
    KleisliCategory,
    KleisliCoproducts,
    KleisliStrongMonad,
    MonadData,
    underlying_monad,
)


@dataclass(frozen=True)
class InstanceSpec:
    name: str
    params: tuple = ()

    @classmethod
    def of(cls, name, **params):
        return cls(name, tuple(sorted(params.items())))


@dataclass
class Bundle:
    name: str
    params: dict
    category: Category
    action: LeftAction
    products: Optional[Products] = None
    coproducts: Optional[Coproducts] = None
    monads: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    strengths: dict = field(default_factory=dict)
    ctxfunctors: dict = field(default_factory=dict)
    wfcs: dict = field(default_factory=dict)
    types: dict = field(default_factory=dict)
    ops: dict = field(default_factory=dict)
    op_types: dict = field(default_factory=dict)
    closed: Optional[str] = None   # kind of internal hom available, if any
    extras: dict = field(default_factory=dict)

    @property
    def monoidal(self):
        return self.action.v

    @property
    def probe(self):
        return self.category.probe

    @property
    def ctx_probe(self):
        return self.action.ctx_probe

    def __repr__(self):
        return f"<Bundle {self.name} {self.params}>"


# ---------------------------------------------------------------------------
# parameter handling


def _sizes(params, key, default, top, count=4):
    val = params.pop(key, default)
    try:
        sizes = [int(v) for v in val]
    except (TypeError, ValueError):
        raise ParamOutOfBounds(f"{key} must be a list of sizes, got {val!r}") from None
    if not sizes or len(sizes) > count or any(s < 0 or s > top for s in sizes):
        raise ParamOutOfBounds(f"{key}={sizes}: need 1..{count} sizes in 0..{top}")
    if len(set(sizes)) != len(sizes):
        raise ParamOutOfBounds(f"{key}={sizes}: sizes must be distinct")
    return sizes


def _int(params, key, default, lo, hi):
    val = params.pop(key, default)
    try:
        val = int(val)
    except (TypeError, ValueError):
        raise ParamOutOfBounds(f"{key} must be an integer, got {val!r}") from None
    if not lo <= val <= hi:
        raise ParamOutOfBounds(f"{key}={val} outside {lo}..{hi}")
    return val


def _no_leftovers(name, params):
    if params:
        raise ParamOutOfBounds(f"{name}: unknown parameters {sorted(params)}")


# ---------------------------------------------------------------------------
# generic functors, strengths and monads over chosen products


def square_functor(c: Category, P: Products) -> FunctorData:
    def mor(f):
        _, p1, p2 = P.product(f.dom, f.dom)
        return P.pair(c.compose(f, p1), c.compose(f, p2))

    return FunctorData(c, c, lambda x: P.product(x, x)[0], mor, name="square")


def square_strength(act: LeftAction, P: Products) -> Strength:
    """``(γ, (x, x')) ↦ ((γ, x), (γ, x'))`` for a cartesian self-action of sets."""
    F = square_functor(act.c, P)

    def comp_(g, x):
        dom = act.obj(g, F.obj(x))
        cod = F.obj(act.obj(g, x))
        return Morphism.from_fn(dom, cod, lambda e: ((e[0], e[1][0]), (e[0], e[1][1])))

    return Strength(F, act, act, comp_, name="square")


def const_functor(c: Category, e, name=None) -> FunctorData:
    return FunctorData(c, c, lambda x: e, lambda f: c.identity(e), name=name or f"Δ_{e}")


def const_ctxfunctor(act: LeftAction, P: Products, e, name=None) -> CtxFunctorData:
    """``Δ_E`` with ``F⟨Γ⟩f`` the projection ``Γ×E -> E``."""
    cf = CtxFunctorData(act, act, lambda x: e, lambda g, x, f: P.product(g, e)[2],
                        name=name or f"Δ_{e}")
    cf.constant = True
    return cf


def const_strength(act: LeftAction, P: Products, e) -> Strength:
    return Strength(const_functor(act.c, e), act, act, lambda g, x: P.product(g, e)[2],
                    name=f"Δ_{e}")


def identity_monad(act: LeftAction, name="identity") -> KleisliStrongMonad:
    c = act.c
    return KleisliStrongMonad(act, lambda x: x, c.identity, lambda g, x, f: f, name=name)


def terminal_monad(act: LeftAction, P: Products, name="terminal") -> KleisliStrongMonad:
    one = P.terminal()
    return KleisliStrongMonad(act, lambda x: one, P.bang,
                              lambda g, x, f: P.bang(act.obj(g, one)), name=name)


def exception_monad(act: LeftAction, S: Coproducts, e, name="exc") -> KleisliStrongMonad:
    """``TX = X + E`` over a cartesian self-action of finite sets."""

    def T(x):
        return S.coproduct(x, e)[0]

    def extend(g, x, f):
        dom = act.obj(g, T(x))

        def go(el):
            gam, t = el
            tag, v = t
            return f((gam, v)) if tag == "inl" else t
        return Morphism.from_fn(dom, f.cod, go)

    return KleisliStrongMonad(act, T, lambda x: S.coproduct(x, e)[1], extend, name=name)


def writer_monad(act: LeftAction, P: Products, m_obj: Obj, monoid: Monoid, twisted=False,
                 name=None) -> KleisliStrongMonad:
    """``TX = X × M``; ``twisted`` selects the extension that reads ``γ*m``."""
    unit = monoid.unit

    def T(x):
        return P.product(x, m_obj)[0]

    def eta(x):
        return Morphism.from_fn(x, T(x), lambda v: (v, unit))

    def extend(g, x, f):
        dom = act.obj(g, T(x))

        def go(el):
            gam, (v, m) = el
            ctx = g.act(gam, m) if twisted else gam
            y, m2 = f((ctx, v))
            return (y, monoid.mul(m, m2))
        return Morphism.from_fn(dom, f.cod, go)

    return KleisliStrongMonad(act, T, eta, extend, name=name or ("strprime" if twisted else "str"))


def _ordinary(m: KleisliStrongMonad) -> MonadData:
    return underlying_monad(m)


# ---------------------------------------------------------------------------
# builders


def _finset_cat(sizes, name="finset"):
    fs = ConcreteCategory(name)
    fs.probe = tuple(fs.make(range(n), label=str(n)) for n in sizes)
    return fs


def _exc_object(n):
    return Obj(tuple(f"e{i}" for i in range(n)), label=f"E{n}")


def _build_finset(params):
    sizes = _sizes(params, "probe", [0, 1, 2], 3)
    n_e = _int(params, "E", 2, 0, 3)
    _no_leftovers("finset", params)
    fs = _finset_cat(sizes)
    P, S = ConcreteProducts(fs), ConcreteCoproducts(fs)
    act = self_action(cartesian_monoidal(fs, P))
    e = _exc_object(n_e)
    one = P.terminal()
    b = Bundle("finset", {"probe": sizes, "E": n_e}, fs, act, P, S, closed="cartesian")
    b.monads = {
        "identity": identity_monad(act),
        "terminal": terminal_monad(act, P),
        "exc": exception_monad(act, S, e),
        "maybe": exception_monad(act, S, one, name="maybe"),
    }
    b.functors = {
        "identity": identity_functor(fs),
        "square": square_functor(fs, P),
        "constE": const_functor(fs, e, name="constE"),
    }
    b.strengths = {
        "identity": identity_strength(act),
        "square": square_strength(act, P),
        "constE": const_strength(act, P, e),
    }
    b.ctxfunctors = {
        "constE": const_ctxfunctor(act, P, e, name="constE"),
        "const1": const_ctxfunctor(act, P, one, name="const1"),
        "const0": const_ctxfunctor(act, P, S.initial(), name="const0"),
    }
    b.wfcs = {"fc": fc_inverse(act, name="Φ_fc")}
    two = fs.make(range(2), label="2")
    b.types = {"Unit": one, "Bool": two, "E": e}
    b.extras["E"] = e
    b.ops = {
        "raise": Morphism(one, b.monads["exc"].T(one), [("inr", "e0")]) if n_e else None,
        "flip": Morphism.from_fn(two, b.monads["exc"].T(two), lambda v: ("inl", 1 - v)),
    }
    b.op_types = {"raise": ("Unit", "Unit"), "flip": ("Bool", "Bool")}
    b.ops = {k: v for k, v in b.ops.items() if v is not None}
    return b


def _pointed_cat():
    pt = ConcreteCategory("finsetpt", pointed=True)
    pt.probe = (Obj(("*",), point="*", label="P1"), Obj(("*", "a"), point="*", label="P2"))
    return pt


def _point_wfc(act: LeftAction) -> WFCStructure:
    """``Φ_Γ ζ = ζ(⋆) ∘ λ ∘ (! ▷ X)``: evaluate the family at the base point."""

    def phi(zeta):
        g = zeta.ctx
        base = next(p for p in zeta.points if p.table[0] == g.point)
        h = zeta(base)
        return Morphism.from_fn(act.obj(g, zeta.dom), zeta.cod, lambda e: h(e[1]))

    return WFCStructure(act, phi, name="Φ_pt")


def _star_strength(act: LeftAction) -> Strength:
    """Identity functor on pointed sets: ``(γ, x) ↦ (⋆, x)``."""
    F = identity_functor(act.c)

    def comp_(g, x):
        d = act.obj(g, x)
        return Morphism.from_fn(d, d, lambda e: (g.point, e[1]))

    return Strength(F, act, act, comp_, name="star")


def _build_finsetpt(params, structure=None):
    structure = structure or params.pop("structure", "cartesian")
    if structure not in ("cartesian", "smash"):
        raise ParamOutOfBounds(f"structure={structure!r}: expected cartesian or smash")
    _no_leftovers("finsetpt", params)
    pt = _pointed_cat()
    P = ConcreteProducts(pt)
    m = cartesian_monoidal(pt, P) if structure == "cartesian" else smash_monoidal(pt)
    act = self_action(m)
    b = Bundle(f"finsetpt-{structure}", {"structure": structure}, pt, act, P,
               closed="smash" if structure == "smash" else None)
    b.monads = {"identity": identity_monad(act), "terminal": terminal_monad(act, P)}
    b.functors = {"identity": identity_functor(pt)}
    b.strengths = {"identity": identity_strength(act)}
    if structure == "cartesian":
        b.strengths["star"] = _star_strength(act)
        b.wfcs = {"pt": _point_wfc(act)}
        b.types = {"Unit": P.terminal(), "P2": pt.probe[1]}
    return b


def _build_finpos(params):
    _no_leftovers("finpos", params)
    fp = ConcreteCategory("finpos", ordered=True)
    chain = fp.make((0, 1), order={(0, 0), (1, 1), (0, 1)}, label="chain2")
    disc = fp.make((0, 1), label="discrete2")
    fp.probe = (chain, disc)
    P = ConcreteProducts(fp)
    act = self_action(cartesian_monoidal(fp, P))
    b = Bundle("finpos", {}, fp, act, P, closed="cartesian")

    def discretize(x):
        return fp.make(x.carrier, label=f"disc({x})" if x.label else None)

    b.functors = {
        "identity": identity_functor(fp),
        "disc": FunctorData(fp, fp, discretize,
                            lambda f: Morphism(discretize(f.dom), discretize(f.cod), f.table),
                            name="disc"),
        "square": square_functor(fp, P),
    }
    b.strengths = {"identity": identity_strength(act), "square": square_strength(act, P)}
    b.monads = {"identity": identity_monad(act), "terminal": terminal_monad(act, P)}
    return b


def z2_monoid(n=2):
    return Monoid(range(n), 0, lambda a, b: (a + b) % n, name=f"Z{n}")


def _build_z2act(params, name="z2act"):
    n = _int(params, "modulus", 2, 2, 3)
    _no_leftovers(name, params)
    M = z2_monoid(n)
    cat = ConcreteCategory(f"Act(Z{n})", monoid=M)
    one = cat.make(((),), label="1")
    reg = cat.make(range(n), action={(x, k): (x + k) % n for x in range(n) for k in M.elements},
                   label=f"Z{n}")
    cat.probe = (one, reg)
    P = ConcreteProducts(cat)
    act = self_action(cartesian_monoidal(cat, P))
    m_obj = cat.make(M.elements, label="M")
    b = Bundle(name, {"modulus": n}, cat, act, P, closed="cartesian")
    b.monads = {
        "identity": identity_monad(act),
        "terminal": terminal_monad(act, P),
        "str": writer_monad(act, P, m_obj, M, twisted=False),
        "strprime": writer_monad(act, P, m_obj, M, twisted=True),
    }
    b.functors = {"identity": identity_functor(cat), "square": square_functor(cat, P)}
    b.strengths = {"identity": identity_strength(act), "square": square_strength(act, P)}
    b.types = {"Unit": one, f"Z{n}": reg, "M": m_obj}
    w = b.monads["str"]
    b.ops = {"emit": Morphism(one, w.T(one), [((), 1)])}
    b.op_types = {"emit": ("Unit", "Unit")}
    b.extras.update(monoid=M, M=m_obj, regular=reg)
    return b


def _klexc_wfc(act: LeftAction, kl: KleisliCategory, e_elem) -> WFCStructure:
    """``Φ^e_Γ ζ = [inr ∘ e ∘ !, ζ(!)]``: raise ``e`` on every context element."""

    def phi(zeta):
        g, x, y = zeta.ctx, zeta.dom, zeta.cod
        h = zeta.values[0]
        dom = act.obj(g, x)
        ty = kl.monad.T(y)

        def go(el):
            tag, v = el
            return ("inr", e_elem) if tag == "inl" else h.under(v)
        from .strongmonad import KlMor
        return KlMor(dom, y, Morphism.from_fn(dom, ty, go))

    return WFCStructure(act, phi, name=f"Φ^{e_elem}")


def _build_klexc(params):
    n_e = _int(params, "E", 2, 1, 3)
    sizes = _sizes(params, "probe", [0, 1, 2], 2)
    _no_leftovers("klexc", params)
    fs = _finset_cat(sizes)
    P, S = ConcreteProducts(fs), ConcreteCoproducts(fs)
    base_act = self_action(cartesian_monoidal(fs, P))
    e = _exc_object(n_e)
    exc = exception_monad(base_act, S, e)
    kl = KleisliCategory(underlying_monad(exc), probe=fs.probe, name=f"Kl(-+E{n_e})")
    KS = KleisliCoproducts(kl, S)
    act = self_action(cocartesian_monoidal(kl, KS))
    b = Bundle("klexc", {"E": n_e, "probe": sizes}, kl, act, None, KS)
    b.functors = {"identity": identity_functor(kl)}
    b.strengths = {"identity": identity_strength(act)}
    b.monads = {"identity": identity_monad(act)}
    b.wfcs = {f"e{i}": _klexc_wfc(act, kl, f"e{i}") for i in range(n_e)}
    b.extras.update(E=e, base=fs, exc=exc)
    return b


def _build_bool2(params):
    _no_leftovers("bool2", params)
    b2 = ThinCategory("bool2", (0, 1), lambda a, c: a <= c)
    P, S = ThinProducts(b2, min, 1), ThinCoproducts(b2, max, 0)
    act = self_action(cartesian_monoidal(b2, P))
    b = Bundle("bool2", {}, b2, act, P, S, closed="heyting")
    b.monads = {"identity": identity_monad(act), "terminal": terminal_monad(act, P)}
    b.functors = {"identity": identity_functor(b2), "square": square_functor(b2, P)}
    b.strengths = {"identity": identity_strength(act)}
    return b


REGISTRY = {
    "finset": _build_finset,
    "finsetpt": _build_finsetpt,
    "finsetpt-cartesian": lambda p: _build_finsetpt(p, "cartesian"),
    "finsetpt-smash": lambda p: _build_finsetpt(p, "smash"),
    "finpos": _build_finpos,
    "z2act": _build_z2act,
    "writer-z2": lambda p: _build_z2act(p, name="writer-z2"),
    "klexc": _build_klexc,
    "bool2": _build_bool2,
}


def build(spec, **params) -> Bundle:
    """Build a named instance; ``spec`` is a name or an :class:`InstanceSpec`."""
    if isinstance(spec, InstanceSpec):
        params = dict(spec.params, **params)
        spec = spec.name
    try:
        builder = REGISTRY[spec]
    except KeyError:
        raise UnknownInstance(f"unknown instance {spec!r}; known: {', '.join(sorted(REGISTRY))}") from None
    return builder(dict(params))


def instance_names():
    return sorted(REGISTRY)


# ---------------------------------------------------------------------------
# random table-presented categories


def random_category(seed, max_objects=3, max_hom=3, retries=50) -> TableCategory:
    """A random finite category: paths in a random acyclic graph, quotiented by
    the congruence generated by a few random identifications."""
    rng = random.Random(seed)
    for _ in range(retries):
        n = rng.randint(1, max_objects)
        objs = [f"O{i}" for i in range(n)]
        gens = []
        for i in range(n):
            for j in range(i + 1, n):
                for _ in range(rng.randint(0, 2)):
                    gens.append((f"g{len(gens)}", objs[i], objs[j]))
        cat = _quotient_paths(rng, objs, gens)
        if cat is not None and all(len(cat.hom(x, y)) <= max_hom for x in objs for y in objs):
            cat.name = f"random{seed}"
            return cat
    raise GenerationFailed(f"no category within bounds after {retries} attempts (seed {seed})")


def _quotient_paths(rng, objs, gens):
    dom = {g: d for g, d, _ in gens}
    cod = {g: c for g, _, c in gens}
    # paths are tuples of generator names, applied right to left
    paths = []
    ident = {o: ("id", o) for o in objs}
    frontier = [(g,) for g, _, _ in gens]
    while frontier:
        paths.extend(frontier)
        nxt = []
        for p in frontier:
            for g, d, _ in gens:
                if d == cod[p[0]]:
                    nxt.append((g,) + p)
        frontier = nxt

    def p_dom(p):
        return ident_dom.get(p) or dom[p[-1]]

    def p_cod(p):
        return ident_dom.get(p) or cod[p[0]]

    ident_dom = {ident[o]: o for o in objs}
    allp = list(ident.values()) + paths
    parent = {p: p for p in allp}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    def union(p, q):
        a, b = find(p), find(q)
        if a != b:
            parent[max(a, b, key=_pkey)] = min(a, b, key=_pkey)
            return True
        return False

    def compose(q, p):
        if p in ident_dom:
            return q
        if q in ident_dom:
            return p
        return q + p

    # random identifications of parallel non-identity paths
    parallel = [(p, q) for i, p in enumerate(paths) for q in paths[i + 1:]
                if p_dom(p) == p_dom(q) and p_cod(p) == p_cod(q)]
    for p, q in parallel:
        if rng.random() < 0.5:
            union(p, q)
    # close under composition with generators on both sides
    changed = True
    while changed:
        changed = False
        seen = {}
        for p in allp:
            for g, d, c in gens:
                if d == p_cod(p):
                    key = ("post", g, find(p))
                    r = compose((g,), p)
                    if key in seen:
                        changed |= union(seen[key], r)
                    else:
                        seen[key] = r
                if c == p_dom(p):
                    key = ("pre", g, find(p))
                    r = compose(p, (g,))
                    if key in seen:
                        changed |= union(seen[key], r)
                    else:
                        seen[key] = r
    reps = sorted({find(p) for p in allp}, key=_pkey)
    name = {r: (f"id_{r[1]}" if r in ident_dom else ".".join(r)) for r in reps}
    morphisms = {name[r]: (p_dom(r), p_cod(r)) for r in reps}
    composition = {}
    for q in reps:
        for p in reps:
            if p_cod(p) == p_dom(q):
                composition[name[q], name[p]] = name[find(compose(q, p))]
    return TableCategory("random", objs, morphisms, {o: name[ident[o]] for o in objs}, composition)


def _pkey(p):
    if p and p[0] == "id":
        return (0, p)
    return (len(p), p)


__all__ = [
    "InstanceSpec", "Bundle", "build", "instance_names", "REGISTRY", "random_category",
    "square_functor", "square_strength", "const_functor", "const_ctxfunctor", "const_strength",
    "identity_monad", "terminal_monad", "exception_monad", "writer_monad", "z2_monoid",
]
