"""Computable categories, functors and natural transformations.

Every universal quantifier is evaluated over a finite *probe window*: objects
range over ``category.probe`` and morphisms over complete hom enumerations
between window objects.  Objects produced while instantiating a law (tensors,
images under functors, ...) are constructed on demand.  A failing check is a
sound refutation; a passing one certifies the window only.
"""

from __future__ import annotations

import itertools
import os
import weakref
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Optional

from .errors import (
    ComponentTypeMismatch,
    EmptyProbe,
    HomBoundExceeded,
    ObjectOutsideTarget,
    PartialComposition,
    SearchBoundExceeded,
)

# ---------------------------------------------------------------------------
# bounds


@dataclass(frozen=True)
class Bounds:
    hom_cap: int = 4096
    search_cap: int = 200_000


def current_bounds() -> Bounds:
    """Read caps, honouring ``STRENGTHLAB_BOUNDS`` (``"8192"`` or ``"hom=8192,search=10"``)."""
    raw = os.environ.get("STRENGTHLAB_BOUNDS", "").strip()
    if not raw:
        return Bounds()
    if raw.isdigit():
        return Bounds(hom_cap=int(raw))
    opts = {}
    for part in raw.split(","):
        key, _, val = part.partition("=")
        key = key.strip()
        if key in ("hom", "hom_cap"):
            opts["hom_cap"] = int(val)
        elif key in ("search", "search_cap"):
            opts["search_cap"] = int(val)
        else:
            raise ValueError(f"unknown bound {key!r} in STRENGTHLAB_BOUNDS")
    return Bounds(**opts)


# ---------------------------------------------------------------------------
# reports


def describe(x) -> str:
    if isinstance(x, (Obj, Morphism)):
        return str(x)
    if isinstance(x, tuple) and not isinstance(x, Fun):
        return "(" + ", ".join(describe(y) for y in x) + ")"
    if isinstance(x, (list, frozenset, set)):
        return "[" + ", ".join(describe(y) for y in x) + "]"
    return str(x)


@dataclass
class LawResult:
    law: str
    passed: bool
    instances: int
    counterexample: Optional[dict] = None

    def to_dict(self):
        return {
            "law": self.law,
            "passed": self.passed,
            "instances": self.instances,
            "counterexample": (
                None
                if self.counterexample is None
                else {k: describe(v) for k, v in self.counterexample.items()}
            ),
        }


class Report:
    """Pass/fail verdicts per law family, with the first counterexample of each."""

    def __init__(self, subject: str, window: Iterable = ()):
        self.subject = subject
        self.window = [describe(w) for w in window]
        self.results: list[LawResult] = []

    def run(self, law: str, cases: Iterable) -> bool:
        # cases yields (ok, witness-dict); evaluation stops at the first failure
        n = 0
        for ok, witness in cases:
            n += 1
            if not ok:
                self.results.append(LawResult(law, False, n, dict(witness)))
                return False
        self.results.append(LawResult(law, True, n))
        return True

    def add(self, law, passed, instances=1, counterexample=None):
        self.results.append(LawResult(law, bool(passed), instances, counterexample))
        return bool(passed)

    def extend(self, other: "Report", prefix: str = ""):
        for r in other.results:
            self.results.append(
                LawResult(prefix + r.law, r.passed, r.instances, r.counterexample)
            )
        for w in other.window:
            if w not in self.window:
                self.window.append(w)
        return self

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __bool__(self):
        return self.passed

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.passed]

    def failed_laws(self) -> list[str]:
        return [r.law for r in self.failures()]

    def result(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def summary(self) -> str:
        bad = self.failures()
        if not bad:
            return f"{self.subject}: pass ({len(self.results)} laws)"
        return f"{self.subject}: FAIL " + ", ".join(r.law for r in bad)

    def to_dict(self):
        return {
            "subject": self.subject,
            "window": list(self.window),
            "passed": self.passed,
            "verdicts": [r.to_dict() for r in self.results],
        }

    def __repr__(self):
        return f"<Report {self.summary()}>"


@dataclass
class Verdict:
    """A yes/no answer with an optional witness and the window it certifies."""

    value: bool
    witness: Optional[dict] = None
    window: tuple = ()
    detail: Any = None

    def __bool__(self):
        return bool(self.value)

    def to_dict(self):
        return {
            "value": self.value,
            "witness": None if self.witness is None else {k: describe(v) for k, v in self.witness.items()},
            "window": [describe(w) for w in self.window],
        }


# ---------------------------------------------------------------------------
# concrete objects and morphisms


class Monoid:
    """A finite monoid given by its multiplication table."""

    def __init__(self, elements, unit, op, name=None):
        self.elements = tuple(elements)
        self.unit = unit
        if callable(op):
            self._mul = {(a, b): op(a, b) for a in self.elements for b in self.elements}
        else:
            self._mul = dict(op)
        self.name = name or "M"
        self._key = (
            self.elements,
            unit,
            tuple(self._mul[a, b] for a in self.elements for b in self.elements),
        )
        self._hash = hash(self._key)
        self._check()

    def _check(self):
        els = set(self.elements)
        if self.unit not in els:
            raise ValueError("monoid unit outside carrier")
        for a in self.elements:
            if self.mul(self.unit, a) != a or self.mul(a, self.unit) != a:
                raise ValueError(f"unit law fails at {a!r}")
            for b in self.elements:
                if self.mul(a, b) not in els:
                    raise ValueError("multiplication not closed")
                for c in self.elements:
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise ValueError("multiplication not associative")

    def mul(self, a, b):
        return self._mul[a, b]

    @property
    def is_commutative(self):
        return all(self.mul(a, b) == self.mul(b, a) for a in self.elements for b in self.elements)

    def __eq__(self, other):
        return isinstance(other, Monoid) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monoid({self.name})"


class Fun(tuple):
    """An element of a function-set object: the image tuple of a function."""

    __slots__ = ()

    def __repr__(self):
        return "λ" + tuple.__repr__(self)

    __str__ = __repr__


class Obj:
    """A finite decorated set: optional point, partial order and monoid action.

    Instances are interned, so equal objects are identical.
    """

    __slots__ = (
        "carrier", "point", "order", "monoid", "action", "label", "index",
        "_key", "_hash", "__weakref__",
    )
    _interned: "weakref.WeakValueDictionary" = weakref.WeakValueDictionary()

    def __new__(cls, carrier, point=None, order=None, action=None, monoid=None, label=None):
        carrier = tuple(carrier)
        if order is not None:
            order = frozenset(order)
        act = None
        if monoid is not None:
            if action is None:
                raise ValueError("monoid given without an action table")
            act = tuple(action[x, m] for x in carrier for m in monoid.elements)
        key = (carrier, point, order, monoid, act)
        hit = cls._interned.get(key)
        if hit is not None:
            return hit
        self = object.__new__(cls)
        self.carrier = carrier
        self.point = point
        self.order = order
        self.monoid = monoid
        self.action = act
        self.label = label
        self.index = {x: i for i, x in enumerate(carrier)}
        self._key = key
        self._hash = hash(key)
        self._check()
        cls._interned[key] = self
        return self

    def _check(self):
        if len(self.index) != len(self.carrier):
            raise ValueError("carrier elements must be distinct")
        if self.point is not None and self.point not in self.index:
            raise ValueError("point outside carrier")
        if self.order is not None:
            o = self.order
            for a, b in o:
                if a not in self.index or b not in self.index:
                    raise ValueError("order mentions elements outside carrier")
            for a in self.carrier:
                if (a, a) not in o:
                    raise ValueError("order not reflexive")
            up = {a: set() for a in self.carrier}
            for a, b in o:
                if a != b and (b, a) in o:
                    raise ValueError("order not antisymmetric")
                up[a].add(b)
            for a, above in up.items():
                for b in above:
                    if not up[b] <= above:
                        raise ValueError("order not transitive")
        if self.monoid is not None:
            m = self.monoid
            for x in self.carrier:
                if self.act(x, m.unit) != x:
                    raise ValueError("action unit law fails")
                for a in m.elements:
                    if self.act(x, a) not in self.index:
                        raise ValueError("action leaves carrier")
                    for b in m.elements:
                        if self.act(x, m.mul(a, b)) != self.act(self.act(x, a), b):
                            raise ValueError("action associativity fails")

    def act(self, x, m):
        k = len(self.monoid.elements)
        return self.action[self.index[x] * k + self.monoid.elements.index(m)]

    def leq(self, a, b):
        return (a, b) in self.order

    def __len__(self):
        return len(self.carrier)

    def __iter__(self):
        return iter(self.carrier)

    def __contains__(self, x):
        return x in self.index

    def __eq__(self, other):
        return self is other or (isinstance(other, Obj) and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        raise TypeError("Obj is not picklable")

    def __str__(self):
        if self.label:
            return self.label
        return "{" + ",".join(map(str, self.carrier)) + "}"

    __repr__ = __str__


def relabel(x: Obj, label: str) -> Obj:
    x.label = label
    return x


class Morphism:
    """A function table between concrete objects; equality is extensional."""

    __slots__ = ("dom", "cod", "table", "_hash")

    def __init__(self, dom: Obj, cod: Obj, table):
        table = tuple(table)
        if len(table) != len(dom.carrier):
            raise ValueError("table length differs from domain size")
        self.dom = dom
        self.cod = cod
        self.table = table
        self._hash = hash((dom, cod, table))

    @classmethod
    def from_fn(cls, dom, cod, fn):
        return cls(dom, cod, (fn(x) for x in dom.carrier))

    def __call__(self, x):
        return self.table[self.dom.index[x]]

    def items(self):
        return zip(self.dom.carrier, self.table)

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self._hash == other._hash
            and self.table == other.table
            and self.dom == other.dom
            and self.cod == other.cod
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        body = ", ".join(f"{x}->{y}" for x, y in self.items())
        return f"{self.dom}->{self.cod} [{body}]"

    __repr__ = __str__


def preserves(dom: Obj, cod: Obj, table) -> bool:
    """Does ``table`` respect every decoration carried by both ends?"""
    idx = dom.index
    if dom.point is not None and cod.point is not None:
        if table[idx[dom.point]] != cod.point:
            return False
    if dom.order is not None and cod.order is not None:
        co = cod.order
        for a, b in dom.order:
            if (table[idx[a]], table[idx[b]]) not in co:
                return False
    if dom.monoid is not None and cod.monoid is not None:
        if dom.monoid != cod.monoid:
            return False
        for x in dom.carrier:
            fx = table[idx[x]]
            for m in dom.monoid.elements:
                if table[idx[dom.act(x, m)]] != cod.act(fx, m):
                    return False
    return True


# ---------------------------------------------------------------------------
# categories


class Category:
    """Interface: ``hom``, ``identity``, ``compose`` plus a probe window."""

    name = "category"
    probe: tuple = ()

    def hom(self, x, y) -> list:
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def compose(self, g, f):
        raise NotImplementedError

    def contains(self, x) -> bool:
        return True

    def inverse(self, f):
        """Two-sided inverse of ``f`` by hom search, or ``None``."""
        idd, idc = self.identity(f.dom), self.identity(f.cod)
        for g in self.hom(f.cod, f.dom):
            if self.compose(g, f) == idd and self.compose(f, g) == idc:
                return g
        return None

    def solve(self, dom, cod, constraints=(), where=None) -> list:
        """All ``u : dom -> cod`` with ``u . h == k`` for each ``(h, k)``."""
        out = []
        for u in self.hom(dom, cod):
            if all(self.compose(u, h) == k for h, k in constraints):
                if where is None or where(u):
                    out.append(u)
        return out

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def comp(c: Category, *ms):
    """Compose right to left: ``comp(c, h, g, f) == h . g . f``."""
    ms = list(ms)
    out = ms.pop()
    while ms:
        out = c.compose(ms.pop(), out)
    return out


def _check_cap(count, what="hom"):
    b = current_bounds()
    cap = b.hom_cap if what == "hom" else b.search_cap
    if count > cap:
        exc = HomBoundExceeded if what == "hom" else SearchBoundExceeded
        raise exc(f"{what} enumeration of size {count} exceeds cap {cap}")


class ConcreteCategory(Category):
    """Finite decorated sets and decoration-preserving functions.

    One mechanism covers FinSet, pointed sets, posets and M-sets: the kind of
    decoration every object must carry is fixed per category, and hom
    enumeration filters function tables by preservation.
    """

    def __init__(self, name, pointed=False, ordered=False, monoid=None, probe=()):
        self.name = name
        self.pointed = pointed
        self.ordered = ordered
        self.monoid = monoid
        self.probe = tuple(probe)
        self._homs = {}
        for x in self.probe:
            if not self.contains(x):
                raise ValueError(f"probe object {x} does not belong to {name}")

    def contains(self, x):
        return (
            isinstance(x, Obj)
            and (x.point is not None) == self.pointed
            and (x.order is not None) == self.ordered
            and x.monoid == self.monoid
        )

    def make(self, carrier, point=None, order=None, action=None, label=None):
        """Build an object of this category, filling trivial decorations."""
        carrier = tuple(carrier)
        if self.pointed and point is None:
            point = carrier[0]
        if self.ordered and order is None:
            order = {(a, a) for a in carrier}
        if self.monoid is not None and action is None:
            action = {(x, m): x for x in carrier for m in self.monoid.elements}
        return Obj(carrier, point=point if self.pointed else None,
                   order=order if self.ordered else None,
                   action=action, monoid=self.monoid, label=label)

    def is_morphism(self, dom, cod, table):
        return preserves(dom, cod, table)

    def hom(self, x, y):
        key = (x, y)
        hit = self._homs.get(key)
        if hit is not None:
            return hit
        out = self.solve(x, y)
        self._homs[key] = out
        return out

    def identity(self, x):
        return Morphism(x, x, x.carrier)

    def compose(self, g, f):
        if f.cod is not g.dom and f.cod != g.dom:
            raise PartialComposition(f"cannot compose {g} after {f}")
        gi, gt = g.dom.index, g.table
        return Morphism(f.dom, g.cod, tuple(gt[gi[y]] for y in f.table))

    def inverse(self, f):
        if len(f.dom) != len(f.cod) or len(set(f.table)) != len(f.table):
            return None
        back = {y: x for x, y in f.items()}
        table = tuple(back[y] for y in f.cod.carrier)
        if not preserves(f.cod, f.dom, table):
            return None
        return Morphism(f.cod, f.dom, table)

    def solve(self, dom, cod, constraints=(), where=None):
        """Pin table entries from ``u . h == k``, then enumerate the free rest."""
        pins = {}
        for h, k in constraints:
            for a, b in zip(h.table, k.table):
                if pins.setdefault(a, b) != b:
                    return []
        if dom.point is not None and cod.point is not None:
            if pins.setdefault(dom.point, cod.point) != cod.point:
                return []
        free = [i for i, x in enumerate(dom.carrier) if x not in pins]
        base = [pins.get(x) for x in dom.carrier]
        if free and not cod.carrier:
            return []
        _check_cap(len(cod.carrier) ** len(free))
        out = []
        for combo in itertools.product(cod.carrier, repeat=len(free)):
            for i, v in zip(free, combo):
                base[i] = v
            table = tuple(base)
            if preserves(dom, cod, table):
                u = Morphism(dom, cod, table)
                if where is None or where(u):
                    out.append(u)
        return out


@dataclass(frozen=True)
class ThinMor:
    dom: Any
    cod: Any

    def __str__(self):
        return f"{self.dom}<={self.cod}"


class ThinCategory(Category):
    """A finite preorder viewed as a category (at most one arrow per hom)."""

    def __init__(self, name, elements, leq, probe=None):
        self.name = name
        self.elements = tuple(elements)
        self._leq = leq
        self.probe = tuple(self.elements if probe is None else probe)

    def leq(self, a, b):
        return self._leq(a, b)

    def contains(self, x):
        return x in self.elements

    def hom(self, x, y):
        return [ThinMor(x, y)] if self._leq(x, y) else []

    def identity(self, x):
        return ThinMor(x, x)

    def compose(self, g, f):
        if f.cod != g.dom:
            raise PartialComposition(f"cannot compose {g} after {f}")
        return ThinMor(f.dom, g.cod)

    def solve(self, dom, cod, constraints=(), where=None):
        return [u for u in self.hom(dom, cod) if where is None or where(u)]


@dataclass(frozen=True)
class TabMor:
    name: str
    dom: Any
    cod: Any

    def __str__(self):
        return self.name


class TableCategory(Category):
    """A category presented by explicit morphism and composition tables."""

    def __init__(self, name, objects, morphisms, identities, composition, probe=None):
        # morphisms: name -> (dom, cod); composition: (g, f) -> h by name
        self.name = name
        self.objects = tuple(objects)
        self.morphisms = {n: TabMor(n, d, c) for n, (d, c) in morphisms.items()}
        self.identities = dict(identities)
        self.composition = dict(composition)
        self.probe = tuple(self.objects if probe is None else probe)
        self._homs = {}
        for n, m in self.morphisms.items():
            self._homs.setdefault((m.dom, m.cod), []).append(m)

    def contains(self, x):
        return x in self.objects

    def hom(self, x, y):
        return list(self._homs.get((x, y), []))

    def identity(self, x):
        return self.morphisms[self.identities[x]]

    def compose(self, g, f):
        if f.cod != g.dom:
            raise PartialComposition(f"cannot compose {g} after {f}")
        try:
            return self.morphisms[self.composition[g.name, f.name]]
        except KeyError:
            raise PartialComposition(f"no composite recorded for {g} after {f}") from None


@dataclass(frozen=True)
class PairMor:
    first: Any
    second: Any

    @property
    def dom(self):
        return (self.first.dom, self.second.dom)

    @property
    def cod(self):
        return (self.first.cod, self.second.cod)

    def __str__(self):
        return f"({self.first}, {self.second})"


class ProductCategory(Category):
    def __init__(self, a: Category, b: Category, probe=None):
        self.a, self.b = a, b
        self.name = f"{a.name}×{b.name}"
        self.probe = tuple(
            itertools.product(a.probe, b.probe) if probe is None else probe
        )

    def contains(self, x):
        return isinstance(x, tuple) and len(x) == 2 and self.a.contains(x[0]) and self.b.contains(x[1])

    def hom(self, x, y):
        return [PairMor(f, g) for f in self.a.hom(x[0], y[0]) for g in self.b.hom(x[1], y[1])]

    def identity(self, x):
        return PairMor(self.a.identity(x[0]), self.b.identity(x[1]))

    def compose(self, g, f):
        return PairMor(self.a.compose(g.first, f.first), self.b.compose(g.second, f.second))


def product_category(a: Category, b: Category) -> ProductCategory:
    return ProductCategory(a, b)


@dataclass(frozen=True)
class OpMor:
    arrow: Any

    @property
    def dom(self):
        return self.arrow.cod

    @property
    def cod(self):
        return self.arrow.dom

    def __str__(self):
        return f"op({self.arrow})"


class OppositeCategory(Category):
    def __init__(self, base: Category):
        self.base = base
        self.name = f"{base.name}^op"
        self.probe = base.probe

    def contains(self, x):
        return self.base.contains(x)

    def hom(self, x, y):
        return [OpMor(f) for f in self.base.hom(y, x)]

    def identity(self, x):
        return OpMor(self.base.identity(x))

    def compose(self, g, f):
        return OpMor(self.base.compose(f.arrow, g.arrow))


def opposite_category(a: Category) -> Category:
    """Opposite category; applying it twice returns the original category."""
    if isinstance(a, OppositeCategory):
        return a.base
    return OppositeCategory(a)


def enumerate_hom(c: Category, x, y) -> list:
    """Complete, duplicate-free, deterministically ordered hom enumeration."""
    return list(c.hom(x, y))


# ---------------------------------------------------------------------------
# functors and natural transformations


class FunctorData:
    def __init__(self, source: Category, target: Category, obj: Callable, mor: Callable, name="F"):
        self.source = source
        self.target = target
        self._obj = obj
        self._mor = mor
        self.name = name
        self._ocache = {}
        self._mcache = {}

    def obj(self, x):
        try:
            return self._ocache[x]
        except KeyError:
            y = self._ocache[x] = self._obj(x)
            return y

    def mor(self, f):
        try:
            return self._mcache[f]
        except KeyError:
            y = self._mcache[f] = self._mor(f)
            return y

    def __repr__(self):
        return f"<Functor {self.name}: {self.source.name} -> {self.target.name}>"


def identity_functor(c: Category) -> FunctorData:
    return FunctorData(c, c, lambda x: x, lambda f: f, name="Id")


def compose_functors(g: FunctorData, f: FunctorData) -> FunctorData:
    return FunctorData(
        f.source, g.target,
        lambda x: g.obj(f.obj(x)),
        lambda m: g.mor(f.mor(m)),
        name=f"{g.name}·{f.name}",
    )


class NaturalData:
    def __init__(self, source: FunctorData, target: FunctorData, component: Callable, name="τ"):
        self.source = source
        self.target = target
        self._component = component
        self.name = name
        self._cache = {}

    def __call__(self, x):
        try:
            return self._cache[x]
        except KeyError:
            y = self._cache[x] = self._component(x)
            return y

    def __repr__(self):
        return f"<Natural {self.name}: {self.source.name} => {self.target.name}>"


def identity_natural(f: FunctorData) -> NaturalData:
    return NaturalData(f, f, lambda x: f.target.identity(f.obj(x)), name=f"id_{f.name}")


# ---------------------------------------------------------------------------
# validators


def _probe(c: Category, probe):
    objs = tuple(c.probe if probe is None else probe)
    if not objs:
        raise EmptyProbe(f"{c.name}: empty probe")
    return objs


def validate_category(c: Category, probe=None) -> Report:
    objs = _probe(c, probe)
    rep = Report(f"category {c.name}", objs)
    homs = {(x, y): c.hom(x, y) for x in objs for y in objs}

    def typing():
        for x in objs:
            i = c.identity(x)
            yield (i.dom == x and i.cod == x), {"object": x, "identity": i}
        for (x, y), fs in homs.items():
            for f in fs:
                yield (f.dom == x and f.cod == y), {"morphism": f}
        for (x, y), fs in homs.items():
            for z in objs:
                for g in homs[y, z]:
                    for f in fs:
                        h = c.compose(g, f)
                        if h.dom != x or h.cod != z:
                            raise PartialComposition(
                                f"compose({g}, {f}) returned {h.dom}->{h.cod}, expected {x}->{z}"
                            )
                        yield True, {}

    def duplicates():
        for (x, y), fs in homs.items():
            yield len(set(fs)) == len(fs), {"dom": x, "cod": y}

    def identities():
        for (x, y), fs in homs.items():
            for f in fs:
                yield c.compose(c.identity(y), f) == f, {"morphism": f, "side": "left"}
                yield c.compose(f, c.identity(x)) == f, {"morphism": f, "side": "right"}

    def associativity():
        for w, x, y, z in itertools.product(objs, repeat=4):
            for f in homs[w, x]:
                for g in homs[x, y]:
                    gf = c.compose(g, f)
                    for h in homs[y, z]:
                        ok = c.compose(h, gf) == c.compose(c.compose(h, g), f)
                        yield ok, {"h": h, "g": g, "f": f}

    rep.run("typing", typing())
    rep.run("hom duplicate-free", duplicates())
    rep.run("identity", identities())
    rep.run("associativity", associativity())
    return rep


def validate_functor(F: FunctorData, probe=None) -> Report:
    src, tgt = F.source, F.target
    objs = _probe(src, probe)
    rep = Report(f"functor {F.name}", objs)

    def objects():
        for x in objs:
            fx = F.obj(x)
            try:
                tgt.hom(fx, fx)
            except HomBoundExceeded:
                raise
            except Exception as e:
                raise ObjectOutsideTarget(f"{F.name}({x}) = {fx}: {e}") from e
            yield tgt.contains(fx), {"object": x, "image": fx}

    def typing():
        for x in objs:
            for y in objs:
                for f in src.hom(x, y):
                    ff = F.mor(f)
                    yield (ff.dom == F.obj(x) and ff.cod == F.obj(y)), {"morphism": f, "image": ff}

    def ids():
        for x in objs:
            yield F.mor(src.identity(x)) == tgt.identity(F.obj(x)), {"object": x}

    def composites():
        for x, y, z in itertools.product(objs, repeat=3):
            for f in src.hom(x, y):
                for g in src.hom(y, z):
                    ok = F.mor(src.compose(g, f)) == tgt.compose(F.mor(g), F.mor(f))
                    yield ok, {"g": g, "f": f}

    if rep.run("objects", objects()):
        rep.run("dom/cod", typing())
        rep.run("identities", ids())
        rep.run("composition", composites())
    return rep


def validate_natural(n: NaturalData, probe=None) -> Report:
    F, G = n.source, n.target
    src, tgt = F.source, F.target
    objs = _probe(src, probe)
    rep = Report(f"natural {n.name}", objs)
    for x in objs:
        t = n(x)
        if t.dom != F.obj(x) or t.cod != G.obj(x):
            raise ComponentTypeMismatch(
                f"{n.name}_{x} : {t.dom} -> {t.cod}, expected {F.obj(x)} -> {G.obj(x)}"
            )

    def squares():
        for x in objs:
            for y in objs:
                for f in src.hom(x, y):
                    ok = tgt.compose(G.mor(f), n(x)) == tgt.compose(n(y), F.mor(f))
                    yield ok, {"morphism": f}

    rep.run("naturality", squares())
    return rep


def points(v_cat: Category, unit, ctx) -> list:
    """Points of a context: morphisms from the monoidal unit."""
    return v_cat.hom(unit, ctx)


def same_on(keys: Iterable, f: Callable, g: Callable) -> Optional[Any]:
    """First key where ``f`` and ``g`` disagree, or ``None``."""
    for k in keys:
        if f(k) != g(k):
            return k
    return None


__all__ = [
    "Bounds", "current_bounds", "describe", "LawResult", "Report", "Verdict", "Monoid", "Fun",
    "Obj", "relabel", "Morphism", "preserves", "Category", "comp", "ConcreteCategory",
    "ThinMor", "ThinCategory", "TabMor", "TableCategory", "PairMor", "ProductCategory",
    "product_category", "OpMor", "OppositeCategory", "opposite_category",
    "enumerate_hom", "FunctorData", "identity_functor", "compose_functors",
    "NaturalData", "identity_natural", "validate_category", "validate_functor",
    "validate_natural", "points", "same_on",
]
