"""A small call-by-value let-language interpreted with strong Kleisli extension.

Concrete syntax::

    program := [decls '|-'] term
    decls   := ident ':' type (',' ident ':' type)*
    term    := 'let' ident [':' type] '=' term 'in' term
             | 'return' term | 'fst' term | 'snd' term
             | ident '(' term ')' | ident | '(' ')' | '(' term ',' term ')' | '(' term ')'
    type    := ident ('*' ident)*

Values (variables, ``()``, pairs, projections) denote maps ``[Γ] -> [A]``;
computations denote ``[Γ] -> T[A]``.  A value used where a computation is
expected is read as ``return`` of it, and an operation applied to a
computation binds it first.  Contexts are left-nested products starting at 1.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Optional

from .core import Verdict
from .errors import LetSyntaxError, LetTypeError, NonCartesianInstance

# ---------------------------------------------------------------------------
# syntax


@dataclass(frozen=True)
class Var:
    name: str
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class UnitV:
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Pair:
    left: object
    right: object
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Proj:
    which: int          # 1 or 2
    arg: object
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Return:
    arg: object
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Op:
    name: str
    arg: object
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Let:
    name: str
    ann: object         # type expression or None
    bound: object
    body: object
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Program:
    context: tuple      # ((name, type expression), ...)
    term: object


KEYWORDS = {"let", "in", "return", "fst", "snd"}
_TOKEN = re.compile(r"\s*(?:(?P<id>[A-Za-z_][A-Za-z0-9_']*)|(?P<sym>\|-|⊢|[(),=:*]))")


def _tokenize(src):
    toks = []
    line_starts = [0] + [m.end() for m in re.finditer("\n", src)]

    def where(i):
        ln = max(k for k, s in enumerate(line_starts) if s <= i)
        return ln + 1, i - line_starts[ln] + 1

    i = 0
    while True:
        while i < len(src) and src[i].isspace():
            i += 1
        if i < len(src) and src[i] == "#":
            while i < len(src) and src[i] != "\n":
                i += 1
            continue
        if i >= len(src):
            break
        m = _TOKEN.match(src, i)
        if not m or m.end() == i:
            raise LetSyntaxError(f"unexpected character {src[i]!r}", *where(i))
        start = m.start("id") if m.group("id") else m.start("sym")
        if m.group("id"):
            kind = "kw" if m.group("id") in KEYWORDS else "id"
            toks.append((kind, m.group("id"), where(start)))
        else:
            sym = "|-" if m.group("sym") == "⊢" else m.group("sym")
            toks.append(("sym", sym, where(start)))
        i = m.end()
    toks.append(("eof", "", where(len(src))))
    return toks


class _Parser:
    def __init__(self, src):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        what = "end of input" if tok[0] == "eof" else repr(tok[1])
        raise LetSyntaxError(f"{msg}, found {what}", *tok[2])

    def expect(self, kind, value=None):
        t = self.peek()
        if t[0] != kind or (value is not None and t[1] != value):
            self.error(f"expected {value or kind}")
        return self.next()

    def program(self):
        ctx = ()
        if any(t[1] == "|-" and t[0] == "sym" for t in self.toks):
            ctx = self.decls()
            self.expect("sym", "|-")
        term = self.term()
        if self.peek()[0] != "eof":
            self.error("expected end of program")
        return Program(ctx, term)

    def decls(self):
        out = []
        if self.peek() == ("sym", "|-", self.peek()[2]):
            return ()
        while True:
            name = self.expect("id")[1]
            self.expect("sym", ":")
            out.append((name, self.type_()))
            if self.peek()[1] == "," and self.peek()[0] == "sym":
                self.next()
                continue
            return tuple(out)

    def type_(self):
        t = self.expect("id")[1]
        while self.peek()[0] == "sym" and self.peek()[1] == "*":
            self.next()
            t = ("*", t, self.expect("id")[1])
        return t

    def term(self):
        kind, val, pos = self.peek()
        if kind == "kw" and val == "let":
            self.next()
            name = self.expect("id")[1]
            ann = None
            if self.peek()[1] == ":":
                self.next()
                ann = self.type_()
            self.expect("sym", "=")
            bound = self.term()
            self.expect("kw", "in")
            body = self.term()
            return Let(name, ann, bound, body, pos)
        if kind == "kw" and val == "return":
            self.next()
            return Return(self.term(), pos)
        if kind == "kw" and val in ("fst", "snd"):
            self.next()
            return Proj(1 if val == "fst" else 2, self.term(), pos)
        if kind == "id":
            self.next()
            if self.peek()[1] == "(" and self.peek()[0] == "sym":
                self.next()
                arg = self.term()
                self.expect("sym", ")")
                return Op(val, arg, pos)
            return Var(val, pos)
        if kind == "sym" and val == "(":
            self.next()
            if self.peek()[1] == ")":
                self.next()
                return UnitV(pos)
            a = self.term()
            if self.peek()[1] == ",":
                self.next()
                b = self.term()
                self.expect("sym", ")")
                return Pair(a, b, pos)
            self.expect("sym", ")")
            return a
        self.error("expected a term")


def parse(source: str) -> Program:
    return _Parser(source).program()


def pretty_type(t) -> str:
    if isinstance(t, tuple):
        return f"{pretty_type(t[1])} * {t[2]}"
    return t


def pretty(t) -> str:
    """Concrete syntax that parses back to the same tree."""
    if isinstance(t, Program):
        head = ", ".join(f"{n} : {pretty_type(a)}" for n, a in t.context)
        return (head + " |- " if t.context else "") + pretty(t.term)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, UnitV):
        return "()"
    if isinstance(t, Pair):
        return f"({pretty(t.left)}, {pretty(t.right)})"
    if isinstance(t, Proj):
        return f"{'fst' if t.which == 1 else 'snd'} ({pretty(t.arg)})"
    if isinstance(t, Return):
        return f"return ({pretty(t.arg)})"
    if isinstance(t, Op):
        return f"{t.name}({pretty(t.arg)})"
    if isinstance(t, Let):
        ann = f" : {pretty_type(t.ann)}" if t.ann is not None else ""
        return f"let {t.name}{ann} = {pretty(t.bound)} in {pretty(t.body)}"
    raise TypeError(t)


# ---------------------------------------------------------------------------
# substitution and renaming


def free_vars(t) -> set:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, UnitV):
        return set()
    if isinstance(t, Pair):
        return free_vars(t.left) | free_vars(t.right)
    if isinstance(t, (Proj, Return, Op)):
        return free_vars(t.arg)
    if isinstance(t, Let):
        return free_vars(t.bound) | (free_vars(t.body) - {t.name})
    raise TypeError(t)


def _fresh(base, avoid):
    for k in itertools.count(1):
        cand = f"{base}{k}"
        if cand not in avoid:
            return cand


def substitute(t, name, value):
    """Capture-avoiding ``t[name := value]``."""
    if isinstance(t, Var):
        return value if t.name == name else t
    if isinstance(t, UnitV):
        return t
    if isinstance(t, Pair):
        return Pair(substitute(t.left, name, value), substitute(t.right, name, value), t.pos)
    if isinstance(t, Proj):
        return Proj(t.which, substitute(t.arg, name, value), t.pos)
    if isinstance(t, Return):
        return Return(substitute(t.arg, name, value), t.pos)
    if isinstance(t, Op):
        return Op(t.name, substitute(t.arg, name, value), t.pos)
    if isinstance(t, Let):
        bound = substitute(t.bound, name, value)
        if t.name == name:
            return Let(t.name, t.ann, bound, t.body, t.pos)
        x, body = t.name, t.body
        if x in free_vars(value):
            x = _fresh(x, free_vars(value) | free_vars(body) | {name})
            body = substitute(body, t.name, Var(x))
        return Let(x, t.ann, bound, substitute(body, name, value), t.pos)
    raise TypeError(t)


def rename_binders(t, suffix="'"):
    """Alpha-rename every let binder (for invariance tests)."""
    if isinstance(t, Program):
        return Program(t.context, rename_binders(t.term, suffix))
    if isinstance(t, Let):
        x = t.name + suffix
        body = substitute(t.body, t.name, Var(x))
        return Let(x, t.ann, rename_binders(t.bound, suffix), rename_binders(body, suffix), t.pos)
    if isinstance(t, Pair):
        return Pair(rename_binders(t.left, suffix), rename_binders(t.right, suffix), t.pos)
    if isinstance(t, Proj):
        return Proj(t.which, rename_binders(t.arg, suffix), t.pos)
    if isinstance(t, Return):
        return Return(rename_binders(t.arg, suffix), t.pos)
    if isinstance(t, Op):
        return Op(t.name, rename_binders(t.arg, suffix), t.pos)
    return t


# ---------------------------------------------------------------------------
# typing


@dataclass(frozen=True)
class Typed:
    """A checked node: ``kind`` is ``"value"`` or ``"comp"``; ``ty`` an object."""
    node: object
    kind: str
    ty: object
    parts: tuple = ()


@dataclass
class Signature:
    types: dict
    ops: dict           # name -> morphism A -> TB
    op_types: dict      # name -> (A name, B name)
    products: object
    factors: dict = field(default_factory=dict)     # product object -> (A, B)

    def product(self, a, b):
        prod = self.products.product(a, b)[0]
        self.factors[prod] = (a, b)
        return prod


def signature_of(bundle, mapping: Optional[dict] = None) -> Signature:
    """Operation names from the bundle, optionally renamed by ``{name: corpus_op}``."""
    ops, op_types = dict(bundle.ops), dict(bundle.op_types)
    if mapping:
        missing = [v for v in mapping.values() if v not in bundle.ops]
        if missing:
            raise KeyError(f"{bundle.name} has no operations {missing}")
        ops = {k: bundle.ops[v] for k, v in mapping.items()}
        op_types = {k: bundle.op_types[v] for k, v in mapping.items()}
    if bundle.products is None:
        raise NonCartesianInstance(f"{bundle.name} has no products")
    return Signature(dict(bundle.types), ops, op_types, bundle.products)


def load_signature(text: str) -> dict:
    """``name = corpus_op`` lines, ``#`` comments."""
    out = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"([A-Za-z_][\w']*)\s*=\s*([A-Za-z_][\w']*)", line)
        if not m:
            raise LetSyntaxError("expected 'name = corpus_op'", n, 1)
        out[m.group(1)] = m.group(2)
    return out


def _resolve(sig: Signature, t, path):
    if isinstance(t, tuple):
        return sig.product(_resolve(sig, t[1], path), _resolve(sig, t[2], path))
    if t == "Unit" and "Unit" not in sig.types:
        return sig.products.terminal()
    try:
        return sig.types[t]
    except KeyError:
        raise LetTypeError(f"unknown type {t!r}", path) from None


class TypedProgram:
    def __init__(self, program, sig, context, root):
        self.program, self.sig, self.context, self.root = program, sig, context, root

    @property
    def type(self):
        return self.root.ty


def typecheck(p: Program, bundle_or_sig, context: Optional[dict] = None) -> TypedProgram:
    """Annotate every subterm.  ``context`` adds declarations ``{name: type}``
    after those written in the program."""
    sig = bundle_or_sig if isinstance(bundle_or_sig, Signature) else signature_of(bundle_or_sig)
    decls = list(p.context) + list((context or {}).items())
    seen = set()
    ctx = []
    for name, ty in decls:
        if name in seen:
            raise LetTypeError(f"variable {name!r} declared twice", ("context",))
        seen.add(name)
        ctx.append((name, _resolve(sig, ty, ("context", name))))

    def lookup(env, name, path):
        for n, ty in reversed(env):
            if n == name:
                return ty
        raise LetTypeError(f"unbound variable {name!r}", path)

    def as_comp(node, t):
        if t.kind == "comp":
            return t
        return Typed(Return(node, getattr(node, "pos", (0, 0))), "comp", t.ty, (t,))

    def check(t, env, path):
        if isinstance(t, Var):
            return Typed(t, "value", lookup(env, t.name, path))
        if isinstance(t, UnitV):
            return Typed(t, "value", _resolve(sig, "Unit", path))
        if isinstance(t, Pair):
            a = check(t.left, env, path + ("pair.0",))
            b = check(t.right, env, path + ("pair.1",))
            if a.kind != "value" or b.kind != "value":
                raise LetTypeError("pair components must be values; bind effects with let first",
                                   path)
            return Typed(t, "value", sig.product(a.ty, b.ty), (a, b))
        if isinstance(t, Proj):
            a = check(t.arg, env, path + ("fst" if t.which == 1 else "snd",))
            if a.kind != "value":
                raise LetTypeError("projection of a computation", path)
            comps = sig.factors.get(a.ty)
            if comps is None:
                raise LetTypeError(f"projection from non-product type {a.ty}", path)
            return Typed(t, "value", comps[t.which - 1], (a,))
        if isinstance(t, Return):
            a = check(t.arg, env, path + ("return",))
            if a.kind != "value":
                raise LetTypeError("return expects a value", path)
            return Typed(t, "comp", a.ty, (a,))
        if isinstance(t, Op):
            if t.name not in sig.ops:
                raise LetTypeError(f"unknown operation {t.name!r}", path)
            a_name, b_name = sig.op_types[t.name]
            want = _resolve(sig, a_name, path)
            a = check(t.arg, env, path + (f"{t.name}.arg",))
            if a.ty != want:
                raise LetTypeError(f"{t.name} expects {want}, got {a.ty}", path)
            if a.kind == "comp":
                x = _fresh("_a", free_vars(t.arg) | {n for n, _ in env})
                return check(Let(x, None, t.arg, Op(t.name, Var(x), t.pos), t.pos), env, path)
            return Typed(t, "comp", _resolve(sig, b_name, path), (a,))
        if isinstance(t, Let):
            bound = as_comp(t.bound, check(t.bound, env, path + (f"let {t.name}.bound",)))
            if t.ann is not None:
                want = _resolve(sig, t.ann, path)
                if want != bound.ty:
                    raise LetTypeError(f"{t.name} annotated {want} but bound to {bound.ty}", path)
            body = as_comp(t.body, check(t.body, env + [(t.name, bound.ty)],
                                         path + (f"let {t.name}.body",)))
            return Typed(t, "comp", body.ty, (bound, body))
        raise TypeError(t)

    root = as_comp(p.term, check(p.term, ctx, ()))
    return TypedProgram(p, sig, tuple(ctx), root)


# ---------------------------------------------------------------------------
# semantics


@dataclass
class Denotation:
    context: object     # the object [Γ]
    names: tuple
    morphism: object    # [Γ] -> T[A]

    def env(self, gamma) -> dict:
        """Unpack a left-nested context element into ``{name: value}``."""
        out = {}
        for name in reversed(self.names):
            gamma, out[name] = gamma
        return dict(reversed(list(out.items())))


def _check_cartesian(m, P):
    act = m.act
    one = P.terminal()
    if act.v.unit != one:
        raise NonCartesianInstance(f"the unit of {act.v.name} is not the terminal object")
    for a, b in itertools.product(act.c.probe, repeat=2):
        if act.obj(a, b) != P.product(a, b)[0]:
            raise NonCartesianInstance(f"{act.name} is not the cartesian product at ({a}, {b})")


def denote(tp: TypedProgram, m) -> Denotation:
    """``[let x = t in u] = [u]* ∘ <id, [t]>``, ``[return v] = η ∘ [v]``."""
    sig = tp.sig
    P = sig.products
    _check_cartesian(m, P)
    c = m.act.c

    def ctx_obj(env):
        o = P.terminal()
        for _, ty in env:
            o = P.product(o, ty)[0]
        return o

    def var(env, name):
        g = ctx_obj(env)
        f = c.identity(g)
        for k in range(len(env) - 1, -1, -1):
            n, ty = env[k]
            prev = ctx_obj(env[:k])
            _, p1, p2 = P.product(prev, ty)
            if n == name:
                return c.compose(p2, f)
            f = c.compose(p1, f)
        raise LetTypeError(f"unbound variable {name!r}")

    def value(t: Typed, env):
        n = t.node
        if isinstance(n, Var):
            return var(env, n.name)
        if isinstance(n, UnitV):
            return P.bang(ctx_obj(env))
        if isinstance(n, Pair):
            return P.pair(value(t.parts[0], env), value(t.parts[1], env))
        if isinstance(n, Proj):
            inner = value(t.parts[0], env)
            a, b = sig.factors[t.parts[0].ty]
            _, p1, p2 = P.product(a, b)
            return c.compose(p1 if n.which == 1 else p2, inner)
        raise TypeError(n)

    def comp_(t: Typed, env):
        n = t.node
        if isinstance(n, Return):
            return c.compose(m.eta(t.ty), value(t.parts[0], env))
        if isinstance(n, Op):
            op = sig.ops[n.name]
            b = t.ty
            if op.cod != m.T(b):
                raise LetTypeError(f"operation {n.name} is not an effect of {m.name}: "
                                   f"{op.cod} ≠ T{b}")
            return c.compose(op, value(t.parts[0], env))
        if isinstance(n, Let):
            bound, body = t.parts
            g = ctx_obj(env)
            tb = comp_(bound, env)
            f = comp_(body, env + [(n.name, bound.ty)])
            return c.compose(m.extend(g, bound.ty, f), P.pair(c.identity(g), tb))
        raise TypeError(n)

    env = list(tp.context)
    return Denotation(ctx_obj(env), tuple(n for n, _ in env), comp_(tp.root, env))


def run(source: str, bundle, monad, context: Optional[dict] = None) -> Denotation:
    m = bundle.monads[monad] if isinstance(monad, str) else monad
    return denote(typecheck(parse(source), bundle, context), m)


def compare_denotations(tp, m1, m2) -> Verdict:
    """Evaluate both denotations at every context element in carrier order.

    The verdict is true when they agree; otherwise the witness names the
    first differing input and both outputs."""
    d1, d2 = denote(tp, m1), denote(tp, m2)
    window = d1.context.carrier
    for gamma in window:
        a, b = d1.morphism(gamma), d2.morphism(gamma)
        if a != b:
            return Verdict(False, {"input": gamma, "env": d1.env(gamma), m1.name: a, m2.name: b},
                           window)
    return Verdict(True, None, window)


__all__ = [
    "Var", "UnitV", "Pair", "Proj", "Return", "Op", "Let", "Program", "parse", "pretty",
    "pretty_type", "free_vars", "substitute", "rename_binders", "Typed", "Signature",
    "signature_of", "load_signature", "TypedProgram", "typecheck", "Denotation", "denote",
    "run", "compare_denotations",
]
