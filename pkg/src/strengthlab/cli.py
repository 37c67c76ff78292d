"""Command-line front end and the line-oriented instance file format.

Exit codes: 0 when every verdict passes, 1 when some law fails (the
counterexample is printed), 2 for usage, input or IO errors.

Instance files (UTF-8, ``#`` comments)::

    instance NAME
    builtin NAME key=value ...
    object ID [elem a b c] [point a] [order a<=b ...] [monoidact N k:a->b ...]
    morph ID : SRC -> DST [map a->x b->y ...]
    compose G F = H
    monoidal cartesian|cocartesian|smash
    probe ID ID ...

Objects with ``elem`` are finite decorated sets and morphisms carry ``map``
tables.  Objects without elements give a table-presented category: every
object gets an identity ``id_ID`` and ``compose`` lines list the composites
of non-identity morphisms.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
import time

from . import corpus
from .action import (
    enumerate_wfc,
    is_functionally_complete,
    is_well_pointed,
    self_action,
    validate_action,
    validate_wfc,
)
from .biaction import (
    bistrength_from_symmetry,
    is_commutative_monad,
    lax_monoidal_from_commutative,
    self_biaction,
    writer_bistrength,
)
from .core import (
    ConcreteCategory,
    Morphism,
    Obj,
    Report,
    TableCategory,
    Verdict,
    current_bounds,
    describe,
    validate_category,
)
from .enrichment import bundle_adjunction, bundle_enrichment, convert_monad, validate_enriched_monad
from .errors import ParseError, PartialComposition, StrengthLabError, ValidationFailed
from .letlang import compare_denotations, denote, load_signature, parse, signature_of, typecheck
from .monoidal import (
    ConcreteCoproducts,
    ConcreteProducts,
    cartesian_monoidal,
    cocartesian_monoidal,
    smash_monoidal,
    validate_monoidal,
)
from .powering import (
    convert_powered_monad,
    em_lifting,
    lifting_u_square,
    powered_monad_from_lifting,
    powering_from_action,
    same_powered_monad,
    strong_monad_to_powered,
    validate_powered_monad,
    validate_powering,
)
from .strength import (
    blocking_pair,
    enumerate_strengths,
    forced_strength,
    same_strength,
    validate_strength,
)
from .strongmonad import (
    item3_diagrams,
    kleisli_lifting,
    lifting_square,
    lifting_to_strength,
    monad_to_strength,
    same_monad,
    same_strong_monad,
    strength_to_monad,
    underlying_monad,
    validate_strong_monad,
)
from .errors import LetSyntaxError, LetTypeError

FORMS = ("kleisli", "strength", "lifting", "enriched", "powered")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# structured reports


class CliReport:
    """Verdicts and counterexamples of one command, in the order produced."""

    def __init__(self, command):
        self.command = list(command)
        self.window = []
        self.verdicts = []
        self.counterexamples = []
        self.lines = []

    def set_window(self, objs):
        for o in objs:
            d = describe(o)
            if d not in self.window:
                self.window.append(d)

    def say(self, text=""):
        self.lines.append(text)

    def verdict(self, check, passed, instances=None, witness=None, value=None, law=True):
        """Record a verdict.  ``law=False`` marks a finding (a count, a
        classification) that does not affect the exit code."""
        entry = {"check": check, "passed": bool(passed), "law": law}
        if instances is not None:
            entry["instances"] = instances
        if value is not None:
            entry["value"] = value
        self.verdicts.append(entry)
        mark = "PASS" if passed else "FAIL"
        if not law:
            mark = "yes " if passed else "no  "
        extra = f" = {value}" if value is not None else ""
        count = f" ({instances} instances)" if instances is not None else ""
        self.say(f"{mark} {check}{extra}{count}")
        if witness:
            w = {k: describe(v) for k, v in witness.items()}
            self.counterexamples.append({"check": check, "witness": w})
            for k, v in w.items():
                self.say(f"       {k}: {v}")
        return bool(passed)

    def law_report(self, rep: Report, prefix=""):
        self.set_window(rep.window)
        for r in rep.results:
            self.verdict(prefix + r.law, r.passed, r.instances, r.counterexample)
        return rep.passed

    def from_verdict(self, check, v: Verdict, law=True):
        self.set_window(v.window)
        return self.verdict(check, v.value, witness=v.witness, law=law)

    @property
    def failed(self):
        return any(v["law"] and not v["passed"] for v in self.verdicts)

    def to_dict(self, elapsed_ms):
        return {
            "command": self.command,
            "window": self.window,
            "verdicts": self.verdicts,
            "counterexamples": self.counterexamples,
            "elapsed_ms": elapsed_ms,
        }


# ---------------------------------------------------------------------------
# instance files


def _atom(tok):
    return int(tok) if tok.lstrip("-").isdigit() else tok


def _param(text):
    key, sep, val = text.partition("=")
    if not sep or not key:
        raise UsageError(f"expected key=value, got {text!r}")
    if "," in val:
        return key, [_atom(v) for v in val.split(",") if v]
    return key, _atom(val)


def _pairs(toks, sep, line):
    out = []
    for t in toks:
        a, s, b = t.partition(sep)
        if not s:
            raise ParseError(f"expected a{sep}b, got {t!r}", line)
        out.append((_atom(a), _atom(b)))
    return out


def _parse_object(toks, line):
    spec = {"elem": None, "point": None, "order": None, "monoid": None, "action": []}
    key = None
    for t in toks:
        if t in ("elem", "point", "order", "monoidact"):
            key = t
            if t == "elem":
                spec["elem"] = []
            elif t == "order":
                spec["order"] = []
            continue
        if key == "elem":
            spec["elem"].append(_atom(t))
        elif key == "point":
            if spec["point"] is not None:
                raise ParseError("object has two points", line)
            spec["point"] = _atom(t)
        elif key == "order":
            spec["order"] += _pairs([t], "<=", line)
        elif key == "monoidact":
            if spec["monoid"] is None:
                if not t.isdigit() or int(t) < 1:
                    raise ParseError(f"monoidact needs a modulus, got {t!r}", line)
                spec["monoid"] = int(t)
                continue
            k, s, rest = t.partition(":")
            if not s or not k.isdigit():
                raise ParseError(f"expected k:a->b, got {t!r}", line)
            (a, b), = _pairs([rest], "->", line)
            spec["action"].append((int(k), a, b))
        else:
            raise ParseError(f"unexpected token {t!r}", line)
    return spec


def _concrete_category(name, objects, line_of):
    specs = list(objects.values())
    pointed = {s["point"] is not None for s in specs}
    moduli = {s["monoid"] for s in specs}
    if len(pointed) > 1:
        raise ParseError("either every object has a point or none has", line_of[next(iter(objects))])
    if len(moduli) > 1:
        raise ParseError("objects act over different monoids", line_of[next(iter(objects))])
    ordered = any(s["order"] is not None for s in specs)
    modulus = moduli.pop()
    monoid = corpus.z2_monoid(modulus) if modulus else None
    cat = ConcreteCategory(name, pointed=pointed.pop(), ordered=ordered, monoid=monoid)
    out = {}
    for oid, s in objects.items():
        carrier = s["elem"]
        order = None
        if ordered:
            order = {(a, a) for a in carrier} | set(s["order"] or ())
        action = None
        if monoid is not None:
            action = {(x, k): x for x in carrier for k in monoid.elements}
            given = {(a, k): b for k, a, b in s["action"]}
            for x in carrier:
                for k in monoid.elements:
                    if k:
                        action[x, k] = given.get((x, k), x)
        try:
            out[oid] = cat.make(carrier, point=s["point"], order=order, action=action, label=oid)
        except ValueError as e:
            raise ParseError(f"object {oid}: {e}", line_of[oid]) from None
    return cat, out


def load_instance(path):
    """Parse an instance file into a validated bundle (or a table category
    wrapped in a bundle without an action)."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    return parse_instance(text)


def parse_instance(text):
    name, builtin = "instance", None
    objects, line_of, morphs, composes = {}, {}, {}, {}
    monoidal, probe = None, None
    for n, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        head, rest = toks[0], toks[1:]
        if head == "instance":
            if len(rest) != 1:
                raise ParseError("expected 'instance NAME'", n)
            name = rest[0]
        elif head == "builtin":
            if not rest:
                raise ParseError("expected 'builtin NAME key=value ...'", n)
            try:
                params = dict(_param(t) for t in rest[1:])
            except UsageError as e:
                raise ParseError(str(e), n) from None
            builtin = (rest[0], params, n)
        elif head == "object":
            if not rest:
                raise ParseError("expected 'object ID ...'", n)
            if rest[0] in objects:
                raise ParseError(f"object {rest[0]} declared twice", n)
            objects[rest[0]] = _parse_object(rest[1:], n)
            line_of[rest[0]] = n
        elif head == "morph":
            if len(rest) < 5 or rest[1] != ":" or rest[3] != "->":
                raise ParseError("expected 'morph ID : SRC -> DST [map a->x ...]'", n)
            table = None
            if len(rest) > 5:
                if rest[5] != "map":
                    raise ParseError(f"unexpected token {rest[5]!r}", n)
                table = _pairs(rest[6:], "->", n)
            if rest[0] in morphs:
                raise ParseError(f"morphism {rest[0]} declared twice", n)
            morphs[rest[0]] = (rest[2], rest[4], table, n)
        elif head == "compose":
            if len(rest) != 4 or rest[2] != "=":
                raise ParseError("expected 'compose G F = H'", n)
            composes[rest[0], rest[1]] = (rest[3], n)
        elif head == "monoidal":
            if len(rest) != 1 or rest[0] not in ("cartesian", "cocartesian", "smash", "table"):
                raise ParseError("expected 'monoidal cartesian|cocartesian|smash'", n)
            if rest[0] == "table":
                raise ParseError("tabulated monoidal structures are not supported; "
                                 "use cartesian, cocartesian or smash", n)
            monoidal = (rest[0], n)
        elif head == "probe":
            probe = (rest, n)
        else:
            raise ParseError(f"unknown directive {head!r}", n)

    if builtin is not None:
        if objects or morphs or composes or monoidal:
            raise ParseError("a builtin instance cannot also declare structure", builtin[2])
        bname, params, n = builtin
        try:
            b = corpus.build(bname, **params)
        except StrengthLabError as e:
            raise ParseError(str(e), n) from None
        if name != "instance":
            b.name = name
        return b
    if not objects:
        raise ParseError("no objects declared", 1)

    has_elems = {s["elem"] is not None for s in objects.values()}
    if len(has_elems) > 1:
        raise ParseError("mix of element-carrying and table objects", min(line_of.values()))
    for mid, (src, dst, table, n) in morphs.items():
        for o in (src, dst):
            if o not in objects:
                raise ParseError(f"morphism {mid} mentions unknown object {o}", n)

    if has_elems.pop():
        if composes:
            raise ParseError("compose lines are only for table-presented categories",
                             min(n for _, n in composes.values()))
        cat, objs = _concrete_category(name, objects, line_of)
        for mid, (src, dst, table, n) in morphs.items():
            if table is None:
                raise ParseError(f"morphism {mid} needs a map", n)
            d, c = objs[src], objs[dst]
            given = dict(table)
            if set(given) != set(d.carrier) or not set(given.values()) <= set(c.carrier):
                raise ParseError(f"map of {mid} must send every element of {src} into {dst}", n)
            if not cat.is_morphism(d, c, tuple(given[x] for x in d.carrier)):
                rep = Report(f"morphism {mid}", [d, c])
                rep.add("structure preserved", False, 1, {"morphism": mid, "from": src, "to": dst})
                raise ValidationFailed(rep)
        return _concrete_bundle(name, cat, objs, monoidal, probe)
    return _table_bundle(name, objects, line_of, morphs, composes, monoidal, probe)


def _probe_objects(probe, objs):
    if probe is None:
        return tuple(objs.values())
    ids, n = probe
    missing = [i for i in ids if i not in objs]
    if missing:
        raise ParseError(f"probe mentions unknown objects {missing}", n)
    return tuple(objs[i] for i in ids)


def _concrete_bundle(name, cat, objs, monoidal, probe):
    cat.probe = _probe_objects(probe, objs)
    kind, n = monoidal or ("cartesian", 0)
    P = ConcreteProducts(cat)
    S = None
    if not (cat.pointed or cat.ordered or cat.monoid is not None):
        S = ConcreteCoproducts(cat)
    if kind == "cartesian":
        m = cartesian_monoidal(cat, P, check=False)
    elif kind == "cocartesian":
        if S is None:
            raise ParseError("cocartesian structure needs plain finite sets", n)
        m = cocartesian_monoidal(cat, S, check=False)
    else:
        if not cat.pointed:
            raise ParseError("smash product needs pointed objects", n)
        m = smash_monoidal(cat)
    act = self_action(m)
    rep = validate_category(cat)
    rep.extend(validate_monoidal(m), "monoidal: ")
    rep.extend(validate_action(act), "action: ")
    if not rep:
        raise ValidationFailed(rep)
    b = corpus.Bundle(name, {}, cat, act, P, S)
    if kind == "cartesian":
        b.closed = "cartesian" if not cat.pointed else None
    b.types = {k: v for k, v in objs.items()}
    return b


def _table_bundle(name, objects, line_of, morphs, composes, monoidal, probe):
    if monoidal is not None:
        raise ParseError("monoidal structures need element-carrying objects", monoidal[1])
    table = {}
    idents = {}
    for o in objects:
        iid = f"id_{o}"
        if iid in morphs:
            raise ParseError(f"{iid} is reserved for the identity of {o}", morphs[iid][3])
        table[iid] = (o, o)
        idents[o] = iid
    for mid, (src, dst, t, n) in morphs.items():
        if t is not None:
            raise ParseError(f"table morphism {mid} cannot carry a map", n)
        table[mid] = (src, dst)
    comp = {}
    for mid, (src, dst) in table.items():
        comp[idents[dst], mid] = mid
        comp[mid, idents[src]] = mid
    for (g, f), (h, n) in composes.items():
        for k in (g, f, h):
            if k not in table:
                raise ParseError(f"compose mentions unknown morphism {k}", n)
        if table[f][1] != table[g][0]:
            raise ParseError(f"{g} cannot follow {f}", n)
        if table[h] != (table[f][0], table[g][1]):
            raise ParseError(f"{h} does not have the type of {g}∘{f}", n)
        if comp.get((g, f), h) != h:
            raise ParseError(f"composite {g}∘{f} conflicts with an identity law", n)
        comp[g, f] = h
    cat = TableCategory(name, list(objects), table, idents, comp)
    cat.probe = _probe_objects(probe, {o: o for o in objects})
    try:
        rep = validate_category(cat)
    except PartialComposition as e:
        rep = Report(f"category {name}", cat.probe)
        rep.add("composition total", False, 1, {"missing": str(e)})
    if not rep:
        raise ValidationFailed(rep)
    return corpus.Bundle(name, {}, cat, None)


def resolve_instance(ref, params):
    """A corpus name (with ``--param`` values) or a path to an instance file."""
    if os.path.exists(ref) or ref.endswith((".inst", ".txt")):
        if params:
            raise UsageError("--param applies to corpus instances only")
        return load_instance(ref)
    return corpus.build(ref, **params)


# ---------------------------------------------------------------------------
# commands


def _need(mapping, key, what, b):
    if key not in mapping:
        known = ", ".join(sorted(mapping)) or "none"
        raise UsageError(f"{b.name} has no {what} {key!r} (known: {known})")
    return mapping[key]


def _need_action(b):
    if b.action is None:
        raise UsageError(f"{b.name} has no monoidal structure; only 'check' applies")


def _bistrength_for(b, name, m):
    ba = self_biaction(m.act.v)
    if "monoid" in b.extras and name in ("str", "strprime"):
        return writer_bistrength(m, ba, b.extras["monoid"])
    return bistrength_from_symmetry(monad_to_strength(m), m.act.v, ba)


def _powering(b):
    if b.closed is None:
        raise UsageError(f"{b.name} has no internal hom, so no powering")
    if "powering" not in b.extras:
        b.extras["powering"] = powering_from_action(b.action, bundle_adjunction(b, "power"))
    return b.extras["powering"]


def _enrichment(b):
    if b.closed is None:
        raise UsageError(f"{b.name} has no internal hom, so no enrichment")
    if "enrichment" not in b.extras:
        b.extras["enrichment"] = bundle_enrichment(b)
    return b.extras["enrichment"]


def cmd_check(args, out):
    b = resolve_instance(args.instance, args.params)
    out.say(f"instance {b.name}")
    out.set_window(b.category.probe)
    out.law_report(validate_category(b.category), "category: ")
    if b.action is None:
        if args.monad or args.strength:
            raise UsageError(f"{b.name} has no monoidal structure")
        return
    out.set_window(b.ctx_probe)
    out.law_report(validate_monoidal(b.monoidal), "monoidal: ")
    out.law_report(validate_action(b.action), "action: ")
    if args.strength:
        s = _need(b.strengths, args.strength, "strength", b)
        out.law_report(validate_strength(s), f"strength {args.strength}: ")
    if (args.commutative or args.em_lifting) and not args.monad:
        raise UsageError("--commutative and --em-lifting need --monad")
    if not args.monad:
        return
    m = _need(b.monads, args.monad, "monad", b)
    out.law_report(validate_strong_monad(m), f"monad {args.monad}: ")
    if args.commutative:
        bs = _bistrength_for(b, args.monad, m)
        v = is_commutative_monad(m, bs)
        out.from_verdict(f"commutative ({bs.name})", v)
        if v:
            _, rep = lax_monoidal_from_commutative(m, bs, strict=False)
            out.law_report(rep, "lax monoidal: ")
    if args.em_lifting:
        pw = _powering(b)
        pm = strong_monad_to_powered(m, pw)
        try:
            lifted = em_lifting(pm)
        except StrengthLabError as e:
            out.verdict("EM lifting exists", False, witness={"reason": str(e)})
            return
        out.law_report(validate_powering(lifted), "EM lifting: ")
        out.from_verdict("U square", lifting_u_square(lifted))
        back = powered_monad_from_lifting(lifted, pm.underlying(), pw)
        diff = same_powered_monad(back, pm)
        out.verdict("monad recovered from lifting", diff is None,
                    witness=None if diff is None else {"at": diff})


def _strength_table(s, ctxs, objs):
    rows = []
    for g in ctxs:
        for x in objs:
            rows.append(f"    ({describe(g)}, {describe(x)}): {describe(s(g, x).table)}")
    return rows


@contextlib.contextmanager
def _search_cap(n):
    if n is None:
        yield
        return
    old = os.environ.get("STRENGTHLAB_BOUNDS")
    os.environ["STRENGTHLAB_BOUNDS"] = f"hom={current_bounds().hom_cap},search={n}"
    try:
        yield
    finally:
        if old is None:
            del os.environ["STRENGTHLAB_BOUNDS"]
        else:
            os.environ["STRENGTHLAB_BOUNDS"] = old


def cmd_enumerate_strengths(args, out):
    b = resolve_instance(args.instance, args.params)
    _need_action(b)
    F = _need(b.functors, args.functor, "functor", b)
    act = b.action
    out.set_window(b.ctx_probe + b.probe)
    with _search_cap(args.bounds):
        found = enumerate_strengths(F, act, act)
        forced = forced_strength(F, act, act)
    out.verdict(f"strengths for {F.name}", True, value=len(found), law=False)
    ctxs, objs = b.ctx_probe, b.probe
    for k, s in enumerate(found):
        names = [n for n, r in sorted(b.strengths.items())
                 if r.functor is F and same_strength(s, r) is None]
        tag = f" = registered {', '.join(names)}" if names else ""
        out.say(f"  strength #{k}{tag}")
        for row in _strength_table(s, ctxs, objs):
            out.say(row)
    if forced:
        agree = len(found) == 1 and same_strength(found[0], forced.detail) is None
        out.verdict("forced strength exists", True, law=False)
        out.verdict("forced strength equals the unique enumerated one", agree, law=False)
    else:
        out.from_verdict("forced strength exists", forced, law=False)
    if not found:
        pair = blocking_pair(F, act, act)
        if pair is not None:
            out.verdict("blocking pair", True, law=False,
                        witness={"Γ": pair[0], "X": pair[1]})


def cmd_enumerate_wfc(args, out):
    b = resolve_instance(args.instance, args.params)
    _need_action(b)
    act = b.action
    out.set_window(b.ctx_probe + b.probe)
    found = enumerate_wfc(act, codomains=args.codomains)
    out.verdict("WFC structures on the window", True, value=len(found), law=False)
    for name, w in sorted(b.wfcs.items()):
        out.law_report(validate_wfc(w), f"{name}: ")
        hits = [k for k, t in enumerate(found) if all(w(z) == v for z, v in t.table.items())]
        out.verdict(f"{name} is enumerated", bool(hits), law=False,
                    value=",".join(f"#{k}" for k in hits) or None)


def cmd_classify(args, out):
    b = resolve_instance(args.instance, args.params)
    _need_action(b)
    act = b.action
    out.set_window(b.ctx_probe + b.probe)
    out.from_verdict("well-pointed", is_well_pointed(act), law=False)
    out.from_verdict("functionally complete", is_functionally_complete(act), law=False)
    out.verdict("WFC count", True, value=len(enumerate_wfc(act)), law=False)


# conversions go through the Kleisli form


def _to_form(form, m, b):
    if form == "kleisli":
        return m
    if form == "strength":
        return monad_to_strength(m)
    if form == "lifting":
        return kleisli_lifting(m)
    if form == "enriched":
        return convert_monad("toEnriched", m, _enrichment(b))
    return convert_powered_monad("toPowered", m, _powering(b))


def _from_form(form, data, monad, b):
    if form == "kleisli":
        return data
    if form == "strength":
        v = strength_to_monad(monad, data)
        if not v:
            raise _ConversionFailed(v)
        return v.detail
    if form == "lifting":
        s = lifting_to_strength(data, b.action, monad)
        return _from_form("strength", s, monad, b)
    if form == "enriched":
        return convert_monad("toStrong", data, _enrichment(b), b.action)
    return convert_powered_monad("toStrong", data, _powering(b), b.action)


class _ConversionFailed(Exception):
    def __init__(self, verdict):
        super().__init__("conversion failed")
        self.verdict = verdict


def _validate_form(form, data, monad, b, out):
    label = f"{form} form: "
    if form == "kleisli":
        out.law_report(validate_strong_monad(data), label)
    elif form == "strength":
        out.law_report(validate_strength(data), label)
        out.from_verdict(label + "monad diagrams", item3_diagrams(monad, data))
    elif form == "lifting":
        out.law_report(validate_action(data), label)
        out.from_verdict(label + "lifting square", lifting_square(data, b.action, data.c))
    elif form == "enriched":
        out.law_report(validate_enriched_monad(data), label)
    else:
        out.law_report(validate_powered_monad(data), label)


def cmd_convert(args, out):
    b = resolve_instance(args.instance, args.params)
    _need_action(b)
    m0 = _need(b.monads, args.monad, "monad", b)
    monad = underlying_monad(m0)
    out.set_window(b.ctx_probe + b.probe)
    out.say(f"{args.monad}: {args.src} -> {args.dst}")
    try:
        a = _to_form(args.src, m0, b)
        _validate_form(args.src, a, monad, b, out)
        k = _from_form(args.src, a, monad, b)
        c = _to_form(args.dst, k, b)
        _validate_form(args.dst, c, monad, b, out)
        back = _from_form(args.dst, c, monad, b)
    except _ConversionFailed as e:
        out.from_verdict("conversion", e.verdict)
        return
    diff = same_strong_monad(m0, back)
    out.verdict("round trip is the identity", diff is None,
                witness=None if diff is None else {"first difference": diff})
    diff = same_monad(monad, underlying_monad(back))
    out.verdict("underlying monad preserved", diff is None,
                witness=None if diff is None else {"first difference": diff})


def cmd_run(args, out):
    try:
        with open(args.prog, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {args.prog}: {e}") from None
    b = resolve_instance(args.instance, args.params)
    _need_action(b)
    m = _need(b.monads, args.monad, "monad", b)
    sig = None
    if args.sig:
        try:
            with open(args.sig, encoding="utf-8") as fh:
                sig = signature_of(b, load_signature(fh.read()))
        except OSError as e:
            raise UsageError(f"cannot read {args.sig}: {e}") from None
    ctx = {}
    for item in args.ctx:
        n, s, t = item.partition(":")
        if not s:
            raise UsageError(f"--ctx expects name:Type, got {item!r}")
        ctx[n.strip()] = t.strip()
    tp = typecheck(parse(source), sig or b, ctx)
    d = denote(tp, m)
    out.set_window([d.context])
    out.say(f"denotation under {m.name}:")
    for gamma in d.context.carrier:
        out.say(f"    {describe(d.env(gamma))} -> {describe(d.morphism(gamma))}")
    if args.compare:
        m2 = _need(b.monads, args.compare, "monad", b)
        out.from_verdict(f"{m.name} and {m2.name} agree", compare_denotations(tp, m, m2))


# ---------------------------------------------------------------------------
# entry point


def _parser():
    p = argparse.ArgumentParser(prog="strengthlab",
                                description="Check, enumerate and convert strong functors and monads.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                        help="instance parameter, e.g. probe=0,1,2 or E=2")
    common.add_argument("--json", action="store_true", help="print only the JSON report")
    common.add_argument("--report", metavar="PATH", help="also write the JSON report to PATH")
    common.add_argument("--no-timing", action="store_true",
                        help="report elapsed_ms as 0 so output is byte-for-byte reproducible")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("check", parents=[common], help="validate an instance and its structures")
    c.add_argument("instance")
    c.add_argument("--monad")
    c.add_argument("--strength")
    c.add_argument("--commutative", action="store_true")
    c.add_argument("--em-lifting", action="store_true")
    c.set_defaults(fn=cmd_check)

    c = sub.add_parser("enumerate-strengths", parents=[common], help="all strengths of a functor")
    c.add_argument("instance")
    c.add_argument("--functor", required=True)
    c.add_argument("--bounds", type=int, help="search cap (number of candidates tried)")
    c.set_defaults(fn=cmd_enumerate_strengths)

    c = sub.add_parser("enumerate-wfc", parents=[common], help="all WFC structures on the window")
    c.add_argument("instance")
    c.add_argument("--codomains", choices=("probe", "second"), default="probe")
    c.set_defaults(fn=cmd_enumerate_wfc)

    c = sub.add_parser("classify", parents=[common], help="well-pointed, FC and WFC count")
    c.add_argument("instance")
    c.set_defaults(fn=cmd_classify)

    c = sub.add_parser("convert", parents=[common], help="convert a strong monad between presentations")
    c.add_argument("instance")
    c.add_argument("--monad", required=True)
    c.add_argument("--from", dest="src", choices=FORMS, default="kleisli")
    c.add_argument("--to", dest="dst", choices=FORMS, required=True)
    c.set_defaults(fn=cmd_convert)

    c = sub.add_parser("run", parents=[common], help="run a let-program")
    c.add_argument("prog")
    c.add_argument("--instance", required=True)
    c.add_argument("--monad", required=True)
    c.add_argument("--compare")
    c.add_argument("--sig", help="file of 'name = corpus_op' lines")
    c.add_argument("--ctx", action="append", default=[], metavar="NAME:TYPE")
    c.set_defaults(fn=cmd_run)
    return p


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    p = _parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    out = CliReport(["strengthlab"] + argv)
    start = time.perf_counter()
    try:
        args.params = dict(_param(t) for t in args.param)
        args.fn(args, out)
    except (UsageError, ParseError, LetSyntaxError, LetTypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValidationFailed as e:
        out.law_report(e.report, "input: ")
    except StrengthLabError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    elapsed = 0 if args.no_timing else round((time.perf_counter() - start) * 1000)
    doc = json.dumps(out.to_dict(elapsed), ensure_ascii=False, indent=2)
    if args.json:
        print(doc, file=stdout)
    else:
        print("\n".join(out.lines), file=stdout)
        print(doc, file=stdout)
    if args.report:
        try:
            with open(args.report, "w", encoding="utf-8") as fh:
                fh.write(doc + "\n")
        except OSError as e:
            print(f"error: cannot write {args.report}: {e}", file=sys.stderr)
            return 2
    return 1 if out.failed else 0


if __name__ == "__main__":
    sys.exit(main())
