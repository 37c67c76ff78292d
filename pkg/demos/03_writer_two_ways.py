"""
One monad, two strengths
========================

On Z2-sets the writer monad X |-> X×M is strong in two ways: the
context can be left alone, or acted on by the written element.  A
three-line let-program tells them apart.
"""

from strengthlab import build
from strengthlab.letlang import compare_denotations, denote, parse, typecheck
from strengthlab.strongmonad import same_strong_monad, validate_strong_monad

w = build("writer-z2")
plain, twisted = w.monads["str"], w.monads["strprime"]
for m in (plain, twisted):
    print(m.name, "is a strong monad:", validate_strong_monad(m).passed)

g, x, f = same_strong_monad(plain, twisted)
print("first extension that differs: context", g, "object", x)

# write 1, then read the context back
src = "ctx : Z2 |- let u = emit(()) in return ctx"
tp = typecheck(parse(src), w)
for m in (plain, twisted):
    d = denote(tp, m)
    print(f"\n{m.name}:")
    for gamma in d.context.carrier:
        print("   ", d.env(gamma), "->", d.morphism(gamma))

v = compare_denotations(tp, plain, twisted)
print("\nsame meaning:", bool(v), "| witness:", v.witness)
