"""
Commutative and non-commutative monads
======================================

A bistrength lets us run two effects in either order.  For the writer
over an abelian group the order does not matter.  For exceptions with
two names it does: whichever effect runs first decides which exception
escapes.
"""

from strengthlab import build
from strengthlab.biaction import (
    bistrength_from_symmetry,
    is_commutative_monad,
    lax_monoidal_from_commutative,
    self_biaction,
    writer_bistrength,
)
from strengthlab.strongmonad import monad_to_strength

w = build("writer-z2")
m = w.monads["str"]
bs = writer_bistrength(m, self_biaction(m.act.v), w.extras["monoid"])
print("writer commutative:", bool(is_commutative_monad(m, bs)))
_, rep = lax_monoidal_from_commutative(m, bs)
print(rep.summary())

f = build("finset")
exc = f.monads["exc"]
v = is_commutative_monad(exc, bistrength_from_symmetry(monad_to_strength(exc), exc.act.v))
print("\nexceptions commutative:", bool(v))
for k, val in v.witness.items():
    print(f"   {k}: {val}")

# a single exception name is commutative again
f1 = build("finset", E=1)
exc1 = f1.monads["exc"]
print("\none exception name:", bool(is_commutative_monad(exc1, bistrength_from_symmetry(monad_to_strength(exc1), exc1.act.v))))
