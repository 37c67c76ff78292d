"""
How many strengths does a functor have?
=======================================

Over finite sets the answer is forced: a strength is determined by
what it does on points.  Over posets or pointed sets that argument
breaks, and we get zero or several.
"""

from strengthlab import build
from strengthlab.core import describe, identity_functor
from strengthlab.strength import blocking_pair, enumerate_strengths, forced_strength, same_strength

# the squaring functor X |-> X×X on finite sets
finset = build("finset")
sq, act = finset.functors["square"], finset.action
found = enumerate_strengths(sq, act, act)
forced = forced_strength(sq, act, act)
print("square on finset:", len(found), "strength(s)")
print("the search agrees with the forced one:", same_strength(found[0], forced.detail) is None)

two = finset.probe[2]
print("str(2, 2) sends (γ, (x, y)) to ((γ, x), (γ, y)):")
for el, out in list(found[0](two, two).items())[:4]:
    print("   ", describe(el), "->", describe(out))

# discretization on posets forgets the order, and nothing can put it back
finpos = build("finpos")
disc = finpos.functors["disc"]
print("\ndisc on finpos:", len(enumerate_strengths(disc, finpos.action, finpos.action)), "strengths")
g, x = blocking_pair(disc, finpos.action, finpos.action)
print("blocked at Γ =", g, "and X =", x)

# pointed sets: the identity functor has a second, degenerate strength
pt = build("finsetpt-cartesian")
found = enumerate_strengths(identity_functor(pt.category), pt.action, pt.action)
print("\nidentity on pointed sets:", len(found), "strengths")
p2 = pt.probe[1]
for name in ("identity", "star"):
    print(f"  {name:8s} at (P2, P2):", describe(pt.strengths[name](p2, p2).table))
