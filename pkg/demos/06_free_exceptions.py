"""
Exceptions as a free construction
=================================

The exception monad is the free monad on the constant functor Δ_E.
Build it twice, once from strongly free algebras and once as a free
powered monad, and check both give the corpus exception monad.
"""

from strengthlab import build
from strengthlab.enrichment import bundle_adjunction
from strengthlab.powering import (
    convert_powered_functor,
    convert_powered_monad,
    em_category,
    exception_algebra_iso,
    free_powered_monad,
    powering_from_action,
)
from strengthlab.strongmonad import (
    Algebra,
    StronglyFreeCandidate,
    falg_category,
    is_algebraically_free,
    is_strongly_free,
    monad_from_strongly_free,
    same_strong_monad,
    underlying_monad,
)

b = build("finset")
S, E = b.coproducts, b.extras["E"]
F = b.ctxfunctors["constE"]


def candidate(x):
    # X+E with the E-algebra structure inr and the unit inl
    A, inl, inr = S.coproduct(x, E)
    return StronglyFreeCandidate(x, Algebra(A, inr), inl)


print("X+E strongly free on each probe object:", all(is_strongly_free(F, candidate(x)) for x in b.probe))
sf = monad_from_strongly_free(F, candidate)
print("monad from strongly free algebras = exc:", same_strong_monad(sf, b.monads["exc"]) is None)

um = underlying_monad(b.monads["exc"])
iso = exception_algebra_iso(um, S, E, em_category(um), falg_category(b.functors["constE"], b.probe))
print("Eilenberg-Moore algebras = Δ_E-algebras:", bool(is_algebraically_free(um, b.functors["constE"], iso)))

pw = powering_from_action(b.action, bundle_adjunction(b, "power"))
pf = convert_powered_functor("toPowered", F, pw)
fp = free_powered_monad(pf, um, iso, pw)
print("certificates per probe object:", {str(x): bool(v) for x, v in fp.certificates.items()})
back = convert_powered_monad("toStrong", fp, pw, b.action)
print("free powered monad = exc:", same_strong_monad(back, b.monads["exc"]) is None)
