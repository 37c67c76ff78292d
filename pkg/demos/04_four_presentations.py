"""
Five presentations of a strong monad
====================================

Kleisli extension, strength, lifting to the Kleisli action, enriched
bind and powered extension all carry the same information.  We push the
exception monad through each and come back unchanged.
"""

from strengthlab import build
from strengthlab.enrichment import bundle_adjunction, bundle_enrichment, convert_monad, validate_enriched_monad
from strengthlab.powering import convert_powered_monad, powering_from_action, validate_powered_monad
from strengthlab.strongmonad import (
    kleisli_lifting,
    lifting_to_strength,
    monad_to_strength,
    same_strong_monad,
    strength_to_monad,
    underlying_monad,
)

b = build("finset")
exc = b.monads["exc"]
um = underlying_monad(exc)

s = monad_to_strength(exc)
back = strength_to_monad(um, s).detail
print("via strength:", same_strong_monad(exc, back) is None)

lift = kleisli_lifting(exc)
back = strength_to_monad(um, lifting_to_strength(lift, b.action, um)).detail
print("via lifting: ", same_strong_monad(exc, back) is None)

e = bundle_enrichment(b)
em = convert_monad("toEnriched", exc, e)
print("enriched bind valid:", validate_enriched_monad(em).passed)
back = convert_monad("toStrong", em, e, b.action)
print("via enriched:", same_strong_monad(exc, back) is None)

pw = powering_from_action(b.action, bundle_adjunction(b, "power"))
pm = convert_powered_monad("toPowered", exc, pw)
print("powered extension valid:", validate_powered_monad(pm).passed)
back = convert_powered_monad("toStrong", pm, pw, b.action)
print("via powered: ", same_strong_monad(exc, back) is None)
