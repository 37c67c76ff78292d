"""
Well-pointedness and functional completeness
============================================

Classify the corpus instances on their probe windows, then look at the
Kleisli category of exceptions, where one section Φ^e exists per
exception name but none of them is natural once there are two names.
"""

from strengthlab import build
from strengthlab.action import all_families, enumerate_wfc, is_functionally_complete, is_well_pointed, validate_wfc

print(f"{'instance':20s} {'WP':5s} {'FC':5s} WFC")
for name in ("finset", "finsetpt-cartesian", "finsetpt-smash", "bool2", "finpos", "z2act"):
    b = build(name)
    a = b.action
    wp = bool(is_well_pointed(a))
    fc = bool(is_functionally_complete(a))
    print(f"{name:20s} {str(wp):5s} {str(fc):5s} {len(enumerate_wfc(a))}")

# one exception name: exactly one section
k1 = build("klexc", E=1)
print("\nklexc E=1: WFC count", len(enumerate_wfc(k1.action)))

# two names: Φ^e0 and Φ^e1 differ, but a context morphism may raise the
# other exception, which breaks naturality in Γ
k2 = build("klexc", E=2)
one = k2.probe[1]
z = all_families(k2.action, one, one, one)[0]
print("klexc E=2: Φ^e0 ≠ Φ^e1 on a family:", k2.wfcs["e0"](z) != k2.wfcs["e1"](z))
for name, w in k2.wfcs.items():
    print(f"  {name}: failing laws {validate_wfc(w).failed_laws()}")
print("klexc E=2: WFC count", len(enumerate_wfc(k2.action)))
