"""
Permutation groups from generators
==================================
"""

# %%
from zsets import PermGroup, Permutation, parse_cycles, apply_to_set, PcSet

a = parse_cycles("(1,3)(2,6)(5,7)", 8)
print(a.images, a)

# %%
# Order and membership come from a Schreier-Sims stabiliser chain built
# with base points in increasing order.
rot = Permutation(tuple((i + 1) % 12 for i in range(12)))
ref = Permutation(tuple((-i) % 12 for i in range(12)))
d12 = PermGroup([rot, ref])
print(d12.order(), d12.base, d12.orbits())
print(parse_cycles("(0,1)", 12) in d12)

# %%
# Groups act on sets pointwise.
d = parse_cycles("(2,6)(3,7)", 8)
print(apply_to_set(d, PcSet.of([0, 1, 2, 5], 8)))
