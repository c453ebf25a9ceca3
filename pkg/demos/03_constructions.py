"""
Building new Z-related pairs from old ones
==========================================

Every construction re-checks its output; a ``ZPair`` cannot hold two sets
with different interval content.
"""

# %%
from zsets import ZPair, complement_pair, multiply_pair, replicate, multiply_replicate, rosenblatt
from zsets import interlaced_family, empirical_family

p = ZPair.of((0, 1, 3, 4), (0, 1, 2, 5), 8)
for q in (complement_pair(p), replicate(p, 2), multiply_replicate(p, 3)):
    print(q.provenance["rule"], q.first, q.second, q.kind.value)

# %%
# Multiplying both members by a unit keeps them Z-related.
hexa = ZPair.of((0, 1, 2, 3, 5, 6), (0, 1, 2, 3, 4, 7), 12)
print(multiply_pair(hexa, 5).first, multiply_pair(hexa, 5).second)

# %%
# The two infinite families of four-element pairs.
print(rosenblatt("i", 3, 2).first, rosenblatt("i", 3, 2).second, "in Z_12")
print(rosenblatt("ii", 1).first, rosenblatt("ii", 1).second, "in Z_13")

# %%
# Five-element families in Z_{10+2k} and Z_{2n}.
for k in range(3):
    f = interlaced_family(k)
    print(f.modulus, f.first, f.second)
for which in (1, 2):
    f = empirical_family(which, 7)
    print(which, f.modulus, f.first, f.second)
