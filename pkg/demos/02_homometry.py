"""
Telling trivial from strict homometry
=====================================
"""

# %%
from zsets import PcSet, canonical_form, classify, dihedral_orbit, transpose, multiply

a = PcSet.of([0, 3, 4, 5], 8)
b = PcSet.of([0, 4, 5, 7], 8)
print(classify(a, b))

# %%
# A transposition never gives anything new: same content, same class.
print(classify(a, transpose(a, 5)))

# %%
# Canonical forms pick the lexicographically smallest of the 2N dihedral
# images, so the two sets above land in different classes.
print(canonical_form(a), canonical_form(b))
print(len(dihedral_orbit(a)), len(dihedral_orbit(b)))

# %%
# Multiplication by a unit is not a dihedral symmetry.  M_5 maps
# {0,1,2,3,5,6} to a set with a different interval content.
h = PcSet.of([0, 1, 2, 3, 5, 6], 12)
print(h, "->", multiply(h, 5), classify(h, multiply(h, 5)).kind.value)
