"""
The symmetry group of a homometric family
=========================================

Put the N points and the blocks of a family into one bipartite incidence
graph, colour points and blocks differently, and compute its automorphisms
by colour refinement with individualisation.  Restricting to the points
gives the permutations of Z_N that carry the family onto itself.
"""

# %%
from zsets import z_automorphism_group, parse_cycles, verify_stabilizes
from zsets.levi import homometric_blocks

blocks = homometric_blocks(8, 4)
r = z_automorphism_group(8, blocks)
print(len(blocks), "blocks, group order", r.order)
print([str(g) for g in r.point_generators])

# %%
# Larger than the dihedral group of order 16: the family has extra symmetry.
print(verify_stabilizes(parse_cycles("(3,7)", 8), blocks))

# %%
# All Z-related four- to six-element sets of Z_12.
for k in (4, 5, 6):
    r = z_automorphism_group(12, homometric_blocks(12, k))
    print(k, len(r.blocks), r.order, "block orbits:", [len(o) for o in r.block_orbits])

# %%
# The Levi graph exports to DOT for drawing.
from zsets import build_levi

print(build_levi(8, blocks).to_dot()[:200])
