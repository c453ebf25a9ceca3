"""
Counting homometric tuples
==========================

Enumeration keeps one canonical bitmask per dihedral class, then groups
the classes by interval content with ``np.unique`` over the content rows.
"""

# %%
from zsets import census, build_table, first_tuple_of_multiplicity

c = census(16, 6)
print(c.class_count, "classes,", c.vectors_with_tuples, "tuples, spectrum", c.spectrum)

# %%
# The first tuple holding three mutually Z-related classes.
t = first_tuple_of_multiplicity(16, 6, 3)
print(t.content, [str(x) for x in t.classes])

# %%
# A table in the printed layout: cells with k > N/2 mirror N - k and are
# left blank, and a star marks cells that contain tuples larger than pairs.
table = build_table([8, 10, 12, 14, 16, 18], range(4, 10), half=True)
print(table.to_csv())

# %%
# Complement symmetry holds cell by cell.
for n in (12, 15, 18):
    print(n, [census(n, k).vectors_with_tuples == census(n, n - k).vectors_with_tuples for k in range(n + 1)])

# %%
# Worker processes split the candidate space into contiguous chunks; the
# merged result does not depend on how many there are.
print(census(18, 8, workers=2) == census(18, 8, workers=1))
