"""
Surfaces bounded by quasipositive braids
========================================

Each band w sigma_j w^-1 of a quasipositive factorization glues one twisted
band between two of the n stacked disks.  Euler characteristic, boundary
count and genus follow from the band count and the closure permutation.
"""

from qpkit.garside import words_equal
from qpkit.qp import boundary_sum, builtin_factorizations, catalog_notes, expand, surface_type

catalog = builtin_factorizations()
notes = catalog_notes()

for name, f in catalog.items():
    s = surface_type(f)
    print(f"{name:3s} n={f.strands} bands={len(f.bands)}  chi={s.euler_characteristic:2d} "
          f"boundary={s.boundary_components} genus={s.genus}   # {notes[name]}")

# the two disks bound the two braids of the previous demo, which are equal
print()
print("expand(D) == expand(D'):", words_equal(expand(catalog["D"]), expand(catalog["D'"])))

# boundary sums: stack two factorizations and join them with one band
for other in ("A0", "T0"):
    s = surface_type(boundary_sum(catalog["A"], catalog[other]))
    print(f"A # {other}: chi={s.euler_characteristic} boundary={s.boundary_components} "
          f"genus={s.genus}")
