"""Why collapsing a and t is not the same as the total complex.

The iterated table takes homology in the Hochschild direction first, then
in the chain direction.  The total complex mixes both.  A spectral
sequence runs from the first to the second, and a higher differential can
cancel classes in different (a, t) positions.  The trefoil shows this at
q = 2.
"""

from krh.hochschild import hochschild_full
from krh.homology import collapse, hhh, homology_total
from krh.rouquier import parse_braid, rouquier_complex

fc = hochschild_full(rouquier_complex(parse_braid("s1 s1 s1", 2)))
w = (-4, 8)
iterated = hhh(fc, w, "Q")
col, tot = collapse(iterated), homology_total(fc, w, "Q").ranks()
for key in sorted(set(col) | set(tot)):
    if col.get(key, 0) != tot.get(key, 0):
        print(f"(q, a+t) = {key}: iterated gives {col.get(key, 0)}, total gives {tot.get(key, 0)}")
print("iterated entries at q = 2:", {k: v for k, v in iterated.ranks().items() if k[0] == 2})
