"""Two small closures, end to end.

The unknot is the closure of the empty braid on one strand.  Its homology
is the Hochschild cohomology of Z[x]: a free part in a = 0 and a copy
shifted by q^-2 in a = 1.  The trefoil (closure of s1^3 on two strands)
is the first example with homology in several t-degrees.
"""

from krh.hochschild import hochschild_full
from krh.homology import default_window, hhh, normalize
from krh.rouquier import parse_braid, rouquier_complex

print("Unknot, raw q in [-2, 8]:")
print(hhh(parse_braid("", 1), (-2, 8)).to_text())

b = parse_braid("s1 s1 s1", 2)
c = rouquier_complex(b)
print(f"\nRouquier complex of {b} after simplification: {len(c)} Soergel summands")
fc = hochschild_full(c)
print(f"Hochschild bicomplex: {len(fc)} free generators over Z[x1, x2]")
table = normalize(hhh(fc, default_window(fc)), b.exponent, b.strands)
print("\nNormalized trefoil table (half-integer degrees shown as fractions):")
print(table.to_text())
print("torsion:", "none" if not table.has_torsion() else table.torsion())
