"""Torus knots T(2,k) converge to a stable series as k grows.

For each k the table is normalized, shifted so that its unit class sits
at the origin, and compared with the product series for n = 2 inside the
stable range of homological degrees.
"""

from krh.hochschild import hochschild_full
from krh.homology import compare_stable, default_window, hhh, normalize, stable_series
from krh.rouquier import rouquier_complex, stable_range, torus_braid

print("Stable series for n = 2, q in [0, 8]:")
print(stable_series(2, (0, 8)).to_text())
print()
for k in range(2, 9):
    b = torus_braid(2, k)
    fc = hochschild_full(rouquier_complex(b))
    table = normalize(hhh(fc, default_window(fc)), b.exponent, 2)
    rep = compare_stable(table, 2, k)
    sr = stable_range(2, k)
    print(
        f"T(2,{k}): stable for 2t in ({sr.stable_lo2}, {sr.support_hi2}], "
        f"{rep.checked:3} tridegrees compared, {len(rep.mismatches)} mismatches, "
        f"torsion {'none' if not rep.torsion else rep.torsion}"
    )
