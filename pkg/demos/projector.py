"""Truncations of the two-strand projector.

P2 is the limit of Rouquier complexes of full twists.  Its truncation at
depth N tensored with B1 is not zero, but what survives is pushed to
homological degree 1 - N or lower.  The two-term complex Q2 kills B1
outright.
"""

from krh.homotopy import Complex, cx_tensor, simplify
from krh.rouquier import p2_complex, q2_complex
from krh.soergel import BSWord

b1 = Complex.single(BSWord(2, (1,)))
print("Q2 (x) B1 after simplification is empty:", simplify(cx_tensor(q2_complex(), b1)).is_empty())
for depth in (2, 4, 6, 8):
    p = simplify(cx_tensor(p2_complex(depth), b1))
    ts = p.t_values()
    print(f"P2 depth {depth}: survivors in t = {ts}")
