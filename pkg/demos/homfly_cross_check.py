"""The t = -1 shadow of the homology is the HOMFLY polynomial.

The Hecke-algebra trace gives HOMFLY as a Laurent-rational function.  The
homology gives a graded Euler characteristic on a finite q-window.  After
the substitution a -> -alpha^2 q^2 and the normalization monomial, the two
agree coefficient by coefficient on the window.
"""

from krh.hecke import compare_euler_homfly, euler_to_alpha, homfly
from krh.hochschild import hochschild_full
from krh.homology import default_window, graded_euler, hhh, table_euler
from krh.rouquier import parse_braid, rouquier_complex

for text, n in (("", 1), ("s1 s1", 2), ("s1 s1 s1", 2), ("-s1 -s1 -s1", 2), ("s1 -s2 s1 -s2", 3)):
    b = parse_braid(text, n)
    fc = hochschild_full(rouquier_complex(b))
    w = default_window(fc)
    chi = table_euler(hhh(fc, w))
    assert chi == graded_euler(fc, w)
    h = homfly(b)
    bad = compare_euler_homfly(chi, b.exponent, n, w, h)
    print(f"{text or 'unknot':14} HOMFLY = {h}")
    print(f"{'':14} Euler characteristic terms: {len(euler_to_alpha(chi, b.exponent, n))}, mismatches: {len(bad)}")
