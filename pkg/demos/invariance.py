"""Invariance checks one can watch: Markov curls, the braid relation and
conjugation all leave the normalized table unchanged."""

from krh.homology import compare_normalized, hhh, normalize
from krh.rouquier import parse_braid
from krh.suites import markov_case


def table(text, n, window):
    b = parse_braid(text, n)
    return normalize(hhh(b, window), b.exponent, n)


for n, letters, name in ((1, (), "empty"), (2, ((1, 1),), "s1"), (3, ((1, 1), (2, 1)), "s1 s2")):
    for sign in (1, -1):
        bad = markov_case(n, letters, sign)
        print(f"curl {'+' if sign > 0 else '-'} on {name:6}: {'same table' if not bad else bad[:2]}")

t1 = table("s1 s2 s1", 3, (-6, 14))
t2 = table("s2 s1 s2", 3, (-6, 14))
print("s1 s2 s1 vs s2 s1 s2:", "same table" if not compare_normalized(t1, t2) else "DIFFERENT")

t1 = table("s1 s1 -s2", 3, (-8, 12))
t2 = table("s2 s1 s1 -s2 -s2", 3, (-8, 12))
print("s1 s1 -s2 vs its conjugate by s2:", "same table" if not compare_normalized(t1, t2) else "DIFFERENT")
