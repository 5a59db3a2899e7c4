"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from krh.ring import Poly
from krh.rouquier import BraidWord


def polys(n: int, max_terms: int = 5, max_exp: int = 3):
    mono = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.dictionaries(mono, st.integers(-6, 6), max_size=max_terms).map(lambda d: Poly.from_dict(n, d))


def homogeneous_polys(n: int, deg: int, max_terms: int = 4):
    def comps(k, parts):
        if parts == 1:
            return st.just((k,))
        return st.integers(0, k).flatmap(lambda a: comps(k - a, parts - 1).map(lambda r: (a,) + r))

    return st.dictionaries(comps(deg, n), st.integers(-5, 5), max_size=max_terms).map(
        lambda d: Poly.from_dict(n, d)
    )


def braids(n: int, max_len: int):
    letter = st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_len).map(lambda ls: BraidWord(n, tuple(ls)))
