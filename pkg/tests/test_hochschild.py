from math import comb

import pytest
from hypothesis import given, settings

from krh.hochschild import freeify, hochschild_full, trace_strand
from krh.homology import homology_iterated, hhh
from krh.homotopy import Complex
from krh.ring import Poly, PolyMatrix, mat_mul
from krh.rouquier import elementary_complex, parse_braid, rouquier_complex
from krh.soergel import BSWord

from strategies import braids


def test_freeify_unit():
    fc = freeify(Complex.unit(1))
    assert fc.gens == [(0, 0, 0)]
    assert fc.Y[1] == PolyMatrix.scalar(Poly.var(1, 1), (0,))


def test_freeify_b1():
    fc = freeify(Complex.single(BSWord(2, (1,))))
    assert sorted(g[0] for g in fc.gens) == [-1, 1]
    x1, x2 = Poly.var(2, 1), Poly.var(2, 2)
    assert fc.Y[2].entries() == {(1, 0): Poly.one(2), (0, 1): -x1 * x2, (1, 1): x1 + x2}


def test_freeify_elementary_differential():
    fc = freeify(elementary_complex(1, 1))
    # B_1(1) generators come first, then R
    assert fc.gens == [(0, 0, -1), (2, 0, -1), (0, 0, 0)]
    assert fc.d_t.entries() == {(2, 0): Poly.one(2), (2, 1): Poly.var(2, 2)}


def test_trace_unit_one_strand():
    fc = trace_strand(freeify(Complex.unit(1)), 1)
    assert fc.gens == [(0, 0, 0), (-2, 1, 0)]
    assert fc.d_a.is_zero()
    assert fc.check()
    with pytest.raises(ValueError):
        trace_strand(fc, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exterior_pattern_for_r(n):
    fc = hochschild_full(Complex.unit(n))
    assert fc.d_a.is_zero()
    for m in range(n + 1):
        gens = [g for g in fc.gens if g[1] == m]
        assert len(gens) == comb(n, m)
        assert all(g[0] == -2 * m for g in gens)


def test_generator_count_for_crossing():
    assert len(hochschild_full(rouquier_complex(parse_braid("s1"))).gens) == 12


def test_full_trace_is_bicomplex():
    fc = hochschild_full(rouquier_complex(parse_braid("s1 -s2 s1")))
    assert fc.check()
    assert not fc.untraced


def test_koszul_operators_commute_with_differential():
    fc = freeify(rouquier_complex(parse_braid("s1 s2 s1 -s2"), simplify=False))
    for j, y in fc.Y.items():
        r = fc.left_mult(j) - y
        assert mat_mul(r, fc.d_t) == mat_mul(fc.d_t, r)
        for j2, y2 in fc.Y.items():
            assert mat_mul(r, fc.left_mult(j2) - y2) == mat_mul(fc.left_mult(j2) - y2, r)


@settings(max_examples=8)
@given(braids(3, 3))
def test_trace_order_is_irrelevant(b):
    c = rouquier_complex(b)
    fwd = hochschild_full(c)
    rev = freeify(c)
    for j in (3, 2, 1):
        rev = trace_strand(rev, j)
    lo = min(fwd.q_min(), rev.q_min())
    w = (lo, lo + 8)
    assert homology_iterated(fwd, w).entries == homology_iterated(rev, w).entries


def test_trace_of_crossings():
    unknot = hhh(parse_braid("", 1), (-2, 12))
    pos = hhh(parse_braid("s1"), (-2, 12))
    assert pos.entries == unknot.entries
    neg = hhh(parse_braid("-s1"), (-6, 8))
    assert neg.entries == unknot.shifted(-4, 1, 1).entries
