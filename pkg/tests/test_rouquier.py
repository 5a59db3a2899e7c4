import pytest

from krh.homotopy import Complex, cx_cone, cx_tensor, simplify
from krh.rouquier import (
    BraidParseError,
    BraidWord,
    elementary_complex,
    jm_braid,
    p2_complex,
    parse_braid,
    q2_complex,
    rouquier_complex,
    stable_range,
    torus_braid,
    unit_inclusion,
)
from krh.rouquier import ResourceLimit
from krh.soergel import BSWord


def test_parse_braid():
    b = parse_braid("s1 -s2 s1")
    assert b.strands == 3 and b.letters == ((1, 1), (2, -1), (1, 1))
    assert str(b) == "s1 -s2 s1"
    assert parse_braid("", 1) == BraidWord(1)
    assert parse_braid("torus(2,3)").letters == ((1, 1),) * 3
    assert parse_braid("jm(3)").strands == 3
    assert parse_braid("s1", 4).strands == 4
    for bad in ("s0", "x1", "s1 s", "torus(2)", "jm(1)"):
        with pytest.raises(BraidParseError):
            parse_braid(bad)
    with pytest.raises(BraidParseError):
        parse_braid("s3", 2)


def test_braid_word_basics():
    b = parse_braid("s1 s2 -s1")
    assert b.exponent == 1
    assert b.inverse().letters == ((1, 1), (2, -1), (1, -1))
    assert not b.is_positive()
    with pytest.raises(ValueError):
        BraidWord(2, ((2, 1),))


def test_elementary_complexes():
    assert elementary_complex(1, 1).graded_object() == [(-1, (1,), 1), (0, (), 0)]
    assert elementary_complex(1, -1).graded_object() == [(0, (), 0), (1, (1,), -1)]
    assert elementary_complex(1, 1).check_d2()
    with pytest.raises(ValueError):
        elementary_complex(2, 1, 2)


def test_rouquier_examples():
    assert rouquier_complex(BraidWord(2)).graded_object() == [(0, (), 0)]
    assert rouquier_complex(parse_braid("s1 -s1")).graded_object() == [(0, (), 0)]
    assert rouquier_complex(parse_braid("-s1 s1")).graded_object() == [(0, (), 0)]
    with pytest.raises(ResourceLimit):
        rouquier_complex(torus_braid(3, 3), max_generators=4)


def test_torus_and_jm():
    assert torus_braid(2, 3) == BraidWord(2, ((1, 1),) * 3)
    assert torus_braid(3, 1) == BraidWord(3, ((2, 1), (1, 1)))
    assert torus_braid(1, 5) == BraidWord(1)
    assert jm_braid(2) == BraidWord(2, ((1, 1), (1, 1)))
    assert jm_braid(3) == BraidWord(3, ((2, 1), (1, 1), (1, 1), (2, 1)))
    assert all(jm_braid(n).exponent == 2 * (n - 1) for n in range(2, 6))


def test_unit_inclusion():
    f = unit_inclusion(parse_braid("s1"))
    assert f.is_chain_map()
    cone = simplify(cx_cone(f))
    # the cone leaves B_1(1) alone in homological degree -1
    assert cone.graded_object() == [(-1, (1,), 1)]
    e = unit_inclusion(BraidWord(2))
    assert e.is_chain_map() and simplify(cx_cone(e)).is_empty()
    with pytest.raises(ValueError):
        unit_inclusion(parse_braid("-s1"))


def test_p2_complex():
    p1 = p2_complex(1)
    assert p1.graded_object() == elementary_complex(1, 1).graded_object()
    for n in (2, 4, 6):
        assert p2_complex(n).check_d2()
    objs = {t: (l, q) for t, l, q in p2_complex(4).graded_object()}
    assert objs[-3] == ((1,), 5)
    assert objs[0] == ((), 0)
    assert [t for t, l, q in p2_complex(5).graded_object() if not l] == [0]


def test_q2_complex():
    q = q2_complex()
    assert q.graded_object() == [(-3, (), 4), (-2, (1,), 3), (-1, (1,), 1), (0, (), 0)]
    assert q.check_d2()
    assert simplify(cx_tensor(q, Complex.single(BSWord(2, (1,))))).is_empty()


def test_p2_absorbs_b1():
    b1 = Complex.single(BSWord(2, (1,)))
    for n in (2, 4, 6):
        s = simplify(cx_tensor(p2_complex(n), b1))
        assert all(t <= -(n - 1) for t in s.t_values())


def test_stable_range():
    sr = stable_range(2, 4)
    assert (sr.support_lo2, sr.support_hi2) == (-6, 2)
    assert stable_range(3, 3).support_lo2 == -9 and stable_range(3, 3).support_hi2 == 3
    assert stable_range(3, 4).stable_lo2 == 5 - 4
    one = stable_range(1, 3)
    assert one.support_lo2 == one.support_hi2 == -1
    assert sr.in_stable(2) and not sr.in_stable(sr.stable_lo2)
