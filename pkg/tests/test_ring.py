import pytest
from hypothesis import given
from hypothesis import strategies as st

from krh.ring import Poly, PolyMatrix, degree_slice_dim, demazure, is_unit_invertible, mat_mul, monomial_basis, s_action, unit_inverse

from strategies import homogeneous_polys, polys

x1, x2, x3 = (Poly.var(3, i) for i in (1, 2, 3))
y1, y2 = Poly.var(2, 1), Poly.var(2, 2)


def test_addition_examples():
    assert (y1 + (-y1)).is_zero()
    assert (y1 * y2 + y1 * y2) == Poly.from_dict(2, {(1, 1): 2})
    assert y1 + y2 == Poly.from_dict(2, {(1, 0): 1, (0, 1): 1})


def test_multiplication_examples():
    p = y1 * y1 - y2
    assert Poly.one(2) * p == p
    assert (y1 - y2) * (y1 + y2) == y1 * y1 - y2 * y2
    assert (Poly.zero(2) * p).is_zero()


def test_var_count_mismatch():
    with pytest.raises(ValueError):
        Poly.var(2, 1) + Poly.var(3, 1)


def test_q_degree_is_twice_polynomial_degree():
    assert (x1 * x2 * x3).q_degree() == 6
    assert Poly.one(3).q_degree() == 0


def test_s_action_examples():
    assert s_action(1, x1) == x2
    assert s_action(1, x1 * x2) == x1 * x2
    assert s_action(1, x1 * x1 + x3) == x2 * x2 + x3
    with pytest.raises(ValueError):
        s_action(3, x1)


def test_demazure_examples():
    assert demazure(1, y1) == Poly.one(2)
    assert demazure(1, y2) == -Poly.one(2)
    assert demazure(1, y1 * y1) == y1 + y2


def test_mat_mul_examples():
    m = PolyMatrix.from_entries(2, (0, 2), (0, 2), {(0, 0): Poly.one(2), (0, 1): y1, (1, 1): Poly.one(2)})
    ident = PolyMatrix.identity(2, (0, 2))
    assert mat_mul(ident, m) == m
    assert mat_mul(m, PolyMatrix.zero(2, (0, 2), (0, 2))).is_zero()
    a = PolyMatrix.from_entries(2, (0,), (2,), {(0, 0): y1})
    b = PolyMatrix.from_entries(2, (2,), (4,), {(0, 0): y2})
    assert mat_mul(a, b)[0, 0] == y1 * y2


def test_mat_mul_shape_mismatch():
    a = PolyMatrix.identity(2, (0, 2))
    b = PolyMatrix.identity(2, (0,))
    with pytest.raises(ValueError):
        mat_mul(a, b)


def test_unit_invertibility():
    assert is_unit_invertible(PolyMatrix.identity(2, (0, 2, 2)))
    assert not is_unit_invertible(PolyMatrix.scalar(Poly.const(2, 2), (0,)))
    m = PolyMatrix.from_entries(2, (0, 2), (0, 2), {(0, 0): Poly.one(2), (0, 1): y1, (1, 1): -Poly.one(2)})
    inv = unit_inverse(m)
    assert inv is not None
    assert mat_mul(m, inv) == PolyMatrix.identity(2, (0, 2))
    assert inv == m


def test_degree_slice_dim():
    assert degree_slice_dim(1, 4) == 1
    assert degree_slice_dim(2, 2) == 2
    assert degree_slice_dim(3, 4) == 6
    assert degree_slice_dim(2, 3) == 0
    assert degree_slice_dim(2, -2) == 0
    keys, idx = monomial_basis(3, 2)  # polynomial degree 2 = q-degree 4
    assert len(keys) == 6 and len(idx) == 6


@given(polys(3), polys(3), polys(3))
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.zero(3)


@given(polys(3), st.integers(1, 2))
def test_s_action_involutive_ring_map(a, i):
    assert s_action(i, s_action(i, a)) == a


@given(polys(3), polys(3), st.integers(1, 2))
def test_s_action_multiplicative(a, b, i):
    assert s_action(i, a * b) == s_action(i, a) * s_action(i, b)


@given(polys(3), polys(3), st.integers(1, 2))
def test_demazure_twisted_leibniz(a, b, i):
    assert demazure(i, a * b) == demazure(i, a) * b + s_action(i, a) * demazure(i, b)
    assert demazure(i, demazure(i, a)).is_zero()


@given(homogeneous_polys(3, 3), st.integers(1, 2))
def test_demazure_lowers_degree(p, i):
    d = demazure(i, p)
    assert d.is_zero() or d.q_degree() == p.q_degree() - 2


@given(homogeneous_polys(2, 1), homogeneous_polys(2, 1))
def test_unit_inverse_roundtrip(p, r):
    # upper unitriangular with polynomial corners is always invertible
    one = Poly.one(2)
    degs = (0, 2, 4)
    m = PolyMatrix.from_entries(2, degs, degs, {(0, 0): one, (1, 1): -one, (2, 2): one, (0, 1): p, (1, 2): r, (0, 2): p * r})
    assert m.check_homogeneous()
    inv = unit_inverse(m)
    assert mat_mul(m, inv) == PolyMatrix.identity(2, degs)
    assert mat_mul(inv, m) == PolyMatrix.identity(2, degs)
