from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krh.linalg import GF, QQ, ZZ, SparseComplex, coeffs_for, identity, invariant_factors, kernel_basis, mat_mul_int, snf


def det(m):
    n = len(m)
    if n == 0:
        return 1
    m = [[Fraction(x) for x in r] for r in m]
    d = Fraction(1)
    for i in range(n):
        p = next((r for r in range(i, n) if m[r][i]), None)
        if p is None:
            return 0
        if p != i:
            m[i], m[p] = m[p], m[i]
            d = -d
        d *= m[i][i]
        for r in range(i + 1, n):
            f = m[r][i] / m[i][i]
            m[r] = [a - f * b for a, b in zip(m[r], m[i])]
    return d


def test_snf_examples():
    assert snf(identity(3)).divisors == (1, 1, 1)
    assert snf([[2, 0], [0, 3]]).divisors == (1, 6)
    z = snf([[0, 0], [0, 0]])
    assert z.rank == 0 and z.divisors == ()
    assert invariant_factors([[2, 4], [6, 8]]) == (2, 4)


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_snf_udv(m):
    res = snf(m)
    assert mat_mul_int(mat_mul_int(res.U, res.D), res.V) == m
    assert abs(det(res.U)) == 1 and abs(det(res.V)) == 1
    assert mat_mul_int(mat_mul_int(res.S, m), res.T) == res.D
    divs = res.divisors
    assert all(d > 0 for d in divs)
    assert all(divs[i + 1] % divs[i] == 0 for i in range(len(divs) - 1))


@given(matrices)
def test_kernel_basis(m):
    k = kernel_basis(m, len(m[0]))
    if k and k[0]:
        assert all(x == 0 for row in mat_mul_int(m, k) for x in row)
    assert (len(k[0]) if k and k[0] else 0) == len(m[0]) - snf(m).rank


def test_coeffs_for():
    assert coeffs_for("Z") is ZZ and coeffs_for("q") is QQ
    assert coeffs_for(3).characteristic == 3 and coeffs_for("F2").characteristic == 2
    with pytest.raises(ValueError):
        coeffs_for("R")


def test_sparse_elimination_two_term():
    sc = SparseComplex(ZZ)
    sc.add_vertex("a", (0, 0))
    sc.add_vertex("b", (0, 1))
    sc.add_vertex("c", (0, 1))
    sc.add_edge("a", "b", 1)
    sc.add_edge("a", "c", 2)
    sc.eliminate()
    assert set(sc.label) == {"c"}
    sc = SparseComplex(GF(2))
    sc.add_vertex("a", 0)
    sc.add_vertex("b", 1)
    sc.add_edge("a", "b", 2)
    assert not list(sc.edges())
