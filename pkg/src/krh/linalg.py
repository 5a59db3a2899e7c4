"""Exact linear algebra for homology: sparse cancellation and dense SNF.

The workhorse is :class:`SparseComplex`, a based complex over some
coefficient ring on which unit entries of the differential are cancelled
(Gaussian elimination of complexes).  Whatever survives is small and goes
through the dense Smith normal form routines at the bottom of the file.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Generic, Hashable, TypeVar

__all__ = [
    "Coeffs",
    "ZZ",
    "QQ",
    "GF",
    "POLY",
    "coeffs_for",
    "SparseComplex",
    "SNFResult",
    "snf",
    "invariant_factors",
    "kernel_basis",
    "column_basis",
    "solve_in_basis",
    "mat_mul_int",
    "identity",
]

C = TypeVar("C")


@dataclass(frozen=True)
class Coeffs(Generic[C]):
    """Coefficient ring operations used by the eliminator."""

    name: str
    convert: Callable[[int], C]
    is_unit: Callable[[C], bool]
    inv: Callable[[C], C]
    is_zero: Callable[[C], bool]
    reduce: Callable[[C], C]
    is_field: bool
    characteristic: int = 0


def _zz_unit(c: int) -> bool:
    return c == 1 or c == -1


ZZ: Coeffs[int] = Coeffs("Z", int, _zz_unit, lambda c: c, lambda c: c == 0, lambda c: c, False)
QQ: Coeffs[Fraction] = Coeffs(
    "Q", Fraction, lambda c: c != 0, lambda c: 1 / c, lambda c: c == 0, lambda c: c, True
)


def _poly_unit(p) -> bool:
    t = p.terms
    return len(t) == 1 and t.get(0) in (1, -1)


POLY = Coeffs("Z[x]", lambda c: c, _poly_unit, lambda p: p, lambda p: not p, lambda p: p, False)


def GF(p: int) -> Coeffs[int]:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return Coeffs(
        f"F{p}",
        lambda c: c % p,
        lambda c: c % p != 0,
        lambda c: pow(c, -1, p),
        lambda c: c % p == 0,
        lambda c: c % p,
        True,
        p,
    )


def coeffs_for(spec: str | int) -> Coeffs:
    """``"Z"``, ``"Q"``, a prime ``p`` or ``"F<p>"``/``"GF<p>"``."""
    if isinstance(spec, int):
        return GF(spec)
    s = str(spec).strip().upper()
    if s in ("Z", "ZZ"):
        return ZZ
    if s in ("Q", "QQ"):
        return QQ
    for pre in ("GF", "F"):
        if s.startswith(pre) and s[len(pre):].isdigit():
            return GF(int(s[len(pre):]))
    if s.isdigit():
        return GF(int(s))
    raise ValueError(f"unknown coefficient ring {spec!r}")


V = TypeVar("V", bound=Hashable)


class SparseComplex:
    """Based complex: vertices carry a label, edges carry coefficients.

    ``out[v][w]`` is the coefficient of ``w`` in ``d(v)``.  Multiplication
    order for noncommutative coefficients is never needed: every ring used
    here is commutative.
    """

    def __init__(self, ring: Coeffs):
        self.ring = ring
        self.label: dict = {}
        self.out: dict = {}
        self.inc: dict = {}

    def add_vertex(self, v, label) -> None:
        self.label[v] = label
        self.out[v] = {}
        self.inc[v] = {}

    def add_edge(self, v, w, c) -> None:
        """Accumulate ``c`` onto the coefficient of ``v -> w``."""
        out_v = self.out[v]
        c = self.ring.reduce(out_v[w] + c if w in out_v else c)
        if self.ring.is_zero(c):
            if w in out_v:
                del out_v[w]
                del self.inc[w][v]
            return
        out_v[w] = c
        self.inc[w][v] = c

    def remove_vertex(self, v) -> None:
        for w in self.out.pop(v):
            del self.inc[w][v]
        for u in self.inc.pop(v):
            del self.out[u][v]
        del self.label[v]

    def __len__(self) -> int:
        return len(self.label)

    def edge_count(self) -> int:
        return sum(len(o) for o in self.out.values())

    def edges(self):
        for v, o in self.out.items():
            for w, c in o.items():
                yield v, w, c

    def drop_edges(self, keep: Callable[[object, object], bool]) -> None:
        for v, w, _ in list(self.edges()):
            if not keep(self.label[v], self.label[w]):
                del self.out[v][w]
                del self.inc[w][v]

    def eliminate(self, allowed: Callable[[object, object], bool] | None = None, ring: Coeffs | None = None) -> int:
        """Cancel unit edges until none allowed remain; returns the count.

        Pivots are chosen greedily by Markowitz cost so that fill-in stays
        small.  ``allowed(label_src, label_tgt)`` restricts which edges may
        be used, e.g. to keep a filtration intact.
        """
        ring = ring or self.ring
        is_unit = ring.is_unit
        label = self.label
        out, inc = self.out, self.inc
        ok = allowed or (lambda a, b: True)
        heap: list = []
        counter = 0

        def push(v, w):
            nonlocal counter
            cost = (len(inc[w]) - 1) * (len(out[v]) - 1)
            heapq.heappush(heap, (cost, counter, v, w))
            counter += 1

        for v, o in out.items():
            for w, c in o.items():
                if is_unit(c) and ok(label[v], label[w]):
                    push(v, w)
        done = 0
        while heap:
            cost, _, s, t = heapq.heappop(heap)
            o = out.get(s)
            if o is None or t not in o:
                continue
            b = o[t]
            if not is_unit(b):
                continue
            now = (len(inc[t]) - 1) * (len(o) - 1)
            if now > cost:
                heapq.heappush(heap, (now, counter, s, t))
                counter += 1
                continue
            binv = ring.inv(b)
            into_t = [(x, a) for x, a in inc[t].items() if x != s]
            out_s = [(y, c * binv) for y, c in o.items() if y != t]
            self.remove_vertex(s)
            self.remove_vertex(t)
            for x, a in into_t:
                for y, cb in out_s:
                    self.add_edge(x, y, -(cb * a))
                    c2 = out[x].get(y)
                    if c2 is not None and is_unit(c2) and ok(label[x], label[y]):
                        push(x, y)
            done += 1
        return done


# --- dense integer matrices -------------------------------------------------

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul_int(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    if not a:
        return []
    k = len(b) if inner is None else inner
    cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(len(a))]
    for i, row in enumerate(a):
        o = out[i]
        for j in range(k):
            x = row[j]
            if x:
                for c, y in enumerate(b[j]):
                    if y:
                        o[c] += x * y
    return out


@dataclass
class SNFResult:
    U: Matrix
    D: Matrix
    V: Matrix
    rank: int
    divisors: tuple[int, ...]
    # S m T = D with S = U^-1, T = V^-1
    S: Matrix | None = None
    T: Matrix | None = None


def _snf_core(m: Matrix, nrows: int, ncols: int, track: bool):
    A = [list(r) for r in m]
    if track:
        S, Si, T, Ti = identity(nrows), identity(nrows), identity(ncols), identity(ncols)

    def row_swap(i, k):
        A[i], A[k] = A[k], A[i]
        if track:
            S[i], S[k] = S[k], S[i]
            for r in Si:
                r[i], r[k] = r[k], r[i]

    def col_swap(j, k):
        for r in A:
            r[j], r[k] = r[k], r[j]
        if track:
            for r in T:
                r[j], r[k] = r[k], r[j]
            Ti[j], Ti[k] = Ti[k], Ti[j]

    def row_sub(i, k, q):  # row_i -= q row_k
        Ai, Ak = A[i], A[k]
        for j in range(ncols):
            if Ak[j]:
                Ai[j] -= q * Ak[j]
        if track:
            Si_, Sk = S[i], S[k]
            for j in range(nrows):
                if Sk[j]:
                    Si_[j] -= q * Sk[j]
            for r in Si:
                if r[i]:
                    r[k] += q * r[i]

    def col_sub(j, k, q):  # col_j -= q col_k
        for r in A:
            if r[k]:
                r[j] -= q * r[k]
        if track:
            for r in T:
                if r[k]:
                    r[j] -= q * r[k]
            Tk, Tj = Ti[k], Ti[j]
            for c in range(ncols):
                if Tj[c]:
                    Tk[c] += q * Tj[c]

    def row_neg(k):
        A[k] = [-x for x in A[k]]
        if track:
            S[k] = [-x for x in S[k]]
            for r in Si:
                r[k] = -r[k]

    k = 0
    while k < min(nrows, ncols):
        best = None
        for i in range(k, nrows):
            for j, x in enumerate(A[i][k:], start=k):
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != k:
            row_swap(i, k)
        if j != k:
            col_swap(j, k)
        while True:
            p = A[k][k]
            dirty = False
            for i in range(k + 1, nrows):
                if A[i][k]:
                    row_sub(i, k, A[i][k] // p)
                    if A[i][k]:
                        dirty = True
            for j in range(k + 1, ncols):
                if A[k][j]:
                    col_sub(j, k, A[k][j] // p)
                    if A[k][j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(k, nrows):
                    if A[i][k] and (best is None or abs(A[i][k]) < best[0]):
                        best = (abs(A[i][k]), i, k)
                for j in range(k, ncols):
                    if A[k][j] and (best is None or abs(A[k][j]) < best[0]):
                        best = (abs(A[k][j]), k, j)
                _, i, j = best
                if i != k:
                    row_swap(i, k)
                if j != k:
                    col_swap(j, k)
                continue
            # divisibility of the remaining block
            bad = None
            for i in range(k + 1, nrows):
                for j in range(k + 1, ncols):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # row_k += row_bad
            row_sub(k, bad, -1)
        if A[k][k] < 0:
            row_neg(k)
        k += 1
    if track:
        return A, k, S, Si, T, Ti
    return A, k, None, None, None, None


def snf(m: Matrix, ncols: int | None = None) -> SNFResult:
    """Smith normal form ``m = U D V`` with unimodular ``U`` and ``V``."""
    nrows = len(m)
    ncols = len(m[0]) if m else (ncols or 0)
    D, r, S, Si, T, Ti = _snf_core(m, nrows, ncols, True)
    divs = tuple(D[i][i] for i in range(r))
    return SNFResult(Si, D, Ti, r, divs, S, T)


def invariant_factors(m: Matrix, ncols: int | None = None) -> tuple[int, ...]:
    nrows = len(m)
    ncols = len(m[0]) if m else (ncols or 0)
    D, r, *_ = _snf_core(m, nrows, ncols, False)
    return tuple(D[i][i] for i in range(r))


def _columns(m: Matrix, idx) -> Matrix:
    return [[row[j] for j in idx] for row in m]


def kernel_basis(m: Matrix, ncols: int) -> Matrix:
    """Columns spanning the integer kernel (a saturated lattice)."""
    if not m:
        return identity(ncols)
    res = snf(m, ncols)
    return _columns(res.T, range(res.rank, ncols))


def column_basis(gens: Matrix, nrows: int) -> Matrix:
    """A basis (as columns) of the lattice spanned by the columns of ``gens``."""
    if not gens or not gens[0]:
        return [[] for _ in range(nrows)]
    ncols = len(gens[0])
    res = snf(gens, ncols)
    at = mat_mul_int(gens, res.T)
    return _columns(at, range(res.rank))


def solve_in_basis(basis: Matrix, vecs: Matrix, nrows: int) -> Matrix:
    """Coordinates (as columns) of the columns of ``vecs`` in ``basis``.

    Raises ``ArithmeticError`` if some vector is outside the lattice.
    """
    k = len(basis[0]) if basis and basis[0] else 0
    nv = len(vecs[0]) if vecs and vecs[0] else 0
    if nv == 0:
        return [[] for _ in range(k)]
    if k == 0:
        if any(x for row in vecs for x in row):
            raise ArithmeticError("vector outside lattice")
        return []
    res = snf(basis, k)
    sv = mat_mul_int(res.S, vecs)
    y = [[0] * nv for _ in range(k)]
    for i in range(nrows):
        for c in range(nv):
            x = sv[i][c]
            if i < k:
                d = res.D[i][i]
                if x % d:
                    raise ArithmeticError("vector outside lattice")
                y[i][c] = x // d
            elif x:
                raise ArithmeticError("vector outside lattice")
    return mat_mul_int(res.T, y)
