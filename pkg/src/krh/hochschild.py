"""Hochschild cohomology of bimodule complexes as free bicomplexes.

``freeify`` forgets a complex of BS words down to free left modules and
records right multiplication by each ``x_j`` as a matrix ``Y_j``.
``trace_strand`` then takes the two-term Koszul cone on ``L_j - Y_j``.
No second set of variables ever enters the polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .homotopy import Complex
from .ring import Poly, PolyMatrix, mat_mul
from .soergel import right_mult_matrix

__all__ = ["FreeComplex", "freeify", "trace_strand", "hochschild_full"]


@dataclass
class FreeComplex:
    """Free graded ``Z[x_1..x_n]``-modules with commuting ``d_a`` and ``d_t``.

    ``gens[g] = (q, a, t)``.  ``d_t`` and ``d_a`` are square PolyMatrices
    over all generators (rows are targets).  ``Y`` holds right actions for
    strands not yet traced.
    """

    n_vars: int
    gens: list[tuple[int, int, int]]
    d_t: PolyMatrix
    d_a: PolyMatrix
    Y: dict[int, PolyMatrix] = field(default_factory=dict)

    @property
    def untraced(self) -> set[int]:
        return set(self.Y)

    def __len__(self) -> int:
        return len(self.gens)

    def degrees(self) -> tuple[int, ...]:
        return tuple(g[0] for g in self.gens)

    def left_mult(self, j: int) -> PolyMatrix:
        return PolyMatrix.scalar(Poly.var(self.n_vars, j), self.degrees())

    def check(self) -> bool:
        """Bicomplex identities and commutation of the recorded actions."""
        def zero(m: PolyMatrix) -> bool:
            return m.is_zero()

        dt, da = self.d_t, self.d_a
        if not zero(mat_mul(dt, dt)) or not zero(mat_mul(da, da)):
            return False
        if mat_mul(da, dt) != mat_mul(dt, da):
            return False
        ys = list(self.Y.values())
        for y in ys:
            if mat_mul(y, dt) != mat_mul(dt, y) or mat_mul(y, da) != mat_mul(da, y):
                return False
        for i in range(len(ys)):
            for j in range(i + 1, len(ys)):
                if mat_mul(ys[i], ys[j]) != mat_mul(ys[j], ys[i]):
                    return False
        return True

    def q_min(self) -> int:
        return min((g[0] for g in self.gens), default=0)

    def euler_numerator(self) -> dict[tuple[int, int], int]:
        """``sum (-1)^t q^q a^a`` over generators, keyed by ``(q, a)``."""
        out: dict[tuple[int, int], int] = {}
        for q, a, t in self.gens:
            out[q, a] = out.get((q, a), 0) + (-1 if t % 2 else 1)
        return {k: v for k, v in out.items() if v}


def freeify(c: Complex) -> FreeComplex:
    n = c.strands
    gens: list[tuple[int, int, int]] = []
    offset: dict[int, int] = {}
    for k in c.ids():
        t, w = c.objects[k]
        offset[k] = len(gens)
        gens.extend((d, 0, t) for d in w.basis_degrees())
    degs = tuple(g[0] for g in gens)
    cols: dict[int, dict[int, Poly]] = {}
    for s, tgt, m in c.blocks():
        so, to = offset[s], offset[tgt]
        for col, entries in m.cols.items():
            cols.setdefault(so + col, {}).update({to + r: p for r, p in entries.items()})
    d_t = PolyMatrix(n, degs, degs, cols)
    d_a = PolyMatrix.zero(n, degs, degs)
    Y = {}
    for j in range(1, n + 1):
        ycols: dict[int, dict[int, Poly]] = {}
        for k in c.ids():
            _, w = c.objects[k]
            o = offset[k]
            for col, entries in right_mult_matrix(w, j).cols.items():
                ycols[o + col] = {o + r: p for r, p in entries.items()}
        Y[j] = PolyMatrix(n, degs, degs, ycols, 2)
    return FreeComplex(n, gens, d_t, d_a, Y)


def _double(m: PolyMatrix, degs: tuple[int, ...], shift: int, sign: int) -> dict[int, dict[int, Poly]]:
    cols = {c: dict(col) for c, col in m.cols.items()}
    for c, col in m.cols.items():
        cols[c + shift] = {r + shift: (p if sign > 0 else -p) for r, p in col.items()}
    return cols


def trace_strand(fc: FreeComplex, j: int) -> FreeComplex:
    """Koszul cone on ``x_j - y_j``: every generator gains a copy at ``(q-2, a+1, t)``."""
    if j not in fc.Y:
        raise ValueError(f"strand {j} is already traced or out of range")
    N = len(fc.gens)
    gens = list(fc.gens) + [(q - 2, a + 1, t) for q, a, t in fc.gens]
    degs = tuple(g[0] for g in gens)
    n = fc.n_vars
    d_t = PolyMatrix(n, degs, degs, _double(fc.d_t, degs, N, +1))
    da_cols = _double(fc.d_a, degs, N, -1)
    xj = Poly.var(n, j)
    yj = fc.Y[j]
    for c in range(N):
        col = {r: -p for r, p in yj.cols.get(c, {}).items()}
        col[c] = col[c] + xj if c in col else xj
        col = {r + N: p for r, p in col.items() if p}
        if col:
            da_cols.setdefault(c, {}).update(col)
    d_a = PolyMatrix(n, degs, degs, da_cols)
    Y = {}
    for jj, y in fc.Y.items():
        if jj != j:
            Y[jj] = PolyMatrix(n, degs, degs, _double(y, degs, N, +1), 2)
    return FreeComplex(n, gens, d_t, d_a, Y)


def hochschild_full(c: Complex | FreeComplex) -> FreeComplex:
    fc = c if isinstance(c, FreeComplex) else freeify(c)
    for j in sorted(fc.Y):
        fc = trace_strand(fc, j)
    return fc
