"""Sparse integer polynomials in x_1..x_n and graded polynomial matrices.

Monomials are packed into a single Python int, 16 bits per variable, so
that monomial multiplication is integer addition.  Variable ``x_i`` is
1-based throughout the public API.  The q-degree of a monomial is twice
its total degree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = [
    "MAX_VARS",
    "Poly",
    "PolyMatrix",
    "poly_add",
    "poly_mul",
    "s_action",
    "demazure",
    "mat_mul",
    "is_unit_invertible",
    "unit_inverse",
    "degree_slice_dim",
    "monomial_basis",
]

MAX_VARS = 8
_BITS = 16
_MASK = (1 << _BITS) - 1


def pack(exps: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MASK:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (_BITS * i)
    return key


def unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(n))


def mono_degree(key: int) -> int:
    d = 0
    while key:
        d += key & _MASK
        key >>= _BITS
    return d


def var_key(i: int) -> int:
    """Packed monomial of x_i (1-based)."""
    return 1 << (_BITS * (i - 1))


def _swap_key(key: int, i: int) -> int:
    # swap exponents of x_i and x_{i+1}
    lo = _BITS * (i - 1)
    hi = lo + _BITS
    a = (key >> lo) & _MASK
    b = (key >> hi) & _MASK
    if a == b:
        return key
    key &= ~((_MASK << lo) | (_MASK << hi))
    return key | (b << lo) | (a << hi)


class Poly:
    """Immutable polynomial with integer coefficients.

    ``terms`` maps a packed exponent to a nonzero int.  Construct through
    the class helpers (:meth:`var`, :meth:`const`, :meth:`from_dict`) rather
    than by passing unpruned dictionaries.
    """

    __slots__ = ("n_vars", "terms", "_hash")

    def __init__(self, n_vars: int, terms: Mapping[int, int] | None = None, *, _trusted: bool = False):
        if not 0 <= n_vars <= MAX_VARS:
            raise ValueError(f"n_vars must be in [0, {MAX_VARS}]")
        self.n_vars = n_vars
        if terms is None:
            self.terms: dict[int, int] = {}
        elif _trusted:
            self.terms = terms  # type: ignore[assignment]
        else:
            self.terms = {k: int(c) for k, c in terms.items() if c}
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls(n)

    @classmethod
    def const(cls, n: int, c: int) -> Poly:
        return cls(n, {0: c} if c else None, _trusted=True)

    @classmethod
    def one(cls, n: int) -> Poly:
        return cls.const(n, 1)

    @classmethod
    def var(cls, n: int, i: int) -> Poly:
        if not 1 <= i <= n:
            raise ValueError(f"variable x_{i} out of range for n={n}")
        return cls(n, {var_key(i): 1}, _trusted=True)

    @classmethod
    def monomial(cls, n: int, exps: Iterable[int], c: int = 1) -> Poly:
        exps = tuple(exps)
        if len(exps) != n:
            raise ValueError("exponent vector length mismatch")
        return cls(n, {pack(exps): c} if c else None, _trusted=True)

    @classmethod
    def from_dict(cls, n: int, d: Mapping[tuple[int, ...], int]) -> Poly:
        out: dict[int, int] = {}
        for exps, c in d.items():
            if len(exps) != n:
                raise ValueError("exponent vector length mismatch")
            k = pack(exps)
            out[k] = out.get(k, 0) + c
        return cls(n, {k: c for k, c in out.items() if c}, _trusted=True)

    # queries ------------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self) -> int:
        return self.terms.get(0, 0)

    def degree(self) -> int:
        """Total polynomial degree (-1 for zero)."""
        return max((mono_degree(k) for k in self.terms), default=-1)

    def q_degree(self) -> int | None:
        """q-degree if homogeneous (None for zero or inhomogeneous)."""
        degs = {mono_degree(k) for k in self.terms}
        if len(degs) != 1:
            return None
        return 2 * degs.pop()

    def is_homogeneous(self) -> bool:
        return len({mono_degree(k) for k in self.terms}) <= 1

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for k, c in self.terms.items():
            yield unpack(k, self.n_vars), c

    def to_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.items())

    # arithmetic ---------------------------------------------------------
    def _check(self, other: Poly) -> None:
        if self.n_vars != other.n_vars:
            raise ValueError(f"variable count mismatch: {self.n_vars} vs {other.n_vars}")

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, int):
            return Poly.const(self.n_vars, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Poly(self.n_vars, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.n_vars, {k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Poly(self.n_vars, out, _trusted=True)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            if not other:
                return Poly(self.n_vars)
            return Poly(self.n_vars, {k: c * other for k, c in self.terms.items()}, _trusted=True)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Poly(self.n_vars, {k: c for k, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative power")
        result = Poly.one(self.n_vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n_vars == other.n_vars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n_vars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exps) if e
            )
            if not mono:
                s = str(abs(c))
            elif abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", s))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out

    def __str__(self) -> str:
        return repr(self)


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def _check_generator(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} variables")


def s_action(i: int, p: Poly) -> Poly:
    """Swap x_i and x_{i+1}."""
    _check_generator(i, p.n_vars)
    return Poly(p.n_vars, {_swap_key(k, i): c for k, c in p.terms.items()}, _trusted=True)


def _demazure_mono(key: int, i: int) -> dict[int, int]:
    # closed form of (m - s_i m)/(x_i - x_{i+1}) on a single monomial
    lo = _BITS * (i - 1)
    hi = lo + _BITS
    a = (key >> lo) & _MASK
    b = (key >> hi) & _MASK
    if a == b:
        return {}
    rest = key & ~((_MASK << lo) | (_MASK << hi))
    out = {}
    if a > b:
        for k in range(a - b):
            out[rest | ((a - 1 - k) << lo) | ((b + k) << hi)] = 1
    else:
        for k in range(b - a):
            out[rest | ((a + k) << lo) | ((b - 1 - k) << hi)] = -1
    return out


def demazure(i: int, p: Poly, *, check: bool = True) -> Poly:
    """Divided difference (p - s_i p) / (x_i - x_{i+1}).

    The quotient is computed monomial by monomial; with ``check`` the
    product is multiplied back and any mismatch raises ``ArithmeticError``,
    which callers must not catch (it can only mean a logic bug).
    """
    _check_generator(i, p.n_vars)
    out: dict[int, int] = {}
    for k, c in p.terms.items():
        for k2, c2 in _demazure_mono(k, i).items():
            v = out.get(k2, 0) + c * c2
            if v:
                out[k2] = v
            else:
                del out[k2]
    q = Poly(p.n_vars, out, _trusted=True)
    if check:
        lin = Poly.var(p.n_vars, i) - Poly.var(p.n_vars, i + 1)
        if lin * q != p - s_action(i, p):
            raise ArithmeticError(f"inexact divided difference for {p!r}")
    return q


# ---------------------------------------------------------------------------
# matrices


class PolyMatrix:
    """Sparse matrix of polynomials with graded rows and columns.

    Stored column-major: ``cols[c][r]`` is the entry mapping basis vector
    ``c`` of the source to basis vector ``r`` of the target.  ``degree`` is
    the q-degree of the map; a nonzero entry at ``(r, c)`` must be
    homogeneous of q-degree ``col_degrees[c] + degree - row_degrees[r]``.
    """

    __slots__ = ("n_vars", "nrows", "ncols", "row_degrees", "col_degrees", "degree", "cols")

    def __init__(
        self,
        n_vars: int,
        row_degrees: Iterable[int],
        col_degrees: Iterable[int],
        cols: dict[int, dict[int, Poly]] | None = None,
        degree: int = 0,
    ):
        self.n_vars = n_vars
        self.row_degrees = tuple(row_degrees)
        self.col_degrees = tuple(col_degrees)
        self.nrows = len(self.row_degrees)
        self.ncols = len(self.col_degrees)
        self.degree = degree
        self.cols: dict[int, dict[int, Poly]] = {}
        if cols:
            for c, col in cols.items():
                col = {r: p for r, p in col.items() if p}
                if col:
                    self.cols[c] = col

    @classmethod
    def from_entries(cls, n_vars, row_degrees, col_degrees, entries: Mapping[tuple[int, int], Poly], degree=0):
        cols: dict[int, dict[int, Poly]] = {}
        for (r, c), p in entries.items():
            if p:
                cols.setdefault(c, {})[r] = p
        return cls(n_vars, row_degrees, col_degrees, cols, degree)

    @classmethod
    def identity(cls, n_vars: int, degrees: Iterable[int]) -> PolyMatrix:
        degrees = tuple(degrees)
        one = Poly.one(n_vars)
        return cls(n_vars, degrees, degrees, {i: {i: one} for i in range(len(degrees))})

    @classmethod
    def zero(cls, n_vars, row_degrees, col_degrees, degree=0) -> PolyMatrix:
        return cls(n_vars, row_degrees, col_degrees, None, degree)

    @classmethod
    def scalar(cls, p: Poly, degrees: Iterable[int], degree: int | None = None) -> PolyMatrix:
        degrees = tuple(degrees)
        if degree is None:
            degree = p.q_degree() or 0
        return cls(p.n_vars, degrees, degrees, {i: {i: p} for i in range(len(degrees))} if p else None, degree)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def entries(self) -> dict[tuple[int, int], Poly]:
        return {(r, c): p for c, col in self.cols.items() for r, p in col.items()}

    def __getitem__(self, rc: tuple[int, int]) -> Poly:
        r, c = rc
        return self.cols.get(c, {}).get(r) or Poly.zero(self.n_vars)

    def is_zero(self) -> bool:
        return not self.cols

    def column(self, c: int) -> dict[int, Poly]:
        return self.cols.get(c, {})

    def rows(self) -> dict[int, dict[int, Poly]]:
        out: dict[int, dict[int, Poly]] = {}
        for c, col in self.cols.items():
            for r, p in col.items():
                out.setdefault(r, {})[c] = p
        return out

    def check_homogeneous(self) -> bool:
        for c, col in self.cols.items():
            for r, p in col.items():
                want = self.col_degrees[c] + self.degree - self.row_degrees[r]
                if p.q_degree() != want:
                    return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        self._check_same(other)
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            tgt = cols.setdefault(c, {})
            for r, p in col.items():
                tgt[r] = tgt[r] + p if r in tgt else p
        return PolyMatrix(self.n_vars, self.row_degrees, self.col_degrees, cols, self.degree)

    def __neg__(self) -> PolyMatrix:
        return PolyMatrix(
            self.n_vars, self.row_degrees, self.col_degrees,
            {c: {r: -p for r, p in col.items()} for c, col in self.cols.items()}, self.degree,
        )

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        return self + (-other)

    def scale(self, p: Poly | int) -> PolyMatrix:
        extra = p.q_degree() or 0 if isinstance(p, Poly) else 0
        return PolyMatrix(
            self.n_vars, self.row_degrees, self.col_degrees,
            {c: {r: e * p for r, e in col.items()} for c, col in self.cols.items()},
            self.degree + extra,
        )

    def _check_same(self, other: PolyMatrix) -> None:
        if self.shape != other.shape or self.n_vars != other.n_vars:
            raise ValueError("matrix shape mismatch")

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        return mat_mul(self, other)

    def apply(self, vec: Mapping[int, Poly]) -> dict[int, Poly]:
        """Apply to a sparse column vector."""
        out: dict[int, Poly] = {}
        for k, b in vec.items():
            for r, a in self.cols.get(k, {}).items():
                v = a * b
                out[r] = out[r] + v if r in out else v
        return {r: p for r, p in out.items() if p}

    def to_dense(self) -> list[list[Poly]]:
        z = Poly.zero(self.n_vars)
        rows = [[z] * self.ncols for _ in range(self.nrows)]
        for c, col in self.cols.items():
            for r, p in col.items():
                rows[r][c] = p
        return rows

    def __repr__(self) -> str:
        body = ", ".join(f"({r},{c}): {p!r}" for (r, c), p in sorted(self.entries().items()))
        return f"PolyMatrix({self.nrows}x{self.ncols}, deg={self.degree}, {{{body}}})"


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Product ``a @ b`` (apply b first)."""
    if a.ncols != b.nrows:
        raise ValueError(f"shape mismatch: {a.shape} @ {b.shape}")
    if a.col_degrees != b.row_degrees:
        raise ValueError("degree mismatch between factors")
    if a.n_vars != b.n_vars:
        raise ValueError("variable count mismatch")
    cols: dict[int, dict[int, Poly]] = {}
    acols = a.cols
    for c, bcol in b.cols.items():
        acc: dict[int, Poly] = {}
        for k, pb in bcol.items():
            acol = acols.get(k)
            if not acol:
                continue
            for r, pa in acol.items():
                v = pa * pb
                acc[r] = acc[r] + v if r in acc else v
        acc = {r: p for r, p in acc.items() if p}
        if acc:
            cols[c] = acc
    return PolyMatrix(a.n_vars, a.row_degrees, b.col_degrees, cols, a.degree + b.degree)


def _degree_blocks(m: PolyMatrix) -> list[tuple[int, list[int], list[int]]]:
    degs = sorted(set(m.row_degrees) | set(m.col_degrees))
    blocks = []
    for d in degs:
        rows = [i for i, x in enumerate(m.row_degrees) if x == d]
        cols = [i for i, x in enumerate(m.col_degrees) if x == d]
        blocks.append((d, rows, cols))
    return blocks


def _int_inverse(block: list[list[int]]) -> list[list[int]] | None:
    """Inverse over Z of a square integer matrix, or None if not unimodular."""
    n = len(block)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(block)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        return None
    return [[int(x) for x in row] for row in inv]


def unit_inverse(m: PolyMatrix) -> PolyMatrix | None:
    """Inverse of a degree-0 square matrix over Z[x], or None.

    Ordering the basis by q-degree makes the matrix block upper-triangular
    with integer diagonal blocks; the inverse exists iff every diagonal
    block is unimodular, and is then obtained by block back-substitution.
    """
    if m.nrows != m.ncols or m.degree != 0:
        return None
    if sorted(m.row_degrees) != sorted(m.col_degrees):
        return None
    n = m.n_vars
    blocks = _degree_blocks(m)
    for _, rows, cols in blocks:
        if len(rows) != len(cols):
            return None
    diag_inv = []
    for _, rows, cols in blocks:
        block = [[m[r, c].constant_term() for c in cols] for r in rows]
        inv = _int_inverse(block) if rows else []
        if inv is None:
            return None
        # inverse maps row-space (target) back to col-space (source)
        diag_inv.append({(cols[i], rows[j]): Poly.const(n, inv[i][j]) for i in range(len(cols)) for j in range(len(rows)) if inv[i][j]})
    # X = m^{-1}: rows indexed by m's columns, cols by m's rows.
    # Solve block-wise from the highest degree down:
    # X_{kl} = -D_k^{-1} sum_{k<j<=l} M_{kj} X_{jl}
    mrows = m.rows()
    X: dict[tuple[int, int], Poly] = {}
    nb = len(blocks)
    for l in range(nb):
        _, lrows, _ = blocks[l]
        for key, p in diag_inv[l].items():
            X[key] = p
        for k in range(l - 1, -1, -1):
            _, krows, kcols = blocks[k]
            # S = sum_j M_{k j} X_{j l} : rows krows (m-rows), cols lrows (m-rows)
            S: dict[tuple[int, int], Poly] = {}
            for r in krows:
                for c_mid, p in mrows.get(r, {}).items():
                    if m.col_degrees[c_mid] <= blocks[k][0]:
                        continue
                    for t in lrows:
                        x = X.get((c_mid, t))
                        if x is not None:
                            v = p * x
                            S[(r, t)] = S[(r, t)] + v if (r, t) in S else v
            if not S:
                continue
            Dk = diag_inv[k]
            for (ci, rj), dinv in Dk.items():
                for t in lrows:
                    s = S.get((rj, t))
                    if s:
                        v = -(dinv * s)
                        X[(ci, t)] = X[(ci, t)] + v if (ci, t) in X else v
    inv = PolyMatrix.from_entries(n, m.col_degrees, m.row_degrees, {k: v for k, v in X.items() if v})
    return inv


def is_unit_invertible(m: PolyMatrix) -> bool:
    return unit_inverse(m) is not None


def degree_slice_dim(n_vars: int, q: int) -> int:
    """Number of monomials of q-degree ``q`` in ``n_vars`` variables."""
    if q < 0 or q % 2:
        return 0
    if n_vars == 0:
        return 1 if q == 0 else 0
    return math.comb(q // 2 + n_vars - 1, n_vars - 1)


_BASIS_CACHE: dict[tuple[int, int], tuple[list[int], dict[int, int]]] = {}


def monomial_basis(n_vars: int, deg: int) -> tuple[list[int], dict[int, int]]:
    """Packed monomials of total degree ``deg`` in graded-lex order, with index map."""
    key = (n_vars, deg)
    hit = _BASIS_CACHE.get(key)
    if hit is not None:
        return hit
    if deg < 0:
        res: tuple[list[int], dict[int, int]] = ([], {})
    elif n_vars == 0:
        res = ([0], {0: 0}) if deg == 0 else ([], {})
    else:
        exps = sorted(_compositions(deg, n_vars), reverse=True)
        keys = [pack(e) for e in exps]
        res = (keys, {k: i for i, k in enumerate(keys)})
    _BASIS_CACHE[key] = res
    return res


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
