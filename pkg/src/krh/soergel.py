"""Bott-Samelson bimodules presented as free left modules.

A word ``B_{i_1} ... B_{i_r}(k)`` is the bimodule
``R ⊗_{R^{s_{i_1}}} R ⊗ ... ⊗_{R^{s_{i_r}}} R`` shifted by ``k - r``.
As a left module it is free on ``1 ⊗ f_1 ⊗ ... ⊗ f_r`` with each ``f_j``
either ``1`` or ``x_{i_j + 1}``; a basis element is encoded as a bitmask
whose bit ``j`` records the second choice.  Right multiplication is worked
out by straightening from the right end, one slot at a time.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from functools import lru_cache

from .ring import Poly, PolyMatrix, demazure, mat_mul, var_key

__all__ = [
    "BSWord",
    "BSMor",
    "straighten",
    "right_mult_matrix",
    "right_mult_poly",
    "dot_down",
    "dot_up",
    "mor_tensor",
    "mor_compose",
    "mor_identity",
    "mor_left_mult",
    "bsbs_split",
    "check_right_linear",
]

DEBUG = os.environ.get("KRH_DEBUG", "") not in ("", "0")


@dataclass(frozen=True)
class BSWord:
    strands: int
    letters: tuple[int, ...] = ()
    q_shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise ValueError("need at least one strand")
        for i in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"letter {i} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def rank(self) -> int:
        return 1 << len(self.letters)

    def basis_degrees(self) -> tuple[int, ...]:
        return _basis_degrees(len(self.letters), self.q_shift)

    def shift(self, k: int) -> BSWord:
        return BSWord(self.strands, self.letters, self.q_shift + k)

    def concat(self, other: BSWord) -> BSWord:
        if self.strands != other.strands:
            raise ValueError("strand mismatch")
        return BSWord(self.strands, self.letters + other.letters, self.q_shift + other.q_shift)

    def key(self) -> tuple[tuple[int, ...], int]:
        return self.letters, self.q_shift

    def __str__(self) -> str:
        return f"word({' '.join(map(str, self.letters))}) qshift={self.q_shift}"


@lru_cache(maxsize=None)
def _basis_degrees(length: int, shift: int) -> tuple[int, ...]:
    return tuple(shift - length + 2 * bin(e).count("1") for e in range(1 << length))


@dataclass(frozen=True, eq=False)
class BSMor:
    """Bimodule map between BS words, stored as its left-basis matrix."""

    source: BSWord
    target: BSWord
    matrix: PolyMatrix

    def __post_init__(self):
        m = self.matrix
        if m.ncols != self.source.rank or m.nrows != self.target.rank:
            raise ValueError("matrix shape does not match words")
        if DEBUG:
            if not m.check_homogeneous():
                raise ValueError("inhomogeneous morphism entry")
            if not check_right_linear(self):
                raise ValueError("morphism is not right-linear")

    @property
    def degree(self) -> int:
        return self.matrix.degree

    def __eq__(self, other) -> bool:
        if not isinstance(other, BSMor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __add__(self, other: BSMor) -> BSMor:
        return BSMor(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other: BSMor) -> BSMor:
        return BSMor(self.source, self.target, self.matrix - other.matrix)

    def __neg__(self) -> BSMor:
        return BSMor(self.source, self.target, -self.matrix)

    def apply(self, vec: dict[int, Poly]) -> dict[int, Poly]:
        return self.matrix.apply(vec)


def straighten(i: int, p: Poly) -> tuple[Poly, Poly]:
    """Write ``p = f + g * x_{i+1}`` with ``f, g`` symmetric in ``x_i, x_{i+1}``."""
    g = -demazure(i, p)
    f = p - g * Poly.var(p.n_vars, i + 1)
    return f, g


# --- right action -----------------------------------------------------------

_lock = threading.Lock()
_ACT: dict[tuple, dict[int, Poly]] = {}


def _act(n: int, letters: tuple[int, ...], eps: int, mono: int) -> dict[int, Poly]:
    """Coordinates of ``e_eps * m`` for a monomial ``m`` (packed key)."""
    key = (n, letters, eps, mono)
    hit = _ACT.get(key)
    if hit is not None:
        return hit
    if not letters:
        res = {0: Poly(n, {mono: 1}, _trusted=True)}
    else:
        r = len(letters) - 1
        i = letters[r]
        top = eps >> r & 1
        prefix_eps = eps & ~(1 << r)
        m = Poly(n, {mono + var_key(i + 1) if top else mono: 1}, _trusted=True)
        f, g = straighten(i, m)
        res = {}
        for coeff, bit in ((f, 0), (g, 1 << r)):
            for k, c in coeff.terms.items():
                for idx, p in _act(n, letters[:r], prefix_eps, k).items():
                    tgt = idx | bit
                    v = p * c
                    res[tgt] = res[tgt] + v if tgt in res else v
        res = {k: v for k, v in res.items() if v}
    with _lock:
        _ACT[key] = res
    return res


def _right_mult_columns(w: BSWord, p: Poly) -> dict[int, dict[int, Poly]]:
    n = w.strands
    cols: dict[int, dict[int, Poly]] = {}
    for eps in range(w.rank):
        acc: dict[int, Poly] = {}
        for k, c in p.terms.items():
            for idx, v in _act(n, w.letters, eps, k).items():
                v = v * c
                acc[idx] = acc[idx] + v if idx in acc else v
        acc = {k: v for k, v in acc.items() if v}
        if acc:
            cols[eps] = acc
    return cols


_RMP: dict[tuple, PolyMatrix] = {}


def right_mult_poly(w: BSWord, p: Poly) -> PolyMatrix:
    """Left-basis matrix of right multiplication by a homogeneous ``p``."""
    if p.n_vars != w.strands:
        raise ValueError("variable count mismatch")
    if p.is_zero():
        degs = w.basis_degrees()
        return PolyMatrix.zero(w.strands, degs, degs)
    d = p.q_degree()
    if d is None:
        raise ValueError("right multiplication needs a homogeneous polynomial")
    key = (w.strands, w.letters, w.q_shift, p)
    hit = _RMP.get(key)
    if hit is not None:
        return hit
    degs = w.basis_degrees()
    m = PolyMatrix(w.strands, degs, degs, _right_mult_columns(w, p), d)
    with _lock:
        _RMP[key] = m
    return m


def right_mult_matrix(w: BSWord, j: int) -> PolyMatrix:
    if not 1 <= j <= w.strands:
        raise ValueError(f"variable x_{j} out of range")
    return right_mult_poly(w, Poly.var(w.strands, j))


def check_right_linear(f: BSMor) -> bool:
    for j in range(1, f.source.strands + 1):
        lhs = mat_mul(f.matrix, right_mult_matrix(f.source, j))
        rhs = mat_mul(right_mult_matrix(f.target, j), f.matrix)
        if lhs != rhs:
            return False
    return True


# --- constructors -------------------------------------------------------------


def mor_identity(w: BSWord) -> BSMor:
    return BSMor(w, w, PolyMatrix.identity(w.strands, w.basis_degrees()))


def mor_left_mult(w: BSWord, p: Poly) -> BSMor:
    """Left multiplication by a homogeneous ``p``, as a map ``w -> w(-deg p)``."""
    d = p.q_degree() or 0
    tgt = w.shift(-d)
    return BSMor(
        w, tgt,
        PolyMatrix(w.strands, tgt.basis_degrees(), w.basis_degrees(),
                   {e: {e: p} for e in range(w.rank)} if p else None, 0),
    )


def _from_image(source: BSWord, target: BSWord, image: dict[int, Poly]) -> BSMor:
    """The bimodule map out of a single ``B_i`` sending ``1 ⊗ 1`` to ``image``.

    The other basis vector ``1 ⊗ x_{i+1}`` must go to ``image * x_{i+1}``.
    """
    (i,) = source.letters
    y = right_mult_matrix(target, i + 1)
    cols = {0: dict(image), 1: y.apply(image)}
    return BSMor(source, target, PolyMatrix(source.strands, target.basis_degrees(), source.basis_degrees(), cols))


def dot_down(i: int, n: int = 2, shift: int = 0) -> BSMor:
    """``B_i(shift) -> R(shift - 1)`` with ``1 ⊗ 1 ↦ 1``."""
    src = BSWord(n, (i,), shift)
    tgt = BSWord(n, (), shift - 1)
    return _from_image(src, tgt, {0: Poly.one(n)})


def dot_up(i: int, n: int = 2, shift: int = 0) -> BSMor:
    """``R(shift + 1) -> B_i(shift)`` with ``1 ↦ x_i ⊗ 1 - 1 ⊗ x_{i+1}``."""
    src = BSWord(n, (), shift + 1)
    tgt = BSWord(n, (i,), shift)
    col = {0: Poly.var(n, i), 1: -Poly.one(n)}
    return BSMor(src, tgt, PolyMatrix(n, tgt.basis_degrees(), src.basis_degrees(), {0: col}))


def mor_compose(f: BSMor, g: BSMor) -> BSMor:
    """``f ∘ g``."""
    if g.target != f.source:
        raise ValueError("cannot compose: target(g) != source(f)")
    return BSMor(g.source, f.target, mat_mul(f.matrix, g.matrix))


def mor_tensor(f: BSMor, g: BSMor) -> BSMor:
    """``f ⊗_R g``; basis index of the tensor word is ``alpha | beta << len``."""
    if f.source.strands != g.source.strands:
        raise ValueError("strand mismatch")
    n = f.source.strands
    src = f.source.concat(g.source)
    tgt = f.target.concat(g.target)
    l1 = len(f.source)
    l1t = len(f.target)
    fcols = f.matrix.cols
    gcols = g.matrix.cols
    # identity on the right factor is the common fast path
    g_is_id = g.source == g.target and g.matrix == PolyMatrix.identity(n, g.source.basis_degrees())
    cols: dict[int, dict[int, Poly]] = {}
    for beta in range(g.source.rank):
        gcol = gcols.get(beta)
        if not gcol:
            continue
        pushed = []
        for delta, d in gcol.items():
            if g_is_id:
                pushed.append((delta, None))
            else:
                pushed.append((delta, right_mult_poly(f.target, d)))
        for alpha in range(f.source.rank):
            fcol = fcols.get(alpha)
            if not fcol:
                continue
            out: dict[int, Poly] = {}
            for delta, rm in pushed:
                vec = fcol if rm is None else rm.apply(fcol)
                base = delta << l1t
                for gamma, p in vec.items():
                    out[gamma | base] = p
            if out:
                cols[alpha | (beta << l1)] = out
    m = PolyMatrix(n, tgt.basis_degrees(), src.basis_degrees(), cols, f.degree + g.degree)
    return BSMor(src, tgt, m)


@lru_cache(maxsize=None)
def bsbs_split(i: int, n: int = 2, shift: int = 0) -> tuple[BSMor, BSMor, BSMor, BSMor]:
    """Maps ``(pi_plus, iota_plus, pi_minus, iota_minus)`` splitting
    ``B_i B_i(shift)`` as ``B_i(shift + 1) ⊕ B_i(shift - 1)``."""
    bb = BSWord(n, (i, i), shift)
    bp = BSWord(n, (i,), shift + 1)
    bm = BSWord(n, (i,), shift - 1)
    one = Poly.one(n)
    xi = Poly.var(n, i)
    xi1 = Poly.var(n, i + 1)

    # pi_plus(a ⊗ b ⊗ c) = a ∂_i(b) ⊗ c ; basis bits: bit0 middle, bit1 right
    cols = {}
    for e in range(4):
        mid, right = e & 1, e >> 1
        if mid:
            cols[e] = {right: -one}
    pi_p = BSMor(bb, bp, PolyMatrix(n, bp.basis_degrees(), bb.basis_degrees(), cols))

    # iota_plus(a ⊗ c) = a ⊗ x_i ⊗ c, and x_i = (x_i + x_{i+1}) - x_{i+1}
    cols = {}
    for right in range(2):
        cols[right] = {right << 1: xi + xi1, 1 | right << 1: -one}
    io_p = BSMor(bp, bb, PolyMatrix(n, bb.basis_degrees(), bp.basis_degrees(), cols))

    # section c(a ⊗ c) = a ⊗ 1 ⊗ c into BB(shift) from B(shift-1)
    sec = BSMor(bm, bb, PolyMatrix(n, bb.basis_degrees(), bm.basis_degrees(), {0: {0: one}, 1: {2: one}}))
    psi = mor_tensor(dot_down(i, n, 0), mor_identity(BSWord(n, (i,), shift)))
    ident = mor_identity(bb)
    proj_p = mor_compose(io_p, pi_p)
    comp = ident - proj_p
    io_m = mor_compose(comp, sec)
    pi_m = mor_compose(psi, comp)
    return pi_p, io_p, pi_m, io_m
