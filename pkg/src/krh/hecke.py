"""Hecke algebra of S_n over Q(q), the Ocneanu trace and HOMFLY values.

Relations: ``(T_i + q^2)(T_i - 1) = 0`` plus the braid relations.  A braid
generator maps to ``T_i`` and its inverse to ``1 - q^-2 + q^-2 T_i``; these
are the classes of the elementary Rouquier complexes in the Grothendieck
group, which is what makes the Euler-characteristic cross-check work.

Rational functions come from sympy's sparse fraction fields, which keep
every value gcd-reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from sympy import QQ
from sympy.polys.fields import field

__all__ = [
    "LaurentRat",
    "HeckeElt",
    "mul_by_Ti",
    "reduced_word",
    "embed",
    "b_gen",
    "jm_element",
    "young_symmetrizer",
    "braid_element",
    "ocneanu_trace",
    "Homfly",
    "homfly",
    "homfly_expansion",
    "euler_to_alpha",
    "compare_euler_homfly",
]

_K, _q = field("q", QQ)


class LaurentRat:
    """Element of Q(q), kept reduced with a monic denominator."""

    __slots__ = ("f",)

    def __init__(self, f=0):
        if isinstance(f, LaurentRat):
            f = f.f
        self.f = _K(f) if not hasattr(f, "numer") else f

    @classmethod
    def q(cls, k: int = 1) -> LaurentRat:
        return cls(_q**k)

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, int], denom: Mapping[int, int] | None = None) -> LaurentRat:
        """``sum c_k q^k`` (Laurent) over an optional Laurent denominator."""
        num = sum((c * _q**k for k, c in coeffs.items()), _K.zero)
        den = sum((c * _q**k for k, c in denom.items()), _K.zero) if denom else _K.one
        return cls(num / den)

    # arithmetic
    def _c(self, o) -> LaurentRat:
        return o if isinstance(o, LaurentRat) else LaurentRat(o)

    def __add__(self, o):
        return LaurentRat(self.f + self._c(o).f)

    __radd__ = __add__

    def __sub__(self, o):
        return LaurentRat(self.f - self._c(o).f)

    def __rsub__(self, o):
        return LaurentRat(self._c(o).f - self.f)

    def __mul__(self, o):
        return LaurentRat(self.f * self._c(o).f)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._c(o)
        if not o.f:
            raise ZeroDivisionError("division by zero in Q(q)")
        return LaurentRat(self.f / o.f)

    def __rtruediv__(self, o):
        return self._c(o) / self

    def __neg__(self):
        return LaurentRat(-self.f)

    def __pow__(self, k: int):
        return LaurentRat(self.f**k)

    def __bool__(self):
        return bool(self.f)

    def __eq__(self, o):
        if isinstance(o, (int, LaurentRat)):
            return self.f == self._c(o).f
        return NotImplemented

    def __hash__(self):
        return hash(self.f)

    def _parts(self):
        num, den = self.f.numer, self.f.denom
        lc = den.LC
        nd = {m[0]: c / lc for m, c in num.items()}
        dd = {m[0]: c / lc for m, c in den.items()}
        return nd, dd

    def series(self, lo: int, hi: int) -> dict[int, object]:
        """Laurent expansion around ``q = 0`` restricted to ``[lo, hi]``."""
        nd, dd = self._parts()
        v = min(dd)
        d0 = dd[v]
        # 1/den = q^-v / (d0 + ...) ; expand as power series
        dn = {k - v: c / d0 for k, c in dd.items()}
        nn = {k - v: c / d0 for k, c in nd.items()}
        start = min(nn)
        out: dict[int, object] = {}
        inv: dict[int, object] = {0: QQ(1)}
        top = hi - start
        for k in range(1, top + 1):
            s = QQ(0)
            for j, c in dn.items():
                if 1 <= j <= k:
                    s -= c * inv.get(k - j, 0)
            if s:
                inv[k] = s
        for k, c in nn.items():
            for j, ci in inv.items():
                e = k + j
                if lo <= e <= hi:
                    out[e] = out.get(e, 0) + c * ci
        return {k: v for k, v in out.items() if v}

    def __str__(self) -> str:
        nd, dd = self._parts()
        ns = _laurent_str(nd)
        if dd == {0: 1}:
            return ns
        return f"({ns})/({_laurent_str(dd)})"

    __repr__ = __str__


def _laurent_str(d: Mapping[int, object]) -> str:
    if not d:
        return "0"
    parts = []
    for k in sorted(d, reverse=True):
        c = d[k]
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
        if not mono:
            s = str(a)
        elif a == 1:
            s = mono
        else:
            s = f"{a}*{mono}"
        parts.append((sign, s))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, s in parts[1:]:
        out += f" {sign} {s}"
    return out


Perm = tuple[int, ...]


@dataclass
class HeckeElt:
    """``sum_w c_w T_w`` with permutations in one-line notation (1-based)."""

    n: int
    coeffs: dict[Perm, LaurentRat]

    @classmethod
    def one(cls, n: int) -> HeckeElt:
        return cls(n, {tuple(range(1, n + 1)): LaurentRat(1)})

    @classmethod
    def zero(cls, n: int) -> HeckeElt:
        return cls(n, {})

    @classmethod
    def T(cls, i: int, n: int) -> HeckeElt:
        return mul_by_Ti(cls.one(n), i)

    def _clean(self) -> HeckeElt:
        self.coeffs = {w: c for w, c in self.coeffs.items() if c}
        return self

    def __add__(self, o: HeckeElt) -> HeckeElt:
        out = dict(self.coeffs)
        for w, c in o.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElt(self.n, out)._clean()

    def __neg__(self) -> HeckeElt:
        return HeckeElt(self.n, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, o: HeckeElt) -> HeckeElt:
        return self + (-o)

    def scale(self, c) -> HeckeElt:
        c = LaurentRat(c)
        return HeckeElt(self.n, {w: x * c for w, x in self.coeffs.items()})._clean()

    def __rmul__(self, c) -> HeckeElt:
        return self.scale(c)

    def __mul__(self, o):
        if not isinstance(o, HeckeElt):
            return self.scale(o)
        out = HeckeElt.zero(self.n)
        for w, c in o.coeffs.items():
            term = self
            for i in reduced_word(w):
                term = mul_by_Ti(term, i)
            out = out + term.scale(c)
        return out

    def __eq__(self, o) -> bool:
        if not isinstance(o, HeckeElt):
            return NotImplemented
        return self.n == o.n and self._clean().coeffs == o._clean().coeffs

    def is_zero(self) -> bool:
        return not self._clean().coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*T{''.join(map(str, w))}" for w, c in sorted(self.coeffs.items()))


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator T{i} out of range for n={n}")


def mul_by_Ti(h: HeckeElt, i: int, side: str = "right") -> HeckeElt:
    """``h T_i`` (default) or ``T_i h``."""
    _check_index(i, h.n)
    q2 = LaurentRat.q(2)
    a = 1 - q2
    out: dict[Perm, LaurentRat] = {}

    def acc(w, c):
        out[w] = out[w] + c if w in out else c

    for w, c in h.coeffs.items():
        if side == "right":
            ws = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1:]
            up = w[i - 1] < w[i]
        elif side == "left":
            ws = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
            up = w.index(i) < w.index(i + 1)
        else:
            raise ValueError("side must be 'left' or 'right'")
        if up:
            acc(ws, c)
        else:
            acc(w, c * a)
            acc(ws, c * q2)
    return HeckeElt(h.n, out)._clean()


def reduced_word(w: Perm) -> list[int]:
    """A reduced word ``i_1..i_l`` with ``T_w = T_{i_1} ... T_{i_l}``."""
    w = list(w)
    word = []
    # bubble sort from the right: w = w' s_i with a descent at i
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    return word[::-1]


def b_gen(i: int, n: int) -> HeckeElt:
    """``q^-1 (1 - T_i)``."""
    _check_index(i, n)
    return (HeckeElt.one(n) - HeckeElt.T(i, n)).scale(LaurentRat.q(-1))


def braid_element(letters: Iterable[tuple[int, int]], n: int) -> HeckeElt:
    h = HeckeElt.one(n)
    qm2 = LaurentRat.q(-2)
    for i, s in letters:
        if s > 0:
            h = mul_by_Ti(h, i)
        else:
            h = h.scale(1 - qm2) + mul_by_Ti(h, i).scale(qm2)
    return h


def jm_element(k: int, n: int) -> HeckeElt:
    """Image of ``s_{k-1} ... s_1 s_1 ... s_{k-1}``."""
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    down = [(i, 1) for i in range(k - 1, 0, -1)]
    return braid_element(down + down[::-1], n)


def embed(h: HeckeElt, n: int) -> HeckeElt:
    """Include ``H_m`` into ``H_n`` on the first ``m`` strands."""
    ext = tuple(range(h.n + 1, n + 1))
    return HeckeElt(n, {w + ext: c for w, c in h.coeffs.items()})


@lru_cache(maxsize=None)
def young_symmetrizer(n: int) -> HeckeElt:
    """``p_n = (j_n - q^{2n}) / (1 - q^{2n}) p_{n-1}``, with ``p_1 = 1``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return HeckeElt.one(1)
    prev = embed(young_symmetrizer(n - 1), n)
    q2n = LaurentRat.q(2 * n)
    j = jm_element(n, n)
    num = j - HeckeElt.one(n).scale(q2n)
    return (num * prev).scale(1 / (1 - q2n))


# --- trace --------------------------------------------------------------------

ZPoly = dict[int, LaurentRat]  # power of z -> coefficient


def _zadd(a: ZPoly, b: ZPoly, scale=None, shift: int = 0) -> None:
    for k, c in b.items():
        v = c * scale if scale is not None else c
        k2 = k + shift
        a[k2] = a[k2] + v if k2 in a else v


@lru_cache(maxsize=None)
def _trace_perm(w: Perm) -> tuple[tuple[int, LaurentRat], ...]:
    n = len(w)
    if n <= 1:
        return ((0, LaurentRat(1)),)
    m = w.index(n) + 1
    if m == n:
        return _trace_perm(w[:-1])
    # w = v s_{n-1} ... s_m with v(n) = n
    v = w[: m - 1] + w[m:] + (n,)
    h = HeckeElt(n - 1, {v[:-1]: LaurentRat(1)})
    for i in range(n - 2, m - 1, -1):
        h = mul_by_Ti(h, i)
    out: ZPoly = {}
    for u, c in h.coeffs.items():
        _zadd(out, dict(_trace_perm(u)), scale=c, shift=1)
    return tuple(sorted((k, c) for k, c in out.items() if c))


def ocneanu_trace(h: HeckeElt) -> ZPoly:
    """Trace as a polynomial in ``z`` with ``tr(x T_{n-1} y) = z tr(xy)``."""
    out: ZPoly = {}
    for w, c in h.coeffs.items():
        _zadd(out, dict(_trace_perm(w)), scale=c)
    return {k: c for k, c in out.items() if c}


# --- HOMFLY -------------------------------------------------------------------


@dataclass(frozen=True)
class Homfly:
    """``sum_j c_j(q) alpha^j`` with Laurent-rational coefficients."""

    terms: tuple[tuple[int, LaurentRat], ...]

    @classmethod
    def from_dict(cls, d: Mapping[int, LaurentRat]) -> Homfly:
        return cls(tuple(sorted((k, LaurentRat(v)) for k, v in d.items() if v)))

    def as_dict(self) -> dict[int, LaurentRat]:
        return dict(self.terms)

    def __eq__(self, o) -> bool:
        if not isinstance(o, Homfly):
            return NotImplemented
        return self.as_dict() == o.as_dict()

    def __hash__(self):
        return hash(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms, key=lambda kc: -kc[0]):
            mono = "" if k == 0 else ("alpha" if k == 1 else f"alpha^{k}")
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _mul_alpha(a: dict[int, LaurentRat], b: dict[int, LaurentRat]) -> dict[int, LaurentRat]:
    out: dict[int, LaurentRat] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out[i + j] + x * y if i + j in out else x * y
    return {k: v for k, v in out.items() if v}


def homfly(b) -> Homfly:
    """HOMFLY value of a braid closure, calibrated so the unknot gives
    ``(alpha^-1 - alpha)/(q^-1 - q)``.

    ``b`` is a BraidWord (anything with ``strands``, ``letters`` and
    ``exponent``).
    """
    n = b.strands
    tr = ocneanu_trace(braid_element(b.letters, n))
    one_m_q2 = 1 - LaurentRat.q(2)
    c = {0: 1 / one_m_q2, 2: -1 / one_m_q2}  # (1 - alpha^2) / (1 - q^2)
    total: dict[int, LaurentRat] = {}
    powers = [{0: LaurentRat(1)}]
    for _ in range(n):
        powers.append(_mul_alpha(powers[-1], c))
    for k, pk in tr.items():
        if k > n:
            raise ArithmeticError("trace degree exceeds strand count")
        for j, v in powers[n - k].items():
            total[j] = total[j] + v * pk if j in total else v * pk
    k = b.exponent - n
    qk = LaurentRat.q(-k)
    return Homfly.from_dict({j + k: v * qk for j, v in total.items() if v})


def homfly_expansion(h: Homfly, lo: int, hi: int) -> dict[tuple[int, int], int]:
    """Coefficients of ``alpha^j q^k`` for ``lo <= k <= hi`` (power series in q)."""
    out = {}
    for j, c in h.terms:
        for k, v in c.series(lo, hi).items():
            if v.denominator != 1:
                raise ArithmeticError("non-integral HOMFLY coefficient")
            out[j, k] = int(v)
    return out


def euler_to_alpha(euler: Mapping[tuple[int, int], int], e: int, n: int) -> dict[tuple[int, int], int]:
    """Normalized Euler characteristic at ``t = -1`` in ``(alpha, q)``.

    ``euler`` maps raw ``(q, a)`` to ``sum_t (-1)^t rank``.  The
    substitution ``a = -alpha^2 q^2`` turns the normalization factor into
    ``(alpha/q)^(e-n)``.
    """
    k = e - n
    out: dict[tuple[int, int], int] = {}
    for (q, a), v in euler.items():
        key = (2 * a + k, q + 2 * a - k)
        out[key] = out.get(key, 0) + (-v if a % 2 else v)
    return {key: v for key, v in out.items() if v}


def compare_euler_homfly(euler, e: int, n: int, window: tuple[int, int], h: Homfly) -> list[tuple]:
    """Mismatches between a windowed Euler table and the HOMFLY expansion.

    Only coefficients whose raw q-degree lies in the window are compared.
    """
    k = e - n
    lo, hi = window
    got = euler_to_alpha(euler, e, n)
    want = homfly_expansion(h, lo - k - 1, hi + 2 * n - k + 1)
    bad = []
    keys = set(got) | set(want)
    for j, qq in sorted(keys):
        if (j - k) % 2:
            if want.get((j, qq), 0) or got.get((j, qq), 0):
                bad.append(((j, qq), got.get((j, qq), 0), want.get((j, qq), 0)))
            continue
        a = (j - k) // 2
        raw_q = qq - 2 * a + k
        if not (0 <= a <= n and lo <= raw_q <= hi):
            if a < 0 or a > n:
                if want.get((j, qq), 0):
                    bad.append(((j, qq), got.get((j, qq), 0), want.get((j, qq), 0)))
            continue
        if got.get((j, qq), 0) != want.get((j, qq), 0):
            bad.append(((j, qq), got.get((j, qq), 0), want.get((j, qq), 0)))
    return bad
