"""Braid words and their Rouquier complexes, plus the explicit two-strand
complexes used for projector experiments."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .homotopy import ChainMap, Complex, cx_tensor, simplify as _simplify
from .ring import Poly, PolyMatrix
from .soergel import BSMor, BSWord, _from_image, dot_down, dot_up

__all__ = [
    "BraidWord",
    "BraidParseError",
    "parse_braid",
    "elementary_complex",
    "rouquier_complex",
    "torus_braid",
    "jm_braid",
    "unit_inclusion",
    "p2_complex",
    "q2_complex",
    "stable_range",
    "StableRange",
]


class BraidParseError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(i), int(s)) for i, s in self.letters))
        if self.strands < 1:
            raise ValueError("need at least one strand")
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"generator s{i} out of range for {self.strands} strands")
            if s not in (1, -1):
                raise ValueError("signs must be +1 or -1")

    @property
    def exponent(self) -> int:
        return sum(s for _, s in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        n = max(self.strands, other.strands)
        return BraidWord(n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def with_strands(self, n: int) -> BraidWord:
        return BraidWord(n, self.letters)

    def is_positive(self) -> bool:
        return all(s > 0 for _, s in self.letters)

    def __str__(self) -> str:
        return " ".join(("-" if s < 0 else "") + f"s{i}" for i, s in self.letters)


_TOKEN = re.compile(r"^(-?)s(\d+)$")
_MACRO = re.compile(r"(torus|jm)\(\s*([^)]*)\)")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``s1 -s2 ...`` with the macros ``torus(n,k)`` and ``jm(n)``.

    Without ``strands`` the strand count is the smallest that fits (at
    least the size requested by any macro).
    """
    letters: list[tuple[int, int]] = []
    need = 1

    def expand(m: re.Match) -> str:
        nonlocal need
        args = [a.strip() for a in m.group(2).split(",")]
        try:
            nums = [int(a) for a in args]
        except ValueError:
            raise BraidParseError(f"bad macro arguments in {m.group(0)!r}") from None
        if m.group(1) == "torus":
            if len(nums) != 2 or nums[0] < 1 or nums[1] < 0:
                raise BraidParseError(f"torus(n,k) needs n>=1, k>=0: {m.group(0)!r}")
            w = torus_braid(*nums)
        else:
            if len(nums) != 1 or nums[0] < 2:
                raise BraidParseError(f"jm(n) needs n>=2: {m.group(0)!r}")
            w = jm_braid(nums[0])
        need = max(need, w.strands)
        return " " + str(w) + " "

    body = _MACRO.sub(expand, text)
    for tok in body.split():
        m = _TOKEN.match(tok)
        if not m:
            raise BraidParseError(f"unrecognized braid token {tok!r}")
        i = int(m.group(2))
        if i < 1:
            raise BraidParseError(f"generator index must be >= 1: {tok!r}")
        letters.append((i, -1 if m.group(1) else 1))
        need = max(need, i + 1)
    n = need if strands is None else strands
    if n < need:
        raise BraidParseError(f"braid needs {need} strands, got {n}")
    return BraidWord(n, tuple(letters))


def torus_braid(n: int, k: int) -> BraidWord:
    """``(s_{n-1} ... s_1)^k``."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    block = tuple((i, 1) for i in range(n - 1, 0, -1))
    return BraidWord(n, block * k)


def jm_braid(n: int) -> BraidWord:
    """``s_{n-1} ... s_1 s_1 ... s_{n-1}``."""
    if n < 2:
        raise ValueError("need n >= 2")
    down = [(i, 1) for i in range(n - 1, 0, -1)]
    return BraidWord(n, tuple(down + down[::-1]))


def elementary_complex(i: int, sign: int, n: int = 2) -> Complex:
    """``B_i(1) -> R`` in degrees (-1, 0) or ``R -> B_i(-1)`` in degrees (0, 1)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator s{i} out of range for {n} strands")
    c = Complex(n)
    if sign > 0:
        b = c.add(-1, BSWord(n, (i,), 1))
        r = c.add(0, BSWord(n, (), 0))
        c.set_block(b, r, dot_down(i, n, 1))
    elif sign < 0:
        r = c.add(0, BSWord(n, (), 0))
        b = c.add(1, BSWord(n, (i,), -1))
        c.set_block(r, b, dot_up(i, n, -1))
    else:
        raise ValueError("sign must be +1 or -1")
    return c


def rouquier_complex(b: BraidWord, simplify: bool = True, max_generators: int | None = None) -> Complex:
    """Fold the tensor product of elementary complexes from left to right."""
    c = Complex.unit(b.strands)
    for i, s in b.letters:
        c = cx_tensor(c, elementary_complex(i, s, b.strands))
        if simplify:
            c = _simplify(c, in_place=True)
        if max_generators is not None and c.rank() > max_generators:
            raise ResourceLimit(f"complex rank {c.rank()} exceeds limit {max_generators}")
    return c


class ResourceLimit(RuntimeError):
    pass


def unit_inclusion(b: BraidWord) -> ChainMap:
    """Inclusion of the unique ``R`` summand at ``t = 0`` into ``F(b)``."""
    if not b.is_positive():
        raise ValueError("unit inclusion needs a positive braid")
    target = rouquier_complex(b, simplify=False)
    src = Complex.unit(b.strands)
    (k0,) = [k for k, (t, w) in target.objects.items() if t == 0 and not w.letters and w.q_shift == 0]
    one = PolyMatrix.identity(b.strands, (0,))
    return ChainMap(src, target, {(src.ids()[0], k0): one})


def _phi(n: int, src_shift: int, tgt_shift: int, plus: bool) -> BSMor:
    one = Poly.one(n)
    x = Poly.var(n, 1 if plus else 2)
    return _from_image(BSWord(n, (1,), src_shift), BSWord(n, (1,), tgt_shift), {0: x, 1: -one})


def p2_complex(N: int) -> Complex:
    """Truncation of the two-strand projector to degrees ``>= -N``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    c = Complex(2)
    r = c.add(0, BSWord(2, (), 0))
    prev = c.add(-1, BSWord(2, (1,), 1))
    c.set_block(prev, r, dot_down(1, 2, 1))
    for m in range(1, N):
        cur = c.add(-m - 1, BSWord(2, (1,), 2 * m + 1))
        c.set_block(cur, prev, _phi(2, 2 * m + 1, 2 * m - 1, plus=(m % 2 == 0)))
        prev = cur
    return c


def q2_complex() -> Complex:
    """``R(4) -> B_1(3) -> B_1(1) -> R`` in degrees -3..0."""
    c = Complex(2)
    a = c.add(-3, BSWord(2, (), 4))
    b3 = c.add(-2, BSWord(2, (1,), 3))
    b1 = c.add(-1, BSWord(2, (1,), 1))
    r = c.add(0, BSWord(2, (), 0))
    c.set_block(a, b3, dot_up(1, 2, 3))
    c.set_block(b3, b1, _phi(2, 3, 1, plus=False))
    c.set_block(b1, r, dot_down(1, 2, 1))
    return c


@dataclass(frozen=True)
class StableRange:
    """Bounds on twice the normalized homological degree."""

    support_lo2: int
    support_hi2: int
    stable_lo2: int  # stable for support_hi2 >= 2i > stable_lo2

    @property
    def support(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.support_lo2, 2), Fraction(self.support_hi2, 2)

    @property
    def stable_lo(self) -> Fraction:
        return Fraction(self.stable_lo2, 2)

    def in_support(self, t2: int) -> bool:
        return self.support_lo2 <= t2 <= self.support_hi2

    def in_stable(self, t2: int) -> bool:
        return self.stable_lo2 < t2 <= self.support_hi2


def stable_range(n: int, k: int) -> StableRange:
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    hi = n * k - k - n
    return StableRange(-n * k + k - n, hi, hi - 4 * (k // n))
