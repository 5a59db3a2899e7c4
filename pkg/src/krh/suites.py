"""Named verification batteries, shared by ``krh verify`` and the tests.

Each suite is a function returning a list of :class:`Check` records.  The
suites are deterministic: random inputs come from a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .hecke import (
    HeckeElt,
    LaurentRat,
    b_gen,
    compare_euler_homfly,
    embed,
    homfly,
    jm_element,
    young_symmetrizer,
)
from .hochschild import hochschild_full
from .homology import compare_normalized, default_window, graded_euler, hhh, normalize, table_euler
from .homotopy import Complex, cx_tensor, simplify
from .ring import Poly, demazure, s_action
from .rouquier import BraidWord, p2_complex, parse_braid, q2_complex, rouquier_complex
from .soergel import (
    BSWord,
    bsbs_split,
    check_right_linear,
    dot_down,
    dot_up,
    mor_compose,
    mor_identity,
    mor_tensor,
)

__all__ = ["Check", "SUITES", "run_suite", "EULER_BATTERY", "random_braid", "random_poly"]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def random_poly(rng: random.Random, n: int, terms: int = 4, max_exp: int = 3) -> Poly:
    d = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, max_exp) for _ in range(n))
        d[e] = rng.randint(-5, 5)
    return Poly.from_dict(n, d)


def random_braid(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))


# --- ring ---------------------------------------------------------------------


def suite_ring(seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    out = []
    laws = leibniz = twisted = True
    for _ in range(40):
        n = rng.randint(2, 4)
        a, b, c = (random_poly(rng, n) for _ in range(3))
        laws &= (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c and a * b == b * a
        i = rng.randint(1, n - 1)
        leibniz &= demazure(i, a * b) == demazure(i, a) * b + s_action(i, a) * demazure(i, b)
        twisted &= s_action(i, s_action(i, a)) == a and demazure(i, demazure(i, a)).is_zero()
    out.append(Check("ring axioms", laws))
    out.append(Check("twisted Leibniz rule", leibniz))
    out.append(Check("s_i involution and d_i^2 = 0", twisted))
    x = Poly.var(2, 1)
    exact = demazure(1, x * x) == x + Poly.var(2, 2)
    out.append(Check("divided difference d_1(x_1^2) = x_1 + x_2", exact))
    return out


# --- soergel -------------------------------------------------------------------


def suite_soergel(seed: int = 0) -> list[Check]:
    out = []
    ok = True
    for n, i in ((2, 1), (3, 1), (3, 2)):
        pp, ip, pm, im = bsbs_split(i, n, 0)
        bp, bm, bb = BSWord(n, (i,), 1), BSWord(n, (i,), -1), BSWord(n, (i, i), 0)
        ok &= mor_compose(pp, ip) == mor_identity(bp)
        ok &= mor_compose(pm, im) == mor_identity(bm)
        ok &= mor_compose(pp, im).matrix.is_zero() and mor_compose(pm, ip).matrix.is_zero()
        ok &= mor_compose(ip, pp) + mor_compose(im, pm) == mor_identity(bb)
        ok &= all(check_right_linear(f) for f in (pp, ip, pm, im))
    out.append(Check("B_iB_i splits as B_i(1) + B_i(-1)", ok))
    ok = all(check_right_linear(f) for f in (dot_down(1, 2, 1), dot_up(1, 2, -1), dot_down(2, 3), dot_up(1, 3)))
    out.append(Check("dot maps are bimodule maps", ok))
    x1 = Poly.var(2, 1)
    x2 = Poly.var(2, 2)
    barbell = mor_compose(dot_down(1, 2, 0), dot_up(1, 2, 0))
    out.append(Check("barbell is x_1 - x_2", barbell.matrix.cols[0][0] == x1 - x2))
    f = mor_tensor(dot_down(1, 3), mor_identity(BSWord(3, (2,))))
    out.append(Check("tensor of morphisms is right-linear", check_right_linear(f)))
    rng = random.Random(seed)
    d2 = True
    for _ in range(6):
        b = random_braid(rng, 3, 4)
        c = rouquier_complex(b, simplify=False)
        d2 &= c.check_d2() and c.check_homogeneous()
        d2 &= simplify(c).check_d2()
    out.append(Check("d^2 = 0 on random Rouquier complexes", d2))
    return out


# --- markov ---------------------------------------------------------------------


MARKOV_BASES = ((1, ()), (2, ((1, 1),)), (3, ((1, 1), (2, 1))))


def markov_case(n: int, letters, sign: int, width: int = 16) -> list[tuple]:
    """Mismatches between ``C`` and ``C`` closed through a curl of ``sign``."""
    b = BraidWord(n, tuple(letters))
    b2 = BraidWord(n + 1, tuple(letters) + ((n, sign),))
    fc = hochschild_full(rouquier_complex(b))
    lo = fc.q_min()
    t1 = normalize(hhh(fc, (lo, lo + width)), b.exponent, n)
    lo2 = lo if sign > 0 else lo - 4
    t2 = normalize(hhh(b2, (lo2, lo2 + width)), b2.exponent, n + 1)
    return compare_normalized(t1, t2)


def suite_markov(seed: int = 0) -> list[Check]:
    out = []
    for n, letters in MARKOV_BASES:
        for sign in (1, -1):
            bad = markov_case(n, letters, sign)
            name = f"curl {'+' if sign > 0 else '-'} on {BraidWord(n, letters) or 'empty'} ({n} strands)"
            out.append(Check(name, not bad, str(bad[:3]) if bad else ""))
    b1, b2 = parse_braid("s1 s2 s1"), parse_braid("s2 s1 s2")
    t1 = normalize(hhh(b1, (-6, 12)), 3, 3)
    t2 = normalize(hhh(b2, (-6, 12)), 3, 3)
    out.append(Check("braid relation s1 s2 s1 = s2 s1 s2", not compare_normalized(t1, t2)))
    return out


# --- absorption -----------------------------------------------------------------


def suite_absorption(seed: int = 0, depth: int = 6) -> list[Check]:
    b1 = Complex.single(BSWord(2, (1,)))
    out = []
    q2 = simplify(cx_tensor(q2_complex(), b1))
    out.append(Check("Q2 tensor B1 is contractible", q2.is_empty(), q2.dump() if not q2.is_empty() else ""))
    p = simplify(cx_tensor(p2_complex(depth), b1))
    ts = p.t_values()
    out.append(Check(f"P2 (depth {depth}) tensor B1 lives in t <= {1 - depth}", all(t <= 1 - depth for t in ts), str(ts)))
    inv = simplify(rouquier_complex(parse_braid("s1 -s1"), simplify=False))
    out.append(Check("F(s1) F(s1^-1) is R", inv.graded_object() == [(0, (), 0)], str(inv.graded_object())))
    out.append(Check("P2 and Q2 square to zero", p2_complex(depth).check_d2() and q2_complex().check_d2()))
    return out


# --- hecke ----------------------------------------------------------------------


def suite_hecke(seed: int = 0, n_max: int = 4) -> list[Check]:
    out = []
    for n in range(2, n_max + 1):
        p = young_symmetrizer(n)
        one = HeckeElt.one(n)
        idem = p * p == p
        kill = all((b_gen(i, n) * p).is_zero() and (p * b_gen(i, n)).is_zero() for i in range(1, n))
        j = jm_element(n, n)
        mp = ((j - one.scale(LaurentRat.q(2 * n))) * (j - one) * embed(young_symmetrizer(n - 1), n)).is_zero()
        out.append(Check(f"p_{n} idempotent, killed by b_i, minimal polynomial", idem and kill and mp))
    t1, t2 = HeckeElt.T(1, 3), HeckeElt.T(2, 3)
    out.append(Check("braid relation in H_3", t1 * t2 * t1 == t2 * t1 * t2))
    rng = random.Random(seed)
    inv = True
    for _ in range(5):
        b = random_braid(rng, 3, rng.randint(1, 5))
        h = homfly(b)
        g = random_braid(rng, 3, 2)
        inv &= homfly(g + b + g.inverse()) == h
        inv &= homfly(BraidWord(4, b.letters + ((3, 1),))) == h
        inv &= homfly(BraidWord(4, b.letters + ((3, -1),))) == h
    out.append(Check("HOMFLY invariant under conjugation and Markov moves", inv))
    unknot = homfly(BraidWord(1))
    q = LaurentRat.q(1)
    want = {-1: 1 / (1 / q - q), 1: -1 / (1 / q - q)}
    out.append(Check("unknot calibration", unknot.as_dict() == want, str(unknot)))
    return out


# --- euler cross-check ------------------------------------------------------------


EULER_BATTERY = (
    ("", 1),
    ("s1", 2),
    ("-s1", 2),
    ("s1 s1", 2),
    ("s1 s1 s1", 2),
    ("torus(2,5)", 2),
    ("torus(3,2)", 3),
)


def euler_case(text: str, n: int) -> tuple[bool, str]:
    b = parse_braid(text, n)
    fc = hochschild_full(rouquier_complex(b))
    w = default_window(fc)
    table = hhh(fc, w)
    chi = table_euler(table)
    if graded_euler(fc, w) != chi:
        return False, "chain-level Euler characteristic differs from homology"
    bad = compare_euler_homfly(chi, b.exponent, n, w, homfly(b))
    return not bad, str(bad[:3]) if bad else ""


def suite_euler(seed: int = 0) -> list[Check]:
    return [Check(f"Euler = HOMFLY for {t or 'unknot'!s}", *euler_case(t, n)) for t, n in EULER_BATTERY]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "ring": suite_ring,
    "soergel": suite_soergel,
    "markov": suite_markov,
    "absorption": suite_absorption,
    "hecke": suite_hecke,
    "euler-cross-check": suite_euler,
}


def run_suite(name: str, **kw) -> list[Check]:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(**kw)
