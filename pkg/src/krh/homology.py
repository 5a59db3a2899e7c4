"""Degreewise homology of Hochschild bicomplexes.

Pipeline: the total differential ``D = d_a + (-1)^a d_t`` of a fully traced
:class:`FreeComplex` is first simplified over ``Z[x]`` by cancelling
constant ``±1`` entries (only ``d_a``-type ones in iterated mode, which
keeps the ``t``-filtration and hence the first two pages intact).  Each
q-degree is then expanded in a monomial basis to a finite integer complex
and reduced again; whatever survives is handled by dense Smith forms.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping

from .hochschild import FreeComplex, hochschild_full
from .homotopy import Complex
from .linalg import (
    POLY,
    QQ,
    ZZ,
    Coeffs,
    SparseComplex,
    coeffs_for,
    column_basis,
    invariant_factors,
    kernel_basis,
    mat_mul_int,
    snf,
    solve_in_basis,
)
from .ring import degree_slice_dim, monomial_basis

__all__ = [
    "TriTable",
    "TotalTable",
    "IntComplexSlice",
    "WindowError",
    "slice",
    "homology_iterated",
    "homology_total",
    "graded_euler",
    "table_euler",
    "compare_normalized",
    "collapse",
    "normalize",
    "stable_series",
    "stable_coefficient",
    "compare_stable",
    "compare_consecutive",
    "calibrate_unit",
    "StableReport",
    "uct_check",
    "hhh",
    "default_window",
    "snf",
]

WINDOW_WIDTH = 24
Entry = tuple[int, tuple[int, ...]]


class WindowError(ValueError):
    pass


# ---------------------------------------------------------------------------
# tables


@dataclass
class TriTable:
    """Homology ranks and torsion indexed by raw ``(q, a, t)``.

    Entries are stored in the unnormalized degrees.  ``shift`` holds the
    normalization monomial with doubled exponents, so the normalized degree
    of an entry is ``(2q + q2, 2a + a2, 2t + t2) / 2``.
    """

    strands: int
    entries: dict[tuple[int, int, int], Entry]
    q_window: tuple[int, int]
    shift: tuple[int, int, int] = (0, 0, 0)
    normalized: bool = False
    braid: str = ""
    coeff: str = "Z"

    def ranks(self) -> dict[tuple[int, int, int], int]:
        return {k: r for k, (r, _) in self.entries.items() if r}

    def torsion(self) -> dict[tuple[int, int, int], tuple[int, ...]]:
        return {k: t for k, (_, t) in self.entries.items() if t}

    def has_torsion(self) -> bool:
        return any(t for _, t in self.entries.values())

    def doubled(self) -> dict[tuple[int, int, int], Entry]:
        """Entries keyed by doubled normalized degrees."""
        q2, a2, t2 = self.shift
        return {(2 * q + q2, 2 * a + a2, 2 * t + t2): v for (q, a, t), v in self.entries.items()}

    def same_as(self, other: TriTable) -> bool:
        """Equality of normalized tables, ignoring presentation fields."""
        return self.doubled() == other.doubled()

    def shifted(self, dq: int = 0, da: int = 0, dt: int = 0) -> TriTable:
        return replace(
            self,
            entries={(q + dq, a + da, t + dt): v for (q, a, t), v in self.entries.items()},
            q_window=(self.q_window[0] + dq, self.q_window[1] + dq),
        )

    def restrict(self, lo: int, hi: int) -> TriTable:
        return replace(
            self,
            entries={k: v for k, v in self.entries.items() if lo <= k[0] <= hi},
            q_window=(max(lo, self.q_window[0]), min(hi, self.q_window[1])),
        )

    def to_json_obj(self) -> dict:
        return {
            "strands": self.strands,
            "braid": self.braid,
            "window": list(self.q_window),
            "normalized": self.normalized,
            "shift": {"q2": self.shift[0], "a2": self.shift[1], "t2": self.shift[2]},
            "entries": [
                {"q": q, "a": a, "t": t, "rank": r, "torsion": list(tor)}
                for (q, a, t), (r, tor) in sorted(self.entries.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=None, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> TriTable:
        sh = obj.get("shift", {})
        return cls(
            strands=obj["strands"],
            entries={
                (e["q"], e["a"], e["t"]): (e["rank"], tuple(e["torsion"])) for e in obj["entries"]
            },
            q_window=tuple(obj["window"]),
            shift=(sh.get("q2", 0), sh.get("a2", 0), sh.get("t2", 0)),
            normalized=obj.get("normalized", False),
            braid=obj.get("braid", ""),
        )

    def to_text(self) -> str:
        q2, a2, t2 = self.shift

        def fmt(x2: int) -> str:
            return str(x2 // 2) if x2 % 2 == 0 else f"{x2}/2"

        rows = [("q", "a", "t", "rank", "torsion")]
        for (q, a, t), (r, tor) in sorted(self.entries.items()):
            rows.append((fmt(2 * q + q2), fmt(2 * a + a2), fmt(2 * t + t2), str(r), ",".join(map(str, tor)) or "-"))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        head = f"# strands={self.strands} braid={self.braid!r} window={self.q_window[0]}:{self.q_window[1]} normalized={self.normalized}"
        return "\n".join([head] + ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows])


@dataclass
class TotalTable:
    """Homology of the total complex, graded by ``(q, a + t)``."""

    strands: int
    entries: dict[tuple[int, int], Entry]
    q_window: tuple[int, int]

    def ranks(self) -> dict[tuple[int, int], int]:
        return {k: r for k, (r, _) in self.entries.items() if r}


def compare_normalized(t1: TriTable, t2: TriTable) -> list[tuple]:
    """Differences between two tables on their common normalized q-range.

    Returns ``(doubled key, entry1, entry2)`` triples; empty means agreement.
    """
    lo = max(2 * t1.q_window[0] + t1.shift[0], 2 * t2.q_window[0] + t2.shift[0])
    hi = min(2 * t1.q_window[1] + t1.shift[0], 2 * t2.q_window[1] + t2.shift[0])
    d1 = {k: v for k, v in t1.doubled().items() if lo <= k[0] <= hi and (v[0] or v[1])}
    d2 = {k: v for k, v in t2.doubled().items() if lo <= k[0] <= hi and (v[0] or v[1])}
    return [(k, d1.get(k), d2.get(k)) for k in sorted(set(d1) | set(d2)) if d1.get(k) != d2.get(k)]


def collapse(table: TriTable) -> dict[tuple[int, int], int]:
    """Ranks of a trigraded table summed along ``a + t``."""
    out: dict[tuple[int, int], int] = {}
    for (q, a, t), (r, _) in table.entries.items():
        if r:
            out[q, a + t] = out.get((q, a + t), 0) + r
    return out


# ---------------------------------------------------------------------------
# from FreeComplex to sparse complexes


@dataclass
class _PolyComplex:
    """Signed total differential over ``Z[x]``, after optional reduction."""

    n_vars: int
    gens: dict[int, tuple[int, int, int]]
    out: dict[int, dict[int, object]]


def _poly_complex(fc: FreeComplex, mode: str) -> _PolyComplex:
    if fc.Y:
        raise ValueError(f"strands {sorted(fc.Y)} are not traced yet")
    sc = SparseComplex(POLY)
    for g, lab in enumerate(fc.gens):
        sc.add_vertex(g, lab)
    for c, col in fc.d_a.cols.items():
        for r, p in col.items():
            sc.add_edge(c, r, p)
    for c, col in fc.d_t.cols.items():
        sign = -1 if fc.gens[c][1] % 2 else 1
        for r, p in col.items():
            sc.add_edge(c, r, p if sign > 0 else -p)
    if mode == "iterated":
        sc.eliminate(lambda s, t: s[2] == t[2])
    elif mode == "total":
        sc.eliminate()
    return _PolyComplex(fc.n_vars, dict(sc.label), {v: dict(o) for v, o in sc.out.items()})


@dataclass
class IntComplexSlice:
    """One q-degree of a Hochschild bicomplex as a based complex over a ring.

    Vertices are labelled ``(a, t)``.
    """

    q: int
    complex: SparseComplex

    def dims(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for lab in self.complex.label.values():
            out[lab] = out.get(lab, 0) + 1
        return out

    def check_d2(self) -> bool:
        sc = self.complex
        ring = sc.ring
        for v, o in sc.out.items():
            acc: dict = {}
            for w, c in o.items():
                for u, c2 in sc.out[w].items():
                    acc[u] = acc.get(u, 0) + c * c2
            if any(not ring.is_zero(ring.reduce(x)) for x in acc.values()):
                return False
        return True


def _slice(pc: _PolyComplex, q: int, ring: Coeffs) -> SparseComplex:
    n = pc.n_vars
    sc = SparseComplex(ring)
    label, out, inc = sc.label, sc.out, sc.inc
    base: dict[int, tuple[int, dict[int, int], list[int]]] = {}
    nxt = 0
    for g in sorted(pc.gens):
        qg, a, t = pc.gens[g]
        d = q - qg
        if d < 0 or d % 2:
            continue
        keys, idx = monomial_basis(n, d // 2)
        base[g] = (nxt, idx, keys)
        lab = (a, t)
        for i in range(len(keys)):
            v = nxt + i
            label[v] = lab
            out[v] = {}
            inc[v] = {}
        nxt += len(keys)
    conv = ring.convert
    for g, o in pc.out.items():
        bg = base.get(g)
        if bg is None:
            continue
        b0, _, keys = bg
        for h, p in o.items():
            bh = base.get(h)
            if bh is None:
                continue
            b1, idxh, _ = bh
            terms = [(k, conv(c)) for k, c in p.terms.items()]
            for i, m in enumerate(keys):
                v = b0 + i
                ov = out[v]
                for k, c in terms:
                    if ring.is_zero(c):
                        continue
                    w = b1 + idxh[m + k]
                    ov[w] = c
                    inc[w][v] = c
    return sc


def slice(fc: FreeComplex, q: int, coeff: str | Coeffs = "Z") -> IntComplexSlice:  # noqa: A001
    """Integer (or field) complex of q-degree ``q`` of the total differential."""
    ring = coeff if isinstance(coeff, Coeffs) else coeffs_for(coeff)
    pc = _poly_complex(fc, "none")
    return IntComplexSlice(q, _slice(pc, q, ring))


# ---------------------------------------------------------------------------
# homology of one slice


def _block_homology(sc: SparseComplex, group, nxt) -> dict:
    """Homology of a complex whose vertices are grouped, ``d`` mapping
    group ``k`` to group ``nxt(k)``.  Assumes units were already cancelled.
    """
    members: dict = {}
    for v in sorted(sc.label):
        members.setdefault(group(sc.label[v]), []).append(v)
    rank_out: dict = {}
    tors_in: dict = {}
    for k, vs in members.items():
        k2 = nxt(k)
        tg = members.get(k2, [])
        if not tg:
            rank_out[k] = 0
            continue
        col = {v: i for i, v in enumerate(vs)}
        row = {w: i for i, w in enumerate(tg)}
        m = [[0] * len(vs) for _ in tg]
        nz = False
        for v in vs:
            for w, c in sc.out[v].items():
                if w in row:
                    m[row[w]][col[v]] = c if sc.ring.is_field else int(c)
                    nz = True
        if not nz:
            rank_out[k] = 0
            continue
        if sc.ring.is_field:
            r = _field_rank(m, sc.ring)
            rank_out[k] = r
        else:
            divs = invariant_factors(m, len(vs))
            rank_out[k] = len(divs)
            tors_in[k2] = tuple(d for d in divs if d > 1)
    res = {}
    prev = {nxt(k): k for k in members}
    for k, vs in members.items():
        rin = rank_out.get(prev.get(k), 0) if k in prev else 0
        r = len(vs) - rank_out.get(k, 0) - rin
        tor = tors_in.get(k, ())
        if r or tor:
            res[k] = (r, tor)
    return res


def _field_rank(m: list[list], ring: Coeffs) -> int:
    rows = [[ring.convert(x) for x in r] for r in m]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if not ring.is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = ring.inv(rows[rank][c])
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if not ring.is_zero(f):
                f = f * inv
                rows[i] = [ring.reduce(x - f * y) for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _lattice_e2(sc: SparseComplex) -> dict:
    """Second page over Z for a filtered complex with labels ``(a, t)``.

    ``E1 = ker d0 / im d0`` and ``E2 = K / (B + d1 Z)`` with
    ``K = {z in Z : d1 z in B}``, all computed as sublattices.
    """
    members: dict = {}
    for v in sorted(sc.label):
        members.setdefault(sc.label[v], []).append(v)
    index = {k: {v: i for i, v in enumerate(vs)} for k, vs in members.items()}

    def block(src, tgt) -> list[list[int]]:
        vs = members.get(src, [])
        ws = index.get(tgt, {})
        m = [[0] * len(vs) for _ in range(len(ws))]
        for j, v in enumerate(vs):
            for w, c in sc.out[v].items():
                i = ws.get(w)
                if i is not None:
                    m[i][j] += int(c)
        return m

    def d0(k):
        a, t = k
        return block(k, (a + 1, t))

    def d0_into(k):
        a, t = k
        return block((a - 1, t), k)

    def d1(k):
        a, t = k
        return block(k, (a, t + 1))

    cache_Z: dict = {}

    def Z(k):
        if k not in cache_Z:
            dim = len(members.get(k, []))
            m = d0(k)
            cache_Z[k] = kernel_basis(m, dim) if any(any(r) for r in m) else [[int(i == j) for j in range(dim)] for i in range(dim)]
        return cache_Z[k]

    def hcat(x, y, rows):
        return [(x[i] if x else []) + (y[i] if y else []) for i in range(rows)]

    res = {}
    for k, vs in members.items():
        a, t = k
        dim = len(vs)
        Zk = Z(k)
        z = len(Zk[0]) if Zk and Zk[0] else 0
        if z == 0:
            continue
        # K = {x : d1 Zk x in im d0 into (a, t+1)}
        tgt = (a, t + 1)
        dimt = len(members.get(tgt, []))
        if dimt:
            img = mat_mul_int(d1(k), Zk)
            B1 = d0_into(tgt)
            comb = hcat(img, [[-x for x in r] for r in B1], dimt)
            ker = kernel_basis(comb, len(comb[0]))
            proj = ker[:z]
            Kcoord = column_basis(proj, z)
        else:
            Kcoord = [[int(i == j) for j in range(z)] for i in range(z)]
        kdim = len(Kcoord[0]) if Kcoord and Kcoord[0] else 0
        if kdim == 0:
            continue
        Kb = mat_mul_int(Zk, Kcoord)
        # denominators: im d0 into k, and d1 of cycles from (a, t-1)
        gens = d0_into(k)
        src = (a, t - 1)
        if members.get(src):
            extra = mat_mul_int(d1(src), Z(src))
            gens = hcat(gens, extra, dim)
        if gens and gens[0]:
            Y = solve_in_basis(Kb, gens, dim)
            divs = invariant_factors(Y, len(Y[0]) if Y else 0)
        else:
            divs = ()
        r = kdim - len(divs)
        tor = tuple(d for d in divs if d > 1)
        if r or tor:
            res[k] = (r, tor)
    return res


def _iterated_slice(sc: SparseComplex) -> dict:
    sc.eliminate(lambda s, t: s[1] == t[1])
    has_d0 = any(sc.label[v][1] == sc.label[w][1] for v, w, _ in sc.edges())
    if has_d0:
        return _lattice_e2(sc)
    sc.drop_edges(lambda s, t: t[1] - s[1] == 1)
    sc.eliminate()
    return _block_homology(sc, lambda lab: lab, lambda k: (k[0], k[1] + 1))


def _total_slice(sc: SparseComplex) -> dict:
    sc.eliminate()
    return _block_homology(sc, lambda lab: lab[0] + lab[1], lambda k: k + 1)


# ---------------------------------------------------------------------------
# drivers

_WORKER_STATE: dict = {}


def _init_worker(pc, ring_spec, mode):
    _WORKER_STATE["job"] = (pc, coeffs_for(ring_spec), mode)


def _run_slice(q: int):
    pc, ring, mode = _WORKER_STATE["job"]
    return q, _slice_homology(pc, q, ring, mode)


def _slice_homology(pc: _PolyComplex, q: int, ring: Coeffs, mode: str) -> dict:
    sc = _slice(pc, q, ring)
    if not sc.label:
        return {}
    return _iterated_slice(sc) if mode == "iterated" else _total_slice(sc)


def _workers(workers: int | None) -> int:
    if workers is None:
        try:
            workers = int(os.environ.get("KRH_WORKERS", "1"))
        except ValueError:
            workers = 1
    return max(1, workers)


def default_window(fc: FreeComplex) -> tuple[int, int]:
    env = os.environ.get("KRH_WINDOW")
    if env:
        return parse_window(env)
    lo = fc.q_min()
    return lo, lo + WINDOW_WIDTH


def parse_window(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise WindowError(f"window must look like LO:HI, got {text!r}") from None
    if lo > hi:
        raise WindowError(f"empty window {text!r}")
    return lo, hi


def _run(fc: FreeComplex, window, coeff, mode: str, workers: int | None) -> tuple[dict, tuple[int, int], Coeffs]:
    if window is None:
        window = default_window(fc)
    lo, hi = window
    if lo > hi:
        raise WindowError(f"empty window {lo}:{hi}")
    ring = coeff if isinstance(coeff, Coeffs) else coeffs_for(coeff)
    pc = _poly_complex(fc, mode)
    qs = [q for q in range(lo, hi + 1)]
    nw = _workers(workers)
    results: dict = {}
    if nw > 1 and len(qs) > 1:
        spec = ring.name if ring.name in ("Z", "Q") else ring.characteristic
        with ProcessPoolExecutor(nw, initializer=_init_worker, initargs=(pc, spec, mode)) as ex:
            for q, r in ex.map(_run_slice, qs):
                results[q] = r
    else:
        for q in qs:
            results[q] = _slice_homology(pc, q, ring, mode)
    return results, (lo, hi), ring


def homology_iterated(fc: FreeComplex, window=None, coeff="Z", *, workers: int | None = None) -> TriTable:
    """``H(H(C, d_a), d_t)`` degree by degree on the q-window."""
    results, win, ring = _run(fc, window, coeff, "iterated", workers)
    entries = {}
    for q, res in results.items():
        for (a, t), v in res.items():
            entries[q, a, t] = v
    return TriTable(fc.n_vars, entries, win, coeff=ring.name)


def homology_total(fc: FreeComplex, window=None, coeff="Z", *, workers: int | None = None) -> TotalTable:
    """Homology of ``d_a + (-1)^a d_t``, graded by ``(q, a + t)``."""
    results, win, ring = _run(fc, window, coeff, "total", workers)
    entries = {}
    for q, res in results.items():
        for k, v in res.items():
            entries[q, k] = v
    return TotalTable(fc.n_vars, entries, win)


# ---------------------------------------------------------------------------
# Euler characteristics, normalization, stable series


def graded_euler(obj: FreeComplex | Complex, window: tuple[int, int] | None = None) -> dict[tuple[int, int], int]:
    """``sum_t (-1)^t dim`` per ``(q, a)`` over the chain complex ``HH(C_t)``.

    The a-direction is a cohomological direction of its own, so the
    t-alternating sum is taken after the Koszul step: per q-slice the
    a-differential is cancelled over Q and the survivors are counted.
    """
    fc = obj if isinstance(obj, FreeComplex) else hochschild_full(obj)
    if window is None:
        window = default_window(fc)
    pc = _poly_complex(fc, "iterated")
    out: dict[tuple[int, int], int] = {}
    for q in range(window[0], window[1] + 1):
        sc = _slice(pc, q, QQ)
        sc.eliminate(lambda s, t: s[1] == t[1])
        for a, t in sc.label.values():
            out[q, a] = out.get((q, a), 0) + (-1 if t % 2 else 1)
    return {k: v for k, v in out.items() if v}


def table_euler(table: TriTable) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for (q, a, t), (r, _) in table.entries.items():
        if r:
            out[q, a] = out.get((q, a), 0) + (-r if t % 2 else r)
    return {k: v for k, v in out.items() if v}


def normalize(table: TriTable, e: int, n: int) -> TriTable:
    """Attach the monomial ``(t^{1/2} a^{1/2} q^{-2})^{e-n}`` (doubled exponents)."""
    k = e - n
    return replace(table, shift=(-4 * k, k, k), normalized=True)


def stable_coefficient(n: int, q: int, a: int, t: int) -> int:
    """Coefficient of ``q^q a^a t^t`` in the product over ``k = 1..n`` of
    ``(1 + q^{2k-4} a t^{2-2k}) / (1 - q^{2k} t^{2-2k})``."""
    return _stable_table(n, q, q).get((q, a, t), 0)


_STABLE_CACHE: dict = {}


def _stable_table(n: int, lo: int, hi: int) -> dict[tuple[int, int, int], int]:
    key = (n, lo, hi)
    if key in _STABLE_CACHE:
        return _STABLE_CACHE[key]
    # polynomial truncated at q <= hi; q is bounded below by the xi's
    poly: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}
    min_q_rest = [0] * (n + 2)
    for k in range(n, 0, -1):
        min_q_rest[k] = min_q_rest[k + 1] + min(0, 2 * k - 4)
    for k in range(1, n + 1):
        nxt: dict = {}
        # exterior factor
        for (q, a, t), c in poly.items():
            nxt[q, a, t] = nxt.get((q, a, t), 0) + c
            nxt[q + 2 * k - 4, a + 1, t + 2 - 2 * k] = nxt.get((q + 2 * k - 4, a + 1, t + 2 - 2 * k), 0) + c
        poly = nxt
        nxt = {}
        bound = hi - min_q_rest[k + 1]
        for (q, a, t), c in poly.items():
            m = 0
            while q + 2 * k * m <= bound:
                key2 = (q + 2 * k * m, a, t + (2 - 2 * k) * m)
                nxt[key2] = nxt.get(key2, 0) + c
                m += 1
        poly = nxt
    res = {k: v for k, v in poly.items() if lo <= k[0] <= hi and v}
    _STABLE_CACHE[key] = res
    return res


def stable_series(n: int, window: tuple[int, int]) -> TriTable:
    if n < 1:
        raise ValueError("n must be >= 1")
    lo, hi = window
    entries = {k: (v, ()) for k, v in _stable_table(n, lo, hi).items()}
    return TriTable(n, entries, (lo, hi), braid=f"stable({n})")


@dataclass
class StableReport:
    n: int
    k: int
    calibration: tuple[int, int, int] | None  # doubled shift added to normalized degrees
    checked: int = 0
    mismatches: list = field(default_factory=list)
    torsion: list = field(default_factory=list)
    empty_range: bool = False

    @property
    def ok(self) -> bool:
        if self.empty_range:
            return True
        return self.calibration is not None and not self.mismatches and not self.torsion


def calibrate_unit(table: TriTable, in_stable) -> tuple[int, int, int] | None:
    """Doubled shift sending the unit class to the origin.

    The unit class is the entry in the stable range with the largest
    ``t``, then smallest ``a``, then smallest ``q``.
    """
    cands = [k for k, (r, _) in table.doubled().items() if r and in_stable(k[2])]
    if not cands:
        return None
    q, a, t = min(cands, key=lambda k: (-k[2], k[1], k[0]))
    return -q, -a, -t


def compare_stable(table: TriTable, n: int, k: int) -> StableReport:
    """Match a normalized ``T(n,k)`` table with the stable series on the
    stable range and the q-window."""
    from .rouquier import stable_range

    sr = stable_range(n, k)
    cal = calibrate_unit(table, sr.in_stable)
    rep = StableReport(n, k, cal, empty_range=sr.stable_lo2 >= sr.support_hi2)
    if cal is None:
        return rep
    cq, ca, ct = cal
    q2 = table.shift[0]
    # window in calibrated coordinates
    lo = (2 * table.q_window[0] + q2 + cq) // 2
    hi = (2 * table.q_window[1] + q2 + cq) // 2
    series = _stable_table(n, lo, hi)
    seen = set()
    for (q, a, t), (r, tor) in table.doubled().items():
        if not sr.in_stable(t):
            continue
        key = ((q + cq) // 2, (a + ca) // 2, (t + ct) // 2)
        if (q + cq) % 2 or (a + ca) % 2 or (t + ct) % 2:
            rep.mismatches.append((key, r, None))
            continue
        seen.add(key)
        rep.checked += 1
        if series.get(key, 0) != r:
            rep.mismatches.append((key, r, series.get(key, 0)))
        if tor:
            rep.torsion.append((key, tor))
    for key, v in series.items():
        if key in seen:
            continue
        t_doubled = 2 * key[2] - ct
        if sr.in_stable(t_doubled):
            rep.checked += 1
            rep.mismatches.append((key, 0, v))
    return rep


def compare_consecutive(t1: TriTable, t2: TriTable, n: int, k2: int) -> list[tuple]:
    """Differences between calibrated ``T(n, k2-1)`` and ``T(n, k2)`` tables
    where both are in their stable ranges and windows overlap."""
    from .rouquier import stable_range

    s1, s2 = stable_range(n, k2 - 1), stable_range(n, k2)
    if s1.stable_lo2 >= s1.support_hi2:
        return []
    c1 = calibrate_unit(t1, s1.in_stable)
    c2 = calibrate_unit(t2, s2.in_stable)
    if c1 is None or c2 is None:
        return [("uncalibrated", c1, c2)]

    def cal(t, c, sr):
        return {
            (q + c[0], a + c[1], tt + c[2]): v
            for (q, a, tt), v in t.doubled().items()
            if sr.in_stable(tt) and (v[0] or v[1])
        }

    d1, d2 = cal(t1, c1, s1), cal(t2, c2, s2)
    qlo = max(2 * t.q_window[0] + t.shift[0] + c[0] for t, c in ((t1, c1), (t2, c2)))
    qhi = min(2 * t.q_window[1] + t.shift[0] + c[0] for t, c in ((t1, c1), (t2, c2)))
    # calibrated t runs over (-width, 0] in both stable ranges
    width = min(s1.support_hi2 - s1.stable_lo2, s2.support_hi2 - s2.stable_lo2)
    keys = {k for k in set(d1) | set(d2) if qlo <= k[0] <= qhi and -width < k[2] <= 0}
    return [(k, d1.get(k), d2.get(k)) for k in sorted(keys) if d1.get(k) != d2.get(k)]


def uct_check(tz: TriTable | TotalTable, tq: TriTable | TotalTable, tp: TriTable | TotalTable, p: int) -> list[str]:
    """Universal-coefficient consistency between Z, Q and F_p tables.

    Exact for total tables.  For iterated tables only ``rank_Z = rank_Q``
    and ``rank_Q <= rank_Fp`` are forced, with excess allowed only in
    q-degrees where the integral table has p-torsion.
    """
    problems = []
    rz, rq, rp = tz.ranks(), tq.ranks(), tp.ranks()
    for k in set(rz) | set(rq):
        if rz.get(k, 0) != rq.get(k, 0):
            problems.append(f"rank over Z {rz.get(k, 0)} != rank over Q {rq.get(k, 0)} at {k}")
    tors = {k: v for k, (_, v) in tz.entries.items() if v}

    def pcount(k):
        return sum(1 for d in tors.get(k, ()) if d % p == 0)

    if isinstance(tz, TotalTable):
        for k in set(rz) | set(rp) | set(tors) | {(q, d - 1) for q, d in tors}:
            want = rz.get(k, 0) + pcount(k) + pcount((k[0], k[1] + 1))
            if rp.get(k, 0) != want:
                problems.append(f"F{p} rank {rp.get(k, 0)} != {want} predicted at {k}")
    else:
        ptors_q = {k[0] for k in tors if pcount(k)}
        for k in set(rq) | set(rp):
            if rp.get(k, 0) < rq.get(k, 0):
                problems.append(f"F{p} rank below Q rank at {k}")
            elif rp.get(k, 0) > rq.get(k, 0) and k[0] not in ptors_q:
                problems.append(f"F{p} excess at {k} without p-torsion")
    return problems


def hhh(
    obj,
    window=None,
    coeff="Z",
    *,
    mode: str = "iterated",
    workers: int | None = None,
    max_generators: int | None = None,
):
    """Convenience front end: braid word, bimodule complex or FreeComplex."""
    from .rouquier import BraidWord, ResourceLimit, rouquier_complex

    if isinstance(obj, BraidWord):
        c = rouquier_complex(obj, simplify=True, max_generators=max_generators)
    else:
        c = obj
    fc = c if isinstance(c, FreeComplex) else hochschild_full(c)
    if max_generators is not None and len(fc.gens) > max_generators * (1 << fc.n_vars):
        raise ResourceLimit(f"{len(fc.gens)} free generators exceed the limit")
    if mode == "iterated":
        t = homology_iterated(fc, window, coeff, workers=workers)
        if isinstance(obj, BraidWord):
            t.braid = str(obj)
        return t
    if mode == "total":
        return homology_total(fc, window, coeff, workers=workers)
    raise ValueError(f"unknown mode {mode!r}")
