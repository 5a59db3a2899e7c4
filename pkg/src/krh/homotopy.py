"""Bounded chain complexes of shifted Bott-Samelson words.

A :class:`Complex` holds summands (each a BS word at a homological degree
``t``) and the nonzero blocks of its differential, stored in both
directions so that Gaussian elimination can find neighbours quickly.
Differentials raise ``t`` by one and are q-degree 0 maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .ring import PolyMatrix, mat_mul, unit_inverse
from .soergel import BSMor, BSWord, bsbs_split, mor_identity, mor_tensor

__all__ = [
    "Complex",
    "ChainMap",
    "cx_cone",
    "cx_tensor",
    "cx_shift",
    "reduce_square_words",
    "gaussian_eliminate",
    "simplify",
    "is_contractible",
    "Verdict",
]


class Complex:
    """Finite complex of shifted BS words on a fixed number of strands.

    ``objects[k] = (t, word)``; ``out[s][k]`` is the block from summand
    ``s`` to summand ``k`` (a PolyMatrix with the target's basis as rows)
    and ``inc`` mirrors it.  Summand ids are never reused.
    """

    def __init__(self, strands: int):
        self.strands = strands
        self.objects: dict[int, tuple[int, BSWord]] = {}
        self.out: dict[int, dict[int, PolyMatrix]] = {}
        self.inc: dict[int, dict[int, PolyMatrix]] = {}
        self._next = 0

    # construction ---------------------------------------------------------
    @classmethod
    def single(cls, word: BSWord, t: int = 0) -> Complex:
        c = cls(word.strands)
        c.add(t, word)
        return c

    @classmethod
    def unit(cls, strands: int) -> Complex:
        return cls.single(BSWord(strands, (), 0), 0)

    def add(self, t: int, word: BSWord) -> int:
        if word.strands != self.strands:
            raise ValueError("strand mismatch")
        k = self._next
        self._next += 1
        self.objects[k] = (t, word)
        self.out[k] = {}
        self.inc[k] = {}
        return k

    def set_block(self, src: int, tgt: int, m: PolyMatrix | BSMor | None) -> None:
        if isinstance(m, BSMor):
            m = m.matrix
        ts, ws = self.objects[src]
        tt, wt = self.objects[tgt]
        if tt != ts + 1:
            raise ValueError("differential must raise t by one")
        if m is None or m.is_zero():
            self.out[src].pop(tgt, None)
            self.inc[tgt].pop(src, None)
            return
        if m.shape != (wt.rank, ws.rank):
            raise ValueError("block shape mismatch")
        self.out[src][tgt] = m
        self.inc[tgt][src] = m

    def add_block(self, src: int, tgt: int, m: PolyMatrix) -> None:
        old = self.out[src].get(tgt)
        self.set_block(src, tgt, m if old is None else old + m)

    def block(self, src: int, tgt: int) -> PolyMatrix | None:
        return self.out[src].get(tgt)

    def remove(self, k: int) -> None:
        for tgt in self.out.pop(k):
            del self.inc[tgt][k]
        for src in self.inc.pop(k):
            del self.out[src][k]
        del self.objects[k]

    def copy(self) -> Complex:
        c = Complex(self.strands)
        c.objects = dict(self.objects)
        c.out = {k: dict(v) for k, v in self.out.items()}
        c.inc = {k: dict(v) for k, v in self.inc.items()}
        c._next = self._next
        return c

    # queries -------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.objects)

    def is_empty(self) -> bool:
        return not self.objects

    def ids(self) -> list[int]:
        return sorted(self.objects)

    def ids_at(self, t: int) -> list[int]:
        return [k for k in self.ids() if self.objects[k][0] == t]

    def t_values(self) -> list[int]:
        return sorted({t for t, _ in self.objects.values()})

    def graded_object(self) -> list[tuple[int, tuple[int, ...], int]]:
        """Sorted list of ``(t, letters, q_shift)``."""
        return sorted((t, w.letters, w.q_shift) for t, w in self.objects.values())

    def rank(self) -> int:
        """Total left-module rank."""
        return sum(w.rank for _, w in self.objects.values())

    def blocks(self) -> Iterator[tuple[int, int, PolyMatrix]]:
        for s in self.ids():
            for t in sorted(self.out[s]):
                yield s, t, self.out[s][t]

    def check_d2(self) -> bool:
        for s in self.objects:
            acc: dict[int, PolyMatrix] = {}
            for mid, m1 in self.out[s].items():
                for tgt, m2 in self.out[mid].items():
                    p = mat_mul(m2, m1)
                    acc[tgt] = acc[tgt] + p if tgt in acc else p
            if any(not m.is_zero() for m in acc.values()):
                return False
        return True

    def check_homogeneous(self) -> bool:
        return all(m.degree == 0 and m.check_homogeneous() for _, _, m in self.blocks())

    def dump(self) -> str:
        """Stable text listing of the objects and differential."""
        order = sorted(self.objects, key=lambda k: (self.objects[k][0], k))
        label = {k: i for i, k in enumerate(order)}
        lines = []
        for k in order:
            t, w = self.objects[k]
            lines.append(f"t={t}: word({' '.join(map(str, w.letters))}) qshift={w.q_shift}  [#{label[k]}]")
        for k in order:
            for tgt in sorted(self.out[k], key=label.get):
                m = self.out[k][tgt]
                ents = ", ".join(f"({r},{c}): {p!r}" for (r, c), p in sorted(m.entries().items()))
                lines.append(f"d #{label[k]} -> #{label[tgt]}: {{{ents}}}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"Complex(strands={self.strands}, objects={len(self)}, rank={self.rank()})"


@dataclass
class ChainMap:
    """Components ``(source id, target id) -> block`` between two complexes."""

    source: Complex
    target: Complex
    components: dict[tuple[int, int], PolyMatrix] = field(default_factory=dict)

    def is_chain_map(self) -> bool:
        src, tgt = self.source, self.target
        for (a, b), m in self.components.items():
            if src.objects[a][0] != tgt.objects[b][0]:
                return False
        # compare d_tgt f and f d_src on every source summand
        for a in src.objects:
            lhs: dict[int, PolyMatrix] = {}
            for (a2, b), m in self.components.items():
                if a2 != a:
                    continue
                for b2, d in tgt.out[b].items():
                    p = mat_mul(d, m)
                    lhs[b2] = lhs[b2] + p if b2 in lhs else p
            for a2, d in src.out[a].items():
                for (a3, b2), m in self.components.items():
                    if a3 != a2:
                        continue
                    p = mat_mul(m, d)
                    lhs[b2] = lhs[b2] - p if b2 in lhs else -p
            if any(not m.is_zero() for m in lhs.values()):
                return False
        return True


def cx_shift(c: Complex, dt: int = 0, dq: int = 0) -> Complex:
    out = Complex(c.strands)
    ids = {}
    for k in c.ids():
        t, w = c.objects[k]
        ids[k] = out.add(t + dt, w.shift(dq))
    for s, t, m in c.blocks():
        out.set_block(ids[s], ids[t], PolyMatrix(m.n_vars, _degs(out, ids[t]), _degs(out, ids[s]), m.cols, 0))
    return out


def _degs(c: Complex, k: int) -> tuple[int, ...]:
    return c.objects[k][1].basis_degrees()


def cx_cone(f: ChainMap) -> Complex:
    """Cone with the source shifted down by one and its differential negated."""
    if not f.is_chain_map():
        raise ValueError("not a chain map")
    a, b = f.source, f.target
    out = Complex(a.strands)
    ia = {k: out.add(a.objects[k][0] - 1, a.objects[k][1]) for k in a.ids()}
    ib = {k: out.add(b.objects[k][0], b.objects[k][1]) for k in b.ids()}
    for s, t, m in a.blocks():
        out.set_block(ia[s], ia[t], -m)
    for s, t, m in b.blocks():
        out.set_block(ib[s], ib[t], m)
    for (s, t), m in f.components.items():
        out.set_block(ia[s], ib[t], m)
    return out


def cx_tensor(c: Complex, d: Complex) -> Complex:
    """Total complex of ``c ⊗_R d``; the ``d``-differential picks up ``(-1)^t(c)``."""
    if c.strands != d.strands:
        raise ValueError("strand mismatch")
    out = Complex(c.strands)
    pair: dict[tuple[int, int], int] = {}
    for x in c.ids():
        tx, wx = c.objects[x]
        for y in d.ids():
            ty, wy = d.objects[y]
            pair[x, y] = out.add(tx + ty, wx.concat(wy))
    ident = {y: mor_identity(d.objects[y][1]) for y in d.ids()}
    identc = {x: mor_identity(c.objects[x][1]) for x in c.ids()}
    for x, x2, m in c.blocks():
        f = BSMor(c.objects[x][1], c.objects[x2][1], m)
        for y in d.ids():
            out.set_block(pair[x, y], pair[x2, y], mor_tensor(f, ident[y]).matrix)
    for y, y2, m in d.blocks():
        g = BSMor(d.objects[y][1], d.objects[y2][1], m)
        for x in c.ids():
            blk = mor_tensor(identc[x], g).matrix
            if c.objects[x][0] % 2:
                blk = -blk
            out.set_block(pair[x, y], pair[x, y2], blk)
    return out


def _find_square(letters: tuple[int, ...]) -> int:
    for p in range(len(letters) - 1):
        if letters[p] == letters[p + 1]:
            return p
    return -1


def _split_maps(word: BSWord, p: int):
    """Isomorphism pieces for the square at position ``p`` of ``word``."""
    n = word.strands
    i = word.letters[p]
    pi_p, io_p, pi_m, io_m = bsbs_split(i, n, word.q_shift)
    left = mor_identity(BSWord(n, word.letters[:p], 0))
    right = mor_identity(BSWord(n, word.letters[p + 2:], 0))

    def wrap(f: BSMor) -> BSMor:
        return mor_tensor(mor_tensor(left, f), right)

    return [(wrap(pi_p), wrap(io_p)), (wrap(pi_m), wrap(io_m))]


def reduce_square_words(c: Complex, *, in_place: bool = False) -> Complex:
    """Replace every ``...ii...`` summand using ``B_iB_i ≅ B_i(1) ⊕ B_i(-1)``."""
    c = c if in_place else c.copy()
    todo = [k for k in c.ids() if _find_square(c.objects[k][1].letters) >= 0]
    while todo:
        k = todo.pop()
        t, w = c.objects[k]
        p = _find_square(w.letters)
        if p < 0:
            continue
        incoming = dict(c.inc[k])
        outgoing = dict(c.out[k])
        c.remove(k)
        for pi, io in _split_maps(w, p):
            new = c.add(t, pi.target)
            for src, m in incoming.items():
                c.set_block(src, new, mat_mul(pi.matrix, m))
            for tgt, m in outgoing.items():
                c.set_block(new, tgt, mat_mul(m, io.matrix))
            if _find_square(pi.target.letters) >= 0:
                todo.append(new)
    return c


def _eliminate_pair(c: Complex, s: int, t: int, binv: PolyMatrix) -> None:
    """Cancel summand ``s`` against ``t`` through the invertible block ``t <- s``."""
    into_t = [(x, a) for x, a in c.inc[t].items() if x != s]
    out_of_s = [(y, cm) for y, cm in c.out[s].items() if y != t]
    for y, cm in out_of_s:
        cb = mat_mul(cm, binv)
        for x, a in into_t:
            c.add_block(x, y, -mat_mul(cb, a))
    c.remove(s)
    c.remove(t)


def gaussian_eliminate(c: Complex, *, in_place: bool = False) -> Complex:
    """Cancel invertible blocks between identical summands until none remain.

    Candidates are taken smallest rank first and, within a rank, from the
    highest homological degree down.
    """
    c = c if in_place else c.copy()
    while True:
        cands = []
        for s, (ts, ws) in c.objects.items():
            for t in c.out[s]:
                if c.objects[t][1] == ws:
                    cands.append((ws.rank, -ts, s, t))
        if not cands:
            return c
        cands.sort()
        progress = False
        for _, _, s, t in cands:
            if s not in c.objects or t not in c.objects:
                continue
            b = c.out[s].get(t)
            if b is None:
                continue
            binv = unit_inverse(b)
            if binv is None:
                continue
            _eliminate_pair(c, s, t, binv)
            progress = True
        if not progress:
            return c


def simplify(c: Complex, *, in_place: bool = False) -> Complex:
    c = reduce_square_words(c, in_place=in_place)
    return gaussian_eliminate(c, in_place=True)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a contractibility test.

    ``contractible`` is None when neither elimination nor homology could
    decide; ``method`` names whichever decided.
    """

    contractible: bool | None
    method: str

    def __bool__(self) -> bool:
        return bool(self.contractible)


def is_contractible(c: Complex, *, confirm: bool = True, window: tuple[int, int] | None = None) -> Verdict:
    s = simplify(c)
    if s.is_empty():
        return Verdict(True, "elimination")
    if not confirm:
        return Verdict(None, "elimination-inconclusive")
    from .homology import hhh  # local import: homology depends on this module

    table = hhh(s, window=window, coeff="Q")
    if table.entries:
        return Verdict(False, "homology")
    return Verdict(None, "homology-inconclusive")


def objects_summary(c: Complex) -> list[str]:
    return [f"t={t}: word({' '.join(map(str, l))}) qshift={q}" for t, l, q in c.graded_object()]


def iter_words(c: Complex) -> Iterable[BSWord]:
    return (w for _, w in c.objects.values())
