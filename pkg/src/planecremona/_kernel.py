"""Buchberger kernel on packed-monomial dictionaries.

Elements are dicts ``{packed monomial: coefficient}``.  For submodules of a
free module the component index sits above the exponent fields.  Components
``0 .. top_rank-1`` form the "top" block; higher components are tracking
coordinates, ordered below every top term, so an element whose top part
vanishes is a syzygy of the inputs.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import BITS, FIELD_MASK, KeyCache, MonomialOrder, PolyRing, mono_degree

Vec = Dict[int, object]


class Context:
    """Order, grading and coefficient data shared by one GB computation."""

    def __init__(self, ring: PolyRing, order: Optional[MonomialOrder] = None,
                 top_rank: int = 1, shifts: Optional[Sequence[int]] = None):
        self.ring = ring
        self.order = order or ring.order
        self.p = ring.field.characteristic
        self.n = ring.nvars
        self.cs = ring.comp_shift
        self.emask = (1 << self.cs) - 1
        self.guard = ring.guard
        self.top_rank = top_rank
        self.shifts = list(shifts) if shifts else []
        n = self.n
        emask, cs = self.emask, self.cs
        if top_rank == 1 and not self.shifts:
            # plain ideal: the ring order itself
            self.key = ring.key_cache(self.order)
            self.deg = KeyCache(lambda m: mono_degree(m, n))
            self.is_module = False
        else:
            rkey = ring.key_cache(self.order)
            sh = self.shifts
            NC = max(len(sh), top_rank) + 1
            RB = BITS * n + 24
            top = top_rank

            def shift(c):
                return sh[c] if c < len(sh) else 0

            def mkey(m):
                c = m >> cs
                e = m & emask
                block = 1 if c < top else 0
                d = mono_degree(e, n) + shift(c) + (1 << 20)
                return ((((block << 22) | d) << RB) + rkey[e]) * NC + (NC - 1 - c)

            self.key = KeyCache(mkey)
            self.deg = KeyCache(lambda m: mono_degree(m & emask, n) + shift(m >> cs))
            self.is_module = True

    # small helpers
    def comp(self, m: int) -> int:
        return m >> self.cs

    def lcm(self, a: int, b: int) -> int:
        r = a & ~self.emask
        for i in range(self.n):
            s = BITS * i
            ea = (a >> s) & FIELD_MASK
            eb = (b >> s) & FIELD_MASK
            r |= (ea if ea > eb else eb) << s
        return r

    def divides(self, d: int, m: int) -> bool:
        if (d >> self.cs) != (m >> self.cs):
            return False
        g = self.guard
        return ((m & self.emask | g) - (d & self.emask)) & g == g

    def disjoint(self, a: int, b: int) -> bool:
        for i in range(self.n):
            s = BITS * i
            if (a >> s) & FIELD_MASK and (b >> s) & FIELD_MASK:
                return False
        return True

    def leading(self, f: Vec) -> int:
        return max(f, key=self.key.__getitem__)

    def vec_degree(self, f: Vec) -> int:
        return max(self.deg[m] for m in f)

    def scale(self, f: Vec, c) -> Vec:
        p = self.p
        if p:
            return {m: v * c % p for m, v in f.items()}
        return {m: v * c for m, v in f.items()}

    def inv(self, c):
        return pow(c, -1, self.p) if self.p else 1 / c

    def monic(self, f: Vec) -> Vec:
        lm = self.leading(f)
        c = f[lm]
        if c == 1:
            return f
        return self.scale(f, self.inv(c))


class Reducer:
    """Index of leading monomials grouped by component."""

    def __init__(self, ctx: Context):
        self.ctx = ctx
        self.by_comp: Dict[int, List[Tuple[int, Vec, int]]] = {}

    def add(self, lm: int, f: Vec, sugar: int):
        self.by_comp.setdefault(lm >> self.ctx.cs, []).append((lm & self.ctx.emask, f, sugar))

    def find(self, m: int):
        divs = self.by_comp.get(m >> self.ctx.cs)
        if not divs:
            return None
        g = self.ctx.guard
        me = (m & self.ctx.emask) | g
        for d, f, s in divs:
            if (me - d) & g == g:
                return d, f, s
        return None

    def reduce(self, f: Vec, sugar: int = 0, full: bool = False, top_only: bool = True):
        """Reduce ``f`` (consumed).  Returns ``(remainder, sugar)``.

        With ``full=False`` stops at the first irreducible leading term.
        Terms outside the top block are never reducible (no divisors there).
        """
        ctx = self.ctx
        key = ctx.key
        p = ctx.p
        deg = ctx.deg
        n = ctx.n
        heap = [(-key[m], m) for m in f]
        heapq.heapify(heap)
        result: Vec = {}
        pop, push = heapq.heappop, heapq.heappush
        while heap:
            _, m = pop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            hit = self.find(m)
            if hit is None:
                result[m] = c
                if not full:
                    result.update(f)
                    return result, sugar
                continue
            d, g, gs = hit
            q = (m & ctx.emask) - d
            qd = mono_degree(q, n)
            if gs + qd > sugar:
                sugar = gs + qd
            lmg = d | (m & ~ctx.emask)
            for mg, cg in g.items():
                if mg == lmg:
                    continue
                mm = mg + q
                v = f.get(mm)
                if p:
                    t = c * cg % p
                    if v is None:
                        f[mm] = p - t
                        push(heap, (-key[mm], mm))
                    else:
                        v = (v - t) % p
                        if v:
                            f[mm] = v
                        else:
                            del f[mm]
                else:
                    t = c * cg
                    if v is None:
                        f[mm] = -t
                        push(heap, (-key[mm], mm))
                    else:
                        v = v - t
                        if v:
                            f[mm] = v
                        else:
                            del f[mm]
        return result, sugar


@dataclass
class GBResult:
    basis: List[Vec]
    minimal: List[int] = field(default_factory=list)
    syzygies: List[Vec] = field(default_factory=list)


class _Elem:
    __slots__ = ("poly", "lm", "sugar", "alive")

    def __init__(self, poly, lm, sugar):
        self.poly = poly
        self.lm = lm
        self.sugar = sugar
        self.alive = True


def buchberger(ctx: Context, inputs: Sequence[Vec], product_criterion: bool = True,
               interreduce: bool = True, max_degree: Optional[int] = None) -> GBResult:
    """Gröbner basis of the submodule generated by ``inputs``.

    ``minimal`` lists the inputs whose reduction was nonzero when processed;
    for homogeneous inputs these form a minimal generating set.  ``syzygies``
    collects elements whose top part reduced to zero.  ``max_degree`` truncates
    the computation (homogeneous inputs only).
    """
    key = ctx.key
    top_cut = ctx.top_rank
    cs = ctx.cs
    elems: List[_Elem] = []
    red = Reducer(ctx)
    heap: list = []
    counter = 0
    pairs: Dict[Tuple[int, int], int] = {}
    result = GBResult([])
    active: List[int] = []

    for idx, f in enumerate(inputs):
        if not f:
            continue
        lm = ctx.leading(f)
        s = ctx.vec_degree(f)
        heapq.heappush(heap, (s, 1, key[lm], counter, -1, idx))
        counter += 1

    def sugar_of_pair(i, j, l):
        a, b = elems[i], elems[j]
        dl = ctx.deg[l]
        return max(a.sugar + dl - ctx.deg[a.lm], b.sugar + dl - ctx.deg[b.lm])

    def update(h: int):
        nonlocal counter
        H = elems[h].lm
        disj = (lambda a, b: ctx.disjoint(a, b)) if product_criterion else (lambda a, b: False)
        cands = [g for g in active if (elems[g].lm >> cs) == (H >> cs)]
        lcms = {g: ctx.lcm(elems[g].lm, H) for g in cands}
        C = list(cands)
        D: List[int] = []
        while C:
            g1 = C.pop(0)
            l1 = lcms[g1]
            if disj(elems[g1].lm, H):
                D.append(g1)
                continue
            dominated = any(ctx.divides(lcms[g2], l1) for g2 in C) or \
                any(ctx.divides(lcms[g2], l1) for g2 in D)
            if not dominated:
                D.append(g1)
        E = [g for g in D if not disj(elems[g].lm, H)]
        for (a, b), l in list(pairs.items()):
            if ctx.divides(H, l) and ctx.lcm(elems[a].lm, H) != l and ctx.lcm(elems[b].lm, H) != l:
                del pairs[(a, b)]
        for g in E:
            l = lcms[g]
            pairs[(g, h)] = l
            heapq.heappush(heap, (sugar_of_pair(g, h, l), 0, key[l], counter, g, h))
            counter += 1
        active[:] = [g for g in active if not ctx.divides(H, elems[g].lm)] + [h]

    while heap:
        s, kind, _, _, i, j = heapq.heappop(heap)
        if max_degree is not None and s > max_degree:
            break
        if kind == 1:
            f = dict(inputs[j])
        else:
            if (i, j) not in pairs:
                continue
            l = pairs.pop((i, j))
            a, b = elems[i], elems[j]
            f = _spoly(ctx, a, b, l)
        r, s2 = red.reduce(f, s)
        if not r:
            continue
        lm = ctx.leading(r)
        if (lm >> cs) >= top_cut:
            result.syzygies.append(r)
            continue
        if kind == 1:
            result.minimal.append(j)
        r = ctx.monic(r)
        e = _Elem(r, lm, max(s, s2))
        elems.append(e)
        h = len(elems) - 1
        red.add(lm, r, e.sugar)
        update(h)

    basis_idx = list(active)
    if interreduce:
        final = Reducer(ctx)
        for g in basis_idx:
            final.add(elems[g].lm, elems[g].poly, elems[g].sugar)
        out = []
        for g in basis_idx:
            e = elems[g]
            rest = {m: c for m, c in e.poly.items() if m != e.lm}
            tail, _ = final.reduce(rest, 0, full=True) if rest else ({}, 0)
            tail[e.lm] = e.poly[e.lm]
            out.append(tail)
        basis = out
    else:
        basis = [elems[g].poly for g in basis_idx]
    basis.sort(key=lambda f: key[ctx.leading(f)])
    result.basis = basis
    return result


def _spoly(ctx: Context, a: _Elem, b: _Elem, l: int) -> Vec:
    p = ctx.p
    qa = l - a.lm
    qb = l - b.lm
    f: Vec = {}
    for m, c in a.poly.items():
        f[m + qa] = c
    for m, c in b.poly.items():
        mm = m + qb
        v = f.get(mm, 0) - c
        if p:
            v %= p
        if v:
            f[mm] = v
        else:
            f.pop(mm, None)
    return f


def make_reducer(ctx: Context, basis: Sequence[Vec]) -> Reducer:
    red = Reducer(ctx)
    for g in basis:
        red.add(ctx.leading(g), ctx.monic(g), ctx.vec_degree(g))
    return red


def s_pairs_reduce_to_zero(ctx: Context, basis: Sequence[Vec]) -> bool:
    """Buchberger's criterion, checked on every pair with equal component."""
    red = make_reducer(ctx, basis)
    els = []
    for g in basis:
        lm = ctx.leading(g)
        els.append(_Elem(ctx.monic(g), lm, 0))
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            a, b = els[i], els[j]
            if (a.lm >> ctx.cs) != (b.lm >> ctx.cs):
                continue
            l = ctx.lcm(a.lm, b.lm)
            r, _ = red.reduce(_spoly(ctx, a, b, l), 0, full=False)
            if r:
                return False
    return True
