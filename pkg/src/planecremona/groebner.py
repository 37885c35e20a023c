"""Homogeneous ideals, Gröbner bases and the ideal operations built on them."""
from __future__ import annotations

import random
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import _kernel as K
from .algebra import (
    AlgebraError, GradedPolynomial, MonomialOrder, PolyRing, mono_degree, pack, parse_poly,
)
from .linalg import rref


class InvalidArgument(AlgebraError):
    pass


class NotHomogeneous(AlgebraError):
    pass


class NotInIdeal(AlgebraError):
    pass


class SaturationCapExceeded(AlgebraError):
    pass


# ---------------------------------------------------------------------------
# vector <-> dict helpers


def to_vec(polys: Sequence[GradedPolynomial], offset: int = 0) -> Dict[int, object]:
    d: Dict[int, object] = {}
    for c, f in enumerate(polys):
        if f is None or not f.terms:
            continue
        cs = f.ring.comp_shift
        top = (c + offset) << cs
        for m, v in f.terms.items():
            d[m + top] = v
    return d


def from_vec(ring: PolyRing, vec: Dict[int, object], rank: int, offset: int = 0) -> List[GradedPolynomial]:
    parts: List[Dict[int, object]] = [dict() for _ in range(rank)]
    cs = ring.comp_shift
    emask = (1 << cs) - 1
    for m, v in vec.items():
        c = (m >> cs) - offset
        parts[c][m & emask] = v
    return [GradedPolynomial(ring, p) for p in parts]


def vector_degree(v: Sequence[GradedPolynomial], shifts: Sequence[int]) -> Optional[int]:
    for f, s in zip(v, shifts):
        if f:
            return f.degree() + s
    return None


def module_syzygies(ring: PolyRing, columns: Sequence[Sequence[GradedPolynomial]],
                    row_shifts: Optional[Sequence[int]] = None,
                    col_degrees: Optional[Sequence[int]] = None,
                    minimal: bool = True,
                    order: Optional[MonomialOrder] = None) -> Tuple[List[List[GradedPolynomial]], List[int]]:
    """Generators of the kernel of the matrix with the given columns.

    Columns live in a free module of rank ``len(row_shifts)`` whose basis
    vector ``i`` has degree ``row_shifts[i]``.  Returns ``(syzygies, degrees)``;
    each syzygy is a list of ``len(columns)`` polynomials.  With ``minimal``
    the generating set is pruned to a minimal one (homogeneous input).
    """
    N = len(columns)
    if N == 0:
        return [], []
    Kr = len(columns[0])
    row_shifts = list(row_shifts) if row_shifts is not None else [0] * Kr
    if col_degrees is None:
        col_degrees = []
        for col in columns:
            d = vector_degree(col, row_shifts)
            if d is None:
                raise InvalidArgument("degree of a zero column must be given")
            col_degrees.append(d)
    col_degrees = list(col_degrees)
    ctx = K.Context(ring, order or MonomialOrder(), top_rank=Kr, shifts=row_shifts + col_degrees)
    inputs = []
    cs = ring.comp_shift
    one = ring.field.one()
    for j, col in enumerate(columns):
        v = to_vec(col)
        v[(Kr + j) << cs] = one
        inputs.append(v)
    res = K.buchberger(ctx, inputs, product_criterion=False, interreduce=False)
    syz = [from_vec(ring, s, N, offset=Kr) for s in res.syzygies]
    degs = [vector_degree(s, col_degrees) for s in syz]
    if minimal and syz:
        keep = module_minimal_generators(ring, syz, col_degrees)
        syz = [syz[i] for i in keep]
        degs = [degs[i] for i in keep]
    return syz, degs


def module_minimal_generators(ring: PolyRing, vectors: Sequence[Sequence[GradedPolynomial]],
                              shifts: Sequence[int]) -> List[int]:
    """Indices of a minimal generating subset of homogeneous vectors."""
    if not vectors:
        return []
    rank = len(vectors[0])
    degs = [vector_degree(v, shifts) for v in vectors]
    idx = sorted((i for i in range(len(vectors)) if degs[i] is not None), key=lambda i: degs[i])
    ctx = K.Context(ring, MonomialOrder(), top_rank=rank, shifts=list(shifts) + [0])
    res = K.buchberger(ctx, [to_vec(vectors[i]) for i in idx], interreduce=False)
    return sorted(idx[j] for j in res.minimal)


# ---------------------------------------------------------------------------


class GradedIdeal:
    """Finitely generated ideal with cached Gröbner data.

    Generators need not be homogeneous, but Hilbert series, resolutions and
    minimal generators require it.
    """

    def __init__(self, generators: Sequence[Union[GradedPolynomial, str]] = (),
                 ring: Optional[PolyRing] = None):
        gens = list(generators)
        if ring is None:
            ring = next((g.ring for g in gens if isinstance(g, GradedPolynomial)), None) or PolyRing()
        out = []
        for g in gens:
            if isinstance(g, str):
                g = parse_poly(g, ring)
            else:
                g = ring.coerce(g)
            if g:
                out.append(g)
        self.ring = ring
        self.generators: Tuple[GradedPolynomial, ...] = tuple(out)
        self._gb: Dict[MonomialOrder, List[GradedPolynomial]] = {}
        self._minimal: Optional[Tuple[GradedPolynomial, ...]] = None
        self._track = None
        self._hilbert = None

    # -- constructors
    @classmethod
    def maximal(cls, ring: PolyRing) -> "GradedIdeal":
        return cls(ring.gens(), ring)

    @classmethod
    def unit(cls, ring: PolyRing) -> "GradedIdeal":
        return cls([ring.one()], ring)

    # -- basic data
    def __repr__(self):
        return f"GradedIdeal({', '.join(map(str, self.generators)) or '0'})"

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def field(self):
        return self.ring.field

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def require_homogeneous(self):
        if not self.is_homogeneous():
            raise NotHomogeneous("operation needs homogeneous generators")

    def is_zero(self) -> bool:
        return not self.generators

    def degrees(self) -> List[int]:
        return [g.degree() for g in self.generators]

    # -- Gröbner data
    def _run_gb(self, order: MonomialOrder):
        ring = self.ring
        ctx = K.Context(ring, order)
        gens = sorted(self.generators, key=lambda g: g.degree()) if self.is_homogeneous() \
            else list(self.generators)
        res = K.buchberger(ctx, [dict(g.terms) for g in gens])
        basis = [GradedPolynomial(ring, b) for b in res.basis]
        self._gb[order] = basis
        if order == MonomialOrder() and self._minimal is None and self.is_homogeneous():
            self._minimal = tuple(gens[i] for i in sorted(res.minimal))
        return basis

    def gb(self, order: Optional[MonomialOrder] = None) -> List[GradedPolynomial]:
        order = order or MonomialOrder()
        if order not in self._gb:
            self._run_gb(order)
        return self._gb[order]

    def reducer(self, order: Optional[MonomialOrder] = None):
        order = order or MonomialOrder()
        ctx = K.Context(self.ring, order)
        return ctx, K.make_reducer(ctx, [g.terms for g in self.gb(order)])

    def normal_form(self, f: GradedPolynomial, order: Optional[MonomialOrder] = None) -> GradedPolynomial:
        f = self.ring.coerce(f)
        if not f.terms:
            return f
        ctx, red = self.reducer(order)
        r, _ = red.reduce(dict(f.terms), 0, full=True)
        return GradedPolynomial(self.ring, r)

    def contains(self, f: GradedPolynomial) -> bool:
        return not self.normal_form(f)

    __contains__ = contains

    def issubset(self, other: "GradedIdeal") -> bool:
        if not self.generators:
            return True
        ctx, red = other.reducer()
        for g in self.generators:
            r, _ = red.reduce(dict(other.ring.coerce(g).terms), 0)
            if r:
                return False
        return True

    __le__ = issubset

    def __eq__(self, other):
        if not isinstance(other, GradedIdeal):
            return NotImplemented
        return self.issubset(other) and other.issubset(self)

    def __hash__(self):
        return id(self)

    def is_unit(self) -> bool:
        return any(g.degree() == 0 for g in self.gb())

    # -- arithmetic of ideals
    def __add__(self, other: "GradedIdeal") -> "GradedIdeal":
        return GradedIdeal(list(self.generators) + list(other.generators), self.ring)

    def __mul__(self, other: "GradedIdeal") -> "GradedIdeal":
        prods = [f * g for f in self.generators for g in other.generators]
        J = GradedIdeal(prods, self.ring)
        return J.minimalize() if J.is_homogeneous() else J

    def power(self, k: int) -> "GradedIdeal":
        if k < 0:
            raise InvalidArgument("negative power")
        J = GradedIdeal.unit(self.ring)
        for _ in range(k):
            J = J * self
        return J

    def minimal_generators(self) -> Tuple[GradedPolynomial, ...]:
        self.require_homogeneous()
        if self._minimal is None:
            self._run_gb(MonomialOrder())
        return self._minimal

    def minimalize(self) -> "GradedIdeal":
        J = GradedIdeal(self.minimal_generators(), self.ring)
        J._gb = self._gb
        J._minimal = J.generators
        return J

    def degree_slice(self, d: int) -> List[GradedPolynomial]:
        """Basis (reduced echelon form) of the degree-``d`` piece ``I_d``."""
        self.require_homogeneous()
        ring = self.ring
        monos = ring.monomials_of_degree(d)
        col = {pack(e): i for i, e in enumerate(monos)}
        rows = []
        for g in self.generators:
            k = d - g.degree()
            if k < 0:
                continue
            for u in ring.monomials_of_degree(k):
                h = g.mul_monomial(u)
                row = [0] * len(monos)
                for m, c in h.terms.items():
                    row[col[m]] = c
                rows.append(row)
        R, _ = rref(rows, ring.field)
        return [ring.from_terms((monos[i], c) for i, c in enumerate(r) if c) for r in R]

    # -- lift via a tracking Gröbner basis
    def _tracking(self):
        if self._track is None:
            ring = self.ring
            gens = list(self.generators)
            N = len(gens)
            degs = [g.degree() for g in gens]
            ctx = K.Context(ring, MonomialOrder(), top_rank=1, shifts=[0] + degs)
            cs = ring.comp_shift
            inputs = []
            for j, g in enumerate(gens):
                v = dict(g.terms)
                v[(1 + j) << cs] = ring.field.one()
                inputs.append(v)
            res = K.buchberger(ctx, inputs, product_criterion=False, interreduce=False)
            # reducers must include every GB element (with tracking tails)
            self._track = (ctx, res)
        return self._track

    def lift(self, f: GradedPolynomial) -> List[GradedPolynomial]:
        """Cofactors ``c`` with ``f = sum c_i * generators[i]``."""
        f = self.ring.coerce(f)
        N = len(self.generators)
        if not f:
            return [self.ring.zero()] * N
        ctx, res = self._tracking()
        red = _tracking_reducer(ctx, res)
        r, _ = red.reduce(dict(f.terms), 0)
        if r and (ctx.leading(r) >> ctx.cs) == 0:
            raise NotInIdeal(f"{f} is not in the ideal")
        parts = from_vec(self.ring, r, N + 1)[1:]
        return [-c for c in parts]

    # -- delegations
    def hilbert_series(self):
        from .hilbert import hilbert_series
        return hilbert_series(self)

    def dim_and_degree(self):
        from .hilbert import dim_and_degree
        return dim_and_degree(self)

    def codim(self) -> int:
        d, _ = self.dim_and_degree()
        return self.ring.nvars - d if d != float("-inf") else self.ring.nvars + 1


def _tracking_reducer(ctx, res) -> K.Reducer:
    red = K.Reducer(ctx)
    # GB elements are exactly the non-syzygy elements; rebuild from the kernel run
    for g in res.basis:
        red.add(ctx.leading(g), g, ctx.vec_degree(g))
    return red


def ideal(*gens, ring: Optional[PolyRing] = None) -> GradedIdeal:
    """``ideal("x^2", "y*z")`` or ``ideal(f, g)``."""
    if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
        gens = tuple(gens[0])
    return GradedIdeal(gens, ring)


# ---------------------------------------------------------------------------
# spec-level functions


def groebner_basis(I: GradedIdeal, order: Optional[MonomialOrder] = None) -> List[GradedPolynomial]:
    return I.gb(order)


def normal_form(f: GradedPolynomial, I: GradedIdeal) -> GradedPolynomial:
    return I.normal_form(f)


def _principal_colon(I: GradedIdeal, g: GradedPolynomial) -> GradedIdeal:
    ring = I.ring
    gens = list(I.generators)
    if not gens:
        return GradedIdeal([], ring)
    cols = [[f] for f in gens] + [[g]]
    homog = I.is_homogeneous() and g.is_homogeneous()
    syz, _ = module_syzygies(ring, cols, minimal=homog)
    J = GradedIdeal([s[-1] for s in syz], ring)
    return J.minimalize() if homog and J.generators else J


def colon(I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    """``I : J``.  Principal ``J`` uses one syzygy computation; otherwise the
    syzygies of ``[(g_1..g_k)^T | f_i e_j]`` in ``R^k`` give the colon as
    first coordinates."""
    ring = I.ring
    jg = [ring.coerce(g) for g in J.generators]
    if not jg:
        raise InvalidArgument("colon by the zero ideal")
    if not I.generators:
        return GradedIdeal([], ring)
    if len(jg) == 1:
        return _principal_colon(I, jg[0])
    if any(g.degree() == 0 for g in jg):
        return GradedIdeal(I.generators, ring)
    k = len(jg)
    shifts = [-g.degree() for g in jg]
    cols = [list(jg)]
    for j in range(k):
        for f in I.generators:
            col = [ring.zero()] * k
            col[j] = f
            cols.append(col)
    homog = I.is_homogeneous() and all(g.is_homogeneous() for g in jg)
    syz, _ = module_syzygies(ring, cols, row_shifts=shifts, minimal=homog)
    C = GradedIdeal([s[0] for s in syz], ring)
    return C.minimalize() if homog and C.generators else C


def _power_monomials(ring: PolyRing, s: int):
    return ring.monomials_of_degree(s)


def saturation_exponent(I: GradedIdeal, S: GradedIdeal, cap: int) -> Optional[int]:
    """Least ``s <= cap`` with ``m^s S ⊆ I`` (``m`` the irrelevant ideal)."""
    ctx, red = I.reducer()
    gens = S.minimal_generators() if S.is_homogeneous() else S.generators
    pending = list(gens)
    # m^s S ⊆ I  iff  every degree-s monomial times every generator lies in I
    for s in range(cap + 1):
        ok = True
        for h in pending:
            for u in _power_monomials(I.ring, s):
                r, _ = red.reduce(dict(h.mul_monomial(u).terms), 0)
                if r:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return s
    return None


def _generic_linear_saturation(I: GradedIdeal, rng: random.Random) -> GradedIdeal:
    """``I : l^∞`` for a random linear form ``l`` with last-variable coefficient 1.

    After the substitution taking ``l`` to the last variable, a degrevlex basis
    divided by the largest power of that variable generates the saturation.
    """
    ring = I.ring
    n = ring.nvars
    F = ring.field
    bound = F.characteristic - 1 if F.characteristic else 1000
    coeffs = [rng.randint(1, max(1, bound)) for _ in range(n - 1)]
    gens = ring.gens()
    last = gens[-1]
    fwd = gens[:-1] + [last + sum((gens[i].scale(coeffs[i]) for i in range(n - 1)), ring.zero())]
    back = gens[:-1] + [last - sum((gens[i].scale(coeffs[i]) for i in range(n - 1)), ring.zero())]
    T = GradedIdeal([g.substitute(fwd) for g in I.generators], ring)
    out = []
    for g in T.gb():
        e = min(ex[-1] for ex, _ in g.items())
        if e:
            ex = [0] * n
            ex[-1] = e
            g = GradedPolynomial(ring, {m - pack(ex): c for m, c in g.terms.items()})
        out.append(g.substitute(back))
    return GradedIdeal(out, ring).minimalize()


def saturation(I: GradedIdeal, J: Optional[GradedIdeal] = None,
               cap: Optional[int] = None, seed: int = 0) -> Tuple[GradedIdeal, int]:
    """``(I : J^∞, s)`` with ``s`` the least exponent such that ``I : J^s = I : J^∞``.

    For ``J`` the irrelevant ideal (the default) a candidate is obtained from a
    random linear form and certified by ``m^s · candidate ⊆ I``; if the
    certificate fails the computation falls back to iterated colons.
    """
    ring = I.ring
    m = GradedIdeal.maximal(ring)
    if J is None or (J.is_homogeneous() and all(g.degree() == 1 for g in J.generators) and
                     len(J.generators) >= ring.nvars and m.issubset(J)):
        I.require_homogeneous()
        if not I.generators or I.is_unit():
            return GradedIdeal(I.generators, ring), 0
        if cap is None:
            cap = 3 * max(I.degrees()) + 3
        rng = random.Random(0x5A7 + seed)
        for _ in range(3):
            S = _generic_linear_saturation(I, rng)
            s = saturation_exponent(I, S, cap)
            if s is not None:
                return (S if s else GradedIdeal(I.generators, ring)), s
        J = m
    # iterated colon
    cur = GradedIdeal(I.generators, ring)
    s = 0
    limit = cap if cap is not None else 10 ** 6
    while True:
        nxt = colon(cur, J)
        if nxt.issubset(cur):
            return cur, s
        cur = nxt
        s += 1
        if s > limit:
            raise SaturationCapExceeded(f"saturation did not stabilize within {limit} steps")


def is_saturated(I: GradedIdeal) -> bool:
    return saturation(I)[1] == 0


def intersect(ideals: Sequence[GradedIdeal]) -> GradedIdeal:
    """Intersection, computed pairwise from syzygies of the joined generators."""
    if not ideals:
        raise InvalidArgument("need at least one ideal")
    cur = ideals[0]
    for J in ideals[1:]:
        cur = _intersect2(cur, J)
    return cur


def _intersect2(I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    ring = I.ring
    if not I.generators or not J.generators:
        return GradedIdeal([], ring)
    fs = list(I.generators)
    cols = [[f] for f in fs] + [[ring.coerce(g)] for g in J.generators]
    homog = I.is_homogeneous() and J.is_homogeneous()
    syz, _ = module_syzygies(ring, cols, minimal=homog)
    gens = []
    for s in syz:
        h = ring.zero()
        for c, f in zip(s, fs):
            if c:
                h = h + c * f
        gens.append(h)
    out = GradedIdeal(gens, ring)
    return out.minimalize() if homog and out.generators else out


def eliminate(I: GradedIdeal, variables: Sequence[str]) -> GradedIdeal:
    """``I ∩ k[remaining variables]``, returned in the ring of the remaining variables."""
    ring = I.ring
    elim = [v for v in ring.variables if v in set(variables)]
    rest = [v for v in ring.variables if v not in set(variables)]
    sub = PolyRing(rest, ring.field)
    if not elim:
        return GradedIdeal([sub.coerce(g) for g in I.generators], sub)
    big = PolyRing(elim + rest, ring.field)
    order = MonomialOrder.elimination(len(elim))
    J = GradedIdeal([big.coerce(g) for g in I.generators], big)
    keep = []
    for g in J.gb(order):
        if all(all(e[i] == 0 for i in range(len(elim))) for e, _ in g.items()):
            keep.append(_drop_vars(g, len(elim), sub))
    return GradedIdeal(keep, sub)


def _drop_vars(g: GradedPolynomial, k: int, sub: PolyRing) -> GradedPolynomial:
    return sub.from_terms((e[k:], c) for e, c in g.items())


def lift(f: GradedPolynomial, I: GradedIdeal) -> List[GradedPolynomial]:
    return I.lift(f)


def minimal_generators(I: GradedIdeal) -> List[GradedPolynomial]:
    return list(I.minimal_generators())


def gb_is_valid(I: GradedIdeal, order: Optional[MonomialOrder] = None) -> bool:
    """Buchberger's criterion on the cached basis plus mutual containment."""
    order = order or MonomialOrder()
    basis = I.gb(order)
    ctx = K.Context(I.ring, order)
    if not K.s_pairs_reduce_to_zero(ctx, [g.terms for g in basis]):
        return False
    red = K.make_reducer(ctx, [g.terms for g in basis])
    if any(red.reduce(dict(g.terms), 0)[0] for g in I.generators):
        return False
    return GradedIdeal(basis, I.ring).issubset(I)
