"""Weighted clusters, proximity matrices, homaloidal types, Hudson's test and fat ideals.

Local conventions for infinitely near points
--------------------------------------------
At a proper point ``p`` the first nonzero coordinate is scaled to 1 and the
other two coordinates, translated to ``p``, become local coordinates
``(a, b)``.  A point on the exceptional curve of a blow-up at the origin is
named by a chart token:

``A:c``  the direction ``b = c*a``; substitution ``(a, b) -> (a, a*(b + c))``
``B``    the direction ``a = 0``;   substitution ``(a, b) -> (a*b, a)``

In both charts the new exceptional curve is ``{a = 0}`` and the new point is
the origin.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import (
    INFINITY, AlgebraError, FieldConfig, GradedPolynomial, InvalidPoint, PolyRing, pack,
)
from .groebner import GradedIdeal, intersect
from .linalg import nullspace


class InvalidCluster(AlgebraError):
    pass


class InvalidType(AlgebraError):
    pass


class NonRationalPoint(AlgebraError):
    pass


class OutOfRange(AlgebraError):
    pass


class InvalidInput(AlgebraError):
    pass


# ---------------------------------------------------------------------------
# local germs and blow-up charts


@lru_cache(maxsize=None)
def local_ring(F: FieldConfig) -> PolyRing:
    return PolyRing(("a", "b"), F)


def normalize_point(point: Sequence, F: FieldConfig) -> Tuple:
    pt = [F(c) for c in point]
    if all(c == 0 for c in pt):
        raise InvalidPoint("(0:0:0) is not a projective point")
    i = next(j for j, c in enumerate(pt) if c != 0)
    inv = F.inv(pt[i])
    return tuple(F.normalize(c * inv) for c in pt)


def local_germ(f: GradedPolynomial, point: Sequence) -> GradedPolynomial:
    """``f`` in the affine chart of ``point``, translated so the point is the origin."""
    F = f.ring.field
    pt = normalize_point(point, F)
    L = local_ring(F)
    i = next(j for j, c in enumerate(pt) if c != 0)
    a, b = L.gens()
    loc = [a, b]
    images = []
    k = 0
    for j in range(f.ring.nvars):
        if j == i:
            images.append(L.one())
        else:
            images.append(loc[k] + pt[j])
            k += 1
    return f.substitute(images)


def order(g: GradedPolynomial):
    return g.min_degree() if g.terms else INFINITY


def parse_chart(token: str, F: FieldConfig):
    token = token.strip()
    if token == "B":
        return ("B", None)
    m = re.fullmatch(r"A:(-?\d+(?:/\d+)?)", token)
    if not m:
        raise InvalidCluster(f"bad chart token {token!r}")
    return ("A", F(Fraction(m.group(1))))


def chart_token(chart, F: FieldConfig) -> str:
    kind, c = chart
    return "B" if kind == "B" else f"A:{F.to_int_repr(c)}"


def chart_substitute(g: GradedPolynomial, chart) -> GradedPolynomial:
    L = g.ring
    a, b = L.gens()
    kind, c = chart
    if kind == "A":
        return g.substitute([a, a * (b + c)])
    return g.substitute([a * b, a])


def divide_exceptional(g: GradedPolynomial, k: int) -> GradedPolynomial:
    if k == 0 or not g.terms:
        return g
    shift = pack((k, 0))
    if any(e[0] < k for e, _ in g.items()):
        raise AlgebraError("transform is not divisible by the exceptional power")
    return GradedPolynomial(g.ring, {m - shift: c for m, c in g.terms.items()})


def transform(g: GradedPolynomial, chart, k: int) -> GradedPolynomial:
    """Substitute the chart and divide by the ``k``-th power of the exceptional curve."""
    return divide_exceptional(chart_substitute(g, chart), k)


def binary_form_directions(h: GradedPolynomial, seed: int = 0):
    """Charts for the points ``(a:b)`` where the binary form ``h`` vanishes."""
    from . import univariate as U
    F = h.ring.field
    k = h.degree()
    coeffs = [F.zero()] * (k + 1)
    for (ea, eb), c in h.items():
        coeffs[eb] = c
    u = U.trim(coeffs)  # h(1, t)
    out = []
    if U.deg(u) > 0:
        if not U.all_roots_rational(u, F):
            raise NonRationalPoint("a base point is not rational over the field")
        out.extend(("A", r) for r in U.roots(u, F, seed))
    if U.deg(u) < k:
        out.append(("B", None))
    return out


def binary_gcd(forms: Sequence[GradedPolynomial]) -> Optional[GradedPolynomial]:
    """gcd of binary forms of one degree (returned as a binary form)."""
    from . import univariate as U
    forms = [h for h in forms if h]
    if not forms:
        return None
    L = forms[0].ring
    F = L.field
    # the gcd of the dehomogenized forms, plus the common power of a
    g = None
    amin = min(min(e[0] for e, _ in h.items()) for h in forms)
    for h in forms:
        k = h.degree()
        coeffs = [F.zero()] * (k + 1)
        for (ea, eb), c in h.items():
            coeffs[eb] = c
        g = coeffs if g is None else U.gcd(g, coeffs, F)
    g = U.monic(g, F)
    dg = U.deg(g)
    return L.from_terms([((amin + dg - i, i), c) for i, c in enumerate(g) if c])


# ---------------------------------------------------------------------------
# clusters


@dataclass
class ClusterNode:
    id: str
    parent: Optional[str]
    mu: int
    point: Optional[Tuple] = None       # proper points
    chart: Optional[tuple] = None       # infinitely near points
    e1: Optional[str] = None            # curve {a = 0} at this node
    e2: Optional[str] = None            # curve {b = 0} at this node, if exceptional

    @property
    def is_proper(self) -> bool:
        return self.parent is None


class WeightedCluster:
    """Forest of proper and infinitely near points with virtual multiplicities."""

    def __init__(self, nodes: Sequence[ClusterNode], proximity: Sequence[Tuple[str, str]] = (),
                 field: Optional[FieldConfig] = None):
        self.field = field or FieldConfig()
        self.nodes: List[ClusterNode] = []
        self.by_id: Dict[str, ClusterNode] = {}
        for n in nodes:
            if n.id in self.by_id:
                raise InvalidCluster(f"duplicate node id {n.id}")
            self.by_id[n.id] = n
        self.nodes = self._topological(list(nodes))
        prox = set(proximity)
        for n in self.nodes:
            if n.parent is not None:
                prox.add((n.id, n.parent))
                if n.chart is not None:
                    n.e1, n.e2, extra = child_axes(self.by_id[n.parent], n.chart)
                    prox.update((n.id, x) for x in extra)
        for q, p in prox:
            if q not in self.by_id or p not in self.by_id:
                raise InvalidCluster(f"proximity refers to unknown node {q} or {p}")
            if p not in self.ancestors(q):
                raise InvalidCluster(f"{q} cannot be proximate to {p}: not infinitely near to it")
        self.proximity = prox

    def _topological(self, nodes):
        placed, out = set(), []
        pending = list(nodes)
        while pending:
            progress = False
            for n in list(pending):
                if n.parent is None or n.parent in placed:
                    if n.parent is not None and n.parent not in self.by_id:
                        raise InvalidCluster(f"unknown parent {n.parent}")
                    out.append(n)
                    placed.add(n.id)
                    pending.remove(n)
                    progress = True
            if not progress:
                bad = pending[0]
                if bad.parent not in self.by_id:
                    raise InvalidCluster(f"unknown parent {bad.parent}")
                raise InvalidCluster("cyclic parent relation")
        return out

    def ancestors(self, q: str) -> List[str]:
        out = []
        n = self.by_id[q]
        seen = set()
        while n.parent is not None:
            if n.parent in seen:
                raise InvalidCluster("cyclic parent relation")
            seen.add(n.parent)
            out.append(n.parent)
            n = self.by_id[n.parent]
        return out

    def __len__(self):
        return len(self.nodes)

    @property
    def ids(self) -> List[str]:
        return [n.id for n in self.nodes]

    @property
    def multiplicities(self) -> List[int]:
        return [n.mu for n in self.nodes]

    def proper_nodes(self) -> List[ClusterNode]:
        return [n for n in self.nodes if n.is_proper]

    def depth(self, q: str) -> int:
        return len(self.ancestors(q))

    def proximate_to(self, p: str) -> List[str]:
        return [q for q, pp in self.proximity if pp == p]

    def check_proximity_inequalities(self) -> bool:
        """``mu_p >= sum of mu_q`` over points ``q`` proximate to ``p``."""
        return all(n.mu >= sum(self.by_id[q].mu for q in self.proximate_to(n.id))
                   for n in self.nodes)

    def path(self, q: str) -> List[ClusterNode]:
        """Nodes from the proper root down to ``q``."""
        chain = [self.by_id[x] for x in reversed(self.ancestors(q))]
        return chain + [self.by_id[q]]

    def homaloidal_type(self, d: int) -> "HomaloidalType":
        return HomaloidalType(d, tuple(n.mu for n in self.nodes))

    # -- text format
    @classmethod
    def from_text(cls, text: str, field: Optional[FieldConfig] = None) -> "WeightedCluster":
        F = field or FieldConfig()
        nodes, prox = [], []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tok = line.split()
            if tok[0] == "prox":
                if len(tok) != 3:
                    raise InvalidCluster(f"line {lineno}: expected 'prox q p'")
                prox.append((tok[1], tok[2]))
                continue
            if len(tok) != 4:
                raise InvalidCluster(f"line {lineno}: expected 'id parent|- x:y:z|chart mu'")
            nid, parent, where, mu = tok
            try:
                mu = int(mu)
            except ValueError:
                raise InvalidCluster(f"line {lineno}: multiplicity must be an integer")
            if parent == "-":
                try:
                    pt = tuple(F(Fraction(c)) for c in where.split(":"))
                except (ValueError, ZeroDivisionError):
                    raise InvalidCluster(f"line {lineno}: bad point {where!r}")
                if len(pt) != 3:
                    raise InvalidCluster(f"line {lineno}: points have three coordinates")
                nodes.append(ClusterNode(nid, None, mu, point=normalize_point(pt, F)))
            else:
                chart = None if where == "*" else parse_chart(where, F)
                nodes.append(ClusterNode(nid, parent, mu, chart=chart))
        c = cls(nodes, prox, F)
        return c

    def to_text(self) -> str:
        F = self.field
        lines = []
        for n in self.nodes:
            if n.is_proper:
                where = ":".join(str(F.to_int_repr(c)) for c in n.point)
                lines.append(f"{n.id} - {where} {n.mu}")
            else:
                where = "*" if n.chart is None else chart_token(n.chart, F)
                lines.append(f"{n.id} {n.parent} {where} {n.mu}")
        for q, p in sorted(self.proximity, key=lambda qp: (self.ids.index(qp[0]), self.ids.index(qp[1]))):
            if self.by_id[q].parent != p:
                lines.append(f"prox {q} {p}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"WeightedCluster({'; '.join(self.to_text().strip().splitlines())})"


def child_axes(parent: ClusterNode, chart) -> Tuple[Optional[str], Optional[str], List[str]]:
    """Curves through a point on the exceptional curve of ``parent``.

    Returns ``(e1, e2, extra)`` where ``extra`` lists the nodes, besides the
    parent, to which the new point is proximate.
    """
    kind, c = chart
    if kind == "A":
        e2 = parent.e2 if c == 0 else None
    else:
        e2 = parent.e1
    return parent.id, e2, [e2] if e2 is not None else []


# ---------------------------------------------------------------------------
# proximity matrix


def proximity_matrix(c: WeightedCluster) -> Tuple[List[List[int]], List[List[int]]]:
    """``(P, P^{-1})`` with ``P[q][p] = -1`` iff ``q`` is proximate to ``p``."""
    ids = c.ids
    pos = {x: i for i, x in enumerate(ids)}
    n = len(ids)
    P = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for q, p in c.proximity:
        i, j = pos[q], pos[p]
        if j >= i:
            raise InvalidCluster("proximity is not compatible with the forest order")
        P[i][j] = -1
    return P, lower_unitriangular_inverse(P)


def lower_unitriangular_inverse(P: Sequence[Sequence[int]]) -> List[List[int]]:
    n = len(P)
    inv = [[0] * n for _ in range(n)]
    for col in range(n):
        for i in range(n):
            s = 1 if i == col else 0
            for k in range(i):
                s -= P[i][k] * inv[k][col]
            inv[i][col] = s  # diagonal is 1
    return inv


def matvec(M, v):
    return [sum(a * b for a, b in zip(row, v)) for row in M]


# ---------------------------------------------------------------------------
# effective multiplicities and virtual passage


def effective_multiplicities(f: GradedPolynomial, c: WeightedCluster) -> List:
    """``e_q(f)`` at every node, using strict transforms along the chart data."""
    out = []
    cache: Dict[str, GradedPolynomial] = {}
    for n in c.nodes:
        if n.is_proper:
            g = local_germ(f, n.point)
        else:
            if n.chart is None:
                raise InvalidCluster(f"node {n.id} has no chart data")
            pg = cache[n.parent]
            if not pg.terms:
                g = pg
            else:
                g = transform(pg, n.chart, order(pg))
        cache[n.id] = g
        out.append(order(g))
    return out


def passes_virtually(f: GradedPolynomial, c: WeightedCluster,
                     effective: Optional[Sequence[int]] = None) -> bool:
    """``P^{-1} (e(f) - mu) >= 0`` componentwise."""
    e = list(effective) if effective is not None else effective_multiplicities(f, c)
    if any(x == INFINITY for x in e):
        return True  # f = 0 passes through everything
    _, Pinv = proximity_matrix(c)
    diff = [a - n.mu for a, n in zip(e, c.nodes)]
    return all(x >= 0 for x in matvec(Pinv, diff))


# ---------------------------------------------------------------------------
# homaloidal types


def _compress(mu: Sequence[int]) -> str:
    parts = []
    for v, grp in itertools.groupby(mu):
        k = len(list(grp))
        parts.append(f"{v}^{k}" if k >= 3 else ",".join([str(v)] * k))
    return ",".join(parts)


@dataclass(frozen=True)
class HomaloidalType:
    d: int
    mu: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(sorted((int(m) for m in self.mu if m), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "HomaloidalType":
        """``"5;3,3,1^6"`` or ``"(5; 3,3,1^6)"``."""
        t = text.strip().strip("()")
        if ";" not in t:
            raise InvalidType(f"expected 'd; mu...' in {text!r}")
        d, rest = t.split(";", 1)
        return cls(int(d), parse_multiplicities(rest))

    def __str__(self):
        return f"({self.d}; {_compress(self.mu)})" if self.mu else f"({self.d};)"

    def sums(self) -> Tuple[int, int]:
        return sum(self.mu), sum(m * m for m in self.mu)


def parse_multiplicities(text: str) -> Tuple[int, ...]:
    out: List[int] = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        if "^" in tok:
            v, k = tok.split("^")
            out.extend([int(v)] * int(k))
        else:
            out.append(int(tok))
    return tuple(out)


def check_equations_of_condition(t: HomaloidalType) -> bool:
    s1, s2 = t.sums()
    return s1 == 3 * t.d - 3 and s2 == t.d * t.d - 1


ENUMERATION_CAP = 12


def enumerate_homaloidal_types(d: int, cap: int = ENUMERATION_CAP) -> List[HomaloidalType]:
    """Descending multisets with both equations of condition and ``mu_1 <= d-1``,
    in decreasing lexicographic order."""
    if d < 1 or d > cap:
        raise OutOfRange(f"degree must lie in 1..{cap}")
    target1, target2 = 3 * d - 3, d * d - 1
    out: List[HomaloidalType] = []

    def rec(prefix, top, s1, s2):
        if s1 == 0 and s2 == 0:
            out.append(HomaloidalType(d, tuple(prefix)))
            return
        if s1 <= 0 or s2 <= 0:
            return
        for m in range(min(top, s1), 0, -1):
            # remaining parts are at most m: need s2 <= m * s1, and s2 >= s1
            if s2 > m * s1:
                break
            if s2 - m * m < s1 - m:
                continue
            prefix.append(m)
            rec(prefix, m, s1 - m, s2 - m * m)
            prefix.pop()

    rec([], max(d - 1, 0), target1, target2)
    return out


PROPER, IMPROPER = "Proper", "Improper"


def hudson_test(t: HomaloidalType) -> str:
    """Quadratic-transformation reduction on the three largest multiplicities."""
    if not check_equations_of_condition(t):
        raise InvalidType(f"{t} fails the equations of condition")
    d, mu = t.d, sorted(t.mu, reverse=True)
    while d > 1:
        m = mu + [0] * max(0, 3 - len(mu))
        m1, m2, m3 = m[:3]
        nd = 2 * d - m1 - m2 - m3
        if nd >= d:
            return IMPROPER
        new = [d - m2 - m3, d - m1 - m3, d - m1 - m2] + m[3:]
        if any(x < 0 for x in new):
            return IMPROPER
        d, mu = nd, sorted((x for x in new if x), reverse=True)
    return PROPER if d == 1 and not mu else IMPROPER


# ---------------------------------------------------------------------------
# fat ideals


def point_ideal(point: Sequence, ring: PolyRing) -> GradedIdeal:
    F = ring.field
    pt = normalize_point(point, F)
    basis = nullspace([list(pt)], 3, F)
    x = ring.gens()
    return GradedIdeal([sum((xi.scale(c) for xi, c in zip(x, v) if c), ring.zero()) for v in basis], ring)


def fat_degree(mu: Sequence[int]) -> int:
    return sum(m * (m + 1) // 2 for m in mu)


def fat_ideal(points: Sequence[Sequence], mu: Sequence[int], ring: Optional[PolyRing] = None,
              check: bool = True) -> GradedIdeal:
    """Intersection of the ``mu_i``-th powers of the ideals of the points."""
    ring = ring or PolyRing()
    F = ring.field
    if len(points) != len(mu) or not points:
        raise InvalidInput("need one multiplicity per point")
    normed = [normalize_point(p, F) for p in points]
    if len(set(normed)) != len(normed):
        raise InvalidInput("duplicate points")
    if any(m < 1 for m in mu):
        raise InvalidInput("multiplicities must be positive")
    # small multiplicities first keeps intermediate ideals small
    order_ = sorted(range(len(points)), key=lambda i: -mu[i])
    J = intersect([point_ideal(normed[i], ring).power(mu[i]) for i in order_])
    J = J.minimalize()
    if check:
        dim, e = J.dim_and_degree()
        if dim != 1 or e != fat_degree(mu):
            raise AlgebraError(f"fat ideal has degree {e}, expected {fat_degree(mu)}")
    return J
