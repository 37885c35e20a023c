"""Monomial plane maps: normal forms, de Jonquières detection and integral closure
of monomial ideals through Newton polyhedra."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import FieldConfig
from .cremona import HasFixedPart, NotCremona, PlaneRationalMap
from .clusters import InvalidInput
from .linalg import int_det, nullspace, rank

Exp = Tuple[int, ...]
QQ = FieldConfig.rationals()


# ---------------------------------------------------------------------------
# Newton polyhedron membership


def _solve(A: List[List[Fraction]], b: List[Fraction]) -> Optional[List[Fraction]]:
    """Unique solution of a square system, or ``None`` if singular."""
    n = len(A)
    M = [list(r) + [c] for r, c in zip(A, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * c for a, c in zip(M[i], M[col])]
    return [M[i][n] for i in range(n)]


def in_newton_polyhedron(v: Sequence[int], gens: Sequence[Exp]) -> bool:
    """Whether ``v`` lies in ``conv(gens) + R_{>=0}^n``.

    Feasibility of ``lambda >= 0, sum lambda = 1, sum lambda_i g_i <= v`` is
    decided exactly by enumerating the vertices of that polytope.
    """
    gens = list(gens)
    if any(all(a <= b for a, b in zip(g, v)) for g in gens):
        return True
    k, n = len(gens), len(v)
    if k == 1:
        return False
    # inequality rows: -lambda_i <= 0 and sum_i g_i[j] lambda_i <= v_j
    ineq = [([Fraction(-1 if i == t else 0) for i in range(k)], Fraction(0)) for t in range(k)]
    ineq += [([Fraction(g[j]) for g in gens], Fraction(v[j])) for j in range(n)]
    eq = ([Fraction(1)] * k, Fraction(1))
    for tight in combinations(range(len(ineq)), k - 1):
        A = [eq[0]] + [ineq[t][0] for t in tight]
        b = [eq[1]] + [ineq[t][1] for t in tight]
        lam = _solve(A, b)
        if lam is None:
            continue
        if all(sum(r[i] * lam[i] for i in range(k)) <= c for r, c in ineq):
            return True
    return False


def minimalize_monomials(mons: Sequence[Exp]) -> List[Exp]:
    mons = sorted(set(tuple(m) for m in mons), key=lambda m: (sum(m), m))
    out: List[Exp] = []
    for m in mons:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def integral_closure_gens(gens: Sequence[Exp]) -> List[Exp]:
    """Minimal generators of the integral closure of a monomial ideal.

    They lie in the box bounded by the largest exponent of each variable.
    """
    gens = [tuple(g) for g in gens]
    n = len(gens[0])
    box = [max(g[j] for g in gens) for j in range(n)]
    pts = [v for v in product(*(range(b + 1) for b in box)) if in_newton_polyhedron(v, gens)]
    return minimalize_monomials(pts)


def monomial_in_ideal(v: Sequence[int], gens: Sequence[Exp]) -> bool:
    return any(all(a <= b for a, b in zip(g, v)) for g in gens)


def monomial_power(gens: Sequence[Exp], k: int) -> List[Exp]:
    out = [tuple(0 for _ in gens[0])]
    for _ in range(k):
        out = minimalize_monomials([tuple(a + b for a, b in zip(u, g)) for u in out for g in gens])
    return out


def closure_witnesses(gens: Sequence[Exp]) -> List[Exp]:
    """Minimal generators of the integral closure that are not in the ideal."""
    return [m for m in integral_closure_gens(gens) if not monomial_in_ideal(m, gens)]


# ---------------------------------------------------------------------------
# normal forms


def _permuted(E: Sequence[Exp], perm) -> frozenset:
    return frozenset(tuple(e[perm[i]] for i in range(3)) for e in E)


def _normal_form(E: Sequence[Exp]):
    """``(label, params, perm)`` for the first matching normal form, else ``None``."""
    d = sum(E[0])
    for perm in permutations(range(3)):
        P = _permuted(E, perm)
        if P == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}:
            return "quadratic", {"d": 2}, perm
        if d >= 1 and P == {(d, 0, 0), (d - 1, 1, 0), (0, d - 1, 1)}:
            return "monoid", {"d": d}, perm
    for perm in permutations(range(3)):
        P = _permuted(E, perm)
        if (d, 0, 0) not in P:
            continue
        rest = list(P - {(d, 0, 0)})
        if len(rest) != 2:
            continue
        for mid, low in (rest, rest[::-1]):
            a, b = mid[1], mid[2]
            c = low[2]
            if (a and b and c and mid[0] == d - a - b and low[0] == 0 and low[1] == d - c
                    and a * c - b * (d - c) in (1, -1)):
                return "general", {"d": d, "a": a, "b": b, "c": c}, perm
    return None


def _is_dejonquieres_form(E: Sequence[Exp]) -> bool:
    d = sum(E[0])
    targets = [{(1, 1, 0), (1, 0, 1), (0, 1, 1)}]
    if d >= 2:
        targets.append({(d, 0, 0), (d - 1, 1, 0), (0, d - 1, 1)})
    if d >= 3:
        targets.append({(d, 0, 0), (1, 1, d - 2), (0, 1, d - 1)})
    return any(_permuted(E, perm) in targets for perm in permutations(range(3)))


@dataclass
class MonomialReport:
    exponents: List[Exp]
    d: int
    det: int
    form: str
    params: Dict[str, int]
    permutation: Tuple[int, ...]
    dejonquieres: bool
    integrally_closed: bool
    witnesses: List[Exp] = field(default_factory=list)

    @property
    def cremona(self) -> bool:
        return True

    def to_json(self) -> dict:
        return {"exponents": [list(e) for e in self.exponents], "d": self.d, "det": self.det,
                "cremona": True, "form": self.form, "params": self.params,
                "dejonquieres": self.dejonquieres, "integrally_closed": self.integrally_closed,
                "witnesses": [list(w) for w in self.witnesses]}


def monomial_text(e: Sequence[int], names: Sequence[str] = ("x", "y", "z")) -> str:
    s = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(names, e) if k)
    return s or "1"


def exponents_of(F: PlaneRationalMap) -> List[Exp]:
    if not F.is_monomial():
        raise InvalidInput("all coordinates must be monomials")
    return [next(iter(c.items()))[0] for c in F.coordinates]


def exponent_determinant(E: Sequence[Exp]) -> int:
    return int_det([list(e) for e in E])


def classify_monomial_map(F) -> MonomialReport:
    """Normal form, de Jonquières status and integral closedness of a monomial map.

    Raises ``NotCremona`` when no normal form matches.
    """
    E = exponents_of(F) if isinstance(F, PlaneRationalMap) else [tuple(e) for e in F]
    if len(set(sum(e) for e in E)) != 1:
        raise InvalidInput("monomials must share one degree")
    if any(min(e[j] for e in E) > 0 for j in range(3)):
        raise HasFixedPart("the monomials share a common factor")
    d = sum(E[0])
    det = exponent_determinant(E)
    nf = _normal_form(E)
    if nf is None:
        raise NotCremona(f"no normal form matches (exponent determinant {det}, degree {d})")
    label, params, perm = nf
    wit = closure_witnesses(E)
    return MonomialReport(list(E), d, det, label, params, tuple(perm),
                          _is_dejonquieres_form(E), not wit, wit)


def monomial_map(E: Sequence[Exp], field: Optional[FieldConfig] = None) -> PlaneRationalMap:
    from .algebra import PolyRing
    ring = PolyRing(("x", "y", "z"), field or FieldConfig())
    return PlaneRationalMap([ring.monomial(e) for e in E], ring)


def general_form(d: int, a: int, b: int, c: int) -> List[Exp]:
    return [(d, 0, 0), (d - a - b, a, b), (0, d - c, c)]


def general_form_grid(max_degree: int) -> List[Tuple[int, int, int, int]]:
    """All ``(d, a, b, c)`` with ``abc != 0``, ``a + b <= d``, ``c <= d`` and
    ``ac - b(d - c) = ±1``."""
    out = []
    for d in range(1, max_degree + 1):
        for a in range(1, d + 1):
            for b in range(1, d - a + 1):
                for c in range(1, d + 1):
                    if a * c - b * (d - c) in (1, -1):
                        out.append((d, a, b, c))
    return out


def dejonquieres_forms(d: int) -> List[List[Exp]]:
    out = []
    if d == 2:
        out.append([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    if d >= 2:
        out.append([(d, 0, 0), (d - 1, 1, 0), (0, d - 1, 1)])
    if d >= 3:
        out.append([(d, 0, 0), (1, 1, d - 2), (0, 1, d - 1)])
    return out


def non_cremona_family(d: int) -> List[Exp]:
    """``(x^d y^d, x^d z^d, y^d z^d)``."""
    return [(d, d, 0), (d, 0, d), (0, d, d)]


def closure_witness_formula(kind: str, d: int) -> Exp:
    """Explicit monomials in the closure but not in the ideal for the two
    de Jonquières families (``kind`` is ``"monoid"`` or ``"general"``)."""
    if kind == "monoid":
        return (d // 2, d // 2, 1) if d % 2 == 0 else ((d - 1) // 2, (d + 1) // 2, 1)
    if kind == "general":
        return (d - 1, 2, (d - 2) // 2) if d % 2 == 0 else (d - 1, 2, (d - 1) // 2)
    raise InvalidInput(f"unknown family {kind!r}")
