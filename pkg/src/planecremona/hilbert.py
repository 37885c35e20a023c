"""Hilbert series from lead-term ideals, by the pivot recursion.

Works only with the combinatorics of monomial ideals, so it is an oracle
independent of free resolutions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import List, Sequence, Tuple

NEG_INF = float("-inf")


def _trim(p: List[int]) -> List[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_add(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def poly_shift(a: Sequence[int], k: int) -> List[int]:
    return [0] * k + list(a) if a else []


def one_minus_t_power(k: int) -> List[int]:
    return [comb(k, i) * (-1) ** i for i in range(k + 1)]


def divide_by_one_minus_t(a: Sequence[int]) -> Tuple[List[int], int]:
    """Synthetic division by (1 - t); returns (quotient, remainder a(1))."""
    # a(t) = (1 - t) q(t) + r ;  q_i = sum_{j<=i} a_j
    q = []
    acc = 0
    for x in a[:-1]:
        acc += x
        q.append(acc)
    r = sum(a)
    return _trim(q), r


def _minimalize(gens) -> Tuple[Tuple[int, ...], ...]:
    gens = sorted(set(gens), key=sum)
    out: List[Tuple[int, ...]] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _colon_mono(gens, p):
    return _minimalize(tuple(tuple(max(a - b, 0) for a, b in zip(g, p)) for g in gens))


@lru_cache(maxsize=200000)
def _numerator(gens: Tuple[Tuple[int, ...], ...]) -> Tuple[int, ...]:
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return ()
    n = len(gens[0])
    supports = [frozenset(i for i in range(n) if g[i]) for g in gens]
    coprime = all(not (supports[i] & supports[j])
                  for i in range(len(gens)) for j in range(i + 1, len(gens)))
    if coprime:
        out = [1]
        for g in gens:
            out = poly_mul(out, poly_add([1], poly_shift([-1], sum(g))))
        return tuple(out)
    # pivot on the variable shared by the most non-pure generators
    mixed = [g for g, s in zip(gens, supports) if len(s) > 1]
    best = max(range(n), key=lambda i: (sum(1 for g in mixed if g[i]), -i))
    a = min(g[best] for g in mixed if g[best])
    p = tuple(a if i == best else 0 for i in range(n))
    plus = _minimalize(gens + (p,))
    col = _colon_mono(gens, p)
    return tuple(poly_add(_numerator(plus), poly_shift(list(_numerator(col)), a)))


def monomial_numerator(gens: Sequence[Sequence[int]]) -> List[int]:
    """Numerator of the Hilbert series of ``k[x_1..x_n]/(gens)`` over (1-t)^n."""
    return list(_numerator(_minimalize(tuple(tuple(g) for g in gens))))


@dataclass(frozen=True)
class HilbertSeries:
    numerator: Tuple[int, ...]
    denominator_power: int = 3

    def __str__(self):
        terms = []
        for i, c in enumerate(self.numerator):
            if c:
                terms.append(f"{c:+d}" + (f"*t^{i}" if i else ""))
        num = "".join(terms).lstrip("+") or "0"
        return f"({num})/(1-t)^{self.denominator_power}"

    def numerator_at(self, t) -> int:
        return sum(c * t ** i for i, c in enumerate(self.numerator))

    def hilbert_function(self, k: int) -> int:
        n = self.denominator_power
        return sum(c * comb(k - j + n - 1, n - 1) for j, c in enumerate(self.numerator) if k - j >= 0)

    def dim_and_degree(self):
        num = list(self.numerator)
        if not num:
            return NEG_INF, 0
        c = 0
        while True:
            q, r = divide_by_one_minus_t(num)
            if r != 0:
                break
            num = q
            c += 1
        return self.denominator_power - c, sum(num)


def hilbert_series(I) -> HilbertSeries:
    """Hilbert series of ``R/I`` for a homogeneous GradedIdeal ``I``."""
    if I._hilbert is None:
        I.require_homogeneous()
        n = I.ring.nvars
        lead = [g.leading_term()[0] for g in I.gb()]
        I._hilbert = HilbertSeries(tuple(monomial_numerator(lead)), n)
    return I._hilbert


def dim_and_degree(I):
    """Krull dimension and multiplicity of ``R/I`` (dimension ``-inf`` for the unit ideal)."""
    return hilbert_series(I).dim_and_degree()


def second_derivative_degree(numerator: Sequence[int]) -> int:
    """``N''(1)/2``, the multiplicity when ``R/I`` has dimension one in three variables."""
    return sum(c * i * (i - 1) for i, c in enumerate(numerator)) // 2
