"""Dense univariate polynomials over F_p or Q (coefficient lists, low degree first)."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Sequence

from .algebra import FieldConfig

Poly = List


def trim(f: Sequence) -> list:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f: Sequence) -> int:
    return len(trim(f)) - 1


def monic(f: Sequence, F: FieldConfig) -> list:
    f = trim(f)
    if not f:
        return f
    inv = F.inv(f[-1])
    return [F.normalize(c * inv) for c in f]


def sub(f, g, F: FieldConfig) -> list:
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return trim([F.normalize(a - b) for a, b in zip(f, g)])


def mul(f, g, F: FieldConfig) -> list:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([F.normalize(c) for c in out])


def divmod_(f, g, F: FieldConfig):
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = [F(c) for c in f]
    inv = F.inv(g[-1])
    while len(r) >= len(g) and r:
        c = F.normalize(r[-1] * inv)
        k = len(r) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] = F.normalize(r[k + i] - c * b)
        r = trim(r)
    return trim(q), r


def gcd(f, g, F: FieldConfig) -> list:
    f, g = trim(f), trim(g)
    while g:
        f, g = g, divmod_(f, g, F)[1]
    return monic(f, F)


def powmod(base, e: int, mod, F: FieldConfig) -> list:
    result = [F.one()]
    base = divmod_(base, mod, F)[1]
    while e:
        if e & 1:
            result = divmod_(mul(result, base, F), mod, F)[1]
        e >>= 1
        if e:
            base = divmod_(mul(base, base, F), mod, F)[1]
    return result


def derivative(f, F: FieldConfig) -> list:
    return trim([F.normalize(i * c) for i, c in enumerate(f)][1:])


def evaluate(f, x, F: FieldConfig):
    acc = F.zero()
    for c in reversed(f):
        acc = F.normalize(acc * x + c)
    return acc


def squarefree_part(f, F: FieldConfig) -> list:
    f = monic(f, F)
    d = derivative(f, F)
    if not d:
        return f
    return monic(divmod_(f, gcd(f, d, F), F)[0], F)


def _split_fp(g, p: int, rng: random.Random, F: FieldConfig) -> List[int]:
    """Roots of a monic squarefree product of distinct linear factors over F_p."""
    g = monic(g, F)
    if deg(g) <= 0:
        return []
    if deg(g) == 1:
        return [F.normalize(-g[0])]
    if p == 2:
        return [x for x in (0, 1) if evaluate(g, x, F) == 0]
    while True:
        a = rng.randrange(p)
        h = powmod([a, 1], (p - 1) // 2, g, F)
        h = sub(h, [1], F)
        c = gcd(g, h, F)
        if 0 < deg(c) < deg(g):
            return _split_fp(c, p, rng, F) + _split_fp(divmod_(g, c, F)[0], p, rng, F)


def roots(f, F: FieldConfig, seed: int = 0) -> List:
    """Distinct roots of ``f`` in the field, sorted."""
    f = trim([F(c) for c in f])
    if deg(f) <= 0:
        return []
    p = F.characteristic
    if p:
        if p <= 256:
            return [x for x in range(p) if evaluate(f, x, F) == 0]
        xp = powmod([0, 1], p, f, F)
        g = gcd(f, sub(xp, [0, 1], F), F)
        return sorted(_split_fp(g, p, random.Random(seed), F))
    import sympy
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(f))
    rts = sympy.Poly(expr, t, domain=sympy.QQ).ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in rts)


def all_roots_rational(f, F: FieldConfig) -> bool:
    """Whether ``f`` splits into linear factors over the field."""
    f = trim([F(c) for c in f])
    if deg(f) <= 0:
        return True
    return len(roots(f, F)) == deg(squarefree_part(f, F))


def from_roots(rts: Sequence, F: FieldConfig) -> list:
    out = [F.one()]
    for r in rts:
        out = mul(out, [F.normalize(-F(r)), F.one()], F)
    return out


def resultant(f, g, F: FieldConfig):
    """Resultant via the Euclidean algorithm."""
    f, g = trim([F(c) for c in f]), trim([F(c) for c in g])
    if not f or not g:
        return F.zero()
    res = F.one()
    while True:
        df, dg = deg(f), deg(g)
        if dg == 0:
            return F.normalize(res * F(g[0]) ** df if not F.characteristic
                               else res * pow(g[0], df, F.characteristic))
        q, r = divmod_(f, g, F)
        if not r:
            return F.zero()
        dr = deg(r)
        lc = g[-1]
        sign = -1 if (df * dg) % 2 else 1
        pw = pow(lc, df - dr, F.characteristic) if F.characteristic else F(lc) ** (df - dr)
        res = F.normalize(res * sign * pw)
        f, g = g, r
