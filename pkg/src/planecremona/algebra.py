"""Coefficient fields, packed monomials, monomial orders and graded polynomials.

Monomials are stored as packed integers: exponent ``i`` lives in bits
``16*i .. 16*i+14`` and bit ``16*i+15`` is a guard bit used for the
divisibility test.  Multiplying monomials is integer addition.  A module
component index may be stored above the exponent fields.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

BITS = 16
FIELD_MASK = (1 << BITS) - 1
MAX_EXP = (1 << (BITS - 1)) - 1

DEFAULT_PRIME = 32003


class AlgebraError(Exception):
    """Base class of errors raised by the package."""


class IncompatibleField(AlgebraError):
    pass


class IncompatibleRing(AlgebraError):
    pass


class NotInvertible(AlgebraError):
    pass


class InvalidPoint(AlgebraError):
    pass


class PolySyntaxError(AlgebraError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldConfig:
    """Either the rationals (``characteristic == 0``) or a prime field F_p."""

    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not (p < 2 ** 31 and _is_prime(p)):
            raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {p}")

    @classmethod
    def rationals(cls) -> "FieldConfig":
        return cls(0)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> "FieldConfig":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldConfig":
        text = str(text).strip()
        if text.upper() in ("Q", "QQ", "0"):
            return cls(0)
        return cls(int(text))

    @property
    def kind(self) -> str:
        return "Rationals" if self.characteristic == 0 else "PrimeField"

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __call__(self, value) -> Union[int, Fraction]:
        """Coerce an int or Fraction into the field."""
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise NotInvertible(f"denominator {value.denominator} vanishes mod {p}")
            return value.numerator * pow(den, -1, p) % p
        return int(value) % p

    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def inv(self, a):
        p = self.characteristic
        if p == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        a %= p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, p)

    def normalize(self, a):
        return a % self.characteristic if self.characteristic else a

    def to_int_repr(self, a) -> Union[int, Fraction]:
        """Symmetric representative for printing over F_p."""
        p = self.characteristic
        if p == 0:
            return a
        a %= p
        return a - p if a > p // 2 else a


# ---------------------------------------------------------------------------
# packed monomials


def pack(exps: Sequence[int], comp: int = 0) -> int:
    m = 0
    for i, e in enumerate(exps):
        if e < 0 or e > MAX_EXP:
            raise ValueError(f"exponent {e} out of range")
        m |= e << (BITS * i)
    if comp:
        m |= comp << (BITS * len(exps))
    return m


def unpack(m: int, nvars: int) -> Tuple[int, ...]:
    return tuple((m >> (BITS * i)) & FIELD_MASK for i in range(nvars))


def guard_mask(nvars: int) -> int:
    g = 0
    for i in range(nvars):
        g |= 1 << (BITS * i + BITS - 1)
    return g


def mono_degree(m: int, nvars: int) -> int:
    d = 0
    for _ in range(nvars):
        d += m & FIELD_MASK
        m >>= BITS
    return d


def mono_lcm(a: int, b: int, nvars: int) -> int:
    r = 0
    for i in range(nvars):
        s = BITS * i
        ea = (a >> s) & FIELD_MASK
        eb = (b >> s) & FIELD_MASK
        r |= (ea if ea > eb else eb) << s
    return r


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order.

    ``kind`` is one of ``degrevlex``, ``lex``, ``elim`` (block order, the
    first ``split`` variables are eliminated, degrevlex inside blocks) and
    ``bigraded`` (first ``split`` variables have bidegree (1,0), the rest
    (0,1); total degree, then bidegree, then degrevlex).
    """

    kind: str = "degrevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "elim", "bigraded"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    @classmethod
    def degrevlex(cls):
        return cls("degrevlex")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def elimination(cls, split: int):
        return cls("elim", split)

    @classmethod
    def bigraded(cls, split: int):
        return cls("bigraded", split)

    def key_function(self, nvars: int):
        """Return ``exps -> int`` whose integer order is this monomial order."""
        W = 1 << 20

        def revlex(exps):
            k = 0
            for e in reversed(exps):
                k = (k << BITS) | (MAX_EXP - e)
            return k

        revlex_span = 1 << (BITS * nvars)
        if self.kind == "degrevlex":
            return lambda e: sum(e) * revlex_span + revlex(e)
        if self.kind == "lex":
            def lex(e):
                k = 0
                for x in e:
                    k = (k << BITS) | x
                return k
            return lex
        s = self.split
        if self.kind == "elim":
            def elim(e):
                a, b = e[:s], e[s:]
                return ((sum(a) * W + sum(b)) * revlex_span + revlex(a) * (1 << (BITS * len(b)))
                        + revlex(b))
            return elim

        def bigraded(e):
            a = sum(e[:s])
            return ((sum(e) * W + a) * revlex_span) + revlex(e)
        return bigraded


class KeyCache(dict):
    """Memoized ``packed monomial -> order key``."""

    def __init__(self, func):
        super().__init__()
        self.func = func

    def __missing__(self, m):
        k = self.func(m)
        self[m] = k
        return k


# ---------------------------------------------------------------------------
# rings and polynomials

Coeff = Union[int, Fraction]
DEFAULT_VARS = ("x", "y", "z")


class PolyRing:
    """Polynomial ring ``k[vars]`` with a default monomial order."""

    def __init__(self, variables: Sequence[str] = DEFAULT_VARS,
                 field: Optional[FieldConfig] = None,
                 order: Optional[MonomialOrder] = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.variables)
        self.field = field if field is not None else FieldConfig()
        self.order = order if order is not None else MonomialOrder()
        self.guard = guard_mask(self.nvars)
        self.comp_shift = BITS * self.nvars
        self._keys: Dict[MonomialOrder, KeyCache] = {}

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.field == other.field)

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"PolyRing({','.join(self.variables)} over {self.field})"

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def key_cache(self, order: Optional[MonomialOrder] = None) -> KeyCache:
        order = order or self.order
        cache = self._keys.get(order)
        if cache is None:
            f = order.key_function(self.nvars)
            n = self.nvars
            cache = KeyCache(lambda m: f(unpack(m, n)))
            self._keys[order] = cache
        return cache

    # constructors
    def zero(self) -> "GradedPolynomial":
        return GradedPolynomial(self, {})

    def one(self) -> "GradedPolynomial":
        return self.constant(1)

    def constant(self, c) -> "GradedPolynomial":
        c = self.field(c)
        return GradedPolynomial(self, {0: c} if c else {})

    def gen(self, name_or_index) -> "GradedPolynomial":
        i = (self.variables.index(name_or_index) if isinstance(name_or_index, str)
             else int(name_or_index))
        exps = [0] * self.nvars
        exps[i] = 1
        return GradedPolynomial(self, {pack(exps): self.field.one()})

    def gens(self) -> List["GradedPolynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff=1) -> "GradedPolynomial":
        c = self.field(coeff)
        return GradedPolynomial(self, {pack(exps): c} if c else {})

    def from_terms(self, terms: Iterable[Tuple[Sequence[int], Coeff]]) -> "GradedPolynomial":
        d: Dict[int, Coeff] = {}
        p = self.field.characteristic
        for exps, c in terms:
            m = pack(exps)
            v = d.get(m, 0) + self.field(c)
            if p:
                v %= p
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return GradedPolynomial(self, d)

    def parse(self, text: str) -> "GradedPolynomial":
        return parse_poly(text, self)

    def monomials_of_degree(self, d: int) -> List[Tuple[int, ...]]:
        out: List[Tuple[int, ...]] = []

        def rec(i, left, cur):
            if i == self.nvars - 1:
                out.append(tuple(cur + [left]))
                return
            for e in range(left, -1, -1):
                rec(i + 1, left - e, cur + [e])
        if self.nvars == 0:
            return [()] if d == 0 else []
        rec(0, d, [])
        return out

    def coerce(self, f: "GradedPolynomial") -> "GradedPolynomial":
        """Map ``f`` into this ring by variable names."""
        if f.ring == self:
            return f if f.ring is self else GradedPolynomial(self, f.terms)
        if f.ring.field != self.field:
            raise IncompatibleField(f"{f.ring.field} vs {self.field}")
        idx = []
        for v in f.ring.variables:
            if v not in self.variables:
                raise IncompatibleRing(f"variable {v} not in {self}")
            idx.append(self.variables.index(v))
        d = {}
        n = f.ring.nvars
        for m, c in f.terms.items():
            e = unpack(m, n)
            new = [0] * self.nvars
            for j, ej in zip(idx, e):
                new[j] = ej
            d[pack(new)] = c
        return GradedPolynomial(self, d)


class GradedPolynomial:
    """Immutable multivariate polynomial; ``terms`` maps packed monomials to
    nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[int, Coeff]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- inspection
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def items(self) -> Iterator[Tuple[Tuple[int, ...], Coeff]]:
        n = self.ring.nvars
        for m, c in self.terms.items():
            yield unpack(m, n), c

    def degree(self) -> int:
        if not self.terms:
            return -1
        n = self.ring.nvars
        return max(mono_degree(m, n) for m in self.terms)

    def min_degree(self) -> int:
        n = self.ring.nvars
        return min(mono_degree(m, n) for m in self.terms)

    def is_homogeneous(self) -> bool:
        n = self.ring.nvars
        return len({mono_degree(m, n) for m in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def homogeneous_part(self, d: int) -> "GradedPolynomial":
        n = self.ring.nvars
        return GradedPolynomial(self.ring, {m: c for m, c in self.terms.items()
                                            if mono_degree(m, n) == d})

    def degree_in(self, var_indices: Iterable[int]) -> int:
        var_indices = list(var_indices)
        if not self.terms:
            return -1
        return max(sum(e[i] for i in var_indices) for e, _ in self.items())

    def leading_term(self, order: Optional[MonomialOrder] = None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        kc = self.ring.key_cache(order)
        m = max(self.terms, key=kc.__getitem__)
        return unpack(m, self.ring.nvars), self.terms[m]

    def sorted_terms(self, order: Optional[MonomialOrder] = None):
        kc = self.ring.key_cache(order)
        n = self.ring.nvars
        return [(unpack(m, n), self.terms[m])
                for m in sorted(self.terms, key=kc.__getitem__, reverse=True)]

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(pack(exps), self.ring.field.zero())

    def variables_used(self) -> List[int]:
        used = set()
        for e, _ in self.items():
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    # -- arithmetic
    def _check(self, other: "GradedPolynomial"):
        if self.ring.field != other.ring.field:
            raise IncompatibleField(f"{self.ring.field} vs {other.ring.field}")
        if self.ring.variables != other.ring.variables:
            raise IncompatibleRing(f"{self.ring} vs {other.ring}")

    def _lift(self, other) -> "GradedPolynomial":
        if isinstance(other, GradedPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.characteristic
        d = dict(self.terms)
        for m, c in other.terms.items():
            v = d.get(m, 0) + c
            if p:
                v %= p
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return GradedPolynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.characteristic
        if p:
            return GradedPolynomial(self.ring, {m: (p - c) % p for m, c in self.terms.items()})
        return GradedPolynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.characteristic
        d: Dict[int, Coeff] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                v = d.get(m, 0) + c1 * c2
                if p:
                    v %= p
                d[m] = v
        return GradedPolynomial(self.ring, {m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "GradedPolynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        p = self.ring.field.characteristic
        if p:
            return GradedPolynomial(self.ring, {m: v * c % p for m, v in self.terms.items()})
        return GradedPolynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_monomial(self, exps: Sequence[int]) -> "GradedPolynomial":
        s = pack(exps)
        return GradedPolynomial(self.ring, {m + s: c for m, c in self.terms.items()})

    def monic(self, order: Optional[MonomialOrder] = None) -> "GradedPolynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- evaluation / substitution
    def __call__(self, *values):
        return self.evaluate(values)

    def evaluate(self, values: Sequence):
        """Evaluate at field elements, or substitute polynomials of any ring."""
        if len(values) != self.ring.nvars:
            raise ValueError("wrong number of values")
        if any(isinstance(v, GradedPolynomial) for v in values):
            return self.substitute(values)
        F = self.ring.field
        vals = [F(v) for v in values]
        p = F.characteristic
        total = F.zero()
        for e, c in self.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * (pow(v, k, p) if p else v ** k)
            total += t
        return F.normalize(total)

    def substitute(self, images: Sequence["GradedPolynomial"]) -> "GradedPolynomial":
        """Ring map sending variable i to ``images[i]`` (all in one target ring)."""
        target = next(v.ring for v in images if isinstance(v, GradedPolynomial))
        imgs = [v if isinstance(v, GradedPolynomial) else target.constant(v) for v in images]
        powers: List[Dict[int, GradedPolynomial]] = [dict() for _ in imgs]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = imgs[i] ** k
            return cache[k]

        p = target.field.characteristic
        acc: Dict[int, Coeff] = {}
        for e, c in self.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            for m, v in term.terms.items():
                s = acc.get(m, 0) + v
                if p:
                    s %= p
                acc[m] = s
        return GradedPolynomial(target, {m: c for m, c in acc.items() if c})

    def dehomogenize(self, index: int, target: PolyRing) -> "GradedPolynomial":
        """Set variable ``index`` to 1; remaining variables map in order to ``target``."""
        d: Dict[int, Coeff] = {}
        p = self.ring.field.characteristic
        for e, c in self.items():
            new = e[:index] + e[index + 1:]
            m = pack(new)
            v = d.get(m, 0) + c
            if p:
                v %= p
            d[m] = v
        return GradedPolynomial(target, {m: c for m, c in d.items() if c})

    # -- printing
    def __str__(self):
        return print_poly(self)

    def __repr__(self):
        return f"GradedPolynomial({print_poly(self)!r})"


def poly_arith(a: GradedPolynomial, b: GradedPolynomial, op: str) -> GradedPolynomial:
    """``op`` in {"add", "sub", "mul"} (case-insensitive)."""
    a._check(b)
    op = op.lower()
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def print_poly(f: GradedPolynomial, order: Optional[MonomialOrder] = None) -> str:
    if not f.terms:
        return "0"
    F = f.ring.field
    names = f.ring.variables
    parts = []
    for exps, c in f.sorted_terms(order):
        c = F.to_int_repr(c)
        neg = c < 0
        a = -c if neg else c
        mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(names, exps) if e)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()/]))")


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
            start = m.start(m.lastindex)
            if m.group(1):
                self.tokens.append(("num", m.group(1), start))
            elif m.group(2):
                name = m.group(2)
                if name not in ring.variables and all(ch in ring.variables for ch in name):
                    # juxtaposed single-letter variables: "xyz" is x*y*z
                    self.tokens.extend(("var", ch, start + k) for k, ch in enumerate(name))
                else:
                    self.tokens.append(("var", name, start))
            else:
                op = "^" if m.group(3) == "**" else m.group(3)
                self.tokens.append(("op", op, start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[1] != value:
            raise PolySyntaxError(f"expected {value!r}", t[2])

    def parse(self) -> GradedPolynomial:
        if not self.tokens:
            raise PolySyntaxError("empty expression", 0)
        f = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolySyntaxError(f"unexpected token {t[1]!r}", t[2])
        return f

    def expr(self):
        t = self.peek()
        sign = 1
        if t[1] in ("+", "-"):
            self.take()
            sign = -1 if t[1] == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.power()
        while True:
            t = self.peek()
            if t[1] == "*":
                self.take()
                f = f * self.power()
            elif t[1] == "/":
                self.take()
                c = self.take()
                if c[0] != "num":
                    raise PolySyntaxError("only division by integer constants", c[2])
                try:
                    f = f.scale(self.ring.field.inv(self.ring.field(int(c[1]))))
                except ZeroDivisionError:
                    raise NotInvertible(f"{c[1]} is not invertible in {self.ring.field}")
            elif t[0] in ("num", "var") or t[1] == "(":
                f = f * self.power()  # implicit multiplication
            else:
                return f

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            t = self.take()
            if t[0] != "num":
                raise PolySyntaxError("exponent must be a nonnegative integer", t[2])
            base = base ** int(t[1])
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return self.ring.constant(int(t[1]))
        if t[0] == "var":
            if t[1] not in self.ring.variables:
                raise PolySyntaxError(f"unknown variable {t[1]!r}", t[2])
            return self.ring.gen(t[1])
        if t[1] == "(":
            f = self.expr()
            self.expect(")")
            return f
        if t[1] == "-":
            return -self.power()
        raise PolySyntaxError(f"unexpected token {t[1]!r}" if t[1] else "unexpected end", t[2])


def parse_poly(text: str, ring: Union[PolyRing, FieldConfig, None] = None) -> GradedPolynomial:
    """Parse ``text`` in the grammar: integers, variables, + - * ^ and parentheses."""
    if ring is None or isinstance(ring, FieldConfig):
        ring = PolyRing(DEFAULT_VARS, ring)
    return _Parser(text, ring).parse()


# ---------------------------------------------------------------------------
# local order at a point


INFINITY = float("inf")


def order_at_point(f: GradedPolynomial, point: Sequence) -> Union[int, float]:
    """Multiplicity ``e_p(f)`` of the homogeneous form ``f`` at the projective point.

    Returns ``INFINITY`` for ``f == 0``.
    """
    F = f.ring.field
    pt = [F(c) for c in point]
    if len(pt) != f.ring.nvars:
        raise InvalidPoint("point has wrong number of coordinates")
    if all(c == 0 for c in pt):
        raise InvalidPoint("(0:...:0) is not a projective point")
    if not f.terms:
        return INFINITY
    i = next(j for j, c in enumerate(pt) if c != 0)
    inv = F.inv(pt[i])
    pt = [F.normalize(c * inv) for c in pt]
    local = PolyRing([v for j, v in enumerate(f.ring.variables) if j != i], F)
    images = []
    k = 0
    for j in range(f.ring.nvars):
        if j == i:
            images.append(local.one())
        else:
            images.append(local.gen(k) + pt[j])
            k += 1
    g = f.substitute(images)
    return g.min_degree() if g.terms else INFINITY


def content_gcd_monomial(polys: Sequence[GradedPolynomial]) -> Tuple[int, ...]:
    """Largest monomial dividing every term of every polynomial."""
    n = polys[0].ring.nvars
    exps = [e for f in polys for e, _ in f.items()]
    return tuple(min(e[i] for e in exps) for i in range(n)) if exps else (0,) * n


def product(polys: Iterable[GradedPolynomial], ring: PolyRing) -> GradedPolynomial:
    return reduce(lambda a, b: a * b, polys, ring.one())
