"""Exact dense linear algebra over a FieldConfig (rows as lists)."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .algebra import FieldConfig


def rref(rows: Sequence[Sequence], F: FieldConfig) -> Tuple[List[list], List[int]]:
    """Reduced row echelon form.  Returns ``(nonzero rows, pivot columns)``."""
    p = F.characteristic
    M = [[F(v) for v in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.normalize(v * inv) for v in M[r]]
        row = M[r]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                if p:
                    M[i] = [(a - f * b) % p for a, b in zip(M[i], row)]
                else:
                    M[i] = [a - f * b for a, b in zip(M[i], row)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows, F: FieldConfig) -> int:
    return len(rref(rows, F)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, F: FieldConfig) -> List[list]:
    """Basis of ``{v : A v = 0}``."""
    R, piv = rref(rows, F) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        v = [F.zero()] * ncols
        v[fc] = F.one()
        for row, pc in zip(R, piv):
            v[pc] = F.normalize(-row[fc])
        basis.append(v)
    return basis


def det(M: Sequence[Sequence], F: FieldConfig):
    A = [[F(v) for v in r] for r in M]
    n = len(A)
    p = F.characteristic
    d = F.one()
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            return F.zero()
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = -d
        d = F.normalize(d * A[c][c])
        inv = F.inv(A[c][c])
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] * inv
                A[i] = [F.normalize(a - f * b) for a, b in zip(A[i], A[c])]
    return F.normalize(d)


def int_det(M: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (via Fractions)."""
    return int(det(M, FieldConfig(0)))


def as_fraction_matrix(M) -> List[List[Fraction]]:
    return [[Fraction(v) for v in r] for r in M]
