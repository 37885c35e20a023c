"""Syzygies, minimal graded free resolutions and Betti tables."""
from __future__ import annotations

from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import AlgebraError, GradedPolynomial, PolyRing
from .groebner import GradedIdeal, module_minimal_generators, module_syzygies

Matrix = List[List[GradedPolynomial]]  # list of columns


class NotMinimal(AlgebraError):
    pass


class InvalidInput(AlgebraError):
    pass


class OutOfRange(AlgebraError):
    pass


_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


class BettiTable:
    """Graded Betti numbers ``{step: {degree: count}}``."""

    def __init__(self, data: Dict[int, Dict[int, int]]):
        self.data = {i: {d: c for d, c in row.items() if c} for i, row in data.items()}
        self.data = {i: row for i, row in self.data.items() if row}

    @classmethod
    def from_shifts(cls, shifts: Sequence[Sequence[int]]) -> "BettiTable":
        return cls({i: dict(Counter(s)) for i, s in enumerate(shifts)})

    def shifts(self, i: int) -> List[int]:
        """Degrees at step ``i``, sorted descending."""
        row = self.data.get(i, {})
        return sorted((d for d, c in row.items() for _ in range(c)), reverse=True)

    def rank(self, i: int) -> int:
        return sum(self.data.get(i, {}).values())

    @property
    def length(self) -> int:
        return max(self.data) if self.data else 0

    def numerator(self) -> List[int]:
        """Alternating sum of ``t^degree``; the Hilbert-series numerator."""
        top = max((d for row in self.data.values() for d in row), default=0)
        out = [0] * (top + 1)
        for i, row in self.data.items():
            for d, c in row.items():
                out[d] += (-1) ** i * c
        while out and out[-1] == 0:
            out.pop()
        return out

    def regularity(self) -> int:
        return max(d - i for i, row in self.data.items() for d in row)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        return hash(tuple(sorted((i, tuple(sorted(r.items()))) for i, r in self.data.items())))

    def to_json(self) -> Dict[str, Dict[str, int]]:
        return {str(i): {str(d): c for d, c in sorted(row.items())}
                for i, row in sorted(self.data.items())}

    @classmethod
    def from_json(cls, obj) -> "BettiTable":
        return cls({int(i): {int(d): int(c) for d, c in row.items()} for i, row in obj.items()})

    def describe(self) -> str:
        """Chain notation such as ``0→R(−9)→R³(−8)→R³(−5)→R``."""
        parts = []
        for i in range(self.length, -1, -1):
            row = self.data.get(i, {})
            summands = []
            for d in sorted(row, reverse=True):
                c = row[d]
                exp = str(c).translate(_SUP) if c > 1 else ""
                tw = f"({-d})".replace("-", "−") if d else ""
                summands.append(f"R{exp}{tw}")
            parts.append("⊕".join(summands) or "0")
        return "0→" + "→".join(parts)

    def __str__(self):
        if not self.data:
            return "(zero)"
        L = self.length
        rows = {}
        for i, row in self.data.items():
            for d, c in row.items():
                rows.setdefault(d - i, {})[i] = c
        lines = ["      " + " ".join(f"{i:>3}" for i in range(L + 1))]
        for j in sorted(rows):
            lines.append(f"{j:>4}: " + " ".join(f"{rows[j].get(i, '-'):>3}" for i in range(L + 1)))
        return "\n".join(lines)

    __repr__ = describe


class GradedFreeResolution:
    """``F_0 <- F_1 <- ... <- F_L``; ``maps[k-1]`` is the matrix of ``F_k -> F_{k-1}``
    stored as a list of columns, ``shifts[k]`` the degrees of the basis of ``F_k``."""

    def __init__(self, ring: PolyRing, shifts: List[List[int]], maps: List[Matrix]):
        self.ring = ring
        self.shifts = shifts
        self.maps = maps

    @property
    def length(self) -> int:
        return len(self.maps)

    def betti(self) -> BettiTable:
        return BettiTable.from_shifts(self.shifts)

    def has_unit_entries(self) -> bool:
        return any(f and f.degree() == 0 for M in self.maps for col in M for f in col)

    @property
    def is_minimal(self) -> bool:
        return not self.has_unit_entries()

    def is_complex(self) -> bool:
        """Consecutive maps compose to zero."""
        for k in range(1, len(self.maps)):
            A, B = self.maps[k - 1], self.maps[k]
            for col in B:
                for i in range(len(self.shifts[k - 1])):
                    s = self.ring.zero()
                    for j, c in enumerate(col):
                        if c and A[j][i]:
                            s = s + A[j][i] * c
                    if s:
                        return False
        return True

    def is_homogeneous(self) -> bool:
        for k, M in enumerate(self.maps, start=1):
            for j, col in enumerate(M):
                for i, f in enumerate(col):
                    if f and (not f.is_homogeneous() or
                              f.degree() != self.shifts[k][j] - self.shifts[k - 1][i]):
                        return False
        return True

    def __repr__(self):
        return f"GradedFreeResolution({self.betti().describe()})"


def syzygies(columns, row_shifts: Optional[Sequence[int]] = None) -> Tuple[Matrix, List[int]]:
    """Minimal generators of the kernel.  ``columns`` is either a list of
    polynomials (generators of an ideal) or a list of vector columns."""
    cols = [[c] if isinstance(c, GradedPolynomial) else list(c) for c in columns]
    ring = next(f.ring for col in cols for f in col if f is not None)
    return module_syzygies(ring, cols, row_shifts=row_shifts)


def _eliminate_unit(shifts: List[List[int]], maps: List[Matrix], k: int, i: int, j: int):
    """Split off a unit entry at row ``i``, column ``j`` of ``maps[k-1]``."""
    M = maps[k - 1]
    ring_field = M[j][i].ring.field
    u_inv = ring_field.inv(M[j][i].terms[0])
    vj = M[j]
    newM = []
    for l, col in enumerate(M):
        if l == j:
            continue
        a = col[i]
        if a:
            f = a.scale(u_inv)
            col = [c - f * v for c, v in zip(col, vj)]
        newM.append([c for r, c in enumerate(col) if r != i])
    maps[k - 1] = newM
    if k >= 2:
        maps[k - 2] = [c for r, c in enumerate(maps[k - 2]) if r != i]
    if k < len(maps):
        maps[k] = [[c for r, c in enumerate(col) if r != j] for col in maps[k]]
    del shifts[k - 1][i]
    del shifts[k][j]


def minimalize(res: GradedFreeResolution) -> GradedFreeResolution:
    """Remove every nonzero constant entry by splitting off trivial summands."""
    shifts = [list(s) for s in res.shifts]
    maps = [[list(col) for col in M] for M in res.maps]
    changed = True
    while changed:
        changed = False
        for k in range(1, len(maps) + 1):
            M = maps[k - 1]
            hit = next(((i, j) for j, col in enumerate(M) for i, f in enumerate(col)
                        if f and f.degree() == 0), None)
            if hit:
                _eliminate_unit(shifts, maps, k, *hit)
                changed = True
                break
    # drop trailing empty steps
    while maps and not shifts[len(maps)]:
        maps.pop()
        shifts.pop()
    return GradedFreeResolution(res.ring, shifts, maps)


def resolve_cokernel(ring: PolyRing, columns: Matrix, row_shifts: Sequence[int],
                     col_degrees: Optional[Sequence[int]] = None,
                     max_length: Optional[int] = None) -> GradedFreeResolution:
    """Minimal free resolution of the cokernel of a homogeneous presentation."""
    row_shifts = list(row_shifts)
    cols = [list(c) for c in columns if any(c)]
    if col_degrees is None:
        from .groebner import vector_degree
        col_degrees = [vector_degree(c, row_shifts) for c in cols]
    else:
        col_degrees = [d for c, d in zip(columns, col_degrees) if any(c)]
    if cols:
        keep = module_minimal_generators(ring, cols, row_shifts)
        cols = [cols[i] for i in keep]
        col_degrees = [col_degrees[i] for i in keep]
    # prune unit entries of the presentation
    shifts = [row_shifts, list(col_degrees)]
    pres = minimalize(GradedFreeResolution(ring, shifts, [cols]))
    shifts, maps = [list(s) for s in pres.shifts], pres.maps
    if not maps:
        return GradedFreeResolution(ring, [shifts[0]], [])
    if maps[0]:
        keep = module_minimal_generators(ring, maps[0], shifts[0])
        maps[0] = [maps[0][i] for i in keep]
        shifts[1] = [shifts[1][i] for i in keep]
    limit = max_length if max_length is not None else ring.nvars + 1
    while len(maps) < limit and maps[-1]:
        syz, degs = module_syzygies(ring, maps[-1], row_shifts=shifts[-2], col_degrees=shifts[-1])
        if not syz:
            break
        maps.append(syz)
        shifts.append(degs)
    return GradedFreeResolution(ring, shifts, maps)


def minimal_free_resolution(I: GradedIdeal) -> GradedFreeResolution:
    """Minimal free resolution of ``R/I``."""
    I.require_homogeneous()
    ring = I.ring
    gens = list(I.minimal_generators())
    if not gens:
        return GradedFreeResolution(ring, [[0]], [])
    if any(g.degree() == 0 for g in gens):
        return GradedFreeResolution(ring, [[]], [])
    shifts = [[0], [g.degree() for g in gens]]
    maps: List[Matrix] = [[[g] for g in gens]]
    while len(maps) <= ring.nvars and maps[-1]:
        syz, degs = module_syzygies(ring, maps[-1], row_shifts=shifts[-2], col_degrees=shifts[-1])
        if not syz:
            break
        maps.append(syz)
        shifts.append(degs)
    return GradedFreeResolution(ring, shifts, maps)


def projective_dimension(res: GradedFreeResolution) -> int:
    return res.length


def regularity(res: GradedFreeResolution) -> int:
    """Castelnuovo-Mumford regularity ``max(shift - step)`` of a minimal resolution."""
    if res.has_unit_entries():
        raise NotMinimal("resolution has unit entries")
    return max(d - i for i, s in enumerate(res.shifts) for d in s)


def is_cohen_macaulay(I: GradedIdeal, res: Optional[GradedFreeResolution] = None) -> bool:
    """pd(R/I) == codim(I)."""
    res = res or minimal_free_resolution(I)
    return projective_dimension(res) == I.codim()


def check_shift_gaps(res) -> bool:
    """Gap condition ``D_m >= d_m + 1`` and the first-derivative identity
    ``d_r + d_{r-1} = sum(D_m - d_m) + 3d`` for a 3-generated height-2 ideal."""
    B = res.betti() if isinstance(res, GradedFreeResolution) else res
    if B.rank(0) != 1 or B.rank(1) != 3:
        raise InvalidInput("expected the resolution of R/I with I three-generated")
    gens = B.shifts(1)
    if len(set(gens)) != 1:
        raise InvalidInput("generators must share one degree")
    d = gens[0]
    mid = B.shifts(2)
    last = B.shifts(3)
    r = len(mid)
    if B.length > 3 or len(last) != max(r - 2, 0) or r < 2:
        raise InvalidInput(f"unexpected shape {B.describe()}")
    if any(D < dm + 1 for D, dm in zip(last, mid)):
        return False
    return mid[-1] + mid[-2] == sum(D - dm for D, dm in zip(last, mid)) + 3 * d


# virtual resolutions of non-saturated base ideals with beg(I^sat/I) >= d+1
VIRTUAL_RESOLUTIONS = {
    5: [((9,), (8, 8, 8))],
    6: [((11, 11), (10, 10, 10, 10)),
        ((11,), (10, 10, 9))],
    7: [((13, 13, 13), (12, 12, 12, 12, 12)),
        ((13, 13), (12, 12, 12, 11)),
        ((13,), (12, 11, 11)),
        ((12,), (11, 11, 11)),
        ((13,), (12, 12, 10))],
}


def virtual_table(d: int, last: Sequence[int], mid: Sequence[int]) -> BettiTable:
    return BettiTable.from_shifts([[0], [d] * 3, list(mid), list(last)])


def classify_virtual_resolution(res, d: int) -> Optional[int]:
    """1-based position of the resolution in the list for degree ``d`` or ``None``."""
    if d not in VIRTUAL_RESOLUTIONS:
        raise OutOfRange(f"classification only covers d in 5, 6, 7 (got {d})")
    B = res.betti() if isinstance(res, GradedFreeResolution) else res
    for k, (last, mid) in enumerate(VIRTUAL_RESOLUTIONS[d], start=1):
        if B == virtual_table(d, last, mid):
            return k
    return None


def derive_virtual_resolutions(d: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All shift patterns compatible with the numerical constraints for
    non-saturated ideals with beg(I^sat/I) >= d+1: descending ``d_i``, ``D_m``,
    gap ``D_m >= d_m + 1``, ``D_1 <= 2d - 1``, ``r <= d - 2``, the first-derivative
    identity, and vanishing of the numerator and its derivative at ``t=1``."""
    from itertools import combinations_with_replacement
    out = []
    for r in range(3, d - 1):
        for mid in combinations_with_replacement(range(2 * d - 2, d, -1), r):
            mid = tuple(sorted(mid, reverse=True))
            for last in combinations_with_replacement(range(2 * d - 1, d + 1, -1), r - 2):
                last = tuple(sorted(last, reverse=True))
                if any(D < m + 1 for D, m in zip(last, mid)):
                    continue
                if 3 * d - last[0] < d + 1:
                    continue
                if mid[-1] + mid[-2] != sum(D - m for D, m in zip(last, mid)) + 3 * d:
                    continue
                num = virtual_table(d, last, mid).numerator()
                if sum(num) != 0 or sum(i * c for i, c in enumerate(num)) != 0:
                    continue
                out.append((last, mid))
    return out
