"""Verification corpus: named entries, each a list of checks with their statements.

Entries are grouped; ``run_corpus`` takes group names or entry ids and returns
one :class:`AnalysisReport` per entry, ordered by id.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from .algebra import AlgebraError, FieldConfig
from .clusters import (HomaloidalType, PROPER, IMPROPER, enumerate_homaloidal_types,
                       hudson_test)
from .cremona import (Check, DEFAULT_DEPTH_CAP, NotCremona, PlaneRationalMap,
                      SIX_DOUBLE_FAT, analyze_base_ideal, base_ideal, compute_characteristic,
                      construct_from_fat_points, example_sextic, generic_quartic_determinantal,
                      inclusion_chain_check, is_birational, is_linear_type_by_content,
                      make_dejonquieres, power_saturation_profile, quartic_net,
                      quartic_square_test, quintic_3_2_2_2_1_1_1, symmetric_quintic,
                      sylvester_rees, _jsonable)
from .monomial import (classify_monomial_map, closure_witness_formula, dejonquieres_forms,
                       exponent_determinant, general_form, general_form_grid, monomial_in_ideal,
                       monomial_map, monomial_power, monomial_text, non_cremona_family)
from .resolution import (BettiTable, VIRTUAL_RESOLUTIONS, derive_virtual_resolutions)

SCHEMA = "1"


@dataclass
class Context:
    field: FieldConfig = field(default_factory=FieldConfig)
    seed: int = 42
    trials: int = 3
    depth_cap: int = DEFAULT_DEPTH_CAP


@dataclass
class AnalysisReport:
    entry: str
    group: str
    input: str
    field: str
    seed: int
    checks: List[Check] = field(default_factory=list)
    info: Dict[str, object] = field(default_factory=dict)
    error: Optional[str] = None
    elapsed: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        out = {"entry": self.entry, "group": self.group, "input": self.input,
               "field": self.field, "seed": self.seed, "passed": self.passed,
               "checks": [c.to_json() for c in self.checks],
               "info": {k: _jsonable(v) for k, v in sorted(self.info.items())},
               "error": self.error}
        if self.elapsed is not None:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def chk(name, expected, computed, anchor, passed=None) -> Check:
    return Check(name, expected, computed, expected == computed if passed is None else bool(passed),
                 anchor)


# ---------------------------------------------------------------------------
# entries

Entry = Callable[[Context, AnalysisReport], None]
REGISTRY: Dict[str, "tuple[str, str, Entry]"] = {}


def entry(eid: str, group: str, echo: str):
    def deco(fn: Entry) -> Entry:
        REGISTRY[eid] = (group, echo, fn)
        return fn
    return deco


def T(text: str) -> HomaloidalType:
    return HomaloidalType.parse(text)


ENUMERATION = {
    2: ["(2; 1,1,1)"],
    4: ["(4; 3,1^6)", "(4; 2,2,2,1,1,1)"],
    5: ["(5; 4,1^8)", "(5; 3,3,1^6)", "(5; 3,2,2,2,1,1,1)", "(5; 2^6)"],
}


def _enumeration_entry(d: int):
    @entry(f"enumeration-d{d}", "enumeration", f"enumerate {d}")
    def run(ctx, rep):
        got = [str(t) for t in enumerate_homaloidal_types(d)]
        want = [str(T(s)) for s in ENUMERATION[d]]
        rep.checks.append(chk("types", want, got, f"homaloidal types of degree {d}"))


for _d in ENUMERATION:
    _enumeration_entry(_d)


MINIMAL_TYPES = {2: "(2; 1,1,1)", 3: "(3; 2,1^4)", 4: "(4; 2,2,2,1,1,1)", 5: "(5; 2^6)"}


@entry("enumeration-minimal-multiplicity", "enumeration", "least largest multiplicity, d <= 5")
def _minimal_types(ctx, rep):
    for d, want in MINIMAL_TYPES.items():
        proper = [t for t in enumerate_homaloidal_types(d) if hudson_test(t) == PROPER]
        best = min(proper, key=lambda t: (t.mu[0], len(t.mu)))
        rep.checks.append(chk(f"d{d}", str(T(want)), str(best),
                              "proper type with the least largest multiplicity"))


HUDSON = {
    "(5; 3,3,1^6)": IMPROPER,
    "(7; 5,3,2,2,1^6)": IMPROPER,
    "(6; 4,2^4,1^3)": PROPER,
    "(7; 5,2^5,1^3)": PROPER,
    "(7; 4,3,3,2^3,1,1)": PROPER,
}


@entry("hudson-verdicts", "hudson", "; ".join(HUDSON))
def _hudson(ctx, rep):
    for text, want in HUDSON.items():
        t = T(text)
        rep.checks.append(chk(str(t), want, hudson_test(t), "Hudson test verdict"))


@entry("hudson-low-degree", "hudson", "all types of degree <= 5")
def _hudson_low(ctx, rep):
    improper = [str(t) for d in range(1, 6) for t in enumerate_homaloidal_types(d)
                if hudson_test(t) == IMPROPER]
    rep.checks.append(chk("improper_types", [str(T("(5; 3,3,1^6)"))], improper,
                          "only (5; 3,3,1^6) is improper in degree <= 5"))


def _betti_dj(d: int) -> BettiTable:
    return BettiTable.from_shifts([[0], [d] * 3, [2 * d - 1, d + 1]])


def _dejonquieres_entry(d: int):
    @entry(f"dejonquieres-d{d}", "dejonquieres", f"make_dejonquieres({d})")
    def run(ctx, rep):
        F = make_dejonquieres(d, seed=ctx.seed, field=ctx.field)
        rep.input = F.to_text()
        R = analyze_base_ideal(F, cremona=True, seed=ctx.seed)
        rep.checks.append(chk("resolution", _betti_dj(d).describe(), R.betti.describe(),
                              "0 → R(−(2d−1)) ⊕ R(−(d+1)) → R(−d)³ → R"))
        rep.checks.append(chk("multiplicity", d * (d - 1) + 1, R.e, "e(R/I) = d(d−1) + 1"))
        rep.checks.append(chk("saturated", True, R.saturated, "de Jonquières base ideals are saturated"))
        rep.checks.append(chk("linear_type", d == 2, is_linear_type_by_content(F),
                              "linear type exactly when d = 2"))
        rep.checks.append(chk("birational", True, is_birational(F, ctx.trials, ctx.seed),
                              "de Jonquières maps are Cremona maps"))
        ch = compute_characteristic(F, ctx.depth_cap, ctx.seed)
        want = HomaloidalType(d, (d - 1,) + (1,) * (2 * d - 2))
        rep.checks.append(chk("characteristic", str(want), str(ch.homaloidal_type),
                              "homaloidal type (d; d−1, 1^(2d−2))"))
        rep.checks.extend(c for c in R.checks)
        if d == 4:
            inc = inclusion_chain_check(F, ch.cluster, ctx.seed)
            rep.checks.append(chk("multiplicities_I_fat", [13, 12],
                                  [inc.links["e_I"], inc.links["e_fat"]],
                                  "general proper points: e(R/I) = 13 while the fat ideal has 12"))
            rep.checks.append(chk("I_in_sat_in_fat", [True, True],
                                  [inc.links["I_in_sat"], inc.links["sat_in_fat"]],
                                  "I ⊆ I^sat ⊆ fat ideal"))


for _d in range(2, 7):
    _dejonquieres_entry(_d)


def _rees_entry(d: int):
    @entry(f"rees-d{d}", "rees", f"sylvester_rees(make_dejonquieres({d}))")
    def run(ctx, rep):
        F = make_dejonquieres(d, seed=ctx.seed, field=ctx.field)
        rep.input = F.to_text()
        E = sylvester_rees(F)
        want = [(1, 1)] + [(d - k, k) for k in range(1, d)]
        rep.checks.append(chk("bidegrees", want, list(E.bidegrees),
                              "d generators of bidegrees (1,1), (d−1,1), …, (1,d−1)"))
        images = F.ring.gens() + list(F.coordinates)
        vanish = all(not g.substitute(images) for g in E.generators)
        rep.checks.append(chk("vanish", True, vanish,
                              "each generator vanishes at (t,u,v) = (f1,f2,f3)"))
        rep.checks.append(chk("jacobian_dual_rank", 2, E.jacobian_dual_rank,
                              "the Jacobian dual matrix has rank 2"))
        rep.info["equations"] = [str(g) for g in E.generators]


for _d in (3, 4, 5):
    _rees_entry(_d)


def _powers_entry(d: int):
    @entry(f"powers-d{d}", "powers", f"power_saturation_profile(make_dejonquieres({d}))")
    def run(ctx, rep):
        F = make_dejonquieres(d, seed=ctx.seed, field=ctx.field)
        rep.input = F.to_text()
        got = power_saturation_profile(F, d, ctx.seed)
        want = [(j, j < d) for j in range(1, d + 1)]
        rep.checks.append(chk("profile", want, got, "I^j saturated for j < d and I^d is not"))


for _d in (2, 3):
    _powers_entry(_d)


@entry("degree5-symmetric", "degree5", "quintics through six general double points")
def _sym(ctx, rep):
    C = symmetric_quintic(ctx.seed, ctx.field)
    F = C.map
    rep.input = F.to_text()
    rep.info["resamples"] = C.resamples
    R = analyze_base_ideal(F, cremona=True, seed=ctx.seed)
    want = BettiTable.from_shifts([[0], [5, 5, 5], [8, 8, 8], [9]])
    rep.checks.append(chk("resolution", want.describe(), R.betti.describe(),
                          "0 → R(−9) → R³(−8) → R³(−5) → R"))
    rep.checks.append(chk("multiplicity", 18, R.e, "e(R/I) = 18"))
    rep.checks.append(chk("cohen_macaulay", False, R.cohen_macaulay, "R/I is not Cohen–Macaulay"))
    rep.checks.append(chk("saturation_exponent", 1, R.st, "st(I) = 1"))
    rep.checks.append(chk("regularity", 6, R.reg, "reg(R/I) = 6"))
    rep.checks.append(chk("beg_plus_end", 12, (R.beg or 0) + (R.end or 0),
                          "beg + end of I^sat/I = 3d − 3 = 12"))
    rep.checks.append(chk("resamples", True, C.resamples <= 3, "at most 3 genericity resamples",
                          C.resamples <= 3))
    rep.checks.extend(R.checks)
    rep.checks.append(chk("birational", True, is_birational(F, ctx.trials, ctx.seed),
                          "quintics through six general double points give a Cremona map"))
    ch = compute_characteristic(F, ctx.depth_cap, ctx.seed)
    rep.checks.append(chk("characteristic", str(T("(5; 2^6)")), str(ch.homaloidal_type),
                          "homaloidal type (5; 2^6)"))
    inc = inclusion_chain_check(F, ch.cluster, ctx.seed)
    rep.checks.append(chk("sat_equals_fat", True, inc.links["sat_equals_fat"],
                          "I^sat equals the fat ideal, hence its integral closure"))


@entry("degree5-3222111", "degree5", "quintics with a triple, three double, three simple points")
def _q3(ctx, rep):
    C = quintic_3_2_2_2_1_1_1(ctx.seed, ctx.field)
    F = C.map
    rep.input = F.to_text()
    rep.info["resamples"] = C.resamples
    R = analyze_base_ideal(F, cremona=True, seed=ctx.seed)
    want = BettiTable.from_shifts([[0], [5, 5, 5], [8, 7]])
    rep.checks.append(chk("resolution", want.describe(), R.betti.describe(),
                          "0 → R(−8) ⊕ R(−7) → R³(−5) → R"))
    rep.checks.append(chk("multiplicity", 19, R.e, "e(R/I) = 19"))
    rep.checks.append(chk("saturated", True, R.saturated, "type (5; 3,2³,1³) has a saturated base ideal"))
    rep.checks.append(chk("fat_resolution", SIX_DOUBLE_FAT.describe(), C.fat_betti.describe(),
                          "fat ideal: 0 → R(−7)³ → R(−5)³ ⊕ R(−6) → R"))
    rep.checks.extend(R.checks)
    rep.checks.append(chk("birational", True, is_birational(F, ctx.trials, ctx.seed),
                          "the linear system defines a Cremona map"))
    ch = compute_characteristic(F, ctx.depth_cap, ctx.seed)
    rep.checks.append(chk("characteristic", str(T("(5; 3,2,2,2,1,1,1)")), str(ch.homaloidal_type),
                          "homaloidal type (5; 3,2³,1³)"))


@entry("degree5-dejonquieres", "degree5", "make_dejonquieres(5)")
def _q5dj(ctx, rep):
    F = make_dejonquieres(5, seed=ctx.seed, field=ctx.field)
    rep.input = F.to_text()
    R = analyze_base_ideal(F, cremona=True, seed=ctx.seed)
    want = BettiTable.from_shifts([[0], [5, 5, 5], [9, 6]])
    rep.checks.append(chk("resolution", want.describe(), R.betti.describe(),
                          "0 → R(−9) ⊕ R(−6) → R³(−5) → R"))
    rep.checks.append(chk("multiplicity", 21, R.e, "e(R/I) = 21"))
    rep.checks.append(chk("cohen_macaulay", True, R.cohen_macaulay, "R/I is Cohen–Macaulay"))
    rep.checks.extend(R.checks)


@entry("quartic-net", "quartic", "quartics through three double and three simple general points")
def _qnet(ctx, rep):
    C = quartic_net(ctx.seed, ctx.field)
    F = C.map
    rep.input = F.to_text()
    I = base_ideal(F)
    R = analyze_base_ideal(F, cremona=True, seed=ctx.seed)
    rep.checks.append(chk("equals_fat", True, I == C.fat, "I equals the fat ideal"))
    rep.checks.append(chk("multiplicity", 12, R.e, "e(R/I) = 12"))
    rep.checks.append(chk("saturated", True, R.saturated, "the base ideal is saturated"))
    rep.checks.append(chk("birational", True, is_birational(F, ctx.trials, ctx.seed),
                          "the quartic net defines a Cremona map"))
    rep.checks.append(chk("square_test", True, quartic_square_test(I),
                          "J² Cohen–Macaulay with relation degrees 1, 1, 2, 2, 2"))
    rep.checks.extend(R.checks)


@entry("quartic-determinantal", "quartic", "maximal minors of a random 3x2 matrix of quadrics")
def _qdet(ctx, rep):
    J = generic_quartic_determinantal(ctx.seed, ctx.field)
    rep.input = " : ".join(str(g) for g in J.generators)
    rep.checks.append(chk("square_test", False, quartic_square_test(J),
                          "a generic such J has a square that is not Cohen–Macaulay"))
    F = PlaneRationalMap(list(J.generators), J.ring)
    rep.checks.append(chk("birational", False, is_birational(F, ctx.trials, ctx.seed),
                          "the generic quartic net is not a Cremona map"))


@entry("monomial-grid", "monomial", "(x^d, x^(d-a-b) y^a z^b, y^(d-c) z^c), d <= 8")
def _mgrid(ctx, rep):
    grid = general_form_grid(8)
    bad = [g for g in grid if abs(exponent_determinant(general_form(*g))) != g[0]]
    rep.checks.append(chk("determinant", [], bad, "|det| = d whenever ac − b(d−c) = ±1"))
    forms = [classify_monomial_map(general_form(*g)).form for g in grid]
    rep.checks.append(chk("normal_form", True, all(f in ("general", "monoid", "quadratic")
                                                      for f in forms),
                          "every grid entry matches a normal form", all(f in (
                              "general", "monoid", "quadratic") for f in forms)))
    sample = [g for g in grid if g[0] <= 5]
    fib = [g for g in sample
           if not is_birational(monomial_map(general_form(*g), ctx.field), ctx.trials, ctx.seed)]
    rep.checks.append(chk("birational_d_le_5", [], fib, "grid entries are Cremona maps"))
    rep.info["grid_size"] = len(grid)


@entry("monomial-dejonquieres", "monomial", "de Jonquières monomial forms, d <= 8")
def _mdj(ctx, rep):
    for d in range(2, 9):
        reps = [classify_monomial_map(E) for E in dejonquieres_forms(d)]
        rep.checks.append(chk(f"d{d}", [True] * len(reps), [r.dejonquieres for r in reps],
                              "(xy,xz,yz), (x^d,x^(d−1)y,y^(d−1)z), (x^d,xyz^(d−2),yz^(d−1))"))
    nondj = classify_monomial_map(general_form(5, 2, 1, 2))
    rep.checks.append(chk("non_dejonquieres", False, nondj.dejonquieres,
                          "(x^5, x^2y^2z, y^3z^2) is Cremona but not de Jonquières"))


CLOSED = {((1, 1, 0), (1, 0, 1), (0, 1, 1)), ((2, 0, 0), (1, 1, 0), (0, 1, 1)),
          ((3, 0, 0), (2, 1, 0), (0, 2, 1)), ((3, 0, 0), (1, 1, 1), (0, 1, 2))}


@entry("monomial-closure", "monomial", "integral closure of de Jonquières monomial ideals, d <= 6")
def _mclosure(ctx, rep):
    for d in range(2, 7):
        for E in dejonquieres_forms(d):
            r = classify_monomial_map(E)
            want = tuple(E) in CLOSED
            rep.checks.append(chk(f"closed:{_mono_text(E)}", want, r.integrally_closed,
                                  "integrally closed exactly for the four listed ideals"))
    for d in (4, 5):
        for kind, E in (("monoid", dejonquieres_forms(d)[0]), ("general", dejonquieres_forms(d)[1])):
            u = closure_witness_formula(kind, d)
            ok = not monomial_in_ideal(u, E) and monomial_in_ideal(
                tuple(2 * a for a in u), monomial_power(E, 2))
            rep.checks.append(chk(f"witness:{kind}:d{d}", True, ok,
                                  f"u = {_mono_text([u])} satisfies u ∉ I and u² ∈ I²"))


def _mono_text(E) -> str:
    return ",".join(monomial_text(e) for e in E)


@entry("monomial-non-cremona", "monomial", "(x^d y^d, x^d z^d, y^d z^d), d = 2, 3, 4")
def _mnon(ctx, rep):
    for d in (2, 3, 4):
        try:
            classify_monomial_map(non_cremona_family(d))
            verdict = "Cremona"
        except NotCremona:
            verdict = "not Cremona"
        rep.checks.append(chk(f"d{d}", "not Cremona", verdict,
                              "(x^d y^d, x^d z^d, y^d z^d) is not a Cremona base ideal"))
    F = monomial_map(non_cremona_family(2), ctx.field)
    rep.checks.append(chk("birational_d2", False, is_birational(F, ctx.trials, ctx.seed),
                          "the generic fiber has more than one point"))


@entry("sextic", "sextic", "(x^3 - yz(y+x))(x^2 - yz)(y+x) : (x^2 - yz)x^2(x+y)^2 : x^3(x^3 - yz(x+y))")
def _sextic(ctx, rep):
    F = example_sextic(ctx.field)
    rep.checks.append(chk("birational", True, is_birational(F, ctx.trials, ctx.seed),
                          "the sextic is a Cremona map"))
    ch = compute_characteristic(F, ctx.depth_cap, ctx.seed)
    rep.checks.append(chk("characteristic", str(T("(6; 4,2^4,1^3)")), str(ch.homaloidal_type),
                          "homaloidal type (6; 4,2⁴,1³)"))
    R = analyze_base_ideal(F, cremona=True, seed=ctx.seed)
    rep.checks.append(chk("saturated", True, R.saturated,
                          "non-simple map of the non-saturated type with a saturated base ideal"))
    rep.info["resolution"] = R.betti.describe()
    rep.info["multiplicity"] = R.e


@entry("low-degree-quadratic", "low-degree", "conics through three general points")
def _lowq(ctx, rep):
    C = construct_from_fat_points([1, 1, 1], 2, None, ctx.seed, ctx.field)
    _low_degree_checks(ctx, rep, C.map, "(2; 1,1,1)")


@entry("low-degree-cubic", "low-degree", "cubics with a double and four simple general points")
def _lowc(ctx, rep):
    C = construct_from_fat_points([2, 1, 1, 1, 1], 3, None, ctx.seed, ctx.field)
    _low_degree_checks(ctx, rep, C.map, "(3; 2,1^4)")


def _low_degree_checks(ctx, rep, F, want):
    rep.input = F.to_text()
    rep.checks.append(chk("birational", True, is_birational(F, ctx.trials, ctx.seed),
                          "the linear system defines a Cremona map"))
    ch = compute_characteristic(F, ctx.depth_cap, ctx.seed)
    t = ch.homaloidal_type
    rep.checks.append(chk("characteristic", str(T(want)), str(t), "homaloidal type"))
    dj = t.mu == (t.d - 1,) + (1,) * (2 * t.d - 2)
    rep.checks.append(chk("dejonquieres", True, dj, "Cremona maps of degree at most 3 are de Jonquières"))
    R = analyze_base_ideal(F, cremona=True, seed=ctx.seed)
    rep.checks.append(chk("saturated", True, R.saturated, "degree at most 4: saturated"))
    inc = inclusion_chain_check(F, ch.cluster, ctx.seed)
    rep.checks.append(chk("degree_d_equal", True, inc.links["degree_d_equal"], "I_d = (I^sat)_d"))


SIMPLE_TYPES = {
    "simple-6-4222211": ([4, 2, 2, 2, 2, 1, 1, 1], 6),
    "simple-7-522222111": ([5, 2, 2, 2, 2, 2, 1, 1, 1], 7),
    "simple-7-43322211": ([4, 3, 3, 2, 2, 2, 1, 1], 7),
}


def _simple_entry(eid, mu, d):
    @entry(eid, "simple", f"degree-{d} forms through general points with multiplicities {mu}")
    def run(ctx, rep):
        C = construct_from_fat_points(mu, d, None, ctx.seed, ctx.field)
        F = C.map
        rep.input = F.to_text()
        t = HomaloidalType(d, tuple(mu))
        rep.checks.append(chk("hudson", PROPER, hudson_test(t), "the type is proper"))
        rep.checks.append(chk("birational", True, is_birational(F, ctx.trials, ctx.seed),
                              "the linear system defines a Cremona map"))
        ch = compute_characteristic(F, ctx.depth_cap, ctx.seed)
        rep.checks.append(chk("characteristic", str(t), str(ch.homaloidal_type),
                              "homaloidal type of the linear system"))
        rep.checks.append(chk("equations_of_condition", True, ch.satisfies_equations_of_condition(),
                              "Σμ = 3d − 3 and Σμ² = d² − 1"))
        R = analyze_base_ideal(F, cremona=True, seed=ctx.seed)
        rep.checks.extend(R.checks)
        rep.info["saturated"] = R.saturated
        rep.info["resolution"] = R.betti.describe()
        rep.info["multiplicity"] = R.e
        inc = inclusion_chain_check(F, ch.cluster, ctx.seed)
        rep.checks.append(chk("degree_d_equal", True, inc.links["degree_d_equal"], "I_d = (I^sat)_d"))
        rep.checks.append(chk("sat_in_fat", True, inc.links["sat_in_fat"], "I^sat ⊆ fat ideal"))


for _eid, (_mu, _d) in SIMPLE_TYPES.items():
    _simple_entry(_eid, _mu, _d)


@entry("virtual-resolutions", "virtual", "numerical resolution shapes for d = 5, 6, 7")
def _virtual(ctx, rep):
    for d in (5, 6, 7):
        got = sorted(derive_virtual_resolutions(d))
        want = sorted(VIRTUAL_RESOLUTIONS[d])
        rep.checks.append(chk(f"d{d}", want, got,
                              "resolutions of non-saturated Cremona base ideals in degree d"))


@entry("fat-six-double", "fat", "six general double points")
def _fat6(ctx, rep):
    C = symmetric_quintic(ctx.seed, ctx.field)
    rep.checks.append(chk("resolution", SIX_DOUBLE_FAT.describe(), C.fat_betti.describe(),
                          "0 → R(−7)³ → R(−5)³ ⊕ R(−6) → R"))
    rep.checks.append(chk("multiplicity", 18, C.fat.dim_and_degree()[1], "Σ μ(μ+1)/2 = 18"))


# ---------------------------------------------------------------------------
# driver


def groups() -> List[str]:
    return sorted({g for g, _, _ in REGISTRY.values()})


def resolve_selection(selection: Sequence[str] = ()) -> List[str]:
    """Entry ids for a list of group names and/or entry ids; empty means all."""
    sel = [s for s in selection if s and s != "all"]
    if not sel:
        return sorted(REGISTRY)
    ids = set()
    for s in sel:
        hits = [e for e, (g, _, _) in REGISTRY.items() if g == s or e == s]
        if not hits:
            raise KeyError(f"unknown corpus selection {s!r}; groups: {', '.join(groups())}")
        ids.update(hits)
    return sorted(ids)


def run_entry(eid: str, ctx: Context, timings: bool = False) -> AnalysisReport:
    group, echo, fn = REGISTRY[eid]
    rep = AnalysisReport(eid, group, echo, str(ctx.field), ctx.seed)
    t0 = time.perf_counter()
    try:
        fn(ctx, rep)
    except AlgebraError as exc:
        rep.error = f"{type(exc).__name__}: {exc}"
    if timings:
        rep.elapsed = time.perf_counter() - t0
    return rep


def _run_star(args):
    return run_entry(*args)


def run_corpus(selection: Sequence[str] = (), ctx: Optional[Context] = None,
               timings: bool = False, jobs: int = 1) -> List[AnalysisReport]:
    """Run the selected entries; failures are recorded in the reports, not raised."""
    ctx = ctx or Context()
    ids = resolve_selection(selection)
    if jobs > 1 and len(ids) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as pool:
            reports = list(pool.map(_run_star, [(e, ctx, timings) for e in ids]))
    else:
        reports = [run_entry(e, ctx, timings) for e in ids]
    return sorted(reports, key=lambda r: r.entry)


def summary(reports: Sequence[AnalysisReport]) -> dict:
    checks = [c for r in reports for c in r.checks]
    return {"entries": len(reports), "entries_passed": sum(r.passed for r in reports),
            "checks": len(checks), "checks_passed": sum(c.passed for c in checks),
            "errors": sum(r.error is not None for r in reports)}
