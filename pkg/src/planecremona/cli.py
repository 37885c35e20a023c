"""Command-line front end: ``planecremona <subcommand> [options]``.

Exit codes: 0 on success, 1 when a check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import List, Optional

from .algebra import AlgebraError, FieldConfig, PolySyntaxError, PolyRing
from .clusters import (HomaloidalType, InvalidCluster, InvalidInput, InvalidType, OutOfRange,
                       WeightedCluster, enumerate_homaloidal_types, fat_ideal, hudson_test,
                       parse_multiplicities, check_equations_of_condition)
from .cremona import (DEFAULT_DEPTH_CAP, PlaneRationalMap, analyze_base_ideal, base_ideal,
                      compute_characteristic, fiber_degree, is_birational, make_dejonquieres,
                      random_points, sylvester_rees, _jsonable)
from .corpus import SCHEMA, Context, groups, run_corpus, summary
from .monomial import classify_monomial_map, monomial_text
from .resolution import minimal_free_resolution

USAGE_ERRORS = (PolySyntaxError, InvalidInput, InvalidType, InvalidCluster, OutOfRange, ValueError,
                KeyError)


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, suppress: bool = False):
    def dflt(v):
        return argparse.SUPPRESS if suppress else v
    p.add_argument("--field", default=dflt("32003"), help="prime p or Q (default 32003)")
    p.add_argument("--seed", type=int, default=dflt(42), help="random seed (default 42)")
    p.add_argument("--json", action="store_true", default=dflt(False), help="print a JSON report")
    p.add_argument("--trials", type=int, default=dflt(3), help="random fibers for birationality")
    p.add_argument("--depth-cap", type=int, default=dflt(DEFAULT_DEPTH_CAP),
                   help="limit for infinitely near points")


def build_parser() -> argparse.ArgumentParser:
    # flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    _common(common, suppress=True)
    ap = argparse.ArgumentParser(prog="planecremona",
                                 description="Analysis of plane Cremona maps through their base ideals.")
    _common(ap)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full analysis of a map")
    p.add_argument("map", help="'f1 : f2 : f3', a file path, or - for stdin")
    p.add_argument("--no-characteristic", action="store_true", help="skip base point extraction")

    p = sub.add_parser("enumerate", parents=[common], help="homaloidal types of degree d")
    p.add_argument("d", type=int)

    p = sub.add_parser("hudson", parents=[common], help="Hudson test of a homaloidal type")
    p.add_argument("d", type=int)
    p.add_argument("multiplicities", help="e.g. 3,3,1,1,1,1,1,1 or 3,3,1^6")

    p = sub.add_parser("dejonquieres", parents=[common], help="random de Jonquières map")
    p.add_argument("d", type=int)

    p = sub.add_parser("rees", parents=[common], help="Rees equations by Sylvester forms")
    p.add_argument("d", type=int, nargs="?", help="degree of a random de Jonquières map")
    p.add_argument("--map", dest="map_text", help="use this de Jonquières map instead")

    p = sub.add_parser("monomial", parents=[common], help="classify a monomial map")
    p.add_argument("map")

    p = sub.add_parser("fiber-degree", parents=[common], help="generic fiber degrees")
    p.add_argument("map")

    p = sub.add_parser("corpus", parents=[common], help="run the verification corpus")
    p.add_argument("selection", nargs="*", help="groups or entry ids")
    p.add_argument("--all", action="store_true", help="run every entry (the default)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--timings", action="store_true", help="record elapsed time per entry")
    p.add_argument("--list", action="store_true", help="list groups and exit")

    p = sub.add_parser("fat", parents=[common], help="fat point ideal")
    p.add_argument("cluster", nargs="?", help="cluster file (proper nodes are used)")
    p.add_argument("--points", help="points 'a:b:c;...'")
    p.add_argument("--mu", help="multiplicities, e.g. 2,2,2 or 2^6")
    p.add_argument("--random", action="store_true", help="random points for the multiplicities")
    p.add_argument("--degree", type=int, help="also report the dimension of this degree piece")
    return ap


# ---------------------------------------------------------------------------
# helpers


def _field(text: str) -> FieldConfig:
    try:
        return FieldConfig.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad --field {text!r}: {exc}")


def _read_map(text: str, K: FieldConfig) -> PlaneRationalMap:
    if text == "-":
        text = sys.stdin.read()
    elif os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    return PlaneRationalMap.parse(text, K)


def _header(args, K: FieldConfig) -> dict:
    return {"schema": SCHEMA, "command": args.command, "field": str(K), "seed": args.seed}


def _emit(args, payload: dict, lines: List[str]):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))


def _map_lines(F: PlaneRationalMap) -> List[str]:
    return [f"  f{i + 1} = {c}" for i, c in enumerate(F.coordinates)]


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args, K) -> int:
    F = _read_map(args.map, K)
    out = _header(args, K)
    out["input"] = F.to_text()
    lines = [f"field {K}, seed {args.seed}", f"map of degree {F.d}:"] + _map_lines(F)
    if F.has_fixed_part():
        g = F.common_factor()
        lines.append(f"common factor {g} removed")
        out["fixed_part"] = str(g)
        F = F.normalized()
    bir = is_birational(F, args.trials, args.seed)
    out["birational"] = bir
    lines.append(f"birational: {bir}")
    if not args.no_characteristic:
        try:
            ch = compute_characteristic(F, args.depth_cap, args.seed)
            out["characteristic"] = str(ch.homaloidal_type)
            out["cluster"] = ch.cluster.to_text()
            out["equations_of_condition"] = ch.satisfies_equations_of_condition()
            out["flags"] = ch.flags
            lines.append(f"characteristic: {ch.homaloidal_type}")
            if ch.cluster.nodes:
                lines.append("cluster:")
                lines.extend("  " + ln for ln in ch.cluster.to_text().splitlines())
            lines.extend(f"note: {f}" for f in ch.flags)
        except AlgebraError as exc:
            out["characteristic"] = None
            out["characteristic_error"] = f"{type(exc).__name__}: {exc}"
            lines.append(f"characteristic: not computed ({type(exc).__name__}: {exc})")
    if base_ideal(F).codim() == 3:
        out["base_ideal"] = {"codim": 3}
        out["passed"] = True
        lines.append("base ideal of codimension 3: no base points")
        _emit(args, out, lines)
        return 0
    R = analyze_base_ideal(F, cremona=bir, seed=args.seed)
    out["base_ideal"] = R.to_json()
    lines += [f"resolution: {R.betti.describe()}",
              f"saturated: {R.saturated}  st(I) = {R.st}  e(R/I) = {R.e}  reg(R/I) = {R.reg}"
              f"  Cohen-Macaulay: {R.cohen_macaulay}"]
    if not R.saturated:
        lines.append(f"beg(I^sat/I) = {R.beg}  end(I^sat/I) = {R.end}")
    lines.append("checks:")
    lines.extend(_check_line(c) for c in R.checks)
    out["passed"] = R.all_passed
    _emit(args, out, lines)
    return 0 if R.all_passed else 1


def _check_line(c) -> str:
    mark = "pass" if c.passed else "FAIL"
    return f"  [{mark}] {c.name}: computed {_jsonable(c.computed)}, expected {_jsonable(c.expected)}  ({c.anchor})"


def cmd_enumerate(args, K) -> int:
    types = enumerate_homaloidal_types(args.d)
    out = _header(args, K)
    out.update({"d": args.d, "types": [str(t) for t in types],
                "verdicts": [hudson_test(t) for t in types]})
    lines = [f"{len(types)} homaloidal type(s) of degree {args.d}:"]
    lines += [f"  {t}  {hudson_test(t)}" for t in types]
    _emit(args, out, lines)
    return 0


def cmd_hudson(args, K) -> int:
    t = HomaloidalType(args.d, parse_multiplicities(args.multiplicities))
    if not check_equations_of_condition(t):
        raise InvalidType(f"{t} fails the equations of condition")
    verdict = hudson_test(t)
    out = _header(args, K)
    out.update({"type": str(t), "verdict": verdict})
    _emit(args, out, [verdict])
    return 0


def cmd_dejonquieres(args, K) -> int:
    F = make_dejonquieres(args.d, seed=args.seed, field=K)
    R = analyze_base_ideal(F, cremona=True, seed=args.seed)
    out = _header(args, K)
    out.update({"d": args.d, "map": F.to_text(), "resolution": R.betti.describe(),
                "e": R.e, "saturated": R.saturated, "passed": R.all_passed})
    lines = [f"de Jonquières map of degree {args.d}:"] + _map_lines(F)
    lines += [f"resolution: {R.betti.describe()}", f"e(R/I) = {R.e}, saturated: {R.saturated}"]
    _emit(args, out, lines)
    return 0 if R.all_passed else 1


def cmd_rees(args, K) -> int:
    if args.map_text:
        F = _read_map(args.map_text, K)
    elif args.d is not None:
        F = make_dejonquieres(args.d, seed=args.seed, field=K)
    else:
        raise UsageError("give a degree or --map")
    E = sylvester_rees(F)
    out = _header(args, K)
    out.update({"map": F.to_text(), "equations": [str(g) for g in E.generators],
                "bidegrees": [list(b) for b in E.bidegrees],
                "jacobian_dual_rank": E.jacobian_dual_rank})
    lines = ["map:"] + _map_lines(F) + [f"{len(E)} Rees equations:"]
    lines += [f"  {b}: {g}" for b, g in zip(E.bidegrees, E.generators)]
    _emit(args, out, lines)
    return 0


def cmd_monomial(args, K) -> int:
    F = _read_map(args.map, K)
    r = classify_monomial_map(F)
    out = _header(args, K)
    out.update(r.to_json())
    lines = [f"Cremona: yes (exponent determinant {r.det})",
             f"normal form: {r.form} {r.params}",
             f"de Jonquières: {'yes' if r.dejonquieres else 'no'}",
             f"integrally closed: {'yes' if r.integrally_closed else 'no'}"]
    if r.witnesses:
        lines.append("closure generators outside I: " + ", ".join(monomial_text(w) for w in r.witnesses))
    _emit(args, out, lines)
    return 0


def cmd_fiber_degree(args, K) -> int:
    F = _read_map(args.map, K)
    if F.has_fixed_part():
        F = F.normalized()
    degs = [fiber_degree(F, seed=args.seed * 1000 + t) for t in range(args.trials)]
    bir = all(d == 1 for d in degs)
    out = _header(args, K)
    out.update({"map": F.to_text(), "fiber_degrees": [_jsonable(d) for d in degs],
                "birational": bir})
    _emit(args, out, [f"fiber degrees: {', '.join(str(d) for d in degs)}", f"birational: {bir}"])
    return 0


def cmd_corpus(args, K) -> int:
    if args.list:
        print("\n".join(groups()))
        return 0
    ctx = Context(K, args.seed, args.trials, args.depth_cap)
    sel = [] if args.all else args.selection
    reports = run_corpus(sel, ctx, timings=args.timings, jobs=args.jobs)
    summ = summary(reports)
    ok = all(r.passed for r in reports)
    out = _header(args, K)
    out.update({"summary": summ, "reports": [r.to_json() for r in reports], "passed": ok})
    lines = []
    for r in reports:
        t = f"  {r.elapsed:.2f}s" if r.elapsed is not None else ""
        n = sum(c.passed for c in r.checks)
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.entry:34s} {n}/{len(r.checks)} checks{t}")
        if r.error:
            lines.append(f"      error: {r.error}")
        lines.extend("    " + _check_line(c) for c in r.checks if not c.passed)
    lines.append(f"{summ['entries_passed']}/{summ['entries']} entries, "
                 f"{summ['checks_passed']}/{summ['checks']} checks passed "
                 f"(field {K}, seed {args.seed})")
    _emit(args, out, lines)
    return 0 if ok else 1


def cmd_fat(args, K) -> int:
    ring = PolyRing(("x", "y", "z"), K)
    if args.cluster:
        with open(args.cluster) as fh:
            c = WeightedCluster.from_text(fh.read(), K)
        pts = [n.point for n in c.proper_nodes()]
        mu = [n.mu for n in c.proper_nodes()]
    else:
        if not args.mu:
            raise UsageError("give a cluster file or --mu with --points or --random")
        mu = list(parse_multiplicities(args.mu))
        if args.random:
            pts = random_points(len(mu), random.Random(args.seed), K)
        elif args.points:
            from fractions import Fraction
            pts = [tuple(K(Fraction(x)) for x in p.split(":")) for p in args.points.split(";")]
        else:
            raise UsageError("give --points or --random")
    J = fat_ideal(pts, mu, ring)
    B = minimal_free_resolution(J).betti()
    dim, e = J.dim_and_degree()
    out = _header(args, K)
    out.update({"points": [[_jsonable(K.to_int_repr(x)) for x in p] for p in pts], "mu": mu,
                "generators": [str(g) for g in J.generators], "resolution": B.describe(), "e": e})
    lines = [f"fat ideal of {len(pts)} point(s), multiplicities {mu}",
             f"resolution: {B.describe()}", f"e = {e}", "generators:"]
    lines += [f"  {g}" for g in J.generators]
    if args.degree is not None:
        k = len(J.degree_slice(args.degree))
        out["degree_piece"] = {"degree": args.degree, "dimension": k}
        lines.append(f"dimension in degree {args.degree}: {k}")
    _emit(args, out, lines)
    return 0


COMMANDS = {"analyze": cmd_analyze, "enumerate": cmd_enumerate, "hudson": cmd_hudson,
            "dejonquieres": cmd_dejonquieres, "rees": cmd_rees, "monomial": cmd_monomial,
            "fiber-degree": cmd_fiber_degree, "corpus": cmd_corpus, "fat": cmd_fat}


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        K = _field(args.field)
        return COMMANDS[args.command](args, K)
    except (UsageError, *USAGE_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
