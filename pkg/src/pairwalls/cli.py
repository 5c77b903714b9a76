"""Command-line front end: ``pairwalls <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cohom import CohomError
from .numclass import ClassError, NumClass, parse_chern, parse_class, twist
from .ratpoly import parse_poly
from .report import PRESETS, SCHEMA, InvariantError, build_report, find_preset, render, render_walls_table, row_key
from .spectrum import h0_lower_bound
from .stability import PairClass, StabilityError, compare, critical_value, parse_sub, reduced_poly
from .subscheme import CurveDescription, SchemeError, classify_stratum
from .walls import FamilyContext, WallError, check_invariants, classify_transition, enumerate_walls, zero_dim_family

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("class selection")
    g.add_argument("--class", dest="cls", metavar="CH", help="Chern character, e.g. 2,0,-2,1 or 2,-1,-1/2,5/6")
    g.add_argument("--chern", metavar="R:C1,C2,C3", help="rank and Chern classes, e.g. 2:0,2,2")
    g.add_argument("--preset", choices=sorted(PRESETS), help="one of the built-in example classes")
    g.add_argument("--twist", type=int, default=None, help="twist k (default 1, or the preset twist)")
    p.add_argument("--format", choices=("table", "json", "dot"), default="table")
    p.add_argument("--max-group", type=int, default=None, help="largest wall group to search (default k)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for enumeration")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="pairwalls",
        description="Walls, chambers and strata for rank-2 coherent pairs on P^3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("walls", parents=[common], help="list all walls")
    sub.add_parser("chambers", parents=[common], help="full chamber report")
    sp = sub.add_parser("spectrum", parents=[common], help="spectra and the h^0 bound (c1 = 0)")
    sp.add_argument("--all-spectra", action="store_true", help="drop the requirement that the smallest entry is <= -1")
    st = sub.add_parser("stability", parents=[common], help="compare a rank-1 sub-pair at a given delta")
    st.add_argument("--delta", required=True, help='stability parameter, e.g. "t+1"')
    st.add_argument("--sub", required=True, metavar="ideal:d,chi,twist,section")
    sr = sub.add_parser("strata", parents=[common], help="strata of the zero-dimensional family")
    sr.add_argument("--curve", help='classify a curve given as JSON {"planar": {"d":..,"chi":..}, ...}')
    return parser


def resolve_class(args) -> tuple[NumClass, int]:
    given = [x for x in (args.cls, args.chern, args.preset) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --class, --chern, --preset")
    k = args.twist
    if args.preset:
        preset = PRESETS[args.preset]
        return preset.cls, preset.twist if k is None else k
    v = parse_class(args.cls) if args.cls else parse_chern(args.chern)
    return v, 1 if k is None else k


def _dump(obj) -> str:
    return json.dumps(dict({"schema": SCHEMA}, **obj), indent=2) + "\n"


def _use_color(stream) -> bool:
    return not os.environ.get("PAIRWALLS_NO_COLOR") and hasattr(stream, "isatty") and stream.isatty()


def cmd_walls(args, v, k, out) -> None:
    walls = enumerate_walls(v, k, args.max_group, args.jobs)
    problems = check_invariants(v, k, walls)
    if problems:
        raise InvariantError("; ".join(problems))
    ctx = FamilyContext.of(v, k)
    transitions = [classify_transition(w, ctx) for w in walls]
    if args.format == "json":
        rows = [dict(w.to_json(), transition=t.to_json()) for w, t in zip(walls, transitions)]
        out.write(_dump({"class": v.to_json(), "twist": k, "walls": rows}))
    elif args.format == "table":
        preset = find_preset(v, k)
        chart = set(preset.chart) if preset else set()
        golden = [row_key(w) in chart for w in walls]
        out.write(render_walls_table(walls, transitions, golden, _use_color(out)) + "\n")
    else:
        out.write(render(build_report(v, k, args.max_group, args.jobs), "dot"))


def cmd_chambers(args, v, k, out) -> None:
    report = build_report(v, k, args.max_group, args.jobs)
    out.write(render(report, args.format, _use_color(out)))


def cmd_spectrum(args, v, k, out) -> None:
    res = h0_lower_bound(v, k, require_negative=not args.all_spectra)
    if args.format == "json":
        out.write(_dump(res.to_json()))
        return
    for sp, h2 in zip(res.spectra, res.h2):
        out.write(f"{sp.ks}  s={sp.s}  h2(E({k}))={h2}\n")
    out.write(f"h0 bound {res.bound}  proven positive: {res.proven_positive}\n")


def cmd_stability(args, v, k, out) -> None:
    try:
        delta = parse_poly(args.delta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sub = parse_sub(args.sub)
    whole = PairClass(twist(v, k), True)
    verdict = compare(sub, whole, delta)
    crit = critical_value(sub, whole)
    payload = {
        "class": v.to_json(),
        "twist": k,
        "delta": str(delta),
        "destabilizes": verdict.destabilizes,
        "strictly": verdict.strictly,
        "reduced_sub": str(reduced_poly(sub, delta)),
        "reduced_whole": str(reduced_poly(whole, delta)),
        "critical_value": None if crit is None else str(crit),
    }
    if args.format == "json":
        out.write(_dump(payload))
    else:
        for key, val in payload.items():
            out.write(f"{key}: {val}\n")


def cmd_strata(args, v, k, out) -> None:
    report = build_report(v, k, args.max_group, args.jobs)
    payload = {"class": v.to_json(), "twist": k, "l": report.family_l, "strata": [s.to_json() for s in report.strata]}
    if args.curve:
        try:
            y = CurveDescription.from_json(json.loads(args.curve))
        except json.JSONDecodeError as exc:
            raise UsageError(f"--curve is not valid JSON: {exc}") from None
        if report.family_l is None:
            zero_dim_family(v, k)  # raises with a reason
        payload["label"] = str(classify_stratum(y, report.family_l, report.curve_poly))
    if args.format == "json":
        out.write(_dump(payload))
        return
    out.write(f"l = {payload['l']}\n")
    for s in report.strata:
        out.write(f"Z_{s.index}: {s.curve.off_plane_points} off plane  dim {s.dim}  fiber {s.fiber_dim}\n")
    if "label" in payload:
        out.write(f"curve: {payload['label']}\n")


COMMANDS = {
    "walls": cmd_walls,
    "chambers": cmd_chambers,
    "spectrum": cmd_spectrum,
    "stability": cmd_stability,
    "strata": cmd_strata,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        v, k = resolve_class(args)
        COMMANDS[args.command](args, v, k, out)
    except InvariantError as exc:
        print(f"pairwalls: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UsageError, ClassError, SchemeError, StabilityError, WallError, CohomError, ValueError) as exc:
        print(f"pairwalls: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
