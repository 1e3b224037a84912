"""Command-line front end.

Exit codes: 0 all checks hold, 1 a theorem check failed, 2 usage or input
error, 3 some check was skipped for budget reasons (and none failed).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from multiprocessing import Pool

from . import hexcore
from .altcycles import DEFAULT_CYCLE_CAP, CycleCapExceeded, alternating_hexagons
from .forcing import InvariantReport
from .hexcore import HexSystem, InvalidSystemError
from .matchings import enumerate_matchings, has_perfect_matching
from .theorems import FAILS, HYPOTHESIS_NOT_MET, SKIPPED, THEOREM_IDS, Verdict, format_summary, \
    instance_id, summarize, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SKIP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _theorems(text: str) -> list[str]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in names if t not in THEOREM_IDS]
    if bad or not names:
        raise argparse.ArgumentTypeError(
            f"unknown theorem id(s) {bad}; choose from {', '.join(THEOREM_IDS)}")
    return names


def _load(path: str) -> HexSystem:
    if path == "-":
        return hexcore.loads(sys.stdin.read(), name="stdin")
    try:
        return hexcore.load(path, name=os.path.splitext(os.path.basename(path))[0])
    except OSError as exc:
        raise UsageError(str(exc)) from exc


# --------------------------------------------------------------------------
# gen
# --------------------------------------------------------------------------

def cmd_gen(args) -> int:
    fam, params = args.family, args.params
    if fam == "census":
        if len(params) != 1:
            raise UsageError("census takes one parameter: the maximum hexagon count")
        limit = int(params[0])
        outdir = args.out or "census"
        os.makedirs(outdir, exist_ok=True)
        count = 0
        for H in hexcore.enumerate_all_systems(limit, budget=args.budget):
            if args.matchable and not has_perfect_matching(H):
                continue
            count += 1
            hexcore.dump(H, os.path.join(outdir, f"h{H.num_hexagons}_{count:05d}.json"))
        print(f"wrote {count} systems to {outdir}", file=sys.stderr)
        return EXIT_OK
    try:
        if fam == "tp":
            rows = [int(x) for p in params for x in p.split(",") if x]
            H = hexcore.gen_truncated_parallelogram(*rows)
        elif fam == "linear":
            H = hexcore.gen_linear_chain(int(params[0]))
        elif fam == "named":
            H = hexcore.gen_named(params[0])
        elif fam == "rn":
            H = hexcore.gen_Rn(int(params[0]))
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(f"unknown family {fam}")
    except (IndexError, ValueError) as exc:
        raise UsageError(f"bad parameters for {fam}: {exc}") from exc
    text = H.to_json() + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --------------------------------------------------------------------------
# invariants
# --------------------------------------------------------------------------

def cmd_invariants(args) -> int:
    H = _load(args.input)
    try:
        rep = InvariantReport.of(H, args.cycle_cap)
        if args.format == "table":
            print(rep.to_table())
        elif args.format == "dot":
            sys.stdout.write(export_dot(H))
        else:
            doc = rep.to_dict(include_matchings=args.matchings)
            if args.cycles:
                for row, a in zip(doc["rows"], rep.analyses):
                    row["cycles"] = [c.to_dict() for c in a.cycles]
            print(json.dumps(doc, indent=2))
    except CycleCapExceeded as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return EXIT_SKIP
    return EXIT_OK


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------

def _verify_one(job):
    cells, name, theorems, cycle_cap, rn = job
    H = hexcore.build(cells, name=name)
    if not has_perfect_matching(H):
        selected = [t for t in theorems if t != "all"] or ["all"]
        return [Verdict(t, instance_id(H), HYPOTHESIS_NOT_MET,
                        {"reason": "no perfect matching"}).to_dict() for t in selected]
    return [v.to_dict() for v in verify(H, theorems, cycle_cap, rn=rn)]


def cmd_verify(args) -> int:
    theorems = args.theorem or ["all"]
    jobs = []
    if args.census:
        for H in hexcore.enumerate_all_systems(args.census, budget=args.budget):
            if has_perfect_matching(H):
                jobs.append((H.cells, H.name, theorems, args.cycle_cap, None))
    for path in args.inputs:
        H = _load(path)
        rn = args.rn
        if rn is None and "rn" in theorems:
            if H.num_hexagons < 6 or H.num_hexagons % 2:
                raise UsageError(f"{path}: cannot infer n for R_n from {H.num_hexagons} hexagons")
            rn = (H.num_hexagons - 4) // 2
        jobs.append((H.cells, H.name, theorems, args.cycle_cap, rn))
    if not jobs:
        raise UsageError("nothing to verify: give input files or --census N")

    results = []
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            stream = pool.imap(_verify_one, jobs)
            for verdicts in stream:
                results.extend(_emit(verdicts, args))
    else:
        for job in jobs:
            results.extend(_emit(_verify_one(job), args))

    if args.summary:
        table = summarize(Verdict(**v) for v in results)
        print(format_summary(table), file=sys.stderr)
    statuses = {v["status"] for v in results}
    if FAILS in statuses:
        return EXIT_FAIL
    if SKIPPED in statuses:
        return EXIT_SKIP
    return EXIT_OK


def _emit(verdicts, args):
    for v in verdicts:
        if not args.quiet or v["status"] == FAILS:
            sys.stdout.write(json.dumps(v, sort_keys=True) + "\n")
    sys.stdout.flush()
    return verdicts


# --------------------------------------------------------------------------
# dot
# --------------------------------------------------------------------------

def export_dot(H: HexSystem, M=None) -> str:
    """DOT rendering with lattice positions, bold matching edges and a marker
    node ``alt<i>`` at the centre of each alternating hexagon."""
    sx, sy = math.sqrt(3) / 2, 0.5
    lines = [f'graph "{H.name or "H"}" {{',
             "  node [shape=point];"]
    for v, (x, y) in enumerate(H.points):
        colour = "black" if H.color[v] else "white"
        lines.append(f'  v{v} [pos="{x * sx:.4f},{y * sy:.4f}!", lattice="{x},{y}", '
                     f'class="{colour}"];')
    M = frozenset(M or ())
    for i, (u, v) in enumerate(H.edges):
        style = ' [style=bold, penwidth=3]' if i in M else ""
        lines.append(f"  v{u} -- v{v}{style};")
    if M:
        for i, (q, r) in enumerate(alternating_hexagons(H, M)):
            x, y = hexcore.cell_center((q, r))
            lines.append(f'  alt{i} [shape=circle, label="", cell="{q},{r}", '
                         f'pos="{x * sx:.4f},{y * sy:.4f}!", alternating=true];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_dot(args) -> int:
    H = _load(args.input)
    M = None
    if args.matching is not None:
        ms = enumerate_matchings(H)
        if not 0 <= args.matching < len(ms):
            raise UsageError(f"matching index {args.matching} out of range (k = {len(ms)})")
        M = ms[args.matching]
    sys.stdout.write(export_dot(H, M))
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="benzenoid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write system JSON for a named family")
    g.add_argument("family", choices=["tp", "linear", "named", "rn", "census"])
    g.add_argument("params", nargs="*")
    g.add_argument("-o", "--out", help="output file (directory for census)")
    g.add_argument("--budget", type=_positive, default=hexcore.DEFAULT_MAX_HEXAGONS)
    g.add_argument("--matchable", action="store_true",
                   help="census: keep only systems with a perfect matching")
    g.set_defaults(func=cmd_gen)

    inv = sub.add_parser("invariants", help="per-matching invariant report")
    inv.add_argument("input")
    inv.add_argument("--format", choices=["json", "table", "dot"], default="json")
    inv.add_argument("--cycle-cap", type=_positive, default=DEFAULT_CYCLE_CAP)
    inv.add_argument("--matchings", action="store_true", help="include matchings and certificates")
    inv.add_argument("--cycles", action="store_true", help="include alternating cycles")
    inv.set_defaults(func=cmd_invariants)

    ver = sub.add_parser("verify", help="check theorems, one JSON verdict per line")
    ver.add_argument("inputs", nargs="*")
    ver.add_argument("--census", type=_positive, metavar="N")
    ver.add_argument("--theorem", type=_theorems, action="extend",
                     help=f"comma list from: {', '.join(THEOREM_IDS)}")
    ver.add_argument("--rn", type=_positive, help="family index for the rn check")
    ver.add_argument("--cycle-cap", type=_positive, default=DEFAULT_CYCLE_CAP)
    ver.add_argument("--jobs", type=_positive, default=1)
    ver.add_argument("--budget", type=_positive, default=hexcore.DEFAULT_MAX_HEXAGONS)
    ver.add_argument("--summary", action="store_true", help="print a summary table to stderr")
    ver.add_argument("--quiet", action="store_true", help="only print failing verdicts")
    ver.set_defaults(func=cmd_verify)

    d = sub.add_parser("dot", help="export the plane graph as Graphviz DOT")
    d.add_argument("input")
    d.add_argument("--matching", type=int, help="index into the sorted matching list")
    d.set_defaults(func=cmd_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, InvalidSystemError, hexcore.BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
