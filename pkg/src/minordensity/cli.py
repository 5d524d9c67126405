"""Command-line interface: ``minordensity <command> ...``.

Exit codes: 0 success or a true verdict, 1 a false verdict, 2 usage errors,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, TextIO

from . import catalog, families, searchlab
from .errors import BudgetExceeded, CapacityError, DomainError, Graph6Error
from .graph6 import emit_graph6, parse_graph6, read_graph6_stream
from .graph_core import Graph, density, format_rational, parse_rational, t_density
from .minor_engine import Mode, balance_check, densest_minor, is_minor
from .plants import plant_classify

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _read_graph(text: Optional[str], stdin: TextIO) -> Graph:
    if text is None or text == "-":
        for line in stdin:
            if line.strip():
                return parse_graph6(line)
        raise _Usage("no graph6 input on stdin")
    return parse_graph6(text)


def _emit(args, payload: dict, text: str, out: TextIO) -> None:
    if args.json:
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        out.write(text + "\n")


def _budget(args) -> Optional[int]:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("MD_BUDGET")
    return int(env) if env else None


def _jobs(args) -> Optional[int]:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("MD_JOBS")
    return int(env) if env else None


# --- commands -------------------------------------------------------------------------

def cmd_density(args, stdin, out):
    g = _read_graph(args.graph, stdin)
    val = density(g)
    _emit(args, {"v": g.n, "e": g.num_edges, "rho": format_rational(val)}, format_rational(val), out)
    return EXIT_OK


def cmd_tdensity(args, stdin, out):
    g = _read_graph(args.graph, stdin)
    val = t_density(g, args.t)
    _emit(args, {"t": args.t, "rho_t": format_rational(val)}, format_rational(val), out)
    return EXIT_OK


def _mode_from(args) -> Mode:
    if args.mode:
        return Mode.parse(args.mode)
    return Mode(args.strict, args.t)


def cmd_balanced(args, stdin, out):
    g = _read_graph(args.graph, stdin)
    mode = _mode_from(args)
    rep = balance_check(g, mode, budget=_budget(args), jobs=_jobs(args))
    payload = {"verdict": rep.verdict, "mode": mode.name, "value": format_rational(rep.value),
               "explored": rep.explored}
    text = f"{mode.name}: {'yes' if rep.verdict else 'no'} (value {format_rational(rep.value)}, {rep.explored} minors)"
    if rep.counterexample is not None:
        c = rep.counterexample
        payload["counterexample"] = {"graph6": emit_graph6(c.minor), "value": format_rational(c.value),
                                     "ops": [str(op) for op in c.ops]}
        ops = " ".join(str(op) for op in c.ops) or "(none)"
        text += f"\ncounterexample {emit_graph6(c.minor)} value {format_rational(c.value)} via {ops}"
    _emit(args, payload, text, out)
    return EXIT_OK if rep.verdict else EXIT_FALSE


def cmd_plant(args, stdin, out):
    g = _read_graph(args.graph, stdin)
    res = plant_classify(g)
    payload = {"status": res.status}
    text = res.status
    if res.certificate:
        payload["ordering"] = list(res.certificate.ordering)
        payload["back_degrees"] = list(res.certificate.back_degrees)
        text += " ordering " + " ".join(map(str, res.certificate.ordering))
    _emit(args, payload, text, out)
    return EXIT_OK if res.is_plant else EXIT_FALSE


_FLAG_ORDER = {
    "Gkm": ("k", "m"), "Fkm": ("k", "m"), "StarOfPlants": ("k", "m", "t"), "KPlus2": ("a",),
    "FanCliques": ("k", "t"), "BowtieStar": ("k",), "CliqueStar": ("h", "t", "m"), "Path": ("t",),
    "Witness2511": (),
}


def cmd_construct(args, stdin, out):
    if "(" in args.family:
        spec = families.FamilySpec.parse(args.family)
    else:
        kind = families.resolve_kind(args.family)
        if args.params:
            params = tuple(args.params)
        else:
            params = tuple(getattr(args, f) for f in _FLAG_ORDER[kind])
            if any(v is None for v in params):
                raise _Usage(f"{kind} needs --{' --'.join(_FLAG_ORDER[kind])}")
        spec = families.FamilySpec(kind, params)
    g = spec.build()
    cf = families.closed_form(spec)
    payload = {"spec": str(spec), "graph6": emit_graph6(g), "v": cf.v, "e": cf.e, "rho": format_rational(cf.rho)}
    if cf.rho1 is not None:
        payload["rho1"] = format_rational(cf.rho1)
    _emit(args, payload, emit_graph6(g), out)
    return EXIT_OK


def cmd_catalog(args, stdin, out):
    action = args.action
    if action == "list":
        lo, hi = parse_rational(args.lo), parse_rational(args.hi)
        entries = catalog.enumerate_B(lo, hi, max_n=args.max_n, max_t=args.max_t)
        if args.csv:
            out.write(catalog.export_csv(entries))
        elif args.json:
            out.write(catalog.export_jsonl(entries))
        else:
            for e in entries:
                out.write(f"{format_rational(e.beta)}\t{e.label()}\n")
        return EXIT_OK
    if action == "member":
        q = parse_rational(args.value)
        res = catalog.membership(q)
        payload = {"value": format_rational(q), "status": res.status}
        if res.status == catalog.IN_B:
            payload["kind"] = res.entry.kind
            payload["parametrizations"] = [list(p) for p in res.entry.parametrizations]
            text = f"in B: {res.entry.label()}"
            if len(res.entry.parametrizations) > 1:
                text += " also " + ", ".join(str(p) for p in res.entry.parametrizations[1:])
            code = EXIT_OK
        elif res.status == catalog.NOT_IN_B:
            text, code = "not in B", EXIT_FALSE
        else:
            payload["known_hit"] = list(res.known_hit)
            text = "above 2: membership not characterised"
            if res.known_hit:
                text += "; documented: " + "; ".join(res.known_hit)
            code = EXIT_OK if res.known_hit else EXIT_FALSE
        _emit(args, payload, text, out)
        return code
    if action == "gap":
        x = parse_rational(args.value)
        nxt = catalog.next_above(x)
        g = nxt.beta - x
        _emit(args, {"x": format_rational(x), "next": format_rational(nxt.beta), "gap": format_rational(g)},
              f"next {format_rational(nxt.beta)} gap {format_rational(g)}", out)
        return EXIT_OK
    # witness
    q = parse_rational(args.value)
    res = catalog.membership(q)
    if not res.member:
        sys.stderr.write(f"{format_rational(q)} is not a catalogued member of B\n")
        return EXIT_FALSE
    g = catalog.witness(res.entry)
    _emit(args, {"value": format_rational(q), "graph6": emit_graph6(g), "spec": str(res.entry.witness_spec)},
          emit_graph6(g), out)
    return EXIT_OK


def cmd_minor(args, stdin, out):
    if args.action == "test":
        h = parse_graph6(args.pattern)
        g = _read_graph(args.graph, stdin)
        cert = is_minor(h, g, budget=_budget(args))
        if cert is None:
            _emit(args, {"minor": False}, "not a minor", out)
            return EXIT_FALSE
        sets = [sorted(s) for s in cert.branch_sets]
        _emit(args, {"minor": True, "branch_sets": sets},
              "minor; branch sets " + " | ".join(",".join(map(str, s)) for s in sets), out)
        return EXIT_OK
    g = _read_graph(args.graph, stdin)
    h, val = densest_minor(g, budget=_budget(args), jobs=_jobs(args))
    _emit(args, {"graph6": emit_graph6(h), "rho": format_rational(val), "v": h.n, "e": h.num_edges},
          f"{emit_graph6(h)} {format_rational(val)}", out)
    return EXIT_OK


def cmd_scan(args, stdin, out):
    source = None
    if args.input:
        fh = stdin if args.input == "-" else open(args.input)
        source = list(read_graph6_stream(fh))
    rep = searchlab.scan_balanced(args.max_n, Mode.parse(args.mode), connected_only=args.connected,
                                  source=source, budget=_budget(args), allow_large=args.allow_large)
    out.write(rep.to_jsonl() if args.json else rep.table() + "\n")
    return EXIT_OK if not rep.partial else EXIT_BUDGET


def cmd_crosscheck(args, stdin, out):
    rep = searchlab.crosscheck(args.max_n, budget=_budget(args))
    if args.json:
        out.write(rep.to_jsonl())
    else:
        out.write(f"densities found below 2: {' '.join(format_rational(x) for x in rep.densities_found)}\n")
        out.write(f"catalog misses: {len(rep.catalog_misses)}  witness misses: {len(rep.witness_misses)}"
                  f"  flagged: {len(rep.flagged)}\n")
    return EXIT_OK if rep.passed else EXIT_FALSE


def cmd_verify(args, stdin, out):
    from .acceptance import run_checks

    only = set(args.only) if args.only else None
    checks = run_checks(deep=args.deep, only=only)
    for c in checks:
        out.write(c.line() + "\n")
        out.flush()
    passed = sum(c.passed for c in checks)
    out.write(f"{passed}/{len(checks)} passed\n")
    return EXIT_OK if passed == len(checks) else EXIT_FALSE


# --- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON-lines output")
    common.add_argument("--budget", type=int, help="maximum minor-search states (env MD_BUDGET)")
    common.add_argument("--jobs", type=int, help="worker processes (env MD_JOBS)")

    p = argparse.ArgumentParser(prog="minordensity", description="Exact densities of minor-closed graph classes.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("density", parents=[common], help="edges per vertex")
    s.add_argument("graph", nargs="?", help="graph6 string, or - for stdin")
    s.set_defaults(func=cmd_density)

    s = sub.add_parser("tdensity", parents=[common], help="t-density")
    s.add_argument("-t", type=int, required=True)
    s.add_argument("graph", nargs="?")
    s.set_defaults(func=cmd_tdensity)

    s = sub.add_parser("balanced", parents=[common], help="decide minor-balance")
    s.add_argument("--strict", action="store_true")
    s.add_argument("-t", type=int, default=None, help="use the t-density (requires it to be positive)")
    s.add_argument("--mode", help="e.g. strictly_1_minor_balanced")
    s.add_argument("graph", nargs="?")
    s.set_defaults(func=cmd_balanced)

    s = sub.add_parser("plant", parents=[common], help="2-plant recognition")
    s.add_argument("graph", nargs="?")
    s.set_defaults(func=cmd_plant)

    s = sub.add_parser("construct", parents=[common], help="build a named family member as graph6")
    s.add_argument("family", help="Gkm, Fkm, StarOfPlants, KPlus2, FanCliques, BowtieStar, CliqueStar, Path, "
                                  "Witness2511; or a full spec like 'Gkm(2,7)'")
    s.add_argument("params", nargs="*", type=int)
    for flag in ("k", "m", "t", "a", "h"):
        s.add_argument(f"--{flag}", type=int)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("catalog", parents=[common], help="critical densities up to 2")
    csub = s.add_subparsers(dest="action", required=True)
    c = csub.add_parser("list", parents=[common])
    c.add_argument("--lo", default="0")
    c.add_argument("--hi", required=True)
    c.add_argument("--max-n", type=int)
    c.add_argument("--max-t", type=int)
    c.add_argument("--csv", action="store_true")
    for name in ("member", "gap", "witness"):
        c = csub.add_parser(name, parents=[common])
        c.add_argument("value", help="exact rational p/q")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("minor", parents=[common], help="minor containment and densest minors")
    msub = s.add_subparsers(dest="action", required=True)
    m = msub.add_parser("test", parents=[common])
    m.add_argument("pattern", help="graph6 of the candidate minor H")
    m.add_argument("graph", nargs="?", help="graph6 of the host G, or - for stdin")
    m = msub.add_parser("densest", parents=[common])
    m.add_argument("graph", nargs="?")
    s.set_defaults(func=cmd_minor)

    s = sub.add_parser("scan", parents=[common], help="classify all small graphs")
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--mode", default="minor_balanced")
    s.add_argument("--connected", action="store_true")
    s.add_argument("--input", help="graph6 file (or -) instead of internal enumeration")
    s.add_argument("--allow-large", action="store_true", help="permit max-n above 8")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("crosscheck", parents=[common], help="compare small balanced graphs with the catalog")
    s.add_argument("--max-n", type=int, default=7)
    s.set_defaults(func=cmd_crosscheck)

    s = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    s.add_argument("--deep", action="store_true", help="include the 11-vertex strict-balance checks")
    s.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None, stdin: Optional[TextIO] = None,
         stdout: Optional[TextIO] = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, stdin, stdout)
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget exceeded after {exc.explored} states: {exc}\n")
        return EXIT_BUDGET
    except (DomainError, Graph6Error, CapacityError, _Usage, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE



def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
