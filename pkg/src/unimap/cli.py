"""Command-line front end: ``unimap {analyze,census,classify,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from sympy import divisors

from . import census
from .autgroup import CapExceeded, aut_data, is_regular, is_strictly_edge_transitive
from .classify import ClassifyError, classify_edge_transitive, classify_map, classify_regular, scan
from .maps import DartMap, MapError, OneVertexMap, face_circuits, profile
from .perm import PermutationError, format_cycles, parse_cycles
from .riemann import SignatureError
from .verify import run_all

SCHEMA_VERSION = "1"
ENV_PREFIX = "UNIMAP_"

DOMAIN_ERRORS = (PermutationError, MapError, CapExceeded, ClassifyError, SignatureError, census.CensusError)


class UsageError(ValueError):
    pass


# --- text rendering --------------------------------------------------------------


def render_table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_pairs(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


# --- commands --------------------------------------------------------------------


def _read_map(args):
    if args.k is not None:
        if args.x is not None or args.degree is not None:
            raise UsageError("give either --k/--y or --x/--y/--degree, not both")
        if args.y is None:
            raise UsageError("--y is required")
        return OneVertexMap(args.k, parse_cycles(args.y, 2 * args.k))
    if args.degree is None or args.x is None or args.y is None:
        raise UsageError("need --k and --y, or --x, --y and --degree")
    return DartMap(parse_cycles(args.x, args.degree), parse_cycles(args.y, args.degree))


def cmd_analyze(args):
    m = _read_map(args)
    prof = profile(m)
    result = {"profile": prof.to_json(), "face_circuits": format_cycles_list(face_circuits(m))}
    if isinstance(m, OneVertexMap):
        data = aut_data(m)
        result["map"] = str(m)
        result["aut"] = {
            "period": data.period,
            "order": data.order,
            "canonical_y": format_cycles(data.canonical_y),
            "orbit_size": len(data.orbit),
        }
        result["regular"] = is_regular(m)
        result["strictly_edge_transitive"] = is_strictly_edge_transitive(m)
        if data.period <= 2:
            result["classification"] = classify_map(m).to_json()
    return result, []


def format_cycles_list(cycles) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def text_analyze(result) -> str:
    p = result["profile"]
    pairs = [
        ("vertices", p["vertices"]),
        ("edges", p["edges"]),
        ("faces", p["faces"]),
        ("genus", p["genus"]),
        ("type", tuple(p["map_type"])),
        ("uniform", p["uniform"]),
        ("face valences", " ".join(map(str, p["face_valences"]))),
        ("face circuits", result["face_circuits"]),
    ]
    if "aut" in result:
        a = result["aut"]
        pairs += [
            ("aut period", a["period"]),
            ("aut order", a["order"]),
            ("canonical y", a["canonical_y"]),
            ("regular", result["regular"]),
            ("strictly edge-transitive", result["strictly_edge_transitive"]),
        ]
    if "classification" in result:
        pairs.append(("verdict", result["classification"]["label"]))
    return render_pairs(pairs)


def cmd_census(args):
    if args.k is None or args.k < 1:
        raise UsageError("--k must be a positive integer")
    k = args.k
    ps = [args.p] if args.p is not None else list(divisors(2 * k))
    rows = [census.census_row(k, p) for p in ps]
    warnings = []
    out = [r.to_json() for r in rows]
    if args.oracle:
        brute = census.brute_census(k, cap=args.brute_cap)
        for row, d in zip(rows, out):
            d["brute"] = str(brute[row.p])
            d["match"] = brute[row.p] == row.nu
            if not d["match"]:
                warnings.append(f"p={row.p}: formula {row.nu} vs brute {brute[row.p]}")
    if args.reps:
        for row, d in zip(rows, out):
            reps = census.class_representatives(k, row.p, cap=args.gen_cap)
            d["representatives"] = [format_cycles(m.y) for m in reps]
    return {"k": k, "rows": out}, warnings


def text_census(result) -> str:
    rows = result["rows"]
    headers = ["p", "nu_bar", "nu", "classes"]
    if rows and "brute" in rows[0]:
        headers += ["brute", "match"]
    table = render_table(headers, [[r[h] for h in headers] for r in rows])
    lines = [f"k = {result['k']}", table]
    for r in rows:
        for y in r.get("representatives", []):
            lines.append(f"  p={r['p']}: y={y}")
    return "\n".join(lines)


def cmd_classify(args):
    modes = sum([args.scan is not None, args.regular, args.t is not None])
    if modes != 1:
        raise UsageError("give exactly one of --t, --regular or --scan")
    if args.scan is not None:
        entries = scan(args.scan, include_regular=args.include_regular, include_all=args.all)
        return {"g_max": args.scan, "entries": [c.to_json() for c in entries]}, []
    if args.k is None:
        raise UsageError("--k is required")
    c = classify_regular(args.k) if args.regular else classify_edge_transitive(args.k, args.t)
    return c.to_json(), []


def _classification_pairs(c) -> list:
    pairs = [
        ("k", c["k"]),
        ("t", "-" if c["t"] is None else c["t"]),
        ("genus", c["genus"]),
        ("signature", c["signature"]),
        ("vector", c["vector"]),
        ("verdict", c["label"]),
        ("aut(M) order", c["aut_map_order"]),
        ("aut(X)", f"{c['aut_surface']['name']} (order {c['aut_surface']['order']})"),
        ("extensions", ", ".join(e["case"] for e in c["extension_chain"]) or "-"),
    ]
    if "curve_equation" in c:
        pairs.append(("curve", c["curve_equation"]))
    if "further_extension_note" in c:
        pairs.append(("further", c["further_extension_note"]))
    for n in c["notes"]:
        pairs.append(("note", n))
    return pairs


def text_classify(result) -> str:
    if "entries" in result:
        headers = ["genus", "k", "t", "verdict", "aut(X)", "order", "signature", "vector"]
        rows = [
            [
                c["genus"], c["k"], "-" if c["t"] is None else c["t"], c["label"],
                c["aut_surface"]["name"], c["aut_surface"]["order"], c["signature"], c["vector"],
            ]
            for c in result["entries"]
        ]
        return render_table(headers, rows)
    return render_pairs(_classification_pairs(result))


def cmd_verify(args):
    if args.kmax > args.brute_cap:
        raise CapExceeded(f"--kmax {args.kmax} exceeds the brute-force cap {args.brute_cap} (raise --brute-cap)")
    results = run_all(kmax=args.kmax)
    summary = {
        "suites": [r.to_json() for r in results],
        "passed": all(r.passed for r in results),
        "checks": sum(r.checked for r in results),
    }
    return summary, []


def text_verify(result) -> str:
    rows = [
        [s["suite"], "PASS" if s["passed"] else "FAIL", s["checked"], f"{s['seconds']:.2f}s", s.get("failure", "")]
        for s in result["suites"]
    ]
    table = render_table(["suite", "status", "checks", "time", "counterexample"], rows)
    status = "all suites passed" if result["passed"] else "FAILED"
    return f"{table}\n{status}: {result['checks']} checks"


COMMANDS = {
    "analyze": (cmd_analyze, text_analyze),
    "census": (cmd_census, text_census),
    "classify": (cmd_classify, text_classify),
    "verify": (cmd_verify, text_verify),
}


# --- argument parsing ----------------------------------------------------------


def _env_default(dest, kind=str, default=None):
    value = os.environ.get(ENV_PREFIX + dest.upper())
    if value is None or value == "":
        return default
    if kind is bool:
        return value.strip().lower() in ("1", "true", "yes", "on")
    return kind(value)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["json", "text"], default=_env_default("format", default="text")
    )
    common.add_argument(
        "--brute-cap", type=int, default=_env_default("brute_cap", int, census.DEFAULT_BRUTE_CAP),
        help="largest k for exhaustive scans",
    )
    common.add_argument(
        "--gen-cap", type=int, default=_env_default("gen_cap", int, census.DEFAULT_GEN_CAP),
        help="largest k for constructive enumeration",
    )

    parser = argparse.ArgumentParser(prog="unimap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def flag(p, name, **kw):
        dest = name.lstrip("-").replace("-", "_")
        if kw.get("action") == "store_true":
            kw["default"] = _env_default(dest, bool, False)
        else:
            kw["default"] = _env_default(dest, kw.get("type", str))
        p.add_argument(name, **kw)

    p = sub.add_parser("analyze", parents=[common], help="profile and automorphisms of a map")
    flag(p, "--k", type=int, help="edges of a one-vertex map")
    flag(p, "--y", help="edge involution in cycle notation")
    flag(p, "--x", help="vertex rotation in cycle notation (general maps)")
    flag(p, "--degree", type=int, help="number of darts (general maps)")

    p = sub.add_parser("census", parents=[common], help="one-vertex maps counted by automorphism group")
    flag(p, "--k", type=int, help="number of edges")
    flag(p, "--p", type=int, help="only this divisor of 2k")
    flag(p, "--oracle", action="store_true", help="compare with an exhaustive scan")
    flag(p, "--reps", action="store_true", help="list one representative per class")

    p = sub.add_parser("classify", parents=[common], help="curves carrying edge-transitive one-vertex maps")
    flag(p, "--k", type=int)
    flag(p, "--t", type=int, help="shift parameter of a strictly edge-transitive map")
    flag(p, "--regular", action="store_true", help="classify the regular map with k edges")
    flag(p, "--scan", type=int, metavar="G_MAX", help="scan all genera up to G_MAX")
    flag(p, "--include-regular", action="store_true", help="add regular maps to the scan")
    flag(p, "--all", action="store_true", help="keep every scanned map, not only exceptional ones")

    p = sub.add_parser("verify", parents=[common], help="run the self-check suites")
    p.add_argument("--kmax", type=int, default=_env_default("kmax", int, 6))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    run, render = COMMANDS[args.command]
    envelope = {"schema_version": SCHEMA_VERSION, "command": args.command, "result": None, "warnings": []}
    code = 0
    try:
        result, warnings = run(args)
        envelope["result"] = result
        envelope["warnings"] = warnings
        if args.command == "verify" and not result["passed"]:
            code = 1
    except (UsageError, *DOMAIN_ERRORS) as exc:
        envelope["error"] = str(exc)
        code = 1

    if args.format == "json":
        print(json.dumps(envelope, indent=2))
    elif "error" in envelope:
        print(f"error: {envelope['error']}", file=sys.stderr)
    else:
        print(render(envelope["result"]))
        for w in envelope["warnings"]:
            print(f"warning: {w}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
