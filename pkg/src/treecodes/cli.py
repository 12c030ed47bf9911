"""Command-line interface: ``treecodes <command> ...``.

Exit codes: 0 ok, 1 verification false, 2 usage or format error,
3 data integrity failure, 4 decoding ambiguity.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import bounds, constructions, oracle, repro
from .codes import decode_erasures, decode_errors, verify
from .documents import dumps, code_to_document, read_code, read_edges
from .errors import (AmbiguityError, DataIntegrityError, DecodingError, FormatError,
                     ParameterError, ResourceError, StructureError, TreeCodeError,
                     UndefinedDistanceError)
from .graph import EdgeSet, to_dot

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTEGRITY, EXIT_AMBIGUOUS = 0, 1, 2, 3, 4

FAMILY_PARAM = {
    "stars": "n", "ham-paths": "n", "paths-stars": "n",
    "affine-n4": "p", "cubic-n13": "q",
    "bibd-8-28-5": None, "furedi-11-35-8": None,
}


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


# --- commands ----------------------------------------------------------------


def cmd_construct(args) -> int:
    param = FAMILY_PARAM[args.family]
    gen = constructions.FAMILIES[args.family]
    if param is None:
        code = gen()
    else:
        value = getattr(args, param)
        if value is None:
            raise UsageError(f"family {args.family} needs --{param}")
        code = gen(value)
    try:
        ok, report = verify(code, code.claimed_distance)
    except StructureError as exc:
        raise DataIntegrityError(str(exc)) from None
    except UndefinedDistanceError:
        ok = True
    if not ok:
        raise DataIntegrityError(
            f"{args.family}: min distance {report.min_distance} below claimed {code.claimed_distance}")
    _emit(dumps(code_to_document(code)), args.output)
    if args.output:
        print(f"wrote {len(code)} trees on n={code.n} to {args.output}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    code = read_code(args.file)
    expect = args.expect_distance if args.expect_distance is not None else code.claimed_distance
    if expect is None:
        raise UsageError("no --expect-distance given and the document claims none")
    ok, rep = verify(code, expect)
    print(_json({
        "ok": ok, "expected_distance": expect, "min_distance": rep.min_distance,
        "argmin_pair": list(rep.argmin_pair), "max_shared_edges": rep.max_shared_edges,
        "pairs_checked": rep.pair_count_checked, "codewords": len(code), "n": code.n,
    }), end="")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_decode(args) -> int:
    code = read_code(args.code)
    received = read_edges(args.received)
    if args.mode == "erasure":
        res = decode_erasures(code, received, permissive=True)
    else:
        res = decode_errors(code, received)
    if not res.unique and not args.permissive:
        raise AmbiguityError(f"{len(res.candidates)} candidates: {list(res.candidates)}", res.candidates)
    print(_json({
        "mode": args.mode, "candidates": list(res.candidates), "unique": res.unique,
        "distance": res.distance, "trees": [t.to_json() for t in res.trees],
    }), end="")
    return EXIT_OK if res.unique else EXIT_AMBIGUOUS


def _fmt(v) -> str:
    if v.rounded is None:
        return f"~10^{v.log10:.3f}"
    return str(v.rounded)


def cmd_bounds(args) -> int:
    table = bounds.bounds_table(args.n, args.d, witnesses=not args.no_witnesses,
                                oracle_exact=args.oracle)
    if args.json:
        print(_json({
            "n": args.n, "d": args.d, "exact": table.exact,
            "best_lower": table.best_lower.rounded, "best_upper": table.best_upper.rounded,
            "entries": [b.as_dict() for b in table],
        }), end="")
        return EXIT_OK
    rows = [("kind", "name", "value", "log10", "status", "note")]
    for b in table:
        status = "ok" if b.applicable else f"n/a ({b.requires})"
        if not b.certifying:
            status = "asymptotic"
        name = b.name if b.shared == 0 else f"{b.name} [A(n,d;{b.shared})]"
        rows.append((b.kind, name, _fmt(b), f"{b.log10:.4f}", status, b.note))
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)) + "  " + r[5])
    print(f"\nA({args.n},{args.d}) in [{table.best_lower.rounded}, {table.best_upper.rounded}]"
          + (f", exact {table.exact}" if table.exact is not None else ""))
    return EXIT_OK


def cmd_curves(args) -> int:
    if not 0 < args.start <= args.stop < 1 or args.step <= 0:
        raise UsageError("need 0 < from <= to < 1 and step > 0")
    pts = bounds.delta_curve(args.start, args.stop, args.step)
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["delta", "C_delta", "c_delta"])
        for p in pts:
            w.writerow([f"{p.delta:.6g}", repr(p.C_delta), repr(p.c_delta)])
    finally:
        if args.out:
            fh.close()
    return EXIT_OK


def _parse_edges(text: str) -> list[tuple[int, int]]:
    if not text:
        return []
    try:
        return [tuple(int(x) for x in e.split("-")) for e in text.split(",")]
    except ValueError:
        raise UsageError(f"edges must look like 0-1,2-3, got {text!r}") from None


def cmd_oracle(args) -> int:
    what = args.what
    if what == "forests":
        if args.method == "enumerate":
            value = oracle.count_forests(args.n, args.d)
        else:
            value = oracle.forest_count(args.n, args.d)
        rec = {"n": args.n, "d": args.d, "method": args.method, "forests": value}
    elif what == "rooted-forests":
        X = [int(x) for x in args.X.split(",")]
        value = oracle.count_rooted_forests(args.n, X)
        rec = {"n": args.n, "X": X, "count": value,
               "formula": oracle.rooted_forest_formula(args.n, len(set(X)))}
    elif what == "trees-containing":
        f = EdgeSet(args.n, tuple(_parse_edges(args.edges)))
        value = oracle.count_trees_containing(f)
        rec = {"n": args.n, "forest": f.to_json(), "count": value,
               "formula": oracle.trees_containing_formula(f)}
    elif what == "exact-a":
        res = oracle.exact_A(args.n, args.d, oracle.SearchBudget(args.max_nodes), opt_in=args.opt_in)
        rec = res.as_dict() | {"budget": args.max_nodes}
    else:
        code = oracle.greedy_code(args.n, args.d, args.seed)
        if args.output:
            Path(args.output).write_text(dumps(code_to_document(code)))
        rec = {"n": args.n, "d": args.d, "seed": args.seed, "size": len(code)}
    print(_json(rec), end="")
    return EXIT_OK


def cmd_export(args) -> int:
    code = read_code(args.file)
    idx = range(len(code)) if args.index is None else [args.index]
    try:
        text = "".join(to_dot(code[i], f"T{i}") for i in idx)
    except IndexError:
        raise UsageError(f"index {args.index} out of range for {len(code)} codewords") from None
    _emit(text, args.output)
    return EXIT_OK


def cmd_repro(args) -> int:
    results = repro.run_checks(args.only or None)
    report = repro.markdown_report(results)
    _emit(report, args.output)
    return EXIT_OK if all(r.passed and r.in_time for r in results) else EXIT_FALSE


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="treecodes", description="Tree-codes toolkit.")
    ap.add_argument("--threads", type=int, default=1,
                    help="accepted for compatibility; certified computations run single-threaded")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code from a named family")
    p.add_argument("--family", required=True, choices=sorted(FAMILY_PARAM))
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the minimum distance of a code file")
    p.add_argument("file")
    p.add_argument("--expect-distance", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decode", help="decode a received edge list")
    p.add_argument("--code", required=True)
    p.add_argument("--received", required=True)
    p.add_argument("--mode", choices=["erasure", "error"], default="erasure")
    p.add_argument("--permissive", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("bounds", help="all bounds on A(n, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true")
    g.add_argument("--table", action="store_true")
    p.add_argument("--oracle", action="store_true", help="also run the exact search (small n)")
    p.add_argument("--no-witnesses", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("curves", help="C_delta and c_delta as CSV")
    p.add_argument("--from", dest="start", type=float, default=0.01)
    p.add_argument("--to", dest="stop", type=float, default=0.99)
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--out")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("oracle", help="brute-force counts and exact A(n, d)")
    p.add_argument("what", choices=["forests", "rooted-forests", "trees-containing", "exact-a", "greedy"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--X", default="0")
    p.add_argument("--edges", default="")
    p.add_argument("--method", choices=["enumerate", "recurrence"], default="enumerate")
    p.add_argument("--max-nodes", type=int, default=oracle.SearchBudget().max_nodes)
    p.add_argument("--opt-in", action="store_true", help="allow exact search at n = 6")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export", help="write codewords as Graphviz DOT")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", required=True)
    p.add_argument("--index", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("repro", help="run the reproduction checks, markdown report")
    p.add_argument("--only", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_repro)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command == "oracle" and args.what in ("forests", "exact-a", "greedy") and args.d is None:
        print("error: --d is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except AmbiguityError as exc:
        print(_json({"error": "ambiguous", "candidates": list(exc.candidates)}), end="")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AMBIGUOUS
    except DecodingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except DataIntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except (UsageError, FormatError, ParameterError, StructureError, UndefinedDistanceError,
            ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TreeCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
