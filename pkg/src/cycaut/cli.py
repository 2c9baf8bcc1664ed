"""Command-line interface.

Subcommands: factor, code-info, aut-brute, aut-construct, multipliers,
verify-table.  Exit codes: 0 all verifications pass, 1 a mathematical
claim failed, 2 input or usage error.  All numeric output is decimal;
orders are printed as exact decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .code import CyclicCode
from .construct import multiplier_subgroup, multiplier, shift
from .gf2poly import factor_xn_minus_1, parse_poly_product
from .group import build_group, filter_generators
from .manifest import (
    BRUTE_FORCE_MAX_N,
    default_manifest_path,
    expand_constructions,
    load_manifest,
    report_record,
    run_entry,
)
from .verify import brute_force_aut, is_automorphism


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycaut",
        description="binary cyclic codes and their automorphism groups",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--seed", type=int, default=0, help="default sampling seed")
    parser.add_argument("--jobs", type=int, default=1, help="parallel manifest entries")
    parser.add_argument(
        "--max-n",
        type=int,
        default=BRUTE_FORCE_MAX_N,
        help="brute-force length cutoff",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor x^n+1 into irreducibles")
    p.add_argument("n", type=int)

    p = sub.add_parser("code-info", help="parameters and small-code statistics")
    p.add_argument("n", type=int)
    p.add_argument("generator")

    p = sub.add_parser("aut-brute", help="brute-force automorphism group order")
    p.add_argument("n", type=int)
    p.add_argument("generator")
    p.add_argument("--emit-gens", action="store_true")

    p = sub.add_parser("aut-construct", help="build generators from a construction spec")
    p.add_argument("n", type=int)
    p.add_argument("generator")
    p.add_argument("--spec", help="construction list as inline JSON")
    p.add_argument("--spec-file", help="construction list from a JSON file")
    p.add_argument("--expect", help="expected order (decimal); exit 1 on mismatch")
    p.add_argument("--emit-gens", action="store_true")

    p = sub.add_parser("multipliers", help="units whose residue maps preserve the code")
    p.add_argument("n", type=int)
    p.add_argument("generator")

    p = sub.add_parser("verify-table", help="run a verification manifest")
    p.add_argument("manifest", nargs="?", help="manifest path (default: bundled)")
    p.add_argument("--filter", help="only entries whose name contains this substring")
    return parser


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _cmd_factor(args) -> int:
    factors = factor_xn_minus_1(args.n)
    payload = {"n": args.n, "factors": [[str(f), m] for f, m in factors]}
    _emit(args, payload, [f"({f})^{m}" for f, m in factors])
    return 0


def _cmd_code_info(args) -> int:
    code = CyclicCode(args.n, parse_poly_product(args.generator))
    lines = [f"[{code.length},{code.dimension}]"]
    lines.append(f"generator: {code.generator}")
    lines.append(f"check: {code.check}")
    payload = {
        "n": code.length,
        "k": code.dimension,
        "generator": str(code.generator),
        "check": str(code.check),
    }
    if code.dimension <= 24:
        rows = [str(r) for r in code.generator_rows()]
        lines.append("rows:")
        lines.extend(f"  {r}" for r in rows)
        payload["rows"] = rows
    if code.dimension <= 20:
        dist = code.weight_distribution()
        lines.append("weights: " + " ".join(f"{w}:{c}" for w, c in dist.items()))
        payload["weights"] = {str(w): c for w, c in dist.items()}
    _emit(args, payload, lines)
    return 0


def _cmd_aut_brute(args) -> int:
    code = CyclicCode(args.n, parse_poly_product(args.generator))
    autos = brute_force_aut(code, args.max_n)
    lines = [str(len(autos))]
    payload = {"n": args.n, "generator": str(code.generator), "order": str(len(autos))}
    if args.emit_gens:
        gens = [str(p) for p in filter_generators(autos, code.length)]
        lines.extend(gens)
        payload["generators"] = gens
    _emit(args, payload, lines)
    return 0


def _cmd_aut_construct(args) -> int:
    if bool(args.spec) == bool(args.spec_file):
        print("exactly one of --spec/--spec-file is required", file=sys.stderr)
        return 2
    if args.spec:
        specs = json.loads(args.spec)
    else:
        with open(args.spec_file, encoding="utf-8") as fh:
            specs = json.load(fh)
    code = CyclicCode(args.n, parse_poly_product(args.generator))
    generators = expand_constructions(code, specs, cache={})
    for label, p in generators:
        if not is_automorphism(code, p):
            print(f"FAIL: generator {label} = {p} is not an automorphism", file=sys.stderr)
            return 1
    grp = build_group([p for _, p in generators], degree=code.length)
    order = grp.order()
    lines = [str(order)]
    payload = {"n": args.n, "generator": str(code.generator), "order": str(order)}
    if args.emit_gens:
        gens = [f"{label}: {p}" for label, p in generators]
        lines.extend(gens)
        payload["generators"] = [str(p) for _, p in generators]
    _emit(args, payload, lines)
    if args.expect is not None and int(args.expect) != order:
        print(f"FAIL: computed {order}, expected {args.expect}", file=sys.stderr)
        return 1
    return 0


def _cmd_multipliers(args) -> int:
    code = CyclicCode(args.n, parse_poly_product(args.generator))
    units = multiplier_subgroup(code)
    n = code.length
    grp = build_group(
        [shift(n)] + [multiplier(a, n) for a in units if a != 1], degree=n
    )
    lines = [
        "units: " + " ".join(str(a) for a in units),
        f"count: {len(units)}",
        f"order: {grp.order()}",
    ]
    payload = {
        "n": n,
        "generator": str(code.generator),
        "units": units,
        "count": len(units),
        "order": str(grp.order()),
    }
    _emit(args, payload, lines)
    return 0


def _run_entry_record(task) -> dict:
    entry, max_n, seed = task
    report = run_entry(entry, max_brute_n=max_n, default_seed=seed, cache={})
    record = report_record(report)
    record["_reason"] = report.reason
    return record


def _cmd_verify_table(args) -> int:
    path = args.manifest or default_manifest_path()
    entries = load_manifest(path)
    if args.filter:
        entries = [e for e in entries if args.filter in e["name"]]
    tasks = [(entry, args.max_n, args.seed) for entry in entries]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_run_entry_record, tasks))
    else:
        cache: dict = {}
        records = []
        for entry in entries:
            report = run_entry(entry, max_brute_n=args.max_n, default_seed=args.seed, cache=cache)
            record = report_record(report)
            record["_reason"] = report.reason
            records.append(record)

    failures = 0
    for record in records:
        reason = record.pop("_reason")
        if args.json:
            print(json.dumps(record))
        else:
            verdict = "PASS" if record["pass"] else "FAIL"
            line = (
                f"{verdict} {record['name']}: n={record['n']} "
                f"expected={record['expected_order']} computed={record['computed_order']} "
                f"({record['elapsed_ms']:.0f} ms)"
            )
            if reason:
                line += f" -- {reason}"
            print(line)
        if not record["pass"]:
            failures += 1
    if not args.json:
        print(f"{len(records) - failures}/{len(records)} entries passed")
    return 1 if failures else 0


_COMMANDS = {
    "factor": _cmd_factor,
    "code-info": _cmd_code_info,
    "aut-brute": _cmd_aut_brute,
    "aut-construct": _cmd_aut_construct,
    "multipliers": _cmd_multipliers,
    "verify-table": _cmd_verify_table,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ZeroDivisionError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
