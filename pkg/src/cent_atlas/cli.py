"""Command-line front end.

Subcommands: construct, analyze, catalog, verify, witness.  Exit codes:
0 success or pass, 2 usage or parameter errors (including empty sweeps),
3 invalid input files, 4 failed claims or witness checks.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as _catalog
from .claims import (
    claim_index,
    report_to_jsonable,
    verify_claim,
    witness_check,
)
from .errors import (
    BadParameters,
    CentAtlasError,
    EmptySweep,
    OrderCapExceeded,
    UnknownClaim,
)
from .invariants import is_prime
from .report import (
    analyze,
    catalog_filename,
    read_group_file,
    render_csv,
    render_json,
    render_markdown,
    write_group_file,
)

__all__ = ["main"]

_FAMILIES = ("cyclic", "dihedral", "dicyclic", "symmetric", "alternating",
             "metacyclic", "heisenberg", "modular-p3", "elementary",
             "witness-h", "sl23")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cent-atlas",
        description="Construct finite groups, compute centralizer "
                    "structure, and verify claims over group catalogs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_con = sub.add_parser("construct", help="build a named group")
    p_con.add_argument("--family", required=True, choices=_FAMILIES)
    for flag in ("n", "m", "k", "p", "q", "r", "i"):
        p_con.add_argument(f"--{flag}", type=int)
    p_con.add_argument("--order-cap", type=int)
    p_con.add_argument("--out", help="output group file (default: stdout)")
    p_con.set_defaults(func=_cmd_construct)

    p_ana = sub.add_parser("analyze", help="report invariants of a group file")
    p_ana.add_argument("--in", dest="infile", required=True,
                       help="group or permutation-generator JSON file")
    p_ana.add_argument("--format", choices=("json", "md", "csv"),
                       default="json")
    p_ana.add_argument("--order-cap", type=int)
    p_ana.add_argument("--out", help="output file (default: stdout)")
    p_ana.set_defaults(func=_cmd_analyze)

    p_cat = sub.add_parser("catalog", help="emit classification lists")
    p_cat.add_argument("--max-order", type=int, required=True)
    p_cat.add_argument("--out-dir", required=True)
    p_cat.add_argument("--order-cap", type=int)
    p_cat.set_defaults(func=_cmd_catalog)

    p_ver = sub.add_parser("verify", help="run a claim sweep")
    p_ver.add_argument("--claim")
    p_ver.add_argument("--list", action="store_true",
                       help="list claims and exit")
    p_ver.add_argument("--jobs", type=int,
                       help="worker processes (default: all cores)")
    p_ver.add_argument("--max-order", type=int)
    p_ver.add_argument("--p-max", type=int)
    p_ver.add_argument("--q-max", type=int)
    p_ver.add_argument("--order-cap", type=int)
    p_ver.add_argument("--out", help="write the JSON report here")
    p_ver.set_defaults(func=_cmd_verify)

    p_wit = sub.add_parser(
        "witness", help="check that cover/Z(cover) matches a target group")
    p_wit.add_argument("cover", help="group file for the covering group H")
    p_wit.add_argument("target", help="group file for the target G")
    p_wit.add_argument("--order-cap", type=int)
    p_wit.set_defaults(func=_cmd_witness)
    return parser


def _cmd_construct(args: argparse.Namespace) -> int:
    spec = _catalog.FamilySpec(
        family=args.family, n=args.n, m=args.m, k=args.k,
        p=args.p, q=args.q, r=args.r, i=args.i)
    g = _catalog.build(spec, order_cap=args.order_cap)
    if args.out:
        write_group_file(g, args.out)
        print(f"{g.label}: order {g.order} written to {args.out}")
    else:
        print(json.dumps(
            {"order": g.order, "label": g.label or None,
             "table": g.table.tolist()}, separators=(",", ":")))
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = read_group_file(args.infile, order_cap=args.order_cap)
    report = analyze(g)
    rendered = {"json": render_json, "md": render_markdown,
                "csv": render_csv}[args.format](report)
    if args.out:
        Path(args.out).write_text(rendered)
    else:
        print(rendered, end="" if rendered.endswith("\n") else "\n")
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    total = 0
    for order, groups in _catalog.catalog_by_order(
            args.max_order, order_cap=args.order_cap).items():
        for index, g in enumerate(groups, start=1):
            write_group_file(g, out_dir / catalog_filename(index, g))
            total += 1
    print(f"wrote {total} group files to {out_dir}")
    return 0


def _primes_up_to(n: int) -> tuple[int, ...]:
    return tuple(p for p in range(2, n + 1) if is_prime(p))


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        for entry in claim_index():
            print(f"{entry['claim_id']:4s} {entry['statement']}")
            print(f"     default sweep: {entry['sweep_default']}")
        return 0
    if not args.claim:
        raise BadParameters("verify needs --claim or --list")
    params: dict[str, object] = {}
    if args.max_order is not None:
        params["max_order"] = args.max_order
    if args.p_max is not None:
        params["p_list"] = _primes_up_to(args.p_max)
    if args.q_max is not None:
        params["q_max"] = args.q_max
    if args.order_cap is not None:
        params["order_cap"] = args.order_cap
    report = verify_claim(args.claim, jobs=args.jobs, **params)
    if args.out:
        Path(args.out).write_text(
            json.dumps(report_to_jsonable(report), indent=2) + "\n")
    status = "PASS" if report.passed else "FAIL"
    print(f"{report.claim_id}: {status} "
          f"({report.instances_checked} instances, {report.elapsed:.2f}s)")
    if not report.passed:
        print(f"counterexample: {report.counterexample}")
    return 0 if report.passed else 4


def _cmd_witness(args: argparse.Namespace) -> int:
    cover = read_group_file(args.cover, order_cap=args.order_cap)
    target = read_group_file(args.target, order_cap=args.order_cap)
    result = witness_check(cover, target)
    name_h = cover.label or "H"
    name_g = target.label or "G"
    print(f"{name_h}/Z({name_h}) ~ {name_g}: {str(result.ok).lower()}")
    if result.ok and result.isomorphism is not None:
        for qi, coset in enumerate(result.cosets):
            members = ", ".join(str(x) for x in coset)
            print(f"  {{{members}}} -> {result.isomorphism[qi]}")
    return 0 if result.ok else 4


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnknownClaim, EmptySweep, BadParameters, OrderCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CentAtlasError, OSError, json.JSONDecodeError, KeyError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
