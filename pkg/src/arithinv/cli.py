"""Command line front end: ``arithinv run``, ``arithinv catalog list``, ``arithinv scenarios``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields

from . import catalog
from .scenarios import Options, report_json, report_markdown, run_many, scenario_names

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _options(args: argparse.Namespace) -> Options:
    opts = Options()
    if args.config:
        with open(args.config) as fh:
            cfg = json.load(fh)
        known = {f.name for f in fields(Options)}
        unknown = set(cfg) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        for key, value in cfg.items():
            setattr(opts, key, int(value))
    for key in ("max_order", "max_degree", "prime_bound", "jobs"):
        value = getattr(args, key)
        if value is not None:
            setattr(opts, key, value)
    return opts


def cmd_run(args: argparse.Namespace) -> int:
    try:
        opts = _options(args)
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    names = scenario_names() if args.all else list(args.scenario or [])
    unknown = [n for n in names if n not in scenario_names()]
    if unknown:
        print(f"unknown scenario(s): {', '.join(unknown)}", file=sys.stderr)
        return EXIT_CONFIG
    records, errors = run_many(names, opts)
    text = report_markdown(records) if args.format == "md" else json.dumps(report_json(records), indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text)
    for name, err in errors.items():
        print(f"{name}: {err}", file=sys.stderr)
    if errors:
        return EXIT_CONFIG
    return EXIT_OK if all(r.status == "PASS" for r in records) else EXIT_FAIL


def cmd_catalog(args: argparse.Namespace) -> int:
    for rid in catalog.all_ids():
        data = catalog.load(rid)
        degrees = ",".join(map(str, data.expected_degrees))
        print(f"{rid.label:8} conductor={data.conductor:<3} rank={data.rank} order={data.expected_order:<5} degrees={degrees}")
    return EXIT_OK


def cmd_scenarios(args: argparse.Namespace) -> int:
    from .scenarios import SCENARIOS

    for name, sc in SCENARIOS.items():
        print(f"{name:24} {sc.claim}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arithinv", description="Integral invariant rings of reflection groups")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run verification scenarios")
    run.add_argument("--scenario", action="append", metavar="NAME")
    run.add_argument("--all", action="store_true")
    run.add_argument("--format", choices=("json", "md"), default="json")
    run.add_argument("--max-order", type=int)
    run.add_argument("--max-degree", type=int)
    run.add_argument("--prime-bound", type=int)
    run.add_argument("--jobs", type=int)
    run.add_argument("--config", help="JSON file with option overrides")
    run.add_argument("--output", "-o")
    run.set_defaults(func=cmd_run)

    cat = sub.add_parser("catalog", help="catalog queries")
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True)
    lst = cat_sub.add_parser("list")
    lst.set_defaults(func=cmd_catalog)

    scs = sub.add_parser("scenarios", help="list scenario names")
    scs.set_defaults(func=cmd_scenarios)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run" and not (args.all or args.scenario):
        print("select scenarios with --scenario NAME or --all", file=sys.stderr)
        return EXIT_CONFIG
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
