"""The `verify` command: list checks, run one, or run the whole registry.

Exit codes: 0 all pass, 1 any failure, 2 usage error.  Reports are
deterministic for fixed (primes, seed) apart from the runtime field.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .groebner import CROSSCHECK_PRIME, DEFAULT_PRIME
from .registry import Options, list_checks, run, run_all

REPORT_VERSION = "1"


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="verify",
        description="run the certified computation checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list all registered checks")
    p_list.add_argument("--json", action="store_true", help="emit JSON")

    p_run = sub.add_parser("run", help="run a single check")
    p_run.add_argument("id")
    p_run.add_argument("--prime", type=int, action="append", default=None)
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--field", choices=["Q", "Fp"], default=None)

    p_all = sub.add_parser("all", help="run every check")
    p_all.add_argument("--json", metavar="FILE", default=None)
    p_all.add_argument("--workers", type=int, default=1)
    p_all.add_argument("--prime", type=int, action="append", default=None)
    p_all.add_argument("--seed", type=int, default=0)
    return parser


def _options(args) -> Options:
    primes = args.prime if getattr(args, "prime", None) else None
    if primes is None:
        primes = [DEFAULT_PRIME, CROSSCHECK_PRIME]
    elif len(primes) == 1:
        second = CROSSCHECK_PRIME if primes[0] != CROSSCHECK_PRIME else DEFAULT_PRIME
        primes = [primes[0], second]
    return Options(
        primes=tuple(primes),
        seed=getattr(args, "seed", 0),
        field=getattr(args, "field", None),
    )


def _report_line(report) -> str:
    return f"{report.status:12s} {report.id:24s} {report.runtime_ms:7d} ms"


def _report_json(reports, options, summary) -> dict:
    return {
        "version": REPORT_VERSION,
        "options": {"primes": list(options.primes), "seed": options.seed},
        "checks": [asdict(r) | {"primes": list(r.primes)} for r in reports],
        "summary": summary,
    }


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    if args.command == "list":
        descriptors = list_checks()
        if args.json:
            payload = [
                {
                    "id": d.id,
                    "module": d.module,
                    "anchor": d.anchor,
                    "parameters": d.parameters,
                    "expected": d.expected,
                }
                for d in descriptors
            ]
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            for d in descriptors:
                print(f"{d.id:24s} [{d.module}] {d.anchor}")
        return 0

    options = _options(args)

    if args.command == "run":
        try:
            report = run(args.id, options)
        except KeyError as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return 2
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(_report_line(report))
        print(json.dumps(_report_json([report], options, {
            "pass": int(report.status == "PASS"),
            "fail": int(report.status == "FAIL"),
            "inconclusive": int(report.status == "INCONCLUSIVE"),
        }), indent=2, sort_keys=True))
        return 0 if report.status != "FAIL" else 1

    # command == "all"
    try:
        reports, summary = run_all(options, workers=args.workers)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for report in reports:
        print(_report_line(report))
    print(
        f"summary: {summary['pass']} pass, {summary['fail']} fail, "
        f"{summary['inconclusive']} inconclusive"
    )
    if args.json:
        payload = _report_json(reports, options, summary)
        with open(args.json, "w") as handle:
            json.dump(payload, handle, indent=2, sort_keys=True)
            handle.write("\n")
    return 1 if summary["fail"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
