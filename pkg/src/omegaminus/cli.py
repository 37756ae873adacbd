"""Command-line entry point.

    omegaminus verify --row 1 --m 5 --q 2 --format json
    omegaminus verify --all-mandatory
    omegaminus identities --row 11
    omegaminus orders --m 5 --q 2
    omegaminus enumerate --m 4 --q 2
    omegaminus selftest
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import factorcore, orders
from . import verify as V
from .permgrp import DEFAULT_CAP


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--row", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--q", type=int)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--out", help="write the document here instead of stdout")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest orbit enumerated before downgrading")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="omegaminus",
                                     description="Verify factorizations of minus-type orthogonal groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="certify rows")
    v.add_argument("--all-mandatory", action="store_true")
    v.add_argument("--include-optional", action="store_true")
    v.add_argument("--timings", action="store_true",
                   help="record elapsed_ms (breaks byte-identical reruns)")
    sub.add_parser("orders", parents=[common], help="group orders")
    sub.add_parser("identities", parents=[common], help="exact order identities")
    sub.add_parser("enumerate", parents=[common], help="value sets of the standard form")
    sub.add_parser("selftest", parents=[common], help="identity suite and small-group corpus")
    return parser


def _check_row_args(args, need_row: bool):
    if args.row is None:
        if need_row:
            raise UsageError("--row is required")
        if args.m is not None or args.q is not None:
            raise UsageError("--m/--q need --row")
        return
    if args.row in (10, 11):
        if args.m is not None or args.q is not None:
            raise UsageError(f"row {args.row} takes no --m/--q")
        return
    if (args.m is None) != (args.q is None):
        raise UsageError("--m and --q go together")
    if args.m is not None:
        why = orders.row_constraint_error(args.row, args.m, args.q)
        if why:
            raise UsageError(why)
    elif args.row not in range(1, 12):
        raise UsageError(f"row {args.row} does not exist")


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> tuple[str, int]:
    if args.all_mandatory:
        if args.row is not None:
            raise UsageError("--all-mandatory excludes --row")
        plan = list(V.MANDATORY) + (list(V.OPTIONAL) if args.include_optional else [])
    else:
        if args.include_optional:
            raise UsageError("--include-optional needs --all-mandatory")
        _check_row_args(args, need_row=True)
        if args.m is None and args.row not in (10, 11):
            raise UsageError(f"row {args.row} needs --m and --q")
        plan = [(args.row, args.m, args.q)]
    reports = [V.verify_row(r, m, q, cap=args.cap, seed=args.seed) for r, m, q in plan]
    optional = set(V.OPTIONAL)
    gating = [r for r, key in zip(reports, plan) if key not in optional]
    ok = all(r.status in ("verified", "arithmetic-only") for r in gating)
    if args.format == "json":
        text = V.emit_report(reports, timings=args.timings)
    else:
        text = V.report_table(reports)
    return text, 0 if ok else 1


def _order_rows(m: int, q: int) -> list:
    G = orders.GroupOrderSpec
    return [G("Omega_minus", (2 * m, q)), G("O_minus", (2 * m, q)), G("GammaO_minus", (2 * m, q)),
            G("Omega_odd", (2 * m - 1, q)), G("SU", (m, q)), G("Sp", (2 * m - 2, q))]


def cmd_orders(args) -> tuple[str, int]:
    if args.row is not None:
        raise UsageError("orders takes --m and --q only")
    if (args.m is None) != (args.q is None):
        raise UsageError("--m and --q go together")
    if args.m is None:
        G = orders.GroupOrderSpec
        specs = [G("Omega_minus", (8, 2)), G("Omega_minus", (8, 3)), G("Omega_minus", (8, 4)),
                 G("Omega_minus", (10, 2)), G("Omega_minus", (12, 2)), G("SU", (3, 2)),
                 G("SU", (3, 4)), G("SU", (4, 2)), G("SU", (4, 3)), G("SU", (5, 2)),
                 G("SU", (5, 3)), G("alternating", (12,)), G("sporadic", ("M12",)),
                 G("sporadic", ("3.J3",))]
    else:
        try:
            orders.prime_power(args.q)
        except orders.OrderError as exc:
            raise UsageError(str(exc)) from exc
        if args.m < 2:
            raise UsageError("--m must be at least 2")
        specs = _order_rows(args.m, args.q)
    rows = orders.table_dump(specs)
    if args.format == "json":
        for r in rows:
            r["order"] = str(r["order"])
        return json.dumps({"orders": rows}, sort_keys=True, indent=1) + "\n", 0
    lines = [f"{r['family']:<13} {','.join(map(str, r['params'])):<8} {r['order']:>32,}"
             for r in rows]
    return "\n".join(lines) + "\n", 0


def cmd_identities(args) -> tuple[str, int]:
    _check_row_args(args, need_row=False)
    if args.row is None:
        plan = [(r, m, q) for r in range(1, 12) for m, q in orders.compatible_parameters(r)]
    elif args.m is None:
        plan = [(args.row, m, q) for m, q in orders.compatible_parameters(args.row)]
    else:
        plan = [(args.row, args.m, args.q)]
    results = [orders.identity_suite(r, m, q) for r, m, q in plan]
    ok = all(res.ok for res in results)
    if args.format == "json":
        doc = {"results": [res.as_dict() for res in results], "pass": ok}
        return json.dumps(doc, sort_keys=True, indent=1) + "\n", 0 if ok else 1
    lines = []
    if args.row == 11:
        lines.append(orders.row11_display())
    failed = [res for res in results if not res.ok]
    lines.append(f"{len(results)} instances, {len(failed)} failed")
    for res in failed:
        lines.append(json.dumps(res.as_dict(), sort_keys=True))
    seen = set()
    for res in results:
        for f in res.findings:
            key = json.dumps(f, sort_keys=True)
            if key not in seen:
                seen.add(key)
                lines.append(f"finding row {res.row} (m={res.m}, q={res.q}): {key}")
    return "\n".join(lines) + "\n", 0 if ok else 1


def cmd_enumerate(args) -> tuple[str, int]:
    from .forms import FormError, enumerate_value_set, minus_standard_space

    if args.row is not None:
        raise UsageError("enumerate takes --m and --q only")
    if args.m is None or args.q is None:
        raise UsageError("enumerate needs --m and --q")
    try:
        space = minus_standard_space(args.m, args.q)
    except (FormError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    counts = {str(c): int(enumerate_value_set(space, c).size) for c in range(args.q)}
    m, q = args.m, args.q
    expected = {"0": (q ** m + 1) * (q ** (m - 1) - 1),
                "nonzero": q ** (2 * m - 1) + q ** (m - 1)}
    doc = {"dim": 2 * m, "q": q, "counts": counts, "expected": expected}
    ok = counts["0"] == expected["0"] and all(
        v == expected["nonzero"] for k, v in counts.items() if k != "0")
    if args.format == "json":
        return json.dumps(doc, sort_keys=True, indent=1) + "\n", 0 if ok else 1
    lines = [f"minus-type space of dimension {2 * m} over GF({q})"]
    lines += [f"Q = {k}: {v}" for k, v in counts.items()]
    lines.append(f"expected singular nonzero {expected['0']}, per nonzero value {expected['nonzero']}")
    return "\n".join(lines) + "\n", 0 if ok else 1


def cmd_selftest(args) -> tuple[str, int]:
    ident = [orders.identity_suite(r, m, q) for r in range(1, 12)
             for m, q in orders.compatible_parameters(r)]
    corpus = factorcore.run_corpus(seed=args.seed)
    ok = all(r.ok for r in ident) and corpus.ok
    doc = {"identity_instances": len(ident), "identity_failures": sum(not r.ok for r in ident),
           "corpus_samples": corpus.samples, "corpus_failures": [str(f) for f in corpus.failures],
           "pass": ok}
    if args.format == "json":
        return json.dumps(doc, sort_keys=True, indent=1) + "\n", 0 if ok else 1
    lines = [f"identities: {doc['identity_instances']} instances, {doc['identity_failures']} failed",
             f"corpus: {corpus.total} samples, {len(corpus.failures)} failed",
             "pass" if ok else "FAIL"]
    return "\n".join(lines) + "\n", 0 if ok else 1


COMMANDS = {"verify": cmd_verify, "orders": cmd_orders, "identities": cmd_identities,
            "enumerate": cmd_enumerate, "selftest": cmd_selftest}


def _write(path: str, text: str):
    """Write atomically so a failure never leaves a partial file."""
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".omegaminus-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.cap <= 0:
        print("omegaminus: error: --cap must be positive", file=sys.stderr)
        return 2
    if args.out and not os.path.isdir(os.path.dirname(os.path.abspath(args.out))):
        print(f"omegaminus: error: no directory for {args.out}", file=sys.stderr)
        return 2
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"omegaminus: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
