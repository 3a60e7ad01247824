"""``pell-lab`` command-line frontend.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for usage or domain errors (message on stderr).  JSON output is a single
document with big integers written as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Callable

from . import numtheory, suites
from .classifier import classify
from .sequences import DomainError, EmptyRangeError, SequenceId, builtin_spec, terms

FORMATS = ("human", "json", "csv")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit_json(doc, out):
    json.dump(doc, out, indent=2)
    out.write("\n")


def _emit_csv(header, rows, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def cmd_seq(args, out) -> int:
    seq = SequenceId.parse(args.tag)
    base = builtin_spec(seq).base_index
    if args.lo < base:
        raise DomainError(f"lo = {args.lo} is below base index {base} of {seq.value}")
    values = terms(seq, args.lo, args.hi)
    rows = list(zip(range(args.lo, args.hi + 1), values))
    if args.format == "json":
        _emit_json({"sequence": seq.value, "lo": args.lo, "hi": args.hi,
                    "terms": [{"n": n, "value": str(v)} for n, v in rows]}, out)
    elif args.format == "csv":
        _emit_csv(["n", "value"], rows, out)
    else:
        for n, v in rows:
            out.write(f"{seq.value}[{n}] = {v}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    n_max = args.n_max if args.n_max is not None else 200
    m_max = args.m_max if args.m_max is not None else min(n_max, 100)
    if n_max < 2:
        raise UsageError(f"--n-max must be >= 2, got {n_max}")
    if m_max < 1:
        raise UsageError(f"--m-max must be >= 1, got {m_max}")
    results = suites.run(args.scope, suites.VerifyConfig(n_max=n_max, m_max=m_max))
    failed = [r for r in results if not r.ok]
    total_cases = sum(r.cases for r in results)
    if args.format == "json":
        _emit_json({"scope": args.scope, "n_max": n_max, "m_max": m_max,
                    "checks": [r.to_dict() for r in results],
                    "total_cases": total_cases,
                    "failed_checks": len(failed),
                    "ok": not failed}, out)
    elif args.format == "csv":
        _emit_csv(["suite", "check", "cases", "failures", "first_failure"],
                  [[r.suite, r.name, r.cases, r.failure_count, r.failures[0] if r.failures else ""]
                   for r in results], out)
    else:
        for r in results:
            out.write(f"{'PASS' if r.ok else 'FAIL'} {r.suite}/{r.name}: {r.cases} cases\n")
            for d in r.failures:
                out.write(f"    {d}\n")
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed, "
                  f"{total_cases} cases (n_max={n_max}, m_max={m_max})\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_classify(args, out) -> int:
    report = classify()
    errors = report.invariant_errors()
    doc = report.to_dict()
    if args.format == "json":
        doc["invariant_errors"] = errors
        _emit_json(doc, out)
    elif args.format == "csv":
        _emit_csv(
            ["char_poly", "factored", "trace", "det", "size", "permutation_orbits",
             "binary_conjugacy_classes", "members"],
            [[b["char_poly"], b["factored"], b["trace"], b["det"], b["size"],
              b["permutation_orbit_count"], b["binary_conjugacy_class_count"],
              " ".join(map(str, b["members"]))] for b in doc["buckets"]],
            out)
    else:
        out.write(f"binary 3x3 matrices: {doc['total']}\n")
        out.write(f"Pell-generating: {doc['pell_count']} in {doc['bucket_count']} buckets\n")
        for b in doc["buckets"]:
            out.write(f"  {b['factored']}: {b['size']} matrices, trace {b['trace']}, det {b['det']}, "
                      f"{b['permutation_orbit_count']} permutation orbits {b['permutation_orbit_sizes']}, "
                      f"{b['binary_conjugacy_class_count']} binary-conjugacy classes\n")
        for name, rep in doc["representatives"].items():
            out.write(f"  {name}: index {rep['index']}, trace {rep['trace']}, det {rep['det']}, "
                      f"char poly {rep['char_poly']}\n")
        for e in errors:
            out.write(f"INVARIANT BROKEN: {e}\n")
    return EXIT_FAIL if errors else EXIT_OK


def _bound(args, default: int) -> int:
    if args.n is not None and args.n_max is not None and args.n != args.n_max:
        raise UsageError(f"conflicting bounds {args.n} and --n-max {args.n_max}")
    for v in (args.n, args.n_max):
        if v is not None:
            return v
    return default


def cmd_sidon(args, out) -> int:
    n_max = _bound(args, 60)
    if n_max < 1:
        raise UsageError(f"sidon needs n_max >= 1, got {n_max}")
    rep = numtheory.sidon_check(n_max)
    if args.format == "json":
        _emit_json({"n_max": n_max, "distinct": rep.distinct,
                    "sums_checked": rep.sums_checked,
                    "first_collision": list(rep.first_collision) if rep.first_collision else None}, out)
    elif args.format == "csv":
        coll = " ".join(map(str, rep.first_collision)) if rep.first_collision else ""
        _emit_csv(["n_max", "distinct", "sums_checked", "first_collision"],
                  [[n_max, rep.distinct, rep.sums_checked, coll]], out)
    else:
        out.write(f"r[1..{n_max}]: {rep.sums_checked} pairwise sums, "
                  f"{'all distinct' if rep.distinct else 'collision'}\n")
        if rep.first_collision:
            i, j, k, l = rep.first_collision
            out.write(f"  r[{i}] + r[{j}] == r[{k}] + r[{l}]\n")
    return EXIT_OK if rep.distinct else EXIT_FAIL


def cmd_gcd(args, out) -> int:
    n_max = _bound(args, 81)
    if n_max < 3:
        raise UsageError(f"gcd needs n_max >= 3, got {n_max}")
    rows = []
    for n in range(2, n_max + 1):
        got, want = numtheory.gcd_consecutive(n), numtheory.gcd_expected(n)
        rows.append((n, got, want, got == want))
    reduction = [row for n in range(2, n_max + 1, 2) for row in numtheory.gcd_reduction_rows(n)]
    bad_reduction = [row for row in reduction if not row.agrees]
    bad = [row for row in rows if not row[3]]
    if args.format == "json":
        _emit_json({
            "n_max": n_max,
            "rows": [{"n": n, "gcd": str(g), "expected": str(e), "match": ok} for n, g, e, ok in rows],
            "reduction_rows_checked": len(reduction),
            "reduction_mismatches": [{"n": r.n, "k": r.k, "reduced": str(r.gcd_reduced),
                                      "direct": str(r.gcd_direct)} for r in bad_reduction],
            "first_counterexample": bad[0][0] if bad else None,
            "ok": not bad and not bad_reduction,
        }, out)
    elif args.format == "csv":
        _emit_csv(["n", "gcd", "expected", "match"], rows, out)
    else:
        for n, g, e, ok in rows:
            out.write(f"gcd(r[{n}], r[{n - 1}]) = {g}  expected {e}  {'ok' if ok else 'MISMATCH'}\n")
        out.write(f"reduction rows: {len(reduction) - len(bad_reduction)}/{len(reduction)} agree\n")
    return EXIT_FAIL if bad or bad_reduction else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="human")
    common.add_argument("--n-max", type=int, default=None)
    common.add_argument("--m-max", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="pell-lab", description="Exact checks for Pell-family recurrences and matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="print terms lo..hi of a sequence")
    p.add_argument("tag", help="one of " + ", ".join(s.value for s in SequenceId))
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", parents=[common], help="run identity/matrix/number-theory sweeps")
    p.add_argument("scope", help="identities, matrices, numtheory or all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", parents=[common], help="census of binary 3x3 Pell generators")
    p.set_defaults(func=cmd_classify)

    for name, func, what in (("sidon", cmd_sidon, "distinct pairwise sums of r"),
                             ("gcd", cmd_gcd, "gcd of consecutive r terms")):
        p = sub.add_parser(name, parents=[common], help=what)
        p.add_argument("n", type=int, nargs="?", default=None, help="upper index")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # argparse reports usage errors this way
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    if args.command == "verify" and args.scope not in suites.SCOPES:
        err.write(f"pell-lab: error: unknown scope {args.scope!r}; "
                  f"choose from {', '.join(suites.SCOPES)}\n")
        return EXIT_USAGE
    func: Callable = args.func
    try:
        return func(args, out)
    except (UsageError, DomainError, EmptyRangeError) as e:
        err.write(f"pell-lab: error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
