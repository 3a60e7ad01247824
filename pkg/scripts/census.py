"""Print the binary 3x3 census: buckets, permutation orbits and binary-conjugacy classes.

    python scripts/census.py [--json]
"""

import argparse
import json
import time

from pell_lab.classifier import classify, index_of


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="dump the full report as JSON")
    args = ap.parse_args()

    start = time.perf_counter()
    report = classify()
    elapsed = time.perf_counter() - start
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
        return
    print(f"{report.pell_count} of {report.total} binary matrices are Pell-generating "
          f"({elapsed * 1000:.0f} ms)")
    for key, mats in report.buckets.items():
        print(f"\n{key}  [{len(mats)} matrices]")
        for k, orbit in enumerate(report.orbits[key]):
            print(f"  permutation orbit {k}: {[index_of(m) for m in orbit]}")
        print(f"  binary-conjugacy classes: {len(report.binary_classes[key])}")
        for m in report.orbits[key][0][:1]:
            print("  e.g.", m.tolist())
    errors = report.invariant_errors()
    print("\ninvariants:", "ok" if not errors else errors)


if __name__ == "__main__":
    main()
