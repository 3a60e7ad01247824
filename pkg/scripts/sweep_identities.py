"""Time the identity catalog over growing ranges and report any failures.

    python scripts/sweep_identities.py --n-max 400 --m-max 150
"""

import argparse
import time

from pell_lab import identities


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=400)
    ap.add_argument("--m-max", type=int, default=150)
    ap.add_argument("--sign-check", action="store_true",
                    help="also confirm each alternating identity breaks when its sign is flipped")
    args = ap.parse_args()

    total, failed = 0, []
    t0 = time.perf_counter()
    for code in identities.catalog():
        start = time.perf_counter()
        rep = identities.check_range(code, args.n_max, args.m_max)
        total += rep.checked
        if not rep.ok:
            failed.append(code)
        ranges = ", ".join(f"{p} in {lo}..{hi}" for p, (lo, hi) in rep.ranges.items())
        print(f"{code:8s} {'ok  ' if rep.ok else 'FAIL'} {rep.checked:7d} cases  "
              f"{time.perf_counter() - start:6.3f}s  ({ranges})")
        if args.sign_check and identities.get(code).alternating:
            print(f"{'':8s} sign flip detected: {identities.sign_sensitive(code)}")
    print(f"\n{total} cases in {time.perf_counter() - t0:.2f}s; failing: {failed or 'none'}")
    for code in identities.errata():
        idn = identities.get(code)
        print(f"erratum {code}: printed '{idn.printed}' holds at "
              f"{sum(identities.check_printed(code, *a).passed for a in identities.cases(code, 60))} "
              f"of {sum(1 for _ in identities.cases(code, 60))} points up to 60")


if __name__ == "__main__":
    main()
