"""Write the identity catalog as a JSON document (stdout or --out FILE)."""

import argparse
import json
import sys

from pell_lab.identities import export_catalog


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", help="output path; stdout if omitted")
    args = ap.parse_args()
    text = json.dumps(export_catalog(), indent=2, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
