"""Run every verification suite and write the per-instance reports to a JSON file."""

import argparse
import json
import sys

from covergadget.harness import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="suite_reports.json")
    ap.add_argument("--nmax", type=int)
    ap.add_argument("--kmax", type=int)
    ap.add_argument("--seed", type=int)
    args = ap.parse_args()
    reports = []
    for name in SUITES:
        rep = run_suite(name, n_max=args.nmax, k_max=args.kmax, s_max=args.kmax, seed=args.seed)
        print(rep.summary())
        for bad in rep.failures():
            print("  ", bad.name, bad.reproducer)
        reports.append(rep.to_dict())
    with open(args.out, "w") as fh:
        json.dump(reports, fh, indent=1)
    return 0 if all(r["passed"] for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
