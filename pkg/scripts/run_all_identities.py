"""Verify the default identity suite and print a summary table (or JSON)."""
import argparse
import json
import sys
from dataclasses import replace

from qsymb.harness import SuiteConfig, exit_code, load_suite_config, verify_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--caps", help="JSON file with caps, size_clip, alphabet and per-id params")
    ap.add_argument("--size-clip", type=int, help="truncate every sweep to this bound")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    config = load_suite_config(args.caps) if args.caps else SuiteConfig()
    if args.size_clip is not None:
        config = replace(config, size_clip=args.size_clip)
    reports = verify_all(config=config, jobs=args.jobs)

    if args.json:
        json.dump([r.to_json() for r in reports], sys.stdout, indent=2)
        print()
    else:
        print(f"{'identity':<10} {'status':<15} {'terms':>12} {'ms':>9}")
        for r in reports:
            print(f"{r.case.id:<10} {r.status:<15} {r.lhs_terms:>5}/{r.rhs_terms:<6} {r.ms:>9.1f}")
        print(f"{sum(r.ok for r in reports)}/{len(reports)} verified")
    return exit_code(reports)


if __name__ == "__main__":
    sys.exit(main())
