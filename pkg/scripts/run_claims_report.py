"""Print the claims report and a per-status summary.

Usage: python3 scripts/run_claims_report.py [--json] [--only FAIL|PASS|AMBIGUOUS]
"""

import argparse
import sys

from ncborel.claims import claims_report
from ncborel.cli.formatting import dumps


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--only", choices=("PASS", "FAIL", "AMBIGUOUS"), help="keep one status")
    args = p.parse_args(argv)

    report = claims_report()
    entries = [e for e in report.entries if args.only is None or e.status == args.only]
    if args.json:
        sys.stdout.write(dumps([e.to_json() for e in entries]))
        return 0
    for e in entries:
        conv = f" [{e.convention}]" if e.convention else ""
        print(f"{e.status:<9} {e.id:<40} {e.variant}{conv}")
        if e.status != "PASS":
            print(f"    claimed:  {e.claimed}")
            print(f"    computed: {e.computed}")
    c = report.counts()
    print(f"\n{len(report.entries)} claims: {c['PASS']} PASS, {c['FAIL']} FAIL, {c['AMBIGUOUS']} AMBIGUOUS")
    return 0


if __name__ == "__main__":
    sys.exit(main())
