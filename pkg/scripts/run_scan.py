"""Run the random monomial-ideal scan and write the JSON report.

Usage: python3 scripts/run_scan.py [--count N] [--seed S] [--workers W] [--out report.json]
"""

import argparse
import json
import sys
from pathlib import Path

from covolume.scan import ScanConfig, run_scan


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=ScanConfig.count)
    p.add_argument("--seed", type=int, default=ScanConfig.master_seed)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default="scan_report.json")
    p.add_argument("--reproducers", default="scan_reproducers")
    args = p.parse_args()
    cfg = ScanConfig(count=args.count, master_seed=args.seed, workers=args.workers)
    report = run_scan(cfg, Path(args.reproducers))
    Path(args.out).write_text(json.dumps(report, indent=2) + "\n")
    s = report["summary"]
    print(f"suite {s['suite_passed']}/{s['count']}  conjecture {s['conjecture_passed']}/{s['count']}  "
          f"errors {s['errors']}  ({report['timing']['total_seconds']:.1f}s)")
    return 0 if s["errors"] == 0 and s["suite_passed"] == s["count"] == s["conjecture_passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
