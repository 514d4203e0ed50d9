#!/usr/bin/env python3
"""Run every named verification suite and print a one-line summary each.

Exits nonzero if any suite reports a failed check.
"""

from __future__ import annotations

import json
import sys

from tlq.verify import SUITES


def main() -> int:
    failures = 0
    for name, suite in SUITES.items():
        report = suite()
        status = "ok" if report["passed"] else "FAILED"
        print(f"{name:16s} {status:7s} {len(report['checks'])} checks "
              f"in {report['elapsed_s']}s")
        if not report["passed"]:
            failures += 1
            print(json.dumps([c for c in report["checks"] if not c["pass"]], indent=2))
    return 2 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
