"""Run the brute-force cross-validation suites and print one table per suite.

    python3 scripts/cross_validate.py                 # every suite
    python3 scripts/cross_validate.py --suite trees grid
"""
from __future__ import annotations

import argparse
import sys
import time

from twelverep.oracle import SUITES, cross_validate


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--suite", nargs="+", choices=sorted(SUITES), default=sorted(SUITES))
    args = p.parse_args(argv)
    ok = True
    for name in args.suite:
        start = time.perf_counter()
        report = cross_validate(name)
        print(report.table())
        print(f"({time.perf_counter() - start:.1f}s)\n")
        ok &= report.ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
