#!/usr/bin/env python3
"""Run a verification battery and write a machine-readable report.

Thin wrapper over the installed CLI so batteries can be launched from a
checkout without installing the console script.

Usage:
  python scripts/run_checks.py all --seed 7
  python scripts/run_checks.py uniform --domain T --pairs 10000 --out report.json
  python scripts/run_checks.py bergman --jmax 8 --kmax 8 --format csv
"""

import sys

from hartogs.cli import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
