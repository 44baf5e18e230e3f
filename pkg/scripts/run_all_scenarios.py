"""Run every registered scenario and emit its full output bundle.

Usage:
    python3 scripts/run_all_scenarios.py [out_dir]

Writes summary.txt, bundle.json and the CSV tables for each scenario under
out_dir (default: zenolab-out/), prints one verdict line per scenario, and
exits nonzero if any flag fails.
"""

import sys
import time
from pathlib import Path

from zenolab import SCENARIOS, run_scenario
from zenolab.cli import emit_outputs


def main() -> int:
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("zenolab-out")
    all_ok = True
    for name in sorted(SCENARIOS):
        start = time.perf_counter()
        bundle = run_scenario(name)
        elapsed = time.perf_counter() - start
        emit_outputs(bundle, root / name, "both")
        status = "PASS" if bundle.passed else "FAIL"
        print(f"{name:18} {status}  ({elapsed:.2f}s, {len(bundle.flags)} flags)")
        all_ok = all_ok and bundle.passed
    print(f"outputs under {root}/")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
