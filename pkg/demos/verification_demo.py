#!/usr/bin/env python3
"""Run the seeded verification battery from Python and poke at its
fault sensitivity.

The same battery is exposed on the command line as `blochinv verify`.
"""

import blochinv.invariants
from blochinv.verify import report_table, run_all, run_suite

print("Running all five suites at 200 samples, seed 42 ...")
reports = run_all(200, 42)
print(report_table(reports))
print()

print("Determinism: a second run produces the identical report:",
      report_table(run_all(200, 42)) == report_table(reports))
print()

print("Fault sensitivity: perturb the degree-9 relation by 1e-6 * p1^9")
true_p9 = blochinv.invariants.p9_eval
blochinv.invariants.p9_eval = lambda p1, p2, p3: true_p9(p1, p2, p3) + 1e-6 * p1**9
try:
    mutated = run_suite("sym", 200, 42)
finally:
    blochinv.invariants.p9_eval = true_p9
failed = [c.name for c in mutated.checks if not c.passed]
print("checks that now fail:", failed)
