"""
The catalog sweep and the probability gap
=========================================

Sweep every desk-scale instance, classify by a probability threshold, and
interrogate the claimed forbidden interval below the third-largest value.
The data locates the real gap one notch higher than claimed.
"""

import argparse
from fractions import Fraction

from nullity.cli import decimal_str
from nullity.formulas import (classify_threshold, default_sweep_instances,
                              gap_check)

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--bound", type=int, default=1024,
                    help="sweep F:q C:n for every prime power q^n <= bound")
parser.add_argument("--threshold", default="1/4")
args = parser.parse_args()

report = classify_threshold(default_sweep_instances(args.bound),
                            Fraction(args.threshold))
values = sorted({e.p_pair for e in report.entries if e.p_pair is not None},
                reverse=True)

print(f"{len(report.entries)} instances, {len(values)} distinct pair values")
print("top of the catalog:")
for v in values[:6]:
    holders = [f"{e.coeff} {e.group}" for e in report.entries
               if e.p_pair == v]
    print(f"  {str(v):8s} ~{decimal_str(v):10s} {', '.join(holders)}")

chosen = ", ".join(f"{e.coeff} {e.group}" for e in report.selected)
print(f"at threshold {report.threshold}: {chosen}")

# the claimed forbidden interval is (1/4, 21/64); one value sits inside it
inside = gap_check(values, Fraction(1, 4), Fraction(21, 64))
print()
print("claimed gap (1/4, 21/64):", "empty" if not inside else
      f"REFUTED by {', '.join(map(str, inside))}")

# one notch up the ladder the gap is real: nothing between 21/64 and 1/2
inside = gap_check(values, Fraction(21, 64), Fraction(1, 2))
print("supported gap (21/64, 1/2):", "empty" if not inside else
      f"violated by {', '.join(map(str, inside))}")
assert Fraction(1, 2) == values[0] and Fraction(21, 64) in values
