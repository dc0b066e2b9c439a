"""Sweep x = (0, s) along the chord beyond b and show where the forced y lands.

For every s in (1/2, 1) the only candidate intersection lies on or outside
the unit circle; the table lists k1, y and |y|^2 exactly, and the script
exits non-zero if any sample lands inside the disk.

    python scripts/klein_refutation.py --samples 20 --denominator 40
"""
import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from tarski_models.klein import euclid_forced_y, kp


@dataclass
class SweepConfig:
    samples: int = 20
    denominator: int = 40


def sweep(cfg: SweepConfig):
    den = max(cfg.denominator, 3)
    nums = range(den // 2 + 1, den)
    step = max(1, len(nums) // cfg.samples)
    for num in list(nums)[::step][: cfg.samples]:
        yield euclid_forced_y(kp(0, Fraction(num, den)))


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--samples", type=int, default=SweepConfig.samples)
    ap.add_argument("--denominator", type=int, default=SweepConfig.denominator)
    args = ap.parse_args()
    rows = list(sweep(SweepConfig(args.samples, args.denominator)))
    print(f"{'x':>12}  {'k1':>8}  {'y':>14}  {'|y|^2':>12}  outside")
    for r in rows:
        print(f"{str(r.x):>12}  {str(r.k1):>8}  {str(r.y):>14}  {str(r.norm2):>12}  {r.outside}")
    inside = [r for r in rows if not r.outside]
    print(f"\n{len(rows)} samples, {len(inside)} inside the disk")
    sys.exit(1 if inside else 0)


if __name__ == "__main__":
    main()
