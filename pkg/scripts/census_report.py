"""Secant-height census for every shipped config small enough to exhaust.

Writes <outdir>/<name>.csv and <name>.json and prints one summary line per code.
"""

import argparse
from pathlib import Path

from goppastrata.config import SHIPPED, dumps, load_code
from goppastrata.errors import TooLargeToExhaust
from goppastrata.secantgeom import stratify_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="results/census")
    ap.add_argument("--budget", type=int, default=10**4)
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name in SHIPPED:
        code = load_code(name)
        try:
            census = stratify_all(code, budget=args.budget)
        except TooLargeToExhaust as exc:
            print(f"{name:<18} skipped ({exc})")
            continue
        (out / f"{name}.csv").write_text(census.to_csv())
        summary = census.summary()
        (out / f"{name}.json").write_text(dumps(summary) + "\n")
        print(f"{name:<18} d={code.d} t={code.t} sizes={summary['stratum_sizes']} "
              f"frac(h>t)={summary['fraction_h_above_t']:.3f}")


if __name__ == "__main__":
    main()
