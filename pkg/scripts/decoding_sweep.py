"""Decode success rate against error weight, sampled, for each shipped config."""

import argparse
from pathlib import Path

from goppastrata.config import dumps, load_code
from goppastrata.harness import ExperimentSpec, simulate

CONFIGS = ("rs_gf7_m3", "rs_gf7_m2", "rs_gf11_m6", "hermitian_q2_m4")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--outdir", default="results/sweep")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name in CONFIGS:
        code = load_code(name)
        spec = ExperimentSpec(name, list(range(code.t + 3)), trials=args.trials, seed=args.seed, decoder="both")
        rep = simulate(spec, code)
        (out / f"{name}.json").write_text(dumps(rep) + "\n")
        rates = {w: r["success_rate"].get("geometric") for w, r in rep["per_weight"].items()}
        print(f"{name:<18} t={code.t} geometric success by weight: {rates}")


if __name__ == "__main__":
    main()
