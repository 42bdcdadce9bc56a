"""Discrete edge gaps against their continuum targets over a (theta, s) grid.

    python3 scripts/edge_report.py --models pa psp --thetas 15 30 60 120 --out edge.csv
"""

import argparse
import csv
from dataclasses import dataclass, field

from spodet.edge import MODELS, deviations_decrease, edge_convergence_report


@dataclass
class EdgeExperiment:
    models: list = field(default_factory=lambda: ["pa", "psp"])
    thetas: list = field(default_factory=lambda: [15.0, 30.0, 60.0])
    s_values: list = field(default_factory=lambda: [-2.0, -1.0, 0.0, 1.0])
    effective_s: bool = True


def run(cfg: EdgeExperiment) -> list[dict]:
    table = []
    for model in cfg.models:
        rows = edge_convergence_report(model, cfg.thetas, cfg.s_values, use_effective_s=cfg.effective_s)
        trend = deviations_decrease(rows)
        for r in rows:
            table.append({
                "model": model, "theta": r.theta, "s": r.s, "effective_s": round(r.effective_s, 6),
                "discrete": r.discrete.real, "imag": r.discrete.imag, "target": r.target,
                "deviation": r.deviation, "decreasing_in_theta": trend[r.s],
            })
    return table


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--models", nargs="+", choices=MODELS, default=["pa", "psp"])
    p.add_argument("--thetas", nargs="+", type=float, default=[15.0, 30.0, 60.0])
    p.add_argument("--s", nargs="+", type=float, default=[-2.0, -1.0, 0.0, 1.0])
    p.add_argument("--raw-s", action="store_true")
    p.add_argument("--out")
    args = p.parse_args()
    cfg = EdgeExperiment(args.models, args.thetas, args.s, not args.raw_s)
    table = run(cfg)
    for row in table:
        print(f"{row['model']:>4} theta={row['theta']:6.1f} s={row['s']:+5.2f} "
              f"gap={row['discrete']:.8f} target={row['target']:.8f} dev={row['deviation']:.3e}")
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            w = csv.DictWriter(fh, fieldnames=list(table[0]))
            w.writeheader()
            w.writerows(table)


if __name__ == "__main__":
    main()
