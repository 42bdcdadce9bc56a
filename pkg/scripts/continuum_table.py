"""F_2 and the two Airy_{2->1}-type determinants on a grid, with the Nystrom refinement shift."""

import argparse

import numpy as np

from spodet.continuum import ContinuumKernel, NystromConfig, fredholm_det_continuum


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lo", type=float, default=-6.0)
    p.add_argument("--hi", type=float, default=4.0)
    p.add_argument("--step", type=float, default=0.5)
    p.add_argument("--length", type=float, default=12.0)
    p.add_argument("--nodes", type=int, default=40)
    args = p.parse_args()
    cfg = NystromConfig(args.length, args.nodes)
    kernels = [ContinuumKernel(t) for t in ("airy", "a21_plus", "a21_minus")]
    print(f"{'s':>6} {'F2':>18} {'det(1-A+)':>18} {'det(1-A-)':>18} {'max shift':>10}")
    for s in np.arange(args.lo, args.hi + args.step / 2, args.step):
        dets = [fredholm_det_continuum(k, float(s), cfg) for k in kernels]
        shift = max(abs(d.value - d.refined_value) for d in dets)
        print(f"{s:6.2f} " + " ".join(f"{d.value:18.12f}" for d in dets) + f" {shift:10.1e}")


if __name__ == "__main__":
    main()
