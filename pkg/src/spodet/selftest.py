"""Quick invariant suite behind ``spodet selftest`` (a few seconds; full coverage lives in tests/)."""

from __future__ import annotations

import numpy as np

from .characters import cauchy_check, sp_o_via_expansion, symplectic
from .continuum import ContinuumKernel, airy_kernel_closed_form, continuum_kernel_value, tw2
from .edge import edge_gap_discrete, saddle_derivatives
from .kernel import KernelSpec, cauchy_det_identity_check, kernel_matrix, quadrature_matrix, series_matrix
from .measures import MeasureSpec, brute_correlation, plancherel_ab_equals_msp
from .partitions import HalfInt
from .specialization import plancherel
from .toeplitz_hankel import Symbol, bo_residual, gessel_residual, szego_convergence


def _check(name, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported not raised
        return name, False, f"{type(exc).__name__}: {exc}"
    return name, bool(ok), detail


def run_selftest(seed: int = 0) -> list[tuple[str, bool, str]]:
    rng = np.random.default_rng(seed)
    meas = MeasureSpec("sp", plancherel(0.4), plancherel(0.3))
    spec = KernelSpec.from_measure(meas)
    sym = Symbol((0.4,), (0.3,))

    def cauchy():
        lhs, rhs, _ = cauchy_check("sp", [0.9], [0.3])
        r = abs(lhs - rhs) / abs(rhs)
        return r < 1e-8, f"rel {r:.2e}"

    def expansion():
        rho = plancherel(0.7)
        d = abs(symplectic((3, 2), rho) - sp_o_via_expansion("sp", (3, 2), rho))
        return d < 1e-12, f"abs {d:.2e}"

    def correlation():
        pts = [HalfInt.of(0.5), HalfInt.of(-1.5)]
        det = kernel_matrix(spec, pts).det()
        brute = brute_correlation(meas, pts, 10)
        d = abs(det - brute.value)
        return d < 1e-7 + brute.tail_bound, f"abs {d:.2e}"

    def methods():
        pts = [HalfInt.of(x) for x in (-2.5, -0.5, 1.5)]
        d = np.max(np.abs(series_matrix(spec, pts) - quadrature_matrix(spec, pts)))
        return d < 1e-9, f"max {d:.2e}"

    def gessel():
        r = max(gessel_residual(k, sym, 3, 10) for k in (1, 2, 3, 4))
        return r < 1e-8, f"max {r:.2e}"

    def szego():
        d = szego_convergence("sp", sym, [8])[0][2]
        return d < 1e-10, f"dev {d:.2e}"

    def bo():
        r = max(bo_residual(k, sym, 2) for k in ("sp", "o"))
        return r < 1e-8, f"max {r:.2e}"

    def plancherel_ab():
        d = plancherel_ab_equals_msp(0.8, 8)
        return d < 1e-12, f"max {d:.2e}"

    def cauchy_det():
        n = 3
        z = rng.uniform(0.6, 1.4, n) * np.exp(2j * np.pi * rng.random(n))
        w = rng.uniform(0.05, 0.4, n) * np.exp(2j * np.pi * rng.random(n))
        lhs, rhs = cauchy_det_identity_check(z, w)
        r = abs(lhs - rhs) / abs(rhs)
        return r < 1e-10, f"rel {r:.2e}"

    def airy_kernel():
        d = abs(continuum_kernel_value(ContinuumKernel("airy"), 0.3, -1.1) - airy_kernel_closed_form(0.3, -1.1))
        return d < 1e-12, f"abs {d:.2e}"

    def tracy_widom():
        v = tw2(-2.0)
        return abs(v - 0.41322414250512257) < 1e-9, f"F2(-2) = {v:.12f}"

    def edge_reality():
        g = edge_gap_discrete("pa", 10.0, 0.0).value
        return abs(g.imag) < 1e-8 and 0 <= g.real <= 1, f"{g.real:.6f}{g.imag:+.1e}i"

    def saddle():
        d1, d2, d3 = saddle_derivatives()
        return abs(d1) < 1e-15 and abs(d2) < 1e-15 and abs(d3 - 2) < 1e-15, f"{d1}, {d2}, {d3}"

    checks = [
        ("cauchy identity", cauchy),
        ("expansion over class A", expansion),
        ("correlation vs enumeration", correlation),
        ("series vs quadrature kernel", methods),
        ("gessel identities", gessel),
        ("szego limit", szego),
        ("borodin-okounkov identity", bo),
        ("P_A as complex sp measure", plancherel_ab),
        ("cauchy determinant evaluation", cauchy_det),
        ("airy kernel closed form", airy_kernel),
        ("tracy-widom F2(-2)", tracy_widom),
        ("P_A edge gap is a probability", edge_reality),
        ("saddle point data", saddle),
    ]
    return [_check(name, fn) for name, fn in checks]
