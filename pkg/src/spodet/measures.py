"""Symplectic/orthogonal Schur-type measures on partitions and exact enumeration oracles."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from .characters import orthogonal, schur, symplectic
from .partitions import HalfInt, Partition, dim_syt, enumerate_partitions, in_class, point_set
from .specialization import Specialization, plancherel, zero

DEFAULT_MEASURE_CAP = 14


def max_weight_cap() -> int:
    return int(os.environ.get("SPODET_MAX_WEIGHT", DEFAULT_MEASURE_CAP))


def _check_cap(M: int):
    cap = max_weight_cap()
    if M > cap:
        raise ValueError(f"enumeration weight {M} exceeds cap {cap} (set SPODET_MAX_WEIGHT to raise it)")


@dataclass(frozen=True)
class MeasureSpec:
    kind: str
    rho_plus: Specialization
    rho_minus: Specialization

    def __post_init__(self):
        if self.kind not in ("sp", "o"):
            raise ValueError(f"measure kind must be 'sp' or 'o', got {self.kind!r}")


@dataclass(frozen=True)
class PlancherelAB:
    cls: str
    theta: float

    def __post_init__(self):
        if self.cls not in ("A", "B"):
            raise ValueError("class must be 'A' or 'B'")
        if not self.theta > 0:
            raise ValueError("theta must be positive")


@dataclass(frozen=True)
class EnumerationResult:
    value: complex
    tail_bound: float
    max_weight: int


def p_sp(theta: float) -> MeasureSpec:
    return MeasureSpec("sp", plancherel(2 * theta), plancherel(theta))


def p_o(theta: float) -> MeasureSpec:
    return MeasureSpec("o", plancherel(2 * theta), plancherel(theta))


def ab_as_measure(cls: str, theta: float) -> MeasureSpec:
    """P_A (resp. P_B) as the sp (resp. o) measure with rho+ = 0, rho- = pl_{i theta}."""
    return MeasureSpec("sp" if cls == "A" else "o", zero(), plancherel(1j * theta))


def weight(m: MeasureSpec, lam) -> complex:
    char = symplectic if m.kind == "sp" else orthogonal
    return char(lam, m.rho_plus) * schur(lam, m.rho_minus)


def log_normalization(m: MeasureSpec, tol: float = 1e-17, kmax: int = 100_000) -> complex:
    sign = 1.0 if m.kind == "sp" else -1.0
    rp, rm = m.rho_plus, m.rho_minus
    finite = not rp.atoms and not rm.atoms
    last = max(len(rp.dense), len(rm.dense))
    total = 0j
    small = 0
    for k in range(1, kmax + 1):
        pk_m = rm.p(k)
        term = rp.p(k) * pk_m / k + sign * rm.p(2 * k) / (2 * k) - pk_m**2 / (2 * k)
        total += term
        if not np.isfinite(total):
            raise OverflowError("normalization series diverges")
        if finite:
            if k >= last:
                return total
            continue
        small = small + 1 if abs(term) < tol else 0
        if small >= 3 and k > last:
            return total
    raise RuntimeError("normalization series did not converge (growth condition violated?)")


def normalization(m: MeasureSpec) -> complex:
    """Z = exp sum_k (p_k(+) p_k(-)/k +- p_2k(-)/2k - p_k(-)^2/2k), + for sp and - for o."""
    return complex(np.exp(log_normalization(m)))


def _tail_estimate(shells: list) -> float:
    """Geometric extrapolation of the absolute weight shells beyond the last one.

    Uses two-step ratios so parity-supported sequences (only even weights) are handled.
    """
    a = np.asarray(shells, dtype=float)
    if len(a) < 3 or a[-1] == 0 and a[-2] == 0:
        return 0.0
    ratios = []
    for n in range(len(a) - 1, max(len(a) - 4, 1), -1):
        if a[n - 2] > 0:
            ratios.append(math.sqrt(a[n] / a[n - 2]))
    if not ratios:
        return float("inf")
    r = max(ratios)
    if r >= 1:
        return float("inf")
    last = max(a[-1], a[-2] * r)
    return 2.0 * last * r / (1 - r)


def _shell_sums(m: MeasureSpec, M: int, keep, constraint=None):
    """Sum of weights with ``keep(lam)`` true, plus absolute shells of all weights."""
    total = 0j
    shells = [0.0] * (M + 1)
    for lam in enumerate_partitions(M, constraint, cap=max(M, 1)):
        w = weight(m, lam)
        shells[lam.size] += abs(w)
        if keep(lam):
            total += w
    return total, shells


def enumerated_sum(m: MeasureSpec, M: int) -> EnumerationResult:
    _check_cap(M)
    total, shells = _shell_sums(m, M, lambda lam: True)
    return EnumerationResult(total, _tail_estimate(shells), M)


def _doubled(pts) -> list:
    return [HalfInt.of(p).doubled for p in pts]


def _contains_points(lam: Partition, dpts) -> bool:
    floor = -2 * len(lam) - 1
    s = point_set(lam)
    return all(d < floor or d in s for d in dpts)


def brute_correlation(m: MeasureSpec, pts: Iterable, M: int) -> EnumerationResult:
    """Z^-1 sum of weights over |lam| <= M with the given half-integers all in S(lam)."""
    _check_cap(M)
    dpts = _doubled(pts)
    total, shells = _shell_sums(m, M, lambda lam: _contains_points(lam, dpts))
    Z = normalization(m)
    return EnumerationResult(total / Z, _tail_estimate(shells) / abs(Z), M)


def brute_gap(m: MeasureSpec, window: Iterable, M: int) -> EnumerationResult:
    """Z^-1 sum of weights over |lam| <= M with S(lam) avoiding every point of ``window``."""
    _check_cap(M)
    dpts = _doubled(window)

    def keep(lam):
        floor = -2 * len(lam) - 1
        s = point_set(lam)
        return not any(d < floor or d in s for d in dpts)

    total, shells = _shell_sums(m, M, keep)
    Z = normalization(m)
    return EnumerationResult(total / Z, _tail_estimate(shells) / abs(Z), M)


def gap_by_inclusion_exclusion(m: MeasureSpec, window, M: int) -> complex:
    """Alternating sum of correlations over subsets of ``window``; the empty subset uses the
    truncated total mass so every term shares the same |lam| <= M cut."""
    window = list(window)
    total = 0j
    for r in range(len(window) + 1):
        for sub in combinations(window, r):
            total += (-1) ** r * brute_correlation(m, sub, M).value
    return total


def gap_restricted_sum(m: MeasureSpec, constraint: tuple, M: int) -> EnumerationResult:
    """Unnormalized sum of weights over |lam| <= M with lam_1 <= k (``("max_part", k)``)
    or l(lam) <= k (``("max_length", k)``)."""
    _check_cap(M)
    if constraint[0] not in ("max_part", "max_length"):
        raise ValueError("constraint must be ('max_part', k) or ('max_length', k)")
    total, shells = _shell_sums(m, M, lambda lam: True, constraint)
    return EnumerationResult(total, _tail_estimate(shells), M)


def plancherel_ab_weight(p: PlancherelAB, lam) -> float:
    lam = Partition(lam)
    if not in_class(lam, p.cls):
        return 0.0
    n = lam.size
    return math.exp(-p.theta**2 / 2) * p.theta**n * dim_syt(lam) / math.factorial(n)


def plancherel_ab_sum(p: PlancherelAB, M: int) -> EnumerationResult:
    """sum over the class of theta^|a| dim a / |a|! up to weight M (no e^{-theta^2/2})."""
    _check_cap(M)
    shells = [0.0] * (M + 1)
    for lam in enumerate_partitions(M, ("class", p.cls), cap=max(M, 1)):
        n = lam.size
        shells[n] += p.theta**n * dim_syt(lam) / math.factorial(n)
    return EnumerationResult(complex(sum(shells)), _tail_estimate(shells), M)


def plancherel_ab_equals_msp(theta: float, M: int, cls: str = "A") -> float:
    """max over the class (|lam| <= M) of |P_cls(lam) - Z^-1 char_lam(0) s_lam(pl_{i theta})|."""
    _check_cap(M)
    if theta == 0:
        return 0.0
    p = PlancherelAB(cls, theta)
    m = ab_as_measure(cls, theta)
    Z = normalization(m)
    worst = 0.0
    for lam in enumerate_partitions(M, ("class", cls), cap=max(M, 1)):
        worst = max(worst, abs(plancherel_ab_weight(p, lam) - weight(m, lam) / Z))
    return worst
