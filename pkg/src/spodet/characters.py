"""Schur, skew Schur, symplectic and orthogonal characters of a specialization."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .partitions import Partition, as_partition, contains, enumerate_partitions
from .specialization import Specialization, from_variables, h_coeffs

KINDS = ("schur", "symplectic", "orthogonal")


@lru_cache(maxsize=256)
def _h_table(rho: Specialization, N: int) -> np.ndarray:
    h = h_coeffs(rho, N)
    h.setflags(write=False)
    return h


def _h_getter(rho: Specialization, top: int):
    # round the table size up so nearby calls share the cache entry
    N = max(16, 1 << max(top, 1).bit_length())
    h = _h_table(rho, N)

    def get(k: int) -> complex:
        return h[k] if k >= 0 else 0.0

    return get


def _det(rows) -> complex:
    if not rows:
        return 1.0 + 0j
    return complex(np.linalg.det(np.array(rows, dtype=complex)))


def schur(lam, rho: Specialization) -> complex:
    lam = as_partition(lam)
    n = len(lam)
    h = _h_getter(rho, (lam[0] if lam else 0) + n)
    return _det([[h(lam[i] - i + j) for j in range(n)] for i in range(n)])


def skew_schur(lam, mu, rho: Specialization) -> complex:
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(lam, mu):
        return 0j
    n = len(lam)
    h = _h_getter(rho, (lam[0] if lam else 0) + n)
    return _det([[h(lam[i] - mu.part(j + 1) - i + j) for j in range(n)] for i in range(n)])


def symplectic(lam, rho: Specialization) -> complex:
    lam = as_partition(lam)
    n = len(lam)
    if n == 0:
        return 1.0 + 0j
    h = _h_getter(rho, lam[0] + n + 1)
    # 1-based: h_{lam_i - i + j} + h_{lam_i - i - j + 2}
    rows = [[h(lam[i] - i + j) + h(lam[i] - i - j) for j in range(n)] for i in range(n)]
    return 0.5 * _det(rows)


def orthogonal(lam, rho: Specialization) -> complex:
    lam = as_partition(lam)
    n = len(lam)
    h = _h_getter(rho, (lam[0] if lam else 0) + n + 1)
    # 1-based: h_{lam_i - i + j} - h_{lam_i - i - j}
    rows = [[h(lam[i] - i + j) - h(lam[i] - i - j - 2) for j in range(n)] for i in range(n)]
    return _det(rows)


def character(kind: str, lam, rho: Specialization) -> complex:
    if kind in ("schur", "s"):
        return schur(lam, rho)
    if kind in ("symplectic", "sp"):
        return symplectic(lam, rho)
    if kind in ("orthogonal", "o"):
        return orthogonal(lam, rho)
    raise ValueError(f"unknown character kind {kind!r}")


def sp_o_via_expansion(kind: str, lam, rho: Specialization, class_cap: int | None = None) -> complex:
    """sp_lam (resp. o_lam) as the signed sum of s_{lam/alpha} over alpha in class A (resp. B)."""
    lam = as_partition(lam)
    cls = {"sp": "A", "symplectic": "A", "o": "B", "orthogonal": "B"}[kind]
    cap = lam.size if class_cap is None else class_cap
    if cap < lam.size:
        raise ValueError("class_cap must be at least |lambda|")
    total = 0j
    for alpha in enumerate_partitions(lam.size, ("class", cls), cap=max(cap, lam.size)):
        if contains(lam, alpha):
            total += (-1) ** (alpha.size // 2) * skew_schur(lam, alpha, rho)
    return total


def cauchy_rhs(kind: str, xs, ys, odd: bool = False) -> complex:
    xs = [complex(x) for x in xs]
    ys = [complex(y) for y in ys]
    out = 1.0 + 0j
    for i, yi in enumerate(ys):
        for j, yj in enumerate(ys):
            if i < j or (kind in ("o", "orthogonal") and i == j):
                out *= 1 - yi * yj
        for x in xs:
            out /= (1 - yi * x) * (1 - yi / x)
        if odd:
            out /= 1 - yi
    return out


def cauchy_check(kind: str, xs, ys, tol: float = 1e-13, max_weight: int = 400, odd: bool = False):
    """Truncated Cauchy sum over partitions vs the closed product.

    Returns ``(lhs, rhs, M)`` with ``M`` the truncation weight reached.
    """
    xs = [complex(x) for x in xs]
    ys = [complex(y) for y in ys]
    if any(x == 0 for x in xs):
        raise ValueError("x variables must be nonzero")
    xmax = max((max(abs(x), 1 / abs(x)) for x in xs), default=1.0)
    if odd:
        xmax = max(xmax, 1.0)
    ymax = max((abs(y) for y in ys), default=0.0)
    if ymax * xmax >= 1:
        raise ValueError("divergent parameters: need max|y| * max(|x|, 1/|x|) < 1")
    rhs = cauchy_rhs(kind, xs, ys, odd)
    X = from_variables(xs, "doubled_plus_one" if odd else "doubled")
    Y = from_variables(ys, "plain")
    char = symplectic if kind in ("sp", "symplectic") else orthogonal
    if not ys:
        return 1.0 + 0j, rhs, 0
    lhs = 0j
    shells = []
    for n in range(max_weight + 1):
        shell = 0j
        for lam in enumerate_partitions(n, ("max_length", len(ys)), cap=max_weight, min_weight=n):
            shell += char(lam, X) * schur(lam, Y)
        lhs += shell
        shells.append(abs(shell))
        if n >= 4 and shells[-1] + shells[-2] < tol * abs(rhs):
            return lhs, rhs, n
    raise RuntimeError(f"Cauchy sum did not converge by weight {max_weight}")
