"""Toeplitz+Hankel determinants of symbols f = exp(R+ + R-).

Each determinant family is checked three ways: against restricted sums over partitions,
against its large-size limit, and against a discrete Fredholm determinant."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernel import KernelSpec, fredholm_det_discrete
from .measures import MeasureSpec, gap_restricted_sum, log_normalization
from .partitions import HalfInt
from .series import exp_power_series
from .specialization import Specialization

FOURIER_TOL = 1e-15


@dataclass(frozen=True)
class Symbol:
    """f(z) = exp(sum_k rho_plus[k-1] z^k + sum_k rho_minus[k-1] z^-k)."""

    rho_plus: tuple = ()
    rho_minus: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rho_plus", tuple(complex(v) for v in self.rho_plus))
        object.__setattr__(self, "rho_minus", tuple(complex(v) for v in self.rho_minus))

    def check(self) -> "Symbol":
        """The symbol f(-z)^{-1}: coefficients rho_k -> -(-1)^k rho_k."""
        flip = lambda seq: tuple(-((-1) ** k) * v for k, v in enumerate(seq, start=1))  # noqa: E731
        return Symbol(flip(self.rho_plus), flip(self.rho_minus))

    def specializations(self) -> tuple[Specialization, Specialization]:
        """rho+/- with p_k = k * rho_k, so that f(z) = H(rho+; z) H(rho-; 1/z)."""
        to_spec = lambda seq, tag: Specialization(  # noqa: E731
            dense=tuple(k * v for k, v in enumerate(seq, start=1)), label=tag
        )
        return to_spec(self.rho_plus, "symbol+"), to_spec(self.rho_minus, "symbol-")

    def measure(self, kind: str) -> MeasureSpec:
        rp, rm = self.specializations()
        return MeasureSpec(kind, rp, rm)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for k, v in enumerate(self.rho_plus, start=1):
            out = out + v * z**k
        for k, v in enumerate(self.rho_minus, start=1):
            out = out + v * z ** (-k)
        return np.exp(out)


def _coeffs_at_order(s: Symbol, N: int) -> np.ndarray:
    up = np.zeros(N + 1, dtype=complex)
    down = np.zeros(N + 1, dtype=complex)
    up[1 : min(N, len(s.rho_plus)) + 1] = s.rho_plus[:N]
    down[1 : min(N, len(s.rho_minus)) + 1] = s.rho_minus[:N]
    a = exp_power_series(up, N)
    b = exp_power_series(down, N)
    # f_k = sum_j a_{k+j} b_j over the full range k in [-N, N]
    full = np.convolve(a, b[::-1])
    return full  # index k + N


def fourier_coeffs(s: Symbol, k_min: int, k_max: int, N: int | None = None, tol: float = FOURIER_TOL) -> np.ndarray:
    """Fourier coefficients f_{k_min}, ..., f_{k_max}, truncation order doubled until stable."""
    need = max(abs(k_min), abs(k_max))
    N = max(N or 0, need + 8, 16)
    prev = None
    for _ in range(12):
        full = _coeffs_at_order(s, N)
        cur = full[np.arange(k_min, k_max + 1) + N]
        if prev is not None and np.max(np.abs(cur - prev), initial=0.0) <= tol * max(1.0, np.max(np.abs(cur), initial=0.0)):
            return cur
        prev = cur
        N *= 2
    raise RuntimeError("Fourier coefficients did not converge")


def th_matrix(s: Symbol, kind: int, size: int) -> np.ndarray:
    if kind not in (1, 2, 3, 4):
        raise ValueError("kind must be 1, 2, 3 or 4")
    if size == 0:
        return np.zeros((0, 0), dtype=complex)
    base = s.check() if kind in (2, 4) else s
    # entries read the coefficient of z^{-k}: the Hankel part must see the R- side
    lo, hi = -2 * size, size - 1
    c = fourier_coeffs(base, lo, hi)
    f = lambda k: c[-k - lo]  # noqa: E731
    i, j = np.meshgrid(np.arange(size), np.arange(size), indexing="ij")
    if kind in (1, 4):
        return f(i - j) + f(i + j)
    return f(i - j) - f(i + j + 2)


def th_det(s: Symbol, kind: int, size: int) -> complex:
    """D^1_n = det[f_{i-j} + f_{i+j}], D^2_m = det[fc_{i-j} - fc_{i+j+2}],
    D^3_n = det[f_{i-j} - f_{i+j+2}], D^4_m = det[fc_{i-j} + fc_{i+j}] (fc: check symbol),
    0 <= i, j < size, where f_k here denotes the coefficient of z^{-k} in f."""
    if size == 0:
        return 1.0 + 0j
    return complex(np.linalg.det(th_matrix(s, kind, size)))


_GESSEL = {
    # kind: (measure, constraint, factor on the determinant)
    1: ("sp", "max_length", 0.5),
    2: ("sp", "max_part", 1.0),
    3: ("o", "max_length", 1.0),
    4: ("o", "max_part", 0.5),
}


def gessel_sides(kind: int, s: Symbol, size: int, M: int) -> tuple[complex, complex]:
    """(structured determinant side, restricted Cauchy sum side) of the Gessel identity."""
    mkind, constraint, factor = _GESSEL[kind]
    det_side = th_det(s, kind, size)
    if size > 0:
        det_side *= factor
    sum_side = gap_restricted_sum(s.measure(mkind), (constraint, size), M).value
    return det_side, sum_side


def gessel_residual(kind: int, s: Symbol, size: int, M: int) -> float:
    lhs, rhs = gessel_sides(kind, s, size, M)
    return abs(lhs - rhs)


def szego_log_rhs(kind: str, s: Symbol, kmax: int | None = None) -> complex:
    sign = 1.0 if kind == "sp" else -1.0
    rp, rm = s.rho_plus, s.rho_minus
    get = lambda seq, k: seq[k - 1] if k <= len(seq) else 0.0  # noqa: E731
    top = kmax if kmax is not None else max(len(rp), len(rm))
    total = 0j
    for k in range(1, top + 1):
        total += k * get(rp, k) * get(rm, k) + sign * get(rm, 2 * k) - k * get(rm, k) ** 2 / 2
    return total


def szego_rhs(kind: str, s: Symbol) -> complex:
    """exp sum_k (k rho+_k rho-_k +- rho-_{2k} - k (rho-_k)^2 / 2), + for sp, - for o."""
    return complex(np.exp(szego_log_rhs(kind, s)))


def szego_convergence(kind: str, s: Symbol, sizes, family: int | None = None) -> list[tuple[int, complex, float]]:
    """Rows (size, D-value, |D-value - limit|). ``family`` picks the determinant: for sp the
    default is D^2 (1 gives half D^1); for o the default is D^3 (4 gives half D^4)."""
    family = family or (2 if kind == "sp" else 3)
    allowed = {"sp": (1, 2), "o": (3, 4)}[kind]
    if family not in allowed:
        raise ValueError(f"family {family} does not belong to kind {kind}")
    factor = _GESSEL[family][2]
    target = szego_rhs(kind, s)
    rows = []
    for n in sizes:
        val = th_det(s, family, n) * (factor if n > 0 else 1.0)
        rows.append((n, val, abs(val - target)))
    return rows


def bo_sides(kind: str, s: Symbol, m: int, method: str = "series") -> tuple[complex, complex]:
    """(D^2_m, Z det(1 - K_sp)) for sp, (D^4_m / 2, Z det(1 - K_o)) for o."""
    meas = s.measure(kind)
    if kind == "sp":
        lhs = th_det(s, 2, m)
    else:
        lhs = th_det(s, 4, m) * (0.5 if m > 0 else 1.0)
    Z = np.exp(log_normalization(meas))
    fd = fredholm_det_discrete(KernelSpec.from_measure(meas), HalfInt(2 * m + 1), method=method)
    return lhs, complex(Z * fd.value)


def bo_residual(kind: str, s: Symbol, m: int, method: str = "series") -> float:
    lhs, rhs = bo_sides(kind, s, m, method)
    return abs(lhs - rhs)
