"""Correlation kernels of the symplectic/orthogonal Schur-type measures.

Two independent evaluation routes:

* ``series``: Laurent coefficients f_n of F and g_n of 1/F, combined through the partial
  fraction forms of the geometric factor,

      (1 - w^2) / ((1 - wz)(1 - w/z)) = 1/(1 - wz) + 1/(1 - w/z) - 1,
      (1 - z^2) / ((1 - wz)(1 - w/z)) = 1/(1 - w/z) - z^2/(1 - wz),

  expanded in |w| < |z|, |wz| < 1. The coefficients come either from truncated series
  arithmetic (``coeffs="exact"``) or from an FFT of F on a circle (``coeffs="fft"``), the
  latter being the only stable choice for large Plancherel parameters.
* ``quadrature``: the double trapezoidal rule on two concentric circles applied to the
  unfactored integrand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .measures import MeasureSpec
from .partitions import HalfInt
from .series import SeriesTrunc
from .specialization import Specialization, growth_radius

SERIES_TOL = 1e-12
MAX_SERIES_ORDER = 1 << 14
MAX_NODES = 1 << 13


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class KernelSpec:
    """Kernel data: variant (``"sp"``/``"o"``) and the pair of specializations defining F.

    ``rotate`` evaluates Laurent coefficients of z -> F(iz) and undoes the rotation afterwards.
    """

    kind: str
    rho_plus: Specialization
    rho_minus: Specialization
    rotate: bool = False

    def __post_init__(self):
        if self.kind not in ("sp", "o"):
            raise ValueError(f"kernel kind must be 'sp' or 'o', got {self.kind!r}")

    @classmethod
    def from_measure(cls, m: MeasureSpec, rotate: bool = False) -> "KernelSpec":
        return cls(m.kind, m.rho_plus, m.rho_minus, rotate)

    def log_F(self, z):
        z = np.asarray(z, dtype=complex)
        return self.rho_plus.log_H(z) - self.rho_minus.log_H(z) - self.rho_minus.log_H(1 / z)

    def F(self, z):
        return np.exp(self.log_F(z))

    def annulus(self) -> tuple[float, float]:
        """(inner, outer) radii of the annulus where F is analytic and nonvanishing."""
        rp, rm = growth_radius(self.rho_plus), growth_radius(self.rho_minus)
        outer = min(1 / rp if rp > 0 else math.inf, 1 / rm if rm > 0 else math.inf)
        return rm, outer


@dataclass(frozen=True)
class ContourParams:
    r_z: float
    r_w: float
    nodes: int = 256

    def __post_init__(self):
        if not self.r_z > self.r_w > 0:
            raise ValueError("need r_z > r_w > 0")
        if self.r_z * self.r_w >= 1:
            raise ValueError("need r_z * r_w < 1")
        if self.nodes < 4 or self.nodes & (self.nodes - 1):
            raise ValueError("nodes must be a power of two")

    def validate_for(self, spec: KernelSpec):
        inner, outer = spec.annulus()
        if not self.r_z < outer:
            raise ValueError(f"r_z = {self.r_z} outside the analyticity radius {outer}")
        if not self.r_w > inner:
            raise ValueError(f"r_w = {self.r_w} inside the singular radius {inner}")


def auto_contour(spec: KernelSpec, nodes: int = 256) -> ContourParams:
    inner, outer = spec.annulus()
    if inner >= min(outer, 1.0):
        raise ValueError("empty admissible annulus for the contour integral")
    if outer > 1:
        r_z = 1.0
        lo = max(inner, 0.5)
        r_w = math.sqrt(lo)
    else:
        lo = inner if inner > 0 else outer / 2
        r_z = outer ** (2 / 3) * lo ** (1 / 3)
        r_w = outer ** (1 / 3) * lo ** (2 / 3)
    return ContourParams(r_z, r_w, nodes)


def edge_contour(theta: float, nodes: int = 1024) -> ContourParams:
    """Circles at 1 +- theta^{-1/3}, passing close to the double critical point."""
    d = min(theta ** (-1 / 3), 0.5)
    return ContourParams(1 + d, 1 - d, nodes)


@dataclass
class KernelMatrix:
    points: list
    entries: np.ndarray
    cols: Optional[list] = None

    def det(self) -> complex:
        return complex(np.linalg.det(self.entries)) if len(self.points) else 1.0 + 0j


def _half_ints(pts) -> list[HalfInt]:
    return [HalfInt.of(p) for p in pts]


# -- Laurent coefficients of F and 1/F ---------------------------------------------------------


class LaurentCoeffs:
    """Coefficient arrays for F and 1/F on exponents [-N, N] with zero padding lookups."""

    def __init__(self, f: np.ndarray, g: np.ndarray, N: int):
        self.f, self.g, self.N = f, g, N

    def lookup(self, arr: np.ndarray, idx: np.ndarray) -> np.ndarray:
        idx = np.asarray(idx)
        out = np.zeros(idx.shape, dtype=complex)
        ok = np.abs(idx) <= self.N
        out[ok] = arr[idx[ok] + self.N]
        return out


def _log_F_series(spec: KernelSpec, N: int, phase: complex) -> SeriesTrunc:
    n = np.arange(1, N + 1)
    pp = spec.rho_plus.powersums(N)[1:]
    pm = spec.rho_minus.powersums(N)[1:]
    coeffs = np.zeros(2 * N + 1, dtype=complex)
    coeffs[N + 1 :] = (pp - pm) / n * phase**n
    coeffs[N - 1 :: -1] = -pm / n * phase ** (-n)
    return SeriesTrunc(coeffs, N)


def _unrotate(c: np.ndarray, N: int) -> np.ndarray:
    n = np.arange(-N, N + 1)
    return c * (1j ** (-(n % 4)))


def laurent_exact(spec: KernelSpec, N: int) -> LaurentCoeffs:
    phase = 1j if spec.rotate else 1.0
    logF = _log_F_series(spec, N, phase)
    f = logF.exp().coeffs
    g = (-logF).exp().coeffs
    if spec.rotate:
        f, g = _unrotate(f, N), _unrotate(g, N)
    return LaurentCoeffs(f, g, N)


def laurent_fft(spec: KernelSpec, n_fft: int, radius: Optional[float] = None) -> LaurentCoeffs:
    inner, outer = spec.annulus()
    if radius is None:
        radius = 1.0 if inner < 1 < outer else math.sqrt(max(inner, 1e-3) * min(outer, 1e3))
    phi = 2 * np.pi * np.arange(n_fft) / n_fft
    z = radius * np.exp(1j * phi) * (1j if spec.rotate else 1.0)
    logF = spec.log_F(z)
    N = n_fft // 2 - 1
    n = np.arange(-N, N + 1)
    scale = radius ** (-n.astype(float))

    def coeffs(vals):
        c = np.fft.fft(vals) / n_fft
        return c[n % n_fft] * scale

    f, g = coeffs(np.exp(logF)), coeffs(np.exp(-logF))
    if spec.rotate:
        f, g = _unrotate(f, N), _unrotate(g, N)
    return LaurentCoeffs(f, g, N)


def _series_matrix(spec: KernelSpec, lc: LaurentCoeffs, rows: list[HalfInt], cols: list[HalfInt]) -> np.ndarray:
    A = np.array([h.shift for h in rows])
    B = np.array([-h.shift for h in cols])
    m_max = max(int(B.max()) + lc.N, 0) if len(B) else 0
    m = np.arange(m_max + 1)[:, None]
    G = lc.lookup(lc.g, B[None, :] - m)
    if spec.kind == "sp":
        Fm = lc.lookup(lc.f, A[None, :] + m) + lc.lookup(lc.f, A[None, :] - m)
        K = Fm.T @ G - np.outer(lc.lookup(lc.f, A), lc.lookup(lc.g, B))
    else:
        Fm = lc.lookup(lc.f, A[None, :] + m) - lc.lookup(lc.f, A[None, :] - m - 2)
        K = Fm.T @ G
    return K


def series_matrix(
    spec: KernelSpec,
    rows: Sequence,
    cols: Optional[Sequence] = None,
    N: Optional[int] = None,
    coeffs: str = "exact",
    tol: float = SERIES_TOL,
    max_order: int = MAX_SERIES_ORDER,
) -> np.ndarray:
    """Kernel entries K(a, b), a in ``rows``, b in ``cols``, with adaptive doubling of the
    truncation order until successive matrices agree to ``tol`` (absolute)."""
    rows = _half_ints(rows)
    cols = rows if cols is None else _half_ints(cols)
    if not rows or not cols:
        return np.zeros((len(rows), len(cols)), dtype=complex)
    reach = max(abs(h.shift) for h in rows) + max(abs(h.shift) for h in cols) + 4
    N = max(N or 0, reach, 16)
    if coeffs == "exact":
        N = 1 << (N - 1).bit_length()
        build = lambda order: laurent_exact(spec, order)  # noqa: E731
    elif coeffs == "fft":
        N = 1 << (2 * N + 2).bit_length()
        build = lambda order: laurent_fft(spec, order)  # noqa: E731
    else:
        raise ValueError(f"unknown coefficient source {coeffs!r}")
    prev = _series_matrix(spec, build(N), rows, cols)
    while N < max_order:
        N *= 2
        cur = _series_matrix(spec, build(N), rows, cols)
        if np.all(np.isfinite(cur)) and np.max(np.abs(cur - prev)) < tol:
            return cur
        prev = cur
    raise ConvergenceError(f"series kernel did not stabilise by order {max_order}")


def kernel_entry_series(spec: KernelSpec, a, b, N: Optional[int] = None, coeffs: str = "exact") -> complex:
    a, b = HalfInt.of(a), HalfInt.of(b)
    if N is not None and N < abs(float(a)) + abs(float(b)) + 4:
        raise ValueError("truncation order must be at least |a| + |b| + 4")
    return complex(series_matrix(spec, [a], [b], N=N, coeffs=coeffs)[0, 0])


# -- double contour quadrature ----------------------------------------------------------------


def _quadrature_matrix(spec: KernelSpec, rows, cols, c: ContourParams, chunk: int = 512) -> np.ndarray:
    n = c.nodes
    phi = 2 * np.pi * np.arange(n) / n
    z = c.r_z * np.exp(1j * phi)
    w = c.r_w * np.exp(1j * phi)
    A = np.array([h.shift for h in rows], dtype=float)
    B = np.array([-h.shift for h in cols], dtype=float)
    logFz, logFw = spec.log_F(z), spec.log_F(w)
    # z^{-A} and w^{-B} in log form to avoid overflow for large |A|, |B|
    U = np.exp(logFz[None, :] - A[:, None] * np.log(z)[None, :])
    V = np.exp(-logFw[:, None] - B[None, :] * np.log(w)[:, None])
    if spec.kind == "sp":
        V = V * (1 - w**2)[:, None]
    else:
        U = U * (1 - z**2)[None, :]
    GV = np.empty((n, len(cols)), dtype=complex)
    for s in range(0, n, chunk):
        zz = z[s : s + chunk, None]
        G = 1.0 / ((1 - w[None, :] * zz) * (1 - w[None, :] / zz))
        GV[s : s + chunk] = G @ V
    return (U @ GV) / n**2


def quadrature_matrix(
    spec: KernelSpec,
    rows: Sequence,
    cols: Optional[Sequence] = None,
    contour: Optional[ContourParams] = None,
    tol: float = 1e-13,
    max_nodes: int = MAX_NODES,
    adaptive: bool = True,
) -> np.ndarray:
    """Double trapezoidal rule; node count doubled until successive results agree to ``tol``
    relative to max(1, |K|)."""
    rows = _half_ints(rows)
    cols = rows if cols is None else _half_ints(cols)
    c = contour or auto_contour(spec)
    c.validate_for(spec)
    prev = _quadrature_matrix(spec, rows, cols, c)
    if not adaptive:
        return prev
    nodes = c.nodes
    while nodes < max_nodes:
        nodes *= 2
        cur = _quadrature_matrix(spec, rows, cols, ContourParams(c.r_z, c.r_w, nodes))
        scale = max(1.0, float(np.max(np.abs(cur))))
        if np.max(np.abs(cur - prev)) < tol * scale:
            return cur
        prev = cur
    raise ConvergenceError(f"quadrature did not stabilise by {max_nodes} nodes")


def kernel_entry_quadrature(spec: KernelSpec, a, b, contour: Optional[ContourParams] = None, adaptive: bool = False) -> complex:
    return complex(quadrature_matrix(spec, [a], [b], contour, adaptive=adaptive)[0, 0])


def kernel_matrix(spec: KernelSpec, pts: Sequence, method: str = "series", **opts) -> KernelMatrix:
    pts = _half_ints(pts)
    if len({h.doubled for h in pts}) != len(pts):
        raise ValueError("points must be distinct")
    if method == "series":
        K = series_matrix(spec, pts, **opts)
    elif method == "quadrature":
        K = quadrature_matrix(spec, pts, **opts)
    else:
        raise ValueError(f"unknown method {method!r}")
    return KernelMatrix(pts, K)


@dataclass(frozen=True)
class FredholmResult:
    value: complex
    tail_len: int


def fredholm_det_discrete(
    spec: KernelSpec,
    start,
    tail_len: int = 16,
    method: str = "series",
    tol: float = 1e-12,
    max_tail: int = 4096,
    **opts,
) -> FredholmResult:
    """det(I - K) on l^2{start, start+1, ...}, truncated to ``tail_len`` points and doubled
    until the determinant moves by less than ``tol``."""
    if tail_len < 1:
        raise ValueError("tail_len must be positive")
    start = HalfInt.of(start)

    def det_for(L):
        pts = [start + k for k in range(L)]
        K = kernel_matrix(spec, pts, method, **opts).entries
        return complex(np.linalg.det(np.eye(L) - K))

    prev = det_for(tail_len)
    L = tail_len
    while L < max_tail:
        L *= 2
        cur = det_for(L)
        if abs(cur - prev) < tol:
            return FredholmResult(cur, L)
        prev = cur
    raise ConvergenceError(f"Fredholm determinant not stable by tail length {max_tail}")


def cauchy_det_identity_check(zs, ws) -> tuple[complex, complex]:
    """det[1/((1 - w_i z_j)(1 - w_i / z_j))] against its closed product form."""
    zs = np.asarray(zs, dtype=complex)
    ws = np.asarray(ws, dtype=complex)
    if zs.shape != ws.shape:
        raise ValueError("zs and ws must have the same length")
    denom = (1 - ws[:, None] * zs[None, :]) * (1 - ws[:, None] / zs[None, :])
    if np.any(denom == 0):
        raise ZeroDivisionError("singular parameter collision")
    lhs = complex(np.linalg.det(1.0 / denom))
    num = 1.0 + 0j
    n = len(zs)
    for i in range(n):
        for j in range(i + 1, n):
            num *= (zs[i] - zs[j]) * (ws[i] - ws[j]) * (1 - ws[i] * ws[j]) * (1 - 1 / (zs[i] * zs[j]))
    return lhs, complex(num / np.prod(denom))
