"""Edge scaling of the Plancherel-type measures and comparison with the continuum limits."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .continuum import ContinuumKernel, NystromConfig, fredholm_det_continuum
from .kernel import KernelSpec, fredholm_det_discrete
from .measures import MeasureSpec, ab_as_measure, p_o, p_sp
from .partitions import HalfInt

MODELS = ("psp", "po", "pa", "pb")
TARGET_KERNEL = {"psp": "a21_plus", "po": "a21_minus", "pa": "airy", "pb": "airy"}


def model_measure(model: str, theta: float) -> MeasureSpec:
    if model == "psp":
        return p_sp(theta)
    if model == "po":
        return p_o(theta)
    if model == "pa":
        return ab_as_measure("A", theta)
    if model == "pb":
        return ab_as_measure("B", theta)
    raise ValueError(f"model must be one of {MODELS}, got {model!r}")


@dataclass(frozen=True)
class EdgeScaling:
    """Threshold 2 theta + s theta^(1/3) and the lattice data it induces.

    The event {lambda_1 <= threshold} is {lambda_1 <= cutoff} with cutoff = floor(threshold),
    i.e. no particle at cutoff + 1/2 or above.
    """

    theta: float
    s: float

    def __post_init__(self):
        if not self.theta > 0:
            raise ValueError("theta must be positive")

    @property
    def threshold(self) -> float:
        return 2 * self.theta + self.s * self.theta ** (1 / 3)

    @property
    def cutoff(self) -> int:
        return math.floor(self.threshold)

    @property
    def start(self) -> HalfInt:
        return HalfInt(2 * self.cutoff + 1)

    @property
    def rounding_offset(self) -> float:
        """Distance from the threshold up to the first excluded half-integer."""
        return self.cutoff + 0.5 - self.threshold

    @property
    def effective_s(self) -> float:
        # the first excluded half-integer is the midpoint-rule lower limit of the continuum gap
        return (self.cutoff + 0.5 - 2 * self.theta) / self.theta ** (1 / 3)


@dataclass(frozen=True)
class EdgeGap:
    value: complex
    scaling: EdgeScaling
    tail_len: int


def edge_gap_discrete(model: str, theta: float, s: float, tol: float = 1e-12) -> EdgeGap:
    """Signed mass of {lambda_1 <= 2 theta + s theta^(1/3)} as det(I - K) on the discrete tail."""
    sc = EdgeScaling(theta, s)
    spec = KernelSpec.from_measure(model_measure(model, theta))
    tail = max(16, int(4 * theta ** (1 / 3)) + 8)
    fd = fredholm_det_discrete(spec, sc.start, tail_len=tail, method="series", tol=tol, coeffs="fft")
    return EdgeGap(fd.value, sc, fd.tail_len)


def continuum_target(model: str, s: float, cfg: NystromConfig = NystromConfig()) -> float:
    return fredholm_det_continuum(ContinuumKernel(TARGET_KERNEL[model]), s, cfg).value


@dataclass(frozen=True)
class EdgeRow:
    model: str
    theta: float
    s: float
    effective_s: float
    discrete: complex
    target: float
    deviation: float


def edge_convergence_report(model: str, thetas, s_values, use_effective_s: bool = True) -> list[EdgeRow]:
    """Rows per (theta, s): discrete gap value, continuum target and their distance.

    With ``use_effective_s`` the target is evaluated at the effective s of the lattice cutoff.
    """
    thetas = list(thetas)
    if any(b <= a for a, b in zip(thetas, thetas[1:])):
        raise ValueError("theta values must be increasing")
    rows = []
    for s in s_values:
        for theta in thetas:
            gap = edge_gap_discrete(model, theta, s)
            s_cmp = gap.scaling.effective_s if use_effective_s else s
            target = continuum_target(model, s_cmp)
            rows.append(EdgeRow(model, theta, s, s_cmp, gap.value, target, abs(gap.value - target)))
    return rows


def deviations_decrease(rows: list[EdgeRow]) -> dict:
    """For each s, whether the deviation strictly decreases along increasing theta."""
    out = {}
    for s in dict.fromkeys(r.s for r in rows):
        devs = [r.deviation for r in sorted((r for r in rows if r.s == s), key=lambda r: r.theta)]
        out[s] = all(b < a for a, b in zip(devs, devs[1:]))
    return out


def saddle_derivatives(z: float = 1.0) -> tuple[float, float, float]:
    """S', S'', S''' of S(z) = z - 1/z - 2 log z."""
    return 1 + z**-2 - 2 / z, -2 * z**-3 + 2 * z**-2, 6 * z**-4 - 4 * z**-3
