"""Specializations of the ring of symmetric functions, given by their powersum values."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .series import SeriesTrunc, exp_power_series, reciprocal_power_series

DEFAULT_HORIZON = 128
PLANCHEREL_DECAY_RADIUS = 0.5


@dataclass(frozen=True)
class Specialization:
    """p_n(rho) = dense[n-1] + sum_i c_i x_i**n.

    ``dense`` holds an explicit finite prefix of powersums (zero beyond it); ``atoms`` holds
    weighted variables ``(c, x)``. ``decay_radius`` is an r with |p_n|/n = O(r**n).
    """

    dense: tuple = ()
    atoms: tuple = ()
    decay_radius: float = PLANCHEREL_DECAY_RADIUS
    label: str = ""

    def __post_init__(self):
        if len(self.dense) > DEFAULT_HORIZON:
            raise ValueError(f"dense powersum prefix longer than horizon {DEFAULT_HORIZON}")
        if self.decay_radius < 0:
            raise ValueError("decay_radius must be nonnegative")

    def p(self, n: int) -> complex:
        if n < 1:
            raise ValueError("powersums are indexed from 1")
        val = complex(self.dense[n - 1]) if n <= len(self.dense) else 0j
        for c, x in self.atoms:
            val += c * x**n
        return val

    def powersums(self, N: int) -> np.ndarray:
        """Array ``out`` with ``out[n] = p_n`` for 1 <= n <= N (``out[0] = 0``)."""
        out = np.zeros(N + 1, dtype=complex)
        m = min(N, len(self.dense))
        out[1 : m + 1] = np.asarray(self.dense[:m], dtype=complex)
        n = np.arange(1, N + 1)
        for c, x in self.atoms:
            out[1:] += c * np.power(complex(x), n)
        return out

    @property
    def is_zero(self) -> bool:
        return not self.atoms and all(v == 0 for v in self.dense)

    def log_H(self, z):
        """log H(rho; z) evaluated pointwise (closed form for the atoms)."""
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for n, pn in enumerate(self.dense, start=1):
            if pn != 0:
                out = out + pn * z**n / n
        for c, x in self.atoms:
            out = out - c * np.log1p(-x * z)
        return out

    def growth_estimate(self):
        """Root-test estimate of the decay radius from the stored dense prefix (None if too short)."""
        nz = [n for n, v in enumerate(self.dense, start=1) if v != 0]
        if not nz or nz[-1] < 4:
            return None
        n = nz[-1]
        return float((abs(self.dense[n - 1]) / n) ** (1.0 / n))


def plancherel(theta) -> Specialization:
    theta = complex(theta)
    return Specialization(dense=(theta,), label=f"plancherel:{_fmt(theta)}")


def zero() -> Specialization:
    return Specialization(label="zero")


def from_variables(xs, style: str = "plain") -> Specialization:
    xs = [complex(x) for x in xs]
    if style == "plain":
        atoms = tuple((1.0, x) for x in xs)
        radius = max((abs(x) for x in xs), default=0.0)
    elif style in ("doubled", "doubled_plus_one"):
        if any(x == 0 for x in xs):
            raise ValueError("doubled alphabets need nonzero variables")
        atoms = tuple(a for x in xs for a in ((1.0, x), (1.0, 1 / x)))
        radius = max((max(abs(x), 1 / abs(x)) for x in xs), default=0.0)
        if style == "doubled_plus_one":
            atoms += ((1.0, 1.0 + 0j),)
            radius = max(radius, 1.0)
    else:
        raise ValueError(f"unknown variable style {style!r}")
    prefix = {"plain": "vars", "doubled": "dvars", "doubled_plus_one": "dvars1"}[style]
    return Specialization(atoms=atoms, decay_radius=radius, label=f"{prefix}:{','.join(_fmt(x) for x in xs)}")


def from_powersums(ps) -> Specialization:
    ps = tuple(complex(p) for p in ps)
    spec = Specialization(dense=ps, label=f"powersums:{','.join(_fmt(p) for p in ps)}")
    est = spec.growth_estimate()
    if est is not None:
        spec = Specialization(dense=ps, decay_radius=max(est, PLANCHEREL_DECAY_RADIUS), label=spec.label)
    return spec


def omega_dual(rho: Specialization) -> Specialization:
    """The involution p_n -> (-1)^(n-1) p_n, so that h_k(omega rho) = e_k(rho)."""
    dense = tuple(v if n % 2 else -v for n, v in enumerate(rho.dense, start=1))
    atoms = tuple((-c, -x) for c, x in rho.atoms)
    return Specialization(dense, atoms, rho.decay_radius, f"omega({rho.label})")


def h_coeffs(rho: Specialization, N: int) -> np.ndarray:
    """h_0, ..., h_N of ``rho`` via Newton's identities k h_k = sum_j p_j h_{k-j}."""
    p = rho.powersums(N)
    log_c = np.zeros(N + 1, dtype=complex)
    log_c[1:] = p[1:] / np.arange(1, N + 1)
    return exp_power_series(log_c, N)


def e_coeffs(rho: Specialization, N: int) -> np.ndarray:
    """e_0..e_N from E(z) = 1/H(-z), independent of ``omega_dual``."""
    h = h_coeffs(rho, N)
    signs = (-1.0) ** np.arange(N + 1)
    return reciprocal_power_series(h * signs, N)


def H_series(rho: Specialization, N: int, direction: int = 1) -> SeriesTrunc:
    """H(rho; z**direction) truncated to exponents in [-N, N]."""
    return SeriesTrunc.from_power_series(h_coeffs(rho, N), N, direction)


def growth_radius(rho: Specialization) -> float:
    if rho.atoms:
        return rho.decay_radius
    est = rho.growth_estimate()
    # finitely supported powersums satisfy any geometric bound
    return est if est is not None else 0.0


def check_growth(rho_plus: Specialization, rho_minus: Specialization) -> bool:
    """Warn when min(1, 1/r+) > r- visibly fails on the stored data. Returns validity."""
    rp, rm = growth_radius(rho_plus), growth_radius(rho_minus)
    bound = 1.0 if rp == 0 else min(1.0, 1.0 / rp)
    ok = rm < bound
    if not ok:
        warnings.warn(
            f"growth condition min(1, 1/r+) > r- appears violated (r+ ~ {rp:.3g}, r- ~ {rm:.3g})",
            RuntimeWarning,
            stacklevel=2,
        )
    return ok


# -- DSL --------------------------------------------------------------------------------------

def parse_complex(text: str) -> complex:
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi`` (``j`` also accepted)."""
    t = text.strip().replace(" ", "").replace("i", "j")
    if not t:
        raise ValueError("empty complex literal")
    if t.endswith("j") and t[:-1] in ("", "+", "-"):
        t = t[:-1] + "1j"
    t = t.replace("+j", "+1j").replace("-j", "-1j")
    try:
        return complex(t)
    except ValueError as exc:
        raise ValueError(f"malformed complex literal {text!r}") from exc


def parse_spec(text: str) -> Specialization:
    """Parse ``plancherel:<t>``, ``zero``, ``vars:``, ``dvars:``, ``dvars1:`` or ``powersums:``."""
    text = text.strip()
    if text == "zero":
        return zero()
    if ":" not in text:
        raise ValueError(f"malformed specialization {text!r}")
    head, body = text.split(":", 1)
    values = [parse_complex(v) for v in body.split(",") if v.strip()]
    if head == "plancherel":
        if len(values) != 1:
            raise ValueError("plancherel takes exactly one parameter")
        return plancherel(values[0])
    if head == "vars":
        return from_variables(values, "plain")
    if head == "dvars":
        return from_variables(values, "doubled")
    if head == "dvars1":
        return from_variables(values, "doubled_plus_one")
    if head == "powersums":
        return from_powersums(values)
    raise ValueError(f"unknown specialization family {head!r}")


def _fmt(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    if z.real == 0:
        return f"{z.imag!r}i"
    return f"{z.real!r}{'+' if z.imag >= 0 else '-'}{abs(z.imag)!r}i"
