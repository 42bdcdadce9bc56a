"""Truncated Laurent series with exponents in [-N, N]."""

from __future__ import annotations

import numpy as np


def exp_power_series(log_coeffs, N: int) -> np.ndarray:
    """Coefficients 0..N of exp(sum_{n>=1} c_n z^n), given ``log_coeffs[n] = c_n`` (index 0 ignored).

    Uses k a_k = sum_{j=1}^{k} j c_j a_{k-j}.
    """
    c = np.zeros(N + 1, dtype=complex)
    m = min(N + 1, len(log_coeffs))
    c[1:m] = np.asarray(log_coeffs, dtype=complex)[1:m]
    jc = np.arange(N + 1) * c
    a = np.zeros(N + 1, dtype=complex)
    a[0] = 1.0
    for k in range(1, N + 1):
        a[k] = np.dot(jc[1 : k + 1], a[k - 1 :: -1][:k]) / k
    return a


def reciprocal_power_series(a, N: int) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a[0] == 0:
        raise ZeroDivisionError("power series with vanishing constant term is not invertible")
    b = np.zeros(N + 1, dtype=complex)
    b[0] = 1.0 / a[0]
    ap = np.zeros(N + 1, dtype=complex)
    ap[: min(N + 1, len(a))] = a[: N + 1]
    for k in range(1, N + 1):
        b[k] = -np.dot(ap[1 : k + 1], b[k - 1 :: -1][:k]) / ap[0]
    return b


class SeriesTrunc:
    """Laurent polynomial sum_{|k| <= N} c_k z^k; products drop exponents outside [-N, N]."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.shape != (2 * order + 1,):
            raise ValueError(f"expected {2 * order + 1} coefficients, got {coeffs.shape}")
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zeros(cls, order: int) -> "SeriesTrunc":
        return cls(np.zeros(2 * order + 1, dtype=complex), order)

    @classmethod
    def constant(cls, value, order: int) -> "SeriesTrunc":
        s = cls.zeros(order)
        s.coeffs[order] = value
        return s

    @classmethod
    def from_dict(cls, terms: dict, order: int) -> "SeriesTrunc":
        s = cls.zeros(order)
        for k, v in terms.items():
            if abs(k) <= order:
                s.coeffs[k + order] += v
        return s

    @classmethod
    def from_power_series(cls, a, order: int, direction: int = 1) -> "SeriesTrunc":
        """Embed sum_k a_k z^{direction * k}."""
        s = cls.zeros(order)
        a = np.asarray(a, dtype=complex)[: order + 1]
        if direction == 1:
            s.coeffs[order : order + len(a)] = a
        elif direction == -1:
            s.coeffs[order - len(a) + 1 : order + 1] = a[::-1]
        else:
            raise ValueError("direction must be +1 or -1")
        return s

    def __getitem__(self, k: int) -> complex:
        return complex(self.coeffs[k + self.order]) if abs(k) <= self.order else 0j

    def positive_part(self) -> np.ndarray:
        return self.coeffs[self.order :]

    def negative_part(self) -> np.ndarray:
        """Coefficients of z^0, z^-1, ..., z^-N."""
        return self.coeffs[self.order :: -1]

    def _check(self, other: "SeriesTrunc"):
        if other.order != self.order:
            raise ValueError("series orders differ")

    def __add__(self, other):
        if isinstance(other, SeriesTrunc):
            self._check(other)
            return SeriesTrunc(self.coeffs + other.coeffs, self.order)
        out = self.coeffs.copy()
        out[self.order] += other
        return SeriesTrunc(out, self.order)

    __radd__ = __add__

    def __neg__(self):
        return SeriesTrunc(-self.coeffs, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SeriesTrunc):
            self._check(other)
            full = np.convolve(self.coeffs, other.coeffs)
            N = self.order
            return SeriesTrunc(full[N : 3 * N + 1], N)
        return SeriesTrunc(self.coeffs * other, self.order)

    __rmul__ = __mul__

    def exp(self) -> "SeriesTrunc":
        """exp of the series, computed as exp(c_0) exp(positive part) exp(negative part)."""
        N = self.order
        up = exp_power_series(self.positive_part(), N)
        down = exp_power_series(self.negative_part(), N)
        out = SeriesTrunc.from_power_series(up, N, 1) * SeriesTrunc.from_power_series(down, N, -1)
        return out * np.exp(self.coeffs[N])

    def reciprocal(self) -> "SeriesTrunc":
        N = self.order
        if np.any(self.coeffs[:N] != 0) and np.any(self.coeffs[N + 1 :] != 0):
            raise ValueError("reciprocal is only defined for one-sided series")
        if np.any(self.coeffs[:N] != 0):
            return SeriesTrunc.from_power_series(reciprocal_power_series(self.negative_part(), N), N, -1)
        return SeriesTrunc.from_power_series(reciprocal_power_series(self.positive_part(), N), N, 1)

    def __call__(self, z):
        k = np.arange(-self.order, self.order + 1)
        z = np.asarray(z, dtype=complex)
        return np.sum(self.coeffs * z[..., None] ** k, axis=-1)

    def __repr__(self) -> str:
        nz = {k: self[k] for k in range(-self.order, self.order + 1) if self[k] != 0}
        return f"SeriesTrunc(order={self.order}, {nz})"
