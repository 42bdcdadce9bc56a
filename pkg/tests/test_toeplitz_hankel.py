import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spodet.measures import gap_restricted_sum, log_normalization
from spodet.toeplitz_hankel import (
    _GESSEL,
    Symbol,
    bo_residual,
    bo_sides,
    fourier_coeffs,
    gessel_residual,
    gessel_sides,
    szego_convergence,
    szego_log_rhs,
    szego_rhs,
    th_det,
    th_matrix,
)

TRIVIAL = Symbol()
BASIC = Symbol([0.4], [0.3])
SYMBOL_GRID = [
    Symbol([0.4], [0.3]),
    Symbol([0.5], [-0.2]),
    Symbol([0.3, 0.1], [0.2, -0.15]),
    Symbol([-0.25, 0.2], [0.4]),
    Symbol([0.2j], [0.3, 0.1j]),
]
coeff = st.floats(-0.5, 0.5)
symbols = st.builds(Symbol, st.lists(coeff, min_size=1, max_size=2), st.lists(coeff, min_size=1, max_size=2))


def _bessel_type(a, b, k):
    """[z^k] exp(a z + b / z) by direct summation."""
    if k < 0:
        return _bessel_type(b, a, -k)
    return sum(a ** (k + j) * b**j / (math.factorial(k + j) * math.factorial(j)) for j in range(40))


def test_fourier_trivial():
    assert np.allclose(fourier_coeffs(TRIVIAL, -4, 4), [0, 0, 0, 0, 1, 0, 0, 0, 0])


def test_fourier_against_series_oracle():
    a, b = 0.7, -0.45
    c = fourier_coeffs(Symbol([a], [b]), -6, 6)
    for k in range(-6, 7):
        assert c[k + 6] == pytest.approx(_bessel_type(a, b, k), abs=1e-15)


def test_fourier_against_quadrature():
    s = Symbol([0.3, 0.1j], [0.2, -0.1])
    n = 128
    z = np.exp(2j * np.pi * np.arange(n) / n)
    fft = np.fft.fft(s(z)) / n
    c = fourier_coeffs(s, -5, 5)
    for k in range(-5, 6):
        assert c[k + 5] == pytest.approx(fft[k % n], abs=1e-14)


def test_check_symbol():
    s = Symbol([0.7], [0.2])
    assert s.check() == s
    s2 = Symbol([0.3, 0.2, 0.1], [0.4j, -0.1])
    assert s2.check().rho_plus == (0.3, -0.2, 0.1)
    assert s2.check().check() == s2
    z = 0.9 * cmath.exp(0.3j)
    assert s2.check()(z) == pytest.approx(1 / s2(-z), rel=1e-14)


@given(symbols)
def test_check_is_an_involution(s):
    assert s.check().check() == s


def test_trivial_symbol_determinants():
    assert np.allclose(th_matrix(TRIVIAL, 1, 4), np.diag([2, 1, 1, 1]))
    for n in range(1, 6):
        assert th_det(TRIVIAL, 1, n) == pytest.approx(2)
        for kind in (2, 3):
            assert th_det(TRIVIAL, kind, n) == pytest.approx(1)
        assert th_det(TRIVIAL, 4, n) == pytest.approx(2)
    for kind in (1, 2, 3, 4):
        assert th_det(BASIC, kind, 0) == 1
    with pytest.raises(ValueError):
        th_det(BASIC, 5, 2)


def test_determinant_example():
    lhs = th_det(BASIC, 2, 2)
    rhs = gap_restricted_sum(BASIC.measure("sp"), ("max_part", 2), 12).value
    assert lhs == pytest.approx(rhs, abs=1e-8)


def test_gessel_examples():
    for kind in (1, 2, 3, 4):
        assert gessel_residual(kind, TRIVIAL, 3, 12) < 1e-14
    assert gessel_residual(2, BASIC, 2, 12) < 1e-8
    assert gessel_residual(3, BASIC, 2, 12) < 1e-8


@pytest.mark.parametrize("s", SYMBOL_GRID, ids=range(len(SYMBOL_GRID)))
@pytest.mark.parametrize("kind", [1, 2, 3, 4])
def test_gessel_grid(kind, s):
    for size in range(1, 6):
        assert gessel_residual(kind, s, size, 14) < 1e-8, size


def test_gessel_literal_reading_fails():
    # reading f_k as the coefficient of z^k breaks the identity from size 2 on
    s = Symbol([0.0], [0.3])
    det_side, sum_side = gessel_sides(2, s, 2, 12)
    c = fourier_coeffs(s.check(), -4, 4)
    literal = np.linalg.det([[c[4 + i - j] - c[4 + i + j + 2] for j in range(2)] for i in range(2)])
    assert abs(det_side - sum_side) < 1e-10
    assert abs(literal - sum_side) > 1e-3


def test_szego_examples():
    assert szego_rhs("sp", TRIVIAL) == 1
    a, b = 0.4, 0.3
    for kind in ("sp", "o"):
        assert szego_rhs(kind, Symbol([a], [b])) == pytest.approx(math.exp(a * b - b * b / 2))
    c = 0.25
    assert szego_rhs("sp", Symbol([], [0, c])) == pytest.approx(math.exp(c - c * c))
    assert szego_rhs("o", Symbol([], [0, c])) == pytest.approx(math.exp(-c - c * c))


@pytest.mark.parametrize("s", SYMBOL_GRID, ids=range(len(SYMBOL_GRID)))
@pytest.mark.parametrize("kind", ["sp", "o"])
def test_szego_equals_normalization(kind, s):
    # termwise to k = 40 under p_k = k rho_k
    assert szego_log_rhs(kind, s, kmax=40) == pytest.approx(log_normalization(s.measure(kind)), abs=1e-14)


def test_szego_convergence_examples():
    assert all(dev == 0 for _, _, dev in szego_convergence("sp", TRIVIAL, range(1, 6)))
    rows = szego_convergence("sp", BASIC, range(1, 9))
    assert rows[-1][2] < 1e-10
    half_d1 = szego_convergence("sp", BASIC, [10], family=1)[0]
    assert half_d1[2] < 1e-10
    with pytest.raises(ValueError):
        szego_convergence("sp", BASIC, [2], family=3)


@pytest.mark.parametrize("s", SYMBOL_GRID, ids=range(len(SYMBOL_GRID)))
@pytest.mark.parametrize("family", [1, 2, 3, 4])
def test_szego_deviation_decreases(family, s):
    kind = "sp" if family in (1, 2) else "o"
    devs = [dev for _, _, dev in szego_convergence(kind, s, range(3, 12), family=family)]
    # second-order terms make the decay alternate in parity: compare sizes n and n + period
    period = max(len(s.rho_plus), len(s.rho_minus))
    assert all(b < a or b < 1e-13 for a, b in zip(devs, devs[period:]))


def test_bo_examples():
    assert bo_residual("sp", TRIVIAL, 3) < 1e-12
    assert bo_residual("o", TRIVIAL, 3) < 1e-12
    assert bo_residual("sp", BASIC, 2) < 1e-8
    assert bo_residual("sp", BASIC, 5) < 1e-9


@pytest.mark.parametrize("s", SYMBOL_GRID, ids=range(len(SYMBOL_GRID)))
@pytest.mark.parametrize("kind", ["sp", "o"])
def test_bo_grid(kind, s):
    for m in range(1, 7):
        assert bo_residual(kind, s, m) < 1e-8, m


def test_bo_quadrature_route():
    lhs, rhs = bo_sides("o", BASIC, 2, method="quadrature")
    assert abs(lhs - rhs) < 1e-8


@settings(max_examples=10, deadline=None)
@given(symbols, st.sampled_from([1, 2, 3, 4]), st.integers(1, 3))
def test_gessel_property(s, kind, size):
    # second coefficients near 0.5 give p_2 near 1, whose restricted sums need |lam| far beyond 12
    mkind, constraint, _ = _GESSEL[kind]
    tail = gap_restricted_sum(s.measure(mkind), (constraint, size), 12).tail_bound
    residual = gessel_residual(kind, s, size, 12)
    assert residual <= tail + 1e-12
    if tail < 1e-10:
        assert residual < 1e-8
