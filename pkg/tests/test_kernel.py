import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spodet.kernel import (
    ContourParams,
    KernelSpec,
    auto_contour,
    cauchy_det_identity_check,
    edge_contour,
    fredholm_det_discrete,
    kernel_entry_quadrature,
    kernel_entry_series,
    kernel_matrix,
    quadrature_matrix,
    series_matrix,
)
from spodet.measures import (
    MeasureSpec,
    PlancherelAB,
    brute_correlation,
    gap_restricted_sum,
    normalization,
    plancherel_ab_sum,
    plancherel_ab_weight,
)
from spodet.partitions import HalfInt, enumerate_partitions, frobenius
from spodet.specialization import from_powersums, from_variables, omega_dual, plancherel, zero
from spodet.toeplitz_hankel import Symbol, th_det

SP = KernelSpec("sp", plancherel(0.4), plancherel(0.3))
O = KernelSpec("o", plancherel(0.4), plancherel(0.3))
VAC_SP = KernelSpec("sp", zero(), zero())
VAC_O = KernelSpec("o", zero(), zero())

MEASURE_GRID = [
    ("sp", plancherel(0.4), plancherel(0.3)),
    ("o", plancherel(0.4), plancherel(0.3)),
    ("sp", plancherel(0.5), plancherel(0.5)),
    ("o", from_powersums([0.3, -0.1]), plancherel(0.2)),
]
HALF = [HalfInt(d) for d in range(-15, 16, 2)]


def _grid_id(p):
    return f"{p[0]}-{p[1].p(1):.2g}-{p[2].p(1):.2g}"


def test_series_examples():
    assert kernel_entry_series(VAC_SP, "-1/2", "-1/2") == pytest.approx(1, abs=1e-15)
    assert kernel_entry_series(VAC_SP, "1/2", "1/2") == pytest.approx(0, abs=1e-15)
    brute = brute_correlation(MeasureSpec("sp", plancherel(0.4), plancherel(0.3)), ["1/2"], 12).value
    assert kernel_entry_series(SP, "1/2", "1/2") == pytest.approx(brute, abs=1e-8)
    with pytest.raises(ValueError):
        kernel_entry_series(SP, "5/2", "5/2", N=3)


@pytest.mark.parametrize("spec", [VAC_SP, VAC_O], ids=["sp", "o"])
def test_vacuum_kernel(spec):
    # zero specializations: diagonal on negatives plus one reflected entry per positive row
    K = series_matrix(spec, HALF)
    expected = np.zeros((len(HALF), len(HALF)))
    for i, a in enumerate(HALF):
        for j, b in enumerate(HALF):
            if a.doubled < 0:
                expected[i, j] = a == b
            elif spec.kind == "sp":
                expected[i, j] = b.doubled == -a.doubled - 2
            else:
                expected[i, j] = -(a.doubled >= 3 and b.doubled == 2 - a.doubled)
    assert np.max(np.abs(K - expected)) < 1e-14


def test_vacuum_gap_is_one():
    # the reflected entries never couple two positive points
    for spec in (VAC_SP, VAC_O):
        assert fredholm_det_discrete(spec, "1/2").value == pytest.approx(1, abs=1e-15)


def test_contour_validation():
    with pytest.raises(ValueError):
        ContourParams(0.9, 1.1)
    with pytest.raises(ValueError):
        ContourParams(1.2, 0.9)
    with pytest.raises(ValueError):
        ContourParams(1.1, 0.8, nodes=100)
    spec = KernelSpec("sp", from_powersums([0.0, 0.0]), plancherel(0.1))
    with pytest.raises(ValueError):
        ContourParams(1.1, 0.8).validate_for(KernelSpec("sp", zero(), from_variables([0.9])))
    ContourParams(1.1, 0.8).validate_for(spec)


def test_vacuum_quadrature():
    c = ContourParams(1.1, 0.8, 256)
    assert kernel_entry_quadrature(VAC_SP, "-1/2", "-1/2", c) == pytest.approx(1, abs=1e-12)


def test_vacuum_quadrature_aliasing_at_64_nodes():
    # the factor 1/(1 - wz) aliases like (r_z r_w)^nodes = 0.88^64
    coarse = kernel_entry_quadrature(VAC_SP, "-1/2", "-1/2", ContourParams(1.1, 0.8, 64))
    assert abs(coarse - 1) == pytest.approx(0.88**64, rel=0.05)


def test_series_vs_quadrature_example():
    s = kernel_entry_series(SP, "3/2", "1/2")
    q = kernel_entry_quadrature(SP, "3/2", "1/2", adaptive=True)
    assert abs(s - q) < 1e-10


@pytest.mark.parametrize("params", MEASURE_GRID, ids=_grid_id)
def test_method_agreement(params):
    spec = KernelSpec(*params)
    S = series_matrix(spec, HALF)
    Q = quadrature_matrix(spec, HALF)
    assert np.max(np.abs(S - Q)) < 1e-9


def test_default_radii_are_admissible():
    c = auto_contour(SP)
    c.validate_for(SP)
    assert c.r_z * c.r_w < 1
    e = edge_contour(10.0)
    assert e.r_z > 1 > e.r_w


def test_large_theta_quadrature_self_consistency():
    theta = 10.0
    spec = KernelSpec("sp", plancherel(2 * theta), plancherel(theta))
    a = HalfInt.of(2 * theta + 0.5)
    c = edge_contour(theta, nodes=512)
    v1 = kernel_entry_quadrature(spec, a, a, c)
    v2 = kernel_entry_quadrature(spec, a, a, ContourParams(c.r_z, c.r_w, 1024))
    assert abs(v1 - v2) < 1e-9
    assert abs(v1 - kernel_entry_series(spec, a, a, coeffs="fft")) < 1e-9


def test_rotation_agrees_with_direct_coefficients():
    spec = KernelSpec("sp", zero(), plancherel(0.8j))
    rotated = KernelSpec("sp", zero(), plancherel(0.8j), rotate=True)
    pts = HALF[4:12]
    assert np.max(np.abs(series_matrix(spec, pts) - series_matrix(rotated, pts))) < 1e-12


def test_kernel_matrix_examples():
    km = kernel_matrix(VAC_SP, ["-1/2", "-3/2"])
    assert np.allclose(km.entries, np.eye(2), atol=1e-15)
    with pytest.raises(ValueError):
        kernel_matrix(SP, ["1/2", "1/2"])
    with pytest.raises(ValueError):
        kernel_matrix(SP, ["1/2"], method="contour")
    m_sp = MeasureSpec("sp", plancherel(0.4), plancherel(0.3))
    m_o = MeasureSpec("o", plancherel(0.4), plancherel(0.3))
    two = brute_correlation(m_sp, ["1/2", "3/2"], 12).value
    assert kernel_matrix(SP, ["1/2", "3/2"]).det() == pytest.approx(two, abs=1e-7)
    one = brute_correlation(m_o, ["1/2"], 12).value
    assert kernel_matrix(O, ["1/2"]).det() == pytest.approx(one, abs=1e-8)


WINDOW = [HalfInt(d) for d in range(-7, 8, 2)]


@pytest.mark.parametrize("kind", ["sp", "o"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_correlations_against_enumeration(kind, n):
    m = MeasureSpec(kind, plancherel(0.5), plancherel(0.5))
    spec = KernelSpec.from_measure(m)
    K = series_matrix(spec, WINDOW)
    index = {h: i for i, h in enumerate(WINDOW)}
    for subset in itertools.combinations(WINDOW, n):
        idx = [index[h] for h in subset]
        det = complex(np.linalg.det(K[np.ix_(idx, idx)]))
        brute = brute_correlation(m, subset, 12)
        assert abs(det - brute.value) <= brute.tail_bound + 1e-12, subset


def test_gap_against_toeplitz_hankel():
    s = Symbol([0.4], [0.3])
    m = 2
    Z = normalization(MeasureSpec("sp", plancherel(0.4), plancherel(0.3)))
    gap = fredholm_det_discrete(SP, HalfInt.of(m + 0.5)).value
    assert gap == pytest.approx(th_det(s, 2, m) / Z, abs=1e-8)


def test_plancherel_a_gap_from_complex_kernel():
    spec = KernelSpec("sp", zero(), plancherel(0.8j))
    pa = PlancherelAB("A", 0.8)
    tail = plancherel_ab_sum(pa, 14).tail_bound
    lams = list(enumerate_partitions(14, ("class", "A")))
    for start, arm_cap in (("5/2", 1), ("7/2", 2)):
        res = fredholm_det_discrete(spec, start)
        assert abs(res.value.imag) < 1e-10
        # (a | a + 1) shapes have lambda_1 = alpha_1 + 1
        direct = sum(plancherel_ab_weight(pa, lam) for lam in lams if not lam or frobenius(lam).arms[0] <= arm_cap)
        assert abs(res.value.real - direct) <= tail + 1e-12


def test_fredholm_validation():
    with pytest.raises(ValueError):
        fredholm_det_discrete(SP, "1/2", tail_len=0)


def test_omega_duality_through_gaps():
    # o-kernel for the dual data: lambda_1 <= m there is length <= m for the sp measure
    rp, rm = plancherel(0.6), from_powersums([0.3, 0.1])
    spec = KernelSpec("o", omega_dual(rp), omega_dual(rm))
    sp_measure = MeasureSpec("sp", rp, rm)
    Z = normalization(sp_measure)
    for m in (1, 2, 3):
        gap = fredholm_det_discrete(spec, HalfInt.of(m + 0.5)).value
        restricted = gap_restricted_sum(sp_measure, ("max_length", m), 8)
        assert abs(gap - restricted.value / Z) <= restricted.tail_bound / abs(Z) + 1e-10


def test_cauchy_examples():
    lhs, rhs = cauchy_det_identity_check([1.2], [0.5])
    assert lhs == pytest.approx(rhs) == pytest.approx(1 / ((1 - 0.6) * (1 - 0.5 / 1.2)))
    lhs, rhs = cauchy_det_identity_check([1.3, 0.7 + 0.2j], [0.4, -0.3])
    assert abs(lhs - rhs) < 1e-12 * abs(rhs)
    with pytest.raises(ValueError):
        cauchy_det_identity_check([1.0, 2.0], [0.3])
    with pytest.raises(ZeroDivisionError):
        cauchy_det_identity_check([2.0], [0.5])


def test_cauchy_random_n3():
    rng = np.random.default_rng(7)
    for _ in range(20):
        zs = rng.uniform(0.9, 1.3, 3) * np.exp(1j * rng.uniform(0, 2 * np.pi, 3))
        ws = rng.uniform(0.1, 0.6, 3) * np.exp(1j * rng.uniform(0, 2 * np.pi, 3))
        lhs, rhs = cauchy_det_identity_check(zs, ws)
        assert abs(lhs - rhs) < 1e-10 * abs(rhs)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.05, 0.6), st.floats(0.05, 0.6), st.integers(-5, 4), st.integers(-5, 4))
def test_method_agreement_property(tp, tm, i, j):
    spec = KernelSpec("sp", plancherel(tp), plancherel(tm))
    a, b = HalfInt(2 * i + 1), HalfInt(2 * j + 1)
    assert abs(kernel_entry_series(spec, a, b) - kernel_entry_quadrature(spec, a, b, adaptive=True)) < 1e-9
