import math

import pytest

from spodet.measures import (
    MeasureSpec,
    PlancherelAB,
    ab_as_measure,
    brute_correlation,
    brute_gap,
    enumerated_sum,
    gap_by_inclusion_exclusion,
    gap_restricted_sum,
    normalization,
    p_sp,
    plancherel_ab_equals_msp,
    plancherel_ab_sum,
    plancherel_ab_weight,
    weight,
)
from spodet.partitions import conjugate, enumerate_partitions
from spodet.specialization import omega_dual, plancherel, zero

M_SP = MeasureSpec("sp", plancherel(0.4), plancherel(0.3))
M_O = MeasureSpec("o", plancherel(0.4), plancherel(0.3))
VACUUM = MeasureSpec("sp", zero(), zero())


def test_weight_examples():
    assert weight(M_SP, ()) == 1
    assert weight(M_SP, (1,)) == pytest.approx(0.12)
    t = 0.9
    assert weight(MeasureSpec("sp", zero(), plancherel(1j * t)), (1, 1)) == pytest.approx(t**2 / 2)


def test_normalization_examples():
    assert normalization(VACUUM) == 1
    t = 0.5
    assert normalization(p_sp(t)) == pytest.approx(math.exp(1.5 * t**2))
    assert normalization(ab_as_measure("A", t)) == pytest.approx(math.exp(t**2 / 2))


def test_measure_validation():
    with pytest.raises(ValueError):
        MeasureSpec("so", zero(), zero())
    with pytest.raises(ValueError):
        PlancherelAB("A", 0.0)
    with pytest.raises(ValueError):
        enumerated_sum(M_SP, 40)


def test_brute_correlation_examples():
    assert brute_correlation(VACUUM, ["-1/2"], 6).value == 1
    assert brute_correlation(VACUUM, ["1/2"], 6).value == 0


def test_gap_restricted_examples():
    assert gap_restricted_sum(M_SP, ("max_part", 0), 12).value == 1
    with pytest.raises(ValueError):
        gap_restricted_sum(M_SP, ("class", "A"), 12)


def test_plancherel_ab_examples():
    t = 1.0
    pa = PlancherelAB("A", t)
    assert plancherel_ab_weight(pa, ()) == pytest.approx(math.exp(-t**2 / 2))
    assert plancherel_ab_weight(pa, (1, 1)) == pytest.approx(math.exp(-0.5) / 2)
    assert plancherel_ab_weight(pa, (1,)) == 0
    assert plancherel_ab_equals_msp(0.0, 10) == 0
    assert plancherel_ab_equals_msp(0.8, 10, "A") < 1e-12
    assert plancherel_ab_equals_msp(0.8, 10, "B") < 1e-12


@pytest.mark.parametrize("m", [M_SP, M_O], ids=["sp", "o"])
def test_normalization_by_enumeration(m):
    Z = normalization(m)
    prev = None
    for M in (8, 10, 12):
        res = enumerated_sum(m, M)
        err = abs(res.value - Z)
        assert err <= res.tail_bound
        if prev is not None:
            assert err < prev
        prev = err


def test_tail_bound_is_not_vacuous():
    res = enumerated_sum(M_SP, 12)
    assert 0 < res.tail_bound < 1e-9


def test_plancherel_ab_normalization_monotone():
    t = 0.9
    target = math.exp(t**2 / 2)
    errs = [abs(plancherel_ab_sum(PlancherelAB("A", t), M).value - target) for M in range(2, 14, 2)]
    assert all(b < a for a, b in zip(errs, errs[1:]))
    res = plancherel_ab_sum(PlancherelAB("A", t), 12)
    assert abs(res.value - target) <= res.tail_bound


def test_complex_measure_is_real_and_nonnegative():
    m = ab_as_measure("A", 1.2)
    Z = normalization(m)
    for lam in enumerate_partitions(12):
        w = weight(m, lam) / Z
        assert abs(w.imag) < 1e-14 and w.real >= 0


def test_inclusion_exclusion():
    m = MeasureSpec("sp", plancherel(0.5), plancherel(0.4))
    for window in (["1/2"], ["1/2", "3/2"], ["-1/2", "1/2"]):
        direct = brute_gap(m, window, 8).value
        assert gap_by_inclusion_exclusion(m, window, 8) == pytest.approx(direct, abs=1e-14)


def test_gap_matches_restricted_sum():
    # no particle at m + 1/2 or above is the event lambda_1 <= m
    m = 2
    window = [f"{2 * k + 1}/2" for k in range(m, m + 12)]
    gap = brute_gap(M_SP, window, 12).value
    restricted = gap_restricted_sum(M_SP, ("max_part", m), 12).value / normalization(M_SP)
    assert gap == pytest.approx(restricted, abs=1e-14)


def test_omega_maps_sp_measure_to_conjugate_o_measure():
    rp, rm = plancherel(0.6), plancherel(0.3)
    for lam in enumerate_partitions(8):
        lhs = weight(MeasureSpec("sp", rp, rm), lam)
        rhs = weight(MeasureSpec("o", omega_dual(rp), omega_dual(rm)), conjugate(lam))
        assert lhs == pytest.approx(rhs, abs=1e-14)
