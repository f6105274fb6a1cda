import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from locuskit import (
    DomainError,
    NumericOverflowError,
    PowerSumSpec,
    ProbePoint,
    RegularPolygon,
    alpha_scan,
    closed_form_terms,
    power_sum_closed,
    power_sum_direct,
)
from oracles import binomial, cartesian_power_sum

positive = st.floats(min_value=1e-2, max_value=10.0, allow_nan=False)
nonneg = st.floats(min_value=0.0, max_value=10.0, allow_nan=False)
angle = st.floats(min_value=0.0, max_value=2 * math.pi, allow_nan=False, exclude_max=True)


@st.composite
def valid_spec(draw, max_n=12):
    n = draw(st.integers(3, max_n))
    m = draw(st.integers(1, n - 1))
    return PowerSumSpec(n, m)


def test_spec_flag():
    assert PowerSumSpec(5, 4).circle_theorem_applies
    assert not PowerSumSpec(5, 5).circle_theorem_applies
    with pytest.raises(DomainError):
        PowerSumSpec(2, 1)
    with pytest.raises(DomainError):
        PowerSumSpec(3, 0)


# distances to the square's vertices from (1, 0) squared: 0, 2, 4, 2
@pytest.mark.parametrize("n, r, ell, alpha, m, expected", [
    (4, 1.0, 1.0, 0.0, 1, 8.0),
    (3, 1.0, 0.0, 0.7, 3, 3.0),
    (3, 1.0, 1.0, 0.0, 2, 18.0),
])
def test_direct_examples(n, r, ell, alpha, m, expected):
    got = power_sum_direct(RegularPolygon(n, r), ProbePoint(ell, alpha), m)
    assert got == pytest.approx(expected, rel=1e-14)
    assert cartesian_power_sum(n, r, ell, alpha, m) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("n, m, r, ell", [(3, 2, 1.0, 1.0), (5, 4, 1.0, 1.0), (7, 1, 2.0, 3.0)])
def test_closed_examples(n, m, r, ell):
    # expected values from the Cartesian brute force at two unrelated angles
    brute = [cartesian_power_sum(n, r, ell, a, m) for a in (0.0, 0.917)]
    assert brute[0] == pytest.approx(brute[1], rel=1e-13)
    expected = {(3, 2): 18.0, (5, 4): 350.0, (7, 1): 91.0}[(n, m)]
    assert brute[0] == pytest.approx(expected, rel=1e-13)
    assert power_sum_closed(PowerSumSpec(n, m), r, ell) == pytest.approx(expected, rel=1e-14)


def test_closed_rejects_m_ge_n():
    with pytest.raises(DomainError) as exc:
        power_sum_closed(PowerSumSpec(3, 3), 1.0, 1.0)
    assert exc.value.code == "DOMAIN_M_GE_N"


@pytest.mark.parametrize("r, ell", [(0.0, 1.0), (-1.0, 1.0), (1.0, -0.5), (1.0, math.nan)])
def test_closed_rejects_bad_lengths(r, ell):
    with pytest.raises(DomainError):
        power_sum_closed(PowerSumSpec(4, 2), r, ell)


@pytest.mark.parametrize("m, expected", [
    (1, []),
    (2, [(1, 2)]),
    (3, [(1, 6)]),
    (4, [(1, 12), (2, 6)]),
])
def test_closed_form_terms(m, expected):
    assert [(t.k, t.coeff) for t in closed_form_terms(m)] == expected


@pytest.mark.parametrize("m", range(1, 65))
def test_closed_form_terms_exact(m):
    terms = closed_form_terms(m)
    assert [t.k for t in terms] == list(range(1, m // 2 + 1))
    for t in terms:
        assert isinstance(t.coeff, int) and t.coeff > 0
        assert t.coeff == binomial(m, 2 * t.k) * binomial(2 * t.k, t.k)


def test_closed_form_terms_bound():
    with pytest.raises(NumericOverflowError):
        closed_form_terms(65)


def test_overflow_reported():
    with pytest.raises(NumericOverflowError):
        power_sum_closed(PowerSumSpec(64, 63), 1e10, 1e10)
    with pytest.raises(NumericOverflowError):
        power_sum_direct(RegularPolygon(3, 1e10), ProbePoint(1e10, 0.3), 40)


@settings(max_examples=300)
@given(valid_spec(), positive, nonneg, angle)
def test_oracle_equivalence(spec, r, ell, alpha):
    closed = power_sum_closed(spec, r, ell)
    direct = power_sum_direct(RegularPolygon(spec.n, r), ProbePoint(ell, alpha), spec.m)
    assert abs(closed - direct) <= 1e-10 * closed


@given(valid_spec(), positive, positive, angle, angle)
def test_alpha_independence(spec, r, ell, a1, a2):
    poly = RegularPolygon(spec.n, r)
    s1 = power_sum_direct(poly, ProbePoint(ell, a1), spec.m)
    s2 = power_sum_direct(poly, ProbePoint(ell, a2), spec.m)
    assert s1 == pytest.approx(s2, rel=1e-10)


@given(valid_spec(), positive)
def test_center_value(spec, r):
    assert power_sum_closed(spec, r, 0.0) == pytest.approx(spec.n * r ** (2 * spec.m), rel=1e-15)


@given(valid_spec(), positive, nonneg, nonneg)
def test_strictly_increasing_in_ell(spec, r, l1, l2):
    assume(l1 != l2)
    lo, hi = sorted((l1, l2))
    # gaps below float resolution of A = r**2 + ell**2 cannot be ordered
    assume(hi * hi - lo * lo > 1e-8 * (r * r + hi * hi))
    assert power_sum_closed(spec, r, lo) < power_sum_closed(spec, r, hi)


@given(valid_spec(), positive, positive)
def test_r_ell_symmetry(spec, a, b):
    assert power_sum_closed(spec, a, b) == pytest.approx(power_sum_closed(spec, b, a), rel=1e-14)


@given(valid_spec(), positive, nonneg, st.floats(min_value=0.1, max_value=10.0))
def test_scale_homogeneity(spec, r, ell, c):
    scaled = power_sum_closed(spec, c * r, c * ell)
    assert scaled == pytest.approx(c ** (2 * spec.m) * power_sum_closed(spec, r, ell), rel=1e-10)


@given(st.floats(min_value=0.1, max_value=5.0), st.floats(min_value=0.0, max_value=5.0))
def test_golden_polynomials(r, ell):
    r2, l2 = r * r, ell * ell
    for n in (3, 4, 5):
        assert power_sum_closed(PowerSumSpec(n, 2), r, ell) == pytest.approx(
            n * (r2**2 + l2**2 + 4 * r2 * l2), rel=1e-12)
    for n in (4, 5):
        assert power_sum_closed(PowerSumSpec(n, 3), r, ell) == pytest.approx(
            n * (r2 + l2) * (r2**2 + l2**2 + 8 * r2 * l2), rel=1e-12)


def test_extreme_ratios_stay_accurate():
    spec = PowerSumSpec(12, 11)
    for r, ell in [(1e-3, 10.0), (10.0, 1e-3), (1e-6, 1.0)]:
        closed = power_sum_closed(spec, r, ell)
        direct = cartesian_power_sum(12, r, ell, 0.4, 11)
        assert closed == pytest.approx(direct, rel=1e-12)


def test_scan_alpha_free_case():
    rep = alpha_scan(RegularPolygon(3, 1.0), 1.0, 2, samples=64)
    assert rep.relative_amplitude < 1e-12
    assert rep.s_min <= rep.s_max
    assert len(rep.grid) == 64


@pytest.mark.parametrize("n, m, s_min, s_max", [
    # n=3, m=3, r=ell=1: 60 - 6*cos(3 alpha)
    (3, 3, 54.0, 66.0),
    # n=4, m=4, r=ell=1: 280 + 8*cos(4 alpha)
    (4, 4, 272.0, 288.0),
])
def test_scan_alpha_dependent_cases(n, m, s_min, s_max):
    rep = alpha_scan(RegularPolygon(n, 1.0), 1.0, m, samples=64)
    brute = [cartesian_power_sum(n, 1.0, 1.0, a, m) for a, _ in rep.grid]
    assert min(brute) == pytest.approx(s_min, rel=1e-13)
    assert max(brute) == pytest.approx(s_max, rel=1e-13)
    assert rep.s_min == pytest.approx(s_min, rel=1e-13)
    assert rep.s_max == pytest.approx(s_max, rel=1e-13)
    assert rep.amplitude == pytest.approx(s_max - s_min, rel=1e-12)
    assert rep.relative_amplitude == pytest.approx((s_max - s_min) / s_min, rel=1e-12)


def test_scan_grid_covers_one_period():
    rep = alpha_scan(RegularPolygon(5, 2.0), 1.5, 7, samples=10)
    alphas = [a for a, _ in rep.grid]
    assert alphas[0] == 0.0
    assert alphas == sorted(alphas)
    assert alphas[-1] < 2 * math.pi / 5


def test_scan_preconditions():
    poly = RegularPolygon(4, 1.0)
    with pytest.raises(DomainError):
        alpha_scan(poly, 1.0, 2, samples=7)
    with pytest.raises(DomainError):
        alpha_scan(poly, 0.0, 2, samples=16)
