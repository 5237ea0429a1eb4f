import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helios.errors import CapacityError, DomainError
from helios.specfun import (
    N_MAX_SUPPORTED,
    hankel_magnitude_oracle,
    hankel_paper,
    hankel_paper_deriv,
    hankel_value,
)

SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)

# mpmath (40 digits) evaluations of the finite sum, frozen
H1_2_MAG = 0.446031029038193  # |H_1(2)| = sqrt(2/pi)/2 * |1 + 0.5i|
H2_1_MAG = 2.876813695875797  # |H_2(1)| = sqrt(2/pi) * sqrt(13)
H10_5_MAG = 21.26850213780112


def test_n0_closed_form_value():
    assert abs(hankel_paper(0, 2.0)) == pytest.approx(SQRT_2_OVER_PI / 2.0, rel=1e-15)
    for t in (0.3, 1.0, 7.5, 120.0):
        assert abs(hankel_paper(0, t)) == pytest.approx(SQRT_2_OVER_PI / t, rel=1e-14)


def test_n0_closed_form_derivative():
    for t in (0.3, 1.0, 2.0, 7.5, 120.0):
        expected = SQRT_2_OVER_PI * math.sqrt(t * t + 1.0) / (t * t)
        assert abs(hankel_paper_deriv(0, t)) == pytest.approx(expected, rel=1e-14)


def test_two_term_sum():
    assert abs(hankel_paper(1, 2.0)) == pytest.approx(H1_2_MAG, rel=1e-14)


def test_three_term_sum():
    assert abs(hankel_paper(2, 1.0)) == pytest.approx(H2_1_MAG, rel=1e-14)
    assert abs(hankel_paper(2, 1.0)) == pytest.approx(
        SQRT_2_OVER_PI * math.sqrt(13.0), rel=1e-14
    )


def test_h0_prime_equals_minus_h1():
    for t in (0.2, 1.0, 2.0, 5.0, 50.0):
        assert hankel_paper_deriv(0, t) == pytest.approx(-hankel_paper(1, t), rel=1e-14)


def test_derivative_matches_finite_difference():
    n, t, step = 2, 3.0, 1e-5
    fd = (hankel_paper(n, t + step) - hankel_paper(n, t - step)) / (2 * step)
    exact = hankel_paper_deriv(n, t)
    assert abs(fd - exact) / abs(exact) <= 1e-8


@pytest.mark.parametrize("n", [0, 1, 3, 7, 15, 30])
def test_finite_difference_grid(n):
    for t in np.logspace(np.log10(0.5), np.log10(200), 25):
        t = float(t)
        step = 1e-6 * t
        fd = (hankel_paper(n, t + step) - hankel_paper(n, t - step)) / (2 * step)
        exact = hankel_paper_deriv(n, t)
        assert abs(fd - exact) / abs(exact) <= 1e-8


def test_oracle_n0():
    assert hankel_magnitude_oracle(0, 2.0) == pytest.approx(SQRT_2_OVER_PI / 2.0, rel=1e-13)


def test_oracle_matches_finite_sum():
    assert hankel_magnitude_oracle(1, 2.0) == pytest.approx(H1_2_MAG, rel=1e-12)
    assert hankel_magnitude_oracle(10, 5.0) == pytest.approx(H10_5_MAG, rel=1e-12)
    a = abs(hankel_paper(10, 5.0))
    b = hankel_magnitude_oracle(10, 5.0)
    assert abs(a - b) / b <= 1e-10


def test_cross_validation_grid():
    # independent recurrence oracle vs finite sum, full supported sweep
    ts = np.logspace(np.log10(0.5), np.log10(200), 200)
    for n in range(0, 41, 4):
        for t in ts:
            a = abs(hankel_paper(n, float(t)))
            b = hankel_magnitude_oracle(n, float(t))
            assert abs(a - b) / b <= 1e-10


def test_monotone_decreasing_in_t():
    ts = np.logspace(np.log10(0.5), np.log10(200), 200)
    for n in (0, 1, 5, 20, 40):
        mags = [abs(hankel_paper(n, float(t))) for t in ts]
        assert all(a > b for a, b in zip(mags, mags[1:]))


def test_magnitudes_never_vanish():
    for n in (0, 3, 25, 60):
        for t in (0.1, 1.0, 31.4, 200.0):
            h = hankel_value(n, t)
            assert abs(h.value) > 0
            assert abs(h.derivative) > 0


def test_domain_errors():
    with pytest.raises(DomainError):
        hankel_paper(0, 0.0)
    with pytest.raises(DomainError):
        hankel_paper(2, -1.0)
    with pytest.raises(DomainError):
        hankel_paper(N_MAX_SUPPORTED + 1, 1.0)
    with pytest.raises(DomainError):
        hankel_paper(-1, 1.0)
    with pytest.raises(DomainError):
        hankel_magnitude_oracle(0, 0.05)
    with pytest.raises(DomainError):
        hankel_magnitude_oracle(61, 1.0)


def test_capacity_error_reported():
    # n = 60 at tiny t overflows the finite-sum terms well before 1e300
    with pytest.raises(CapacityError):
        hankel_paper(60, 1e-4)


@settings(max_examples=150, deadline=None)
@given(n=st.integers(0, 40), t=st.floats(0.5, 200.0))
def test_property_cross_validation(n, t):
    a = abs(hankel_paper(n, t))
    b = hankel_magnitude_oracle(n, t)
    assert a > 0
    assert abs(a - b) / b <= 1e-10
