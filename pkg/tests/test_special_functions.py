import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from subpoisson.special_functions import (
    DomainError, PHI_SERIES_THRESHOLD, coshm1, extended, h, h_inverse, lambert_w0, log_phi,
    phi, phi_abs, phi_array,
)

mpmath.mp.dps = 50

GRID = np.geomspace(1e-12, 50.0, 400)
W_GRID = np.concatenate([[0.0], np.geomspace(1e-12, 1e12, 400)])


def series_phi(x):
    """sum_{k>=2} x^k / k! evaluated term by term at 50 digits."""
    x = mpmath.mpf(x)
    total, term, k = mpmath.mpf(0), x, 1
    while True:
        k += 1
        term = term * x / k
        total += term
        if abs(term) < mpmath.mpf(10) ** -60 * abs(total):
            return total


def rel(a, b):
    return abs(a - b) / abs(b)


# -- phi ---------------------------------------------------------------------

def test_phi_trivial_values():
    assert phi(0.0) == 0.0
    assert phi(1.0) == pytest.approx(math.e - 2.0, rel=1e-15)
    assert phi_abs(2.0) == pytest.approx(math.e ** 2 - 3.0, rel=1e-15)
    assert phi_abs(-1.0) == phi(1.0)


@pytest.mark.parametrize("x", [1e-8, -1e-8, 1e-12, 3.3e-5, -9.9e-5, 1e-150])
def test_phi_series_region_twelve_digits(x):
    assert rel(phi(x), float(series_phi(x))) < 1e-12


@pytest.mark.parametrize("x", [1.01e-4, -2e-4, 1e-3, 0.5, -0.5, 3.0, -20.0, 40.0])
def test_phi_closed_form_region(x):
    assert rel(phi(x), float(mpmath.expm1(x) - x)) < 1e-11


def test_phi_continuous_across_switch():
    lo = phi(PHI_SERIES_THRESHOLD * (1 - 1e-12))
    hi = phi(PHI_SERIES_THRESHOLD * (1 + 1e-12))
    assert rel(lo, hi) < 1e-10


def test_phi_rejects_non_finite():
    for bad in (math.inf, -math.inf, math.nan):
        with pytest.raises(DomainError):
            phi(bad)


def test_phi_overflow_is_inf_not_nan():
    assert phi(1000.0) == math.inf
    assert log_phi(1000.0) == pytest.approx(1000.0, rel=1e-15)


def test_log_phi_matches_mpmath():
    for x in (1e-200, -1e-170, 1e-6, -3e-5, 0.3, 5.0, 200.0, 5e4):
        want = mpmath.log(series_phi(x)) if abs(x) < 1e-3 else mpmath.log(mpmath.expm1(x) - x)
        assert rel(log_phi(x), float(want)) < 1e-13


def test_phi_array_agrees_with_scalar():
    z = np.array([-3.0, -1e-5, 0.0, 2e-5, 0.7, 12.0])
    assert np.allclose(phi_array(z), [phi(v) for v in z], rtol=1e-15, atol=0.0)


@given(st.floats(-700, 700))
def test_phi_nonnegative(x):
    assert phi(x) >= 0.0


def test_cosh_sandwich_on_grid():
    # for large x the exact gap 2(cosh x - 1) - phi(x) ~ x - 1 is below one
    # ulp of e^x, so the upper side is compared with a few ulps of slack
    ulps = 4 * np.finfo(float).eps
    for x in np.concatenate([GRID, -GRID]):
        c = coshm1(x)
        assert c <= phi_abs(x) <= 2.0 * c * (1 + ulps)
        assert phi(x) <= phi_abs(x)


def test_phi_dominates_half_square():
    for x in GRID:
        assert phi(x) >= 0.5 * x * x


@pytest.mark.parametrize("x", [-3.0, -1.0, -0.1])
def test_phi_abs_dominates_phi_at_negative_points(x):
    assert phi_abs(x) >= phi(x)


def test_extended_rejects_nan():
    assert extended(math.inf) == math.inf
    with pytest.raises(DomainError):
        extended(math.nan)


# -- Lambert W -----------------------------------------------------------------

def test_lambert_trivial_values():
    assert lambert_w0(0.0) == 0.0
    assert lambert_w0(math.e) == pytest.approx(1.0, rel=1e-15)
    assert lambert_w0(math.inf) == math.inf


def test_lambert_at_one_matches_bisection():
    lo, hi = 0.0, 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid * math.exp(mid) < 1.0:
            lo = mid
        else:
            hi = mid
    assert lambert_w0(1.0) == pytest.approx(lo, rel=1e-14)
    assert lambert_w0(1.0) == pytest.approx(0.5671432904097838, rel=1e-15)


def test_lambert_matches_mpmath():
    for x in W_GRID[1:]:
        assert rel(lambert_w0(x), float(mpmath.lambertw(x).real)) < 1e-13


def test_lambert_round_trip():
    for x in W_GRID[1:]:
        w = lambert_w0(x)
        assert rel(w * math.exp(w), x) < 1e-10


def test_lambert_monotone():
    ws = [lambert_w0(x) for x in W_GRID]
    assert all(a <= b for a, b in zip(ws, ws[1:]))


def test_lambert_scaling_inequalities():
    for x in W_GRID:
        w = lambert_w0(x)
        for c in (0.0, 0.1, 0.5, 0.9, 1.0):
            wc = lambert_w0(c * x)
            assert c * w <= wc * (1 + 1e-15)
            assert wc <= w


def test_lambert_rejects_negative():
    with pytest.raises(DomainError):
        lambert_w0(-0.1)
    with pytest.raises(DomainError):
        lambert_w0(math.nan)


# -- h and its inverse -----------------------------------------------------------

def test_h_trivial_values():
    assert h(0.0) == 0.0
    assert h(math.e - 1.0) == pytest.approx(1.0, rel=1e-15)
    assert h(1.0) == pytest.approx(2.0 * math.log(2.0) - 1.0, rel=1e-15)


def test_h_matches_mpmath():
    for u in np.concatenate([GRID, [1e3, 1e8]]):
        m = mpmath.mpf(u)
        assert rel(h(u), float((1 + m) * mpmath.log1p(m) - m)) < 1e-13


def test_h_strictly_increasing():
    vals = [h(u) for u in GRID]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_h_inverse_trivial_values():
    assert h_inverse(0.0) == 0.0
    assert h_inverse(1.0) == pytest.approx(math.e - 1.0, rel=1e-14)


def test_h_inverse_matches_bisection():
    y = 2.0 * math.log(2.0) - 1.0
    lo, hi = 0.0, 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if h(mid) < y:
            lo = mid
        else:
            hi = mid
    assert h_inverse(y) == pytest.approx(lo, abs=1e-12)
    assert h_inverse(y) == pytest.approx(1.0, abs=1e-9)


def test_h_inverse_matches_lambert_form_for_y_at_least_one():
    for y in (1.0, 1.5, 10.0, 1e4):
        closed = math.exp(1.0 + lambert_w0((y - 1.0) / math.e)) - 1.0
        assert rel(h_inverse(y), closed) < 1e-12


def test_h_round_trip():
    for y in np.concatenate([np.geomspace(1e-20, 1e6, 300)]):
        assert rel(h(h_inverse(y)), y) < 1e-10


@given(st.floats(0.0, 1e6))
@settings(max_examples=200)
def test_h_inverse_inverts_h(u):
    y = h(u)
    if y > 0.0:
        assert rel(h(h_inverse(y)), y) < 1e-10


def test_h_domain_errors():
    with pytest.raises(DomainError):
        h(-1e-3)
    with pytest.raises(DomainError):
        h_inverse(-1.0)
