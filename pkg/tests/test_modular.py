"""Eta machinery tests: special values, functional equations, dual expansions,
and the bounds the certified estimates rely on."""

import cmath
import math

import pytest

from tcore import exact
from tcore.modular import (
    e_of,
    eta_log,
    eta_log_deriv,
    eta_log_deriv_prime,
    eta_quotient_log,
    expansion_polynomials,
    quotient_step_log,
    sigma,
)

PI = math.pi


# --- sigma -------------------------------------------------------------------------

def test_sigma_values():
    assert sigma(1) == 1
    assert sigma(6) == 12  # 1 + 2 + 3 + 6
    for q in (2, 3, 5, 7, 101, 997):
        assert sigma(q) == q + 1


def test_sigma_brute():
    for n in range(1, 200):
        assert sigma(n) == sum(d for d in range(1, n + 1) if n % d == 0)


def test_sigma_validation():
    with pytest.raises(ValueError):
        sigma(0)


# --- eta ---------------------------------------------------------------------------

def test_eta_leading_term():
    # Re log eta(iy) ~ -2 pi y / 24 for large y
    for y in (20.0, 50.0):
        ratio = eta_log(complex(0.0, y)).real / (-2.0 * PI * y / 24.0)
        assert abs(ratio - 1.0) < 1e-10


def test_eta_functional_equation_residual():
    y = 2.0
    lhs = eta_log(complex(0.0, y))
    rhs = -0.5 * math.log(y) + eta_log(complex(0.0, 1.0 / y))
    assert abs(lhs - rhs) < 1e-12


def test_eta_half_vs_two():
    # eta(i/2) = sqrt(2) eta(2i), both sides by direct product
    lhs = cmath.exp(eta_log(complex(0.0, 0.5)))
    rhs = math.sqrt(2.0) * cmath.exp(eta_log(complex(0.0, 2.0)))
    assert abs(lhs - rhs) / abs(rhs) < 1e-12


def test_eta_small_y_reroute():
    # on-axis evaluation below the product floor goes through the inversion
    val = eta_log(complex(0.0, 0.001))
    assert math.isclose(val.real, -0.5 * math.log(0.001) - 2.0 * PI / (24.0 * 0.001), rel_tol=1e-9)


def test_eta_region_validation():
    with pytest.raises(ValueError):
        eta_log(complex(0.0, -1.0))
    with pytest.raises(ValueError):
        eta_log(complex(0.3, 0.001))  # tiny y off the axis is unsupported


# --- the eta quotient -----------------------------------------------------------------

def test_quotient_real_positive_on_axis():
    for t, y in ((5, 0.35), (100, 0.01), (1000, 0.001)):
        val = eta_quotient_log(complex(0.0, y), t)
        assert abs(val.imag) < 1e-12
        assert math.isfinite(val.real)


def test_quotient_reproduces_series():
    t = 5
    z = complex(0.0, 0.35)
    lhs = e_of((1 - t * t) * z / 24.0) * cmath.exp(eta_quotient_log(z, t))
    series = exact.tcore_counts(t, 30)
    rhs = sum(series.values[n] * e_of(n * z) for n in range(31))
    assert abs(lhs - rhs) < 1e-8


def test_quotient_d0_identity():
    # log quotient(iy) = (2 pi / y)(D_0(iy) - D_0(ity))
    t, y = 100, 0.01
    lhs = eta_quotient_log(complex(0.0, y), t).real
    rhs = (2.0 * PI / y) * (
        eta_log_deriv(0, complex(0.0, y)).real
        - eta_log_deriv(0, complex(0.0, t * y)).real
    )
    assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(lhs))


# --- polynomial tables -----------------------------------------------------------------

def test_table_rows_match_closed_forms():
    from fractions import Fraction

    rows_fn = {
        0: (-1, (1,)),
        1: (0, (1,)),
        2: (0, (-2, 1)),
        3: (0, (6, -6, 1)),
        4: (0, (-24, 36, -12, 1)),
    }
    rows_deriv = {
        0: (1, 1),
        1: (0, 0, 1),
        2: (0, 0, -3, 1),
        3: (0, 0, 12, -8, 1),
        4: (0, 0, -60, 60, -15, 1),
    }
    for k in range(5):
        tab = expansion_polynomials(k)
        low, coeffs = rows_fn[k]
        assert tab.fn_low == low
        assert tab.fn_coeffs == tuple(Fraction(c) for c in coeffs)
        assert tab.deriv_coeffs == rows_deriv[k]


def test_table_derivative_identity():
    # deriv polynomial = r^2 (fn - fn') exactly, through k = 8
    from fractions import Fraction

    for k in range(9):
        tab = expansion_polynomials(k)
        f = dict(enumerate(tab.fn_coeffs, start=tab.fn_low))
        lhs = {}
        for e, c in f.items():
            lhs[e + 2] = lhs.get(e + 2, Fraction(0)) + c
            lhs[e + 1] = lhs.get(e + 1, Fraction(0)) - e * c
        lhs = {e: c for e, c in lhs.items() if c}
        rhs = {e: Fraction(c) for e, c in enumerate(tab.deriv_coeffs) if c}
        assert lhs == rhs


# --- dual expansions ---------------------------------------------------------------------

@pytest.mark.parametrize("y", [0.9, 1.0, 1.1])
@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_dual_expansion_agreement(k, y):
    z = complex(0.0, y)
    for fn in (eta_log_deriv, eta_log_deriv_prime):
        a = fn(k, z, branch="q")
        b = fn(k, z, branch="inverted")
        assert abs(a - b) <= 1e-10 * max(abs(a), 1e-30)


def test_dual_expansion_off_axis():
    z = complex(0.25, 0.95)
    for k in range(5):
        a = eta_log_deriv(k, z, branch="q")
        b = eta_log_deriv(k, z, branch="inverted")
        assert abs(a - b) <= 1e-10 * max(abs(a), 1e-30)


def test_region_validation():
    with pytest.raises(ValueError):
        eta_log_deriv(2, complex(0.5, 0.6))  # |x| >= y/3 with y < 1
    with pytest.raises(ValueError):
        eta_log_deriv(5, complex(0.0, 1.0))
    with pytest.raises(ValueError):
        eta_log_deriv(2, complex(0.0, 1.0), branch="bogus")


# --- D_k values and bounds ------------------------------------------------------------------

def test_d1_growth():
    # D_1(iy) / (y^2/24) -> 1 as y grows
    y = 30.0
    ratio = eta_log_deriv(1, complex(0.0, y)).real / (y * y / 24.0)
    assert abs(ratio - 1.0) < 1e-12


def test_d2_limits():
    assert abs(eta_log_deriv(2, complex(0.0, 1e-4)).real - 1.0 / 12.0) < 1e-4
    assert eta_log_deriv(2, complex(0.0, 30.0)).real < 1e-70


def test_d2_anchor_difference():
    anchor = (
        eta_log_deriv(2, complex(0.0, 0.1)).real
        - eta_log_deriv(2, complex(0.0, 1.0)).real
    )
    assert abs(anchor - 0.0635) <= 0.0005


def test_d2_prime_special_value():
    # i D_2'(i) = -1/(8 pi)
    val = 1j * eta_log_deriv_prime(2, complex(0.0, 1.0))
    assert abs(val - (-1.0 / (8.0 * PI))) < 1e-12


def test_d1_prime_lower_bound():
    # i D_1'(iy) > 1/(4 pi); the gap is ~ e^(-2 pi / y) for tiny y, below
    # double resolution, so strictness is asserted only where resolvable
    for y in (0.001, 0.01, 0.1, 0.5, 1.0, 2.0, 10.0):
        val = 1j * eta_log_deriv_prime(1, complex(0.0, y))
        assert abs(val.imag) < 1e-10
        assert val.real >= 1.0 / (4.0 * PI)
        if y >= 0.3:
            assert val.real > 1.0 / (4.0 * PI)


def test_d2_prime_functional_equation():
    z = complex(0.1, 0.7)
    resid = (
        eta_log_deriv_prime(2, z)
        + eta_log_deriv_prime(2, -1.0 / z)
        - (-1.0 / (4j * PI))
    )
    assert abs(resid) < 1e-10


def test_d3_monotone_range():
    ys = [10.0 ** (-3 + 0.25 * i) for i in range(20)]
    vals = [eta_log_deriv(3, complex(0.0, y)).real for y in ys]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert all(-0.25 < v < 0.0 for v in vals)


def test_d3_to_d2_ratio_bound():
    for y in (1e-3, 1e-2, 0.1):
        for t in (2, 5, 50, 1000):
            num = (
                eta_log_deriv(3, complex(0.0, y)).real
                - eta_log_deriv(3, complex(0.0, t * y)).real
            )
            den = (
                eta_log_deriv(2, complex(0.0, y)).real
                - eta_log_deriv(2, complex(0.0, t * y)).real
            )
            assert abs(num / den) < 6.0


def test_d4_to_d2_ratio_bound():
    for y in (1e-3, 1e-2, 0.1):
        for frac in (0.0, 0.3):
            z = complex(frac * y, y)
            for t in (2, 20, 1000):
                num = abs(eta_log_deriv(4, z) - eta_log_deriv(4, t * z))
                den = (
                    eta_log_deriv(2, complex(0.0, y)).real
                    - eta_log_deriv(2, complex(0.0, t * y)).real
                )
                assert num / den < 36.0


# --- the adjacent-t step ---------------------------------------------------------------------

def test_step_log_bounds():
    t, y = 1000, 0.001
    z = complex(0.0, y)
    step = quotient_step_log(z, t)
    damp = abs(t * z) * math.exp(-2.0 * PI * t * y)
    assert abs(step) <= 7.5 * damp
    refined = step + e_of(t * z) * (2j * PI * t * z + 1.0)
    assert abs(refined) <= (40.0 * abs(z) + 22.0 * math.exp(-2.0 * PI * t * y)) * damp


def test_step_log_consistency():
    t = 1000
    z = complex(0.0, 0.001)
    direct = (
        eta_quotient_log(z, t + 1)
        - eta_quotient_log(z, t)
        - 2j * PI * (2 * t + 1) * z / 24.0
    )
    assert abs(quotient_step_log(z, t) - direct) < 1e-10
