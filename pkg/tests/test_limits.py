from fractions import Fraction
from math import comb

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp, mpf

import oracles
from arcsine_moments.limits import (
    ZETA_BETA_KINDS,
    beta_odd,
    pi_limit_inner,
    pi_limit_prefactor,
    pi_limit_target,
    pi_limit_value,
    zeta_beta_finite,
    zeta_beta_target,
    zeta_even,
)
from arcsine_moments.precision import PrecisionContext


def test_single_term_value():
    # C(2,0)/C(2,1) * 1/1^2
    assert zeta_beta_finite("4.9", 2, 1) == Fraction(1, 2)


@given(st.sampled_from(ZETA_BETA_KINDS), st.integers(2, 6), st.integers(0, 40))
def test_finite_sums_match_brute_force(kind, s, ell):
    assert zeta_beta_finite(kind, s, ell) == oracles.zeta_beta_brute(kind, s, ell)


def test_finite_sum_validation():
    with pytest.raises(ValueError):
        zeta_beta_finite("4.9", 1, 3)
    with pytest.raises(ValueError):
        zeta_beta_finite("4.13", 2, 3)
    with pytest.raises(ValueError):
        zeta_beta_finite("4.11", 2, -1)


def test_basel_finite_sum_rate():
    # the binomial weights cut the sum off near k ~ sqrt(ell), so the gap closes like sqrt(pi/ell)
    with mp.workprec(128):
        for ell in (500, 2000, 8000):
            v = zeta_beta_finite("4.9", 2, ell)
            gap = mp.pi**2 / 6 - mpf(v.numerator) / v.denominator
            assert 0.95 < gap * mpmath.sqrt(ell / mp.pi) < 1.0


def test_alternating_odd_cubes_approach_target():
    with mp.workprec(128):
        target = mp.pi**3 / 32
        errs = []
        for ell in (16, 128, 1024):
            v = zeta_beta_finite("4.12", 3, ell)
            errs.append(abs(mpf(v.numerator) / v.denominator - target))
        assert errs == sorted(errs, reverse=True) and errs[-1] < 1e-3


def test_closed_zeta_and_beta_values():
    with mp.workprec(200):
        for n in range(1, 12):
            assert abs(zeta_even(n) / mpmath.zeta(2 * n) - 1) < mpf(2) ** -190
        for n in range(0, 10):
            assert abs(beta_odd(n) / mpmath.dirichlet(2 * n + 1, [0, 1, 0, -1]) - 1) < mpf(2) ** -190


def test_targets():
    with mp.workprec(128):
        z3 = mpmath.zeta(3)
        assert zeta_beta_target("4.9", 2) == zeta_even(1)
        assert abs(zeta_beta_target("4.10", 3) - z3 * 3 / 4) < mpf(2) ** -120
        assert abs(zeta_beta_target("4.11", 3) - z3 * 7 / 8) < mpf(2) ** -120
        assert abs(zeta_beta_target("4.12", 2) - mpmath.catalan) < mpf(2) ** -120


@pytest.mark.parametrize("n", [1, 2, 7, 16, 33])
def test_prefactors(n):
    with mp.workprec(128):
        if n % 2 == 0:
            assert pi_limit_prefactor("even", 2, n) == mpf(6 * 2 ** (n + 3)) / comb(n, n // 2)
        gamma_binom = mpmath.gamma(n + 1) / mpmath.gamma(mpf(n) / 2 + 1) ** 2
        got = pi_limit_prefactor("odd", 1, n)
        assert abs(got - mpf(2 ** (n + 3) * 2) / gamma_binom) < mpf(2) ** -110 * got


def test_family_validation():
    with pytest.raises(ValueError):
        pi_limit_value("even", 0, 8)
    with pytest.raises(ValueError):
        pi_limit_value("odd", -1, 8)
    with pytest.raises(ValueError):
        pi_limit_value("odd", 0, 0)
    with pytest.raises(ValueError):
        pi_limit_value("neither", 1, 8)
    with pytest.raises(ValueError):
        pi_limit_value("odd", 1, 8, method="guess")


@pytest.mark.parametrize("family,p", [("odd", 0), ("odd", 2), ("even", 1), ("even", 3)])
@pytest.mark.parametrize("n", [1, 2, 9, 64])
def test_integral_route_matches_closed_route(family, p, n, ctx):
    a = pi_limit_value(family, p, n, ctx)
    b = pi_limit_value(family, p, n, ctx, method="closed")
    with ctx.workprec():
        assert abs(a - b) <= abs(b) * ctx.eps(16)


@pytest.mark.parametrize("family,p,n", [("odd", 1, 4), ("even", 2, 3), ("odd", 3, 100)])
def test_inner_integral_matches_mpmath_quad(family, p, n):
    power, scale = (2 * p, mpmath.factorial(2 * p)) if family == "odd" else (2 * p - 1, mpmath.factorial(2 * p - 1) / 2)
    with mp.workprec(120):
        ref = mpmath.quad(lambda t: mpmath.sin(t) ** n * t**power, [0, mp.pi / 4, mp.pi / 2]) / scale
        got = pi_limit_inner(family, p, n, PrecisionContext(96))
        assert abs(got - ref) < mpf(2) ** -90 * abs(ref)


def test_series_route_brackets_the_exact_value():
    ctx = PrecisionContext(64)
    from arcsine_moments.series import SeriesSpec, sum_series

    res = sum_series(SeriesSpec("pi-limit-even", {"p": 1, "n": 4}), max_terms=10**5, ctx=ctx)
    exact = pi_limit_value("even", 1, 4, ctx, method="closed")
    lo, hi = res.bracket()
    assert lo <= exact <= hi


def test_named_limits_first_terms(ctx):
    # the p = 0 odd sequence is exactly pi at every n
    for n in (1, 2, 3, 10):
        with ctx.workprec():
            assert abs(pi_limit_value("odd", 0, n, ctx) - mp.pi) < ctx.eps(4)
    with ctx.workprec():
        assert abs(pi_limit_value("even", 1, 64, ctx) - mp.pi**2) < 2
        assert pi_limit_target("even", 2) == mp.pi**4


@pytest.mark.parametrize("family,p", [("odd", 1), ("odd", 3), ("even", 1), ("even", 3)])
def test_error_shrinks_with_n(family, p, ctx):
    errs = []
    for n in (16, 64, 256, 1024, 4096):
        v = pi_limit_value(family, p, n, ctx)
        with ctx.workprec():
            errs.append(abs(v - pi_limit_target(family, p)))
    assert all(b < a for a, b in zip(errs, errs[1:]))
    # quadrupling n halves the error: a 1/sqrt(n) rate
    ratios = [float(a / b) for a, b in zip(errs, errs[1:])]
    assert all(1.6 < r < 2.1 for r in ratios[1:])
