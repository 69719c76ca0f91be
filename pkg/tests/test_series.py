from fractions import Fraction
from math import comb

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp, mpf

import oracles
from arcsine_moments.precision import PrecisionContext
from arcsine_moments.series import (
    SeriesResult,
    SeriesSpec,
    central_binomial_ratio_step,
    partial_fraction_series,
    sum_series,
)


def contains(result: SeriesResult, value) -> bool:
    lo, hi = result.bracket()
    return lo <= value <= hi


@pytest.mark.parametrize("k,expected", [(0, Fraction(1, 2)), (1, Fraction(3, 4)), (9, Fraction(19, 20))])
def test_ratio_step(k, expected):
    assert central_binomial_ratio_step(k) == expected


@given(st.integers(0, 200))
def test_ratio_step_matches_binomials(k):
    b = lambda j: Fraction(comb(2 * j, j), 4**j)  # noqa: E731
    assert central_binomial_ratio_step(k) == b(k + 1) / b(k)


def test_unit_point_examples(ctx):
    r1 = sum_series(SeriesSpec("G", {"p": 0, "m": 1, "x": 1}), max_terms=10**5, ctx=ctx)
    r2 = sum_series(SeriesSpec("G", {"p": 0, "m": 2, "x": 1}), max_terms=10**5, ctx=ctx)
    with ctx.workprec():
        assert contains(r2, mpf(1))
        # one offset decays only like k^(-3/2); the bracket still holds, it is just wide
        assert not r1.converged
        assert r1.partial_sum < mp.pi / 2
    r0 = sum_series(SeriesSpec("H", {"p": 1, "m": 0, "x": 0}), ctx=ctx)
    assert r0.partial_sum == 0 and r0.converged


@pytest.mark.parametrize("family,params", [("G", {"p": 2, "m": 3}), ("H", {"p": 2, "m": 1})])
def test_geometric_tail_against_direct_sum(family, params, ctx):
    P = dict(params, x="0.8")
    res = sum_series(SeriesSpec(family, P), tolerance=mpf(2) ** -100, ctx=ctx)
    assert res.converged
    p, m = params["p"], params["m"]
    with mp.workprec(200):
        x = mpf("0.8")
        K = 400
        if family == "G":
            G = oracles.running_symmetric(p, K, lambda j: mpf(1) / (2 * j + 1) ** 2)
            ref = oracles.direct_sum(
                lambda k: mpf(comb(2 * k, k)) / mpf(4) ** k * G[k] * x ** (2 * k + m) / (2 * k + m), K
            )
        else:
            # H_p(k) is e_(p-1) of {1/(2j)^2 : 1 <= j < k}
            H = oracles.running_symmetric(p - 1, K, lambda j: mpf(1) / (2 * j + 2) ** 2)
            ref = oracles.direct_sum(
                lambda k: mpf(4) ** (k + 1) / comb(2 * k + 2, k + 1) * H[k] * x ** (2 * k + 2 + m)
                / ((2 * k + 2) * (2 * k + 2 + m)),
                K,
            )
        assert abs(res.partial_sum - ref) <= res.tail_estimate + mpf(2) ** -120


def test_bracket_shrinks_with_more_terms(ctx):
    spec = SeriesSpec("G", {"p": 1, "m": 2, "x": 1})
    widths = []
    truth = None
    from arcsine_moments.identities import rhs_value

    with ctx.workprec():
        truth = rhs_value("2.9", {"p": 1, "ell": 0}, ctx)
    for K in (10, 100, 1000, 10000):
        res = sum_series(spec, max_terms=K, ctx=ctx)
        with ctx.workprec():
            assert contains(res, truth)
            widths.append(res.tail_estimate)
    assert widths == sorted(widths, reverse=True)


def test_converged_flag_follows_tolerance(ctx):
    spec = SeriesSpec("G", {"p": 0, "m": 2, "x": "0.5"})
    res = sum_series(spec, tolerance=mpf(2) ** -60, ctx=ctx)
    assert res.converged and res.tail_estimate <= mpf(2) ** -60
    starved = sum_series(spec, tolerance=mpf(2) ** -60, max_terms=3, ctx=ctx)
    assert not starved.converged and starved.terms_used == 3


def test_zero_terms_does_not_crash(ctx):
    res = sum_series(SeriesSpec("H", {"p": 1, "m": 1, "x": "sqrt2/2"}), max_terms=0, ctx=ctx)
    assert res.terms_used == 0 and res.partial_sum == 0 and not res.converged


def test_to_json_schema(ctx):
    res = sum_series(SeriesSpec("G", {"p": 0, "m": 2, "x": "0.5"}), ctx=ctx)
    j = res.to_json(20)
    assert set(j) == {"partial_sum", "terms_used", "tail_estimate", "converged"}
    assert isinstance(j["partial_sum"], str)


@pytest.mark.parametrize(
    "family,params",
    [
        ("G", {"p": -1, "m": 1}),
        ("G", {"p": 0, "m": 0}),
        ("H", {"p": 0, "m": 1}),
        ("G", {"p": 0, "m": 1, "x": "1.5"}),
        ("partial-fraction", {"p": 0, "n": 2, "m": 2}),
        ("eq12", {"n": 3}),
        ("pi-limit-even", {"p": 0, "n": 4}),
        ("nonsense", {}),
    ],
)
def test_series_spec_validation(family, params):
    with pytest.raises(ValueError):
        SeriesSpec(family, params)


def test_tolerance_and_terms_validated(ctx):
    spec = SeriesSpec("G", {"p": 0, "m": 2})
    with pytest.raises(ValueError):
        sum_series(spec, tolerance=0, ctx=ctx)
    with pytest.raises(ValueError):
        sum_series(spec, max_terms=-1, ctx=ctx)


def test_partial_fraction_examples(ctx):
    r0 = partial_fraction_series(0, 1, 2, 1, ctx=ctx, max_terms=10**5)
    r1 = partial_fraction_series(1, 1, 2, 1, ctx=ctx, max_terms=10**5)
    with ctx.workprec():
        assert contains(r0, mp.pi / 4 - mpf(2) / 3)
        assert contains(r1, mp.pi**3 / 96 - 47 * mp.pi / 144 + mpf(20) / 27)
    assert partial_fraction_series(0, 1, 2, 0, ctx=ctx).partial_sum == 0
    with pytest.raises(ValueError):
        partial_fraction_series(0, 3, 3, "0.5", ctx=ctx)


def test_unit_point_tail_is_an_upper_bound():
    # compare the k^(-3/2) bound with a much longer run at modest precision
    ctx = PrecisionContext(64)
    spec = SeriesSpec("H", {"p": 2, "m": 1, "x": 1})
    short = sum_series(spec, max_terms=500, ctx=ctx)
    long = sum_series(spec, max_terms=200000, ctx=ctx)
    with mp.workprec(96):
        assert long.partial_sum - short.partial_sum <= short.tail_estimate


def test_eq58_sides(ctx):
    left = sum_series(SeriesSpec("eq58-left"), max_terms=10**4, ctx=ctx)
    right = sum_series(SeriesSpec("eq58-right"), max_terms=10**4, ctx=ctx)
    with ctx.workprec():
        assert contains(left, mp.pi**2 / 2)
        assert contains(right, mp.pi**2 / 2)


def test_finite_families_are_exact(ctx):
    res = sum_series(SeriesSpec("zeta-finite", {"kind": "4.9", "s": 2, "ell": 3}), ctx=ctx)
    assert res.converged and res.tail_estimate == 0
    with ctx.workprec():
        v = oracles.zeta_beta_brute("4.9", 2, 3)
        assert res.partial_sum == mpf(v.numerator) / v.denominator
