"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
Tolerances are pinned here, not derived from the code under test.

Criteria 3 and 5 cannot pass as written; both are strict xfails whose
reasons are given in their docstrings.  The attainable parts of each are
checked by separate tests that must pass.
"""
from __future__ import annotations

import time

import mpmath
import pytest
from mpmath import mp, mpf

from arcsine_moments.closed_form import specialize_pi
from arcsine_moments.identities import identity_lhs, partial_fraction_rhs, rhs_value, corollary_rhs
from arcsine_moments.limits import ZETA_BETA_KINDS, pi_limit_target, pi_limit_value, zeta_beta_finite, zeta_beta_target
from arcsine_moments.pipoly import PiPoly
from arcsine_moments.precision import PrecisionContext
from arcsine_moments.series import SeriesSpec, sum_series
from arcsine_moments.verify import check_lemma32, run_suite

P = 128
TOL_GRID = mpf(2) ** -112
TOL_LEMMA32 = mpf(2) ** -100
GRID_SECONDS = 60
CONSTANT_DIGITS = 30
EXTRAPOLATION_REL = mpf("1e-4")
SERIES_TERMS = 10**5
PI_N = (16, 64, 256, 1024, 4096)
ELLS = tuple(2**j for j in range(4, 12))

RESULTS: dict[int, str] = {}


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[number] = line
    print(line)


@pytest.fixture(scope="module")
def ctx():
    return PrecisionContext(P)


def _bracket(id, params, ctx, max_terms=SERIES_TERMS):
    spec, factor = identity_lhs(id, params, ctx)
    with ctx.workprec():
        res = sum_series(spec, tolerance=ctx.eps(16) / factor, max_terms=max_terms, ctx=ctx)
        return res.partial_sum * factor, res.tail_estimate * factor


# 1 ---------------------------------------------------------------------------------


def test_criterion_1_closed_forms_against_quadrature(ctx):
    start = time.perf_counter()
    report = run_suite("thm21", {"tol_exp": -112}, ctx)
    elapsed = time.perf_counter() - start
    worst = max(c.residual for c in report.cases)
    ok = report.passed and len(report.cases) == 8 * 9 * 7 and elapsed < GRID_SECONDS
    record(1, ok, f"{len(report.cases)} cases, max residual {mpmath.nstr(worst, 3)} <= 2^-112, {elapsed:.1f}s < {GRID_SECONDS}s")
    assert ok


# 2 ---------------------------------------------------------------------------------


def test_criterion_2_pi_polynomial_bridge(ctx):
    report = run_suite("cor23-bridge", {"pmax": 6, "lmax": 6}, ctx)
    # (2.9, 2.10: p = 0..6) + (2.11, 2.12: p = 1..6), each for ell = 0..6
    ok = report.passed and len(report.cases) == (7 + 7 + 6 + 6) * 7
    record(2, ok, f"{len(report.cases)} exact PiPoly equalities")
    assert ok


# 3 ---------------------------------------------------------------------------------

R2 = mpmath.sqrt


def _reference_constants():
    """(identity, params, reference expression as a function of pi and sqrt2)."""
    return [
        ("2.17", {"p": 0}, lambda pi, r2: 2 - r2),
        ("2.17", {"p": 1}, lambda pi, r2: -2 + r2 + pi / (2 * r2) - pi**2 / (16 * r2)),
        ("2.18", {"p": 1}, lambda pi, r2: 1 - pi / 4),
        ("2.18", {"p": 2}, lambda pi, r2: -1 + pi / 4 + pi**2 / 32 - pi**3 / 384),
        ("2.19", {"p": 0}, lambda pi, r2: r2 * (pi - 2) / 4),
        ("2.19", {"p": 1}, lambda pi, r2: r2 * (pi**3 - 6 * pi**2 + 48) / 384),
        ("2.20", {"p": 1}, lambda pi, r2: (pi**2 - 4 * pi + 8) / 32),
        ("2.20", {"p": 2}, lambda pi, r2: (pi**4 - 8 * pi**3 + 192 * pi + 384) / 6144),
        ("5.2", {"p": 0, "n": 1, "m": 2, "x": 1}, lambda pi, r2: pi / 4 - mpf(2) / 3),
        ("5.2", {"p": 1, "n": 1, "m": 2, "x": 1}, lambda pi, r2: pi**3 / 96 - 47 * pi / 144 + mpf(20) / 27),
    ]


def _exact(id, params) -> PiPoly:
    if id == "5.2":
        # at x = 1 the x^(n+m) normalisation is 1
        return specialize_pi(partial_fraction_rhs(params["p"], params["n"], params["m"]), "1")
    return corollary_rhs(id, params)


def _constant_rows(ctx):
    rows = []
    for id, params, reference in _reference_constants():
        exact = _exact(id, params)
        lhs, tail = _bracket(id, params, ctx)
        with mp.workprec(200):
            v = exact.value()
            digits_ok = abs(v - reference(mp.pi, R2(2))) < mpf(10) ** -CONSTANT_DIGITS
        with ctx.workprec():
            series_ok = abs(lhs - v) <= tail + ctx.eps(16)
        rows.append((id, params, exact, digits_ok, series_ok))
    return rows


@pytest.mark.xfail(strict=True, reason="one reference constant has a sign error; see docstring")
def test_criterion_3_reference_constants(ctx):
    """The reference value for 2.20 at p = 2 ends in +384; the identity's own right side,
    the exact construction and a 100-term geometric series all give -384, so that one
    comparison to 30 digits cannot succeed (the two differ by exactly 1/8)."""
    rows = _constant_rows(ctx)
    bad = [f"{id} {params}" for id, params, _, d, s in rows if not (d and s)]
    ok = not bad
    record(3, ok, f"{len(rows) - len(bad)}/{len(rows)} constants match to {CONSTANT_DIGITS} digits and bracket"
           + (f"; mismatched: {', '.join(bad)}" if bad else ""))
    assert ok


def test_criterion_3_attainable_part(ctx):
    rows = _constant_rows(ctx)
    assert all(series_ok for *_, series_ok in rows)
    mismatched = [(id, params, exact) for id, params, exact, d, _ in rows if not d]
    assert [(id, params) for id, params, _ in mismatched] == [("2.20", {"p": 2})]
    with mp.workprec(200):
        exact = mismatched[0][2].value()
        corrected = (mp.pi**4 - 8 * mp.pi**3 + 192 * mp.pi - 384) / 6144
        assert abs(exact - corrected) < mpf(10) ** -CONSTANT_DIGITS


# 4 ---------------------------------------------------------------------------------


def test_criterion_4_exact_identity_suites(ctx):
    sums = run_suite("lemma43", {"pmax": 50}, ctx)
    combos = run_suite("cor54", {"lmax": 200}, ctx)
    inside = []
    for n in range(0, 21, 2):
        lhs, tail = _bracket("1.3", {"n": n}, ctx)
        with ctx.workprec():
            target = mpmath.binomial(n, n // 2) * mp.pi / mpf(2) ** (n + 1)
            inside.append(abs(lhs - target) <= tail)
    ok = sums.passed and len(sums.cases) == 200 and combos.passed and len(combos.cases) == 400 and all(inside)
    record(4, ok, f"power sums 200/200 exact, combinatorial 400/400 exact, even-offset series {sum(inside)}/11 within tail")
    assert ok


# 5 ---------------------------------------------------------------------------------


def _limit_rows(ctx):
    rows = []
    for family in ("odd", "even"):
        for p in range(0 if family == "odd" else 1, 4):
            values = [pi_limit_value(family, p, n, ctx) for n in PI_N]
            with ctx.workprec():
                target = pi_limit_target(family, p)
                errs = [abs(v - target) for v in values]
                decreasing = all(b < a for a, b in zip(errs, errs[1:]))
                # c/n model: v(n) = L + c/n  =>  L = (4 v(4096) - v(1024)) / 3
                by_n = abs((4 * values[-1] - values[-2]) / 3 - target) / target
                # c/sqrt(n) model: L = 2 v(4096) - v(1024)
                by_sqrt = abs(2 * values[-1] - values[-2] - target) / target
            rows.append((family, p, errs, decreasing, by_n, by_sqrt))
    return rows


@pytest.mark.xfail(strict=True, reason="the sequences converge like 1/sqrt(n), not 1/n; see docstring")
def test_criterion_5_pi_limit_rates(ctx):
    """Two parts of this criterion cannot hold.  The odd p = 0 sequence equals pi
    at every n, so its error cannot strictly decrease.  For p >= 1 the error
    behaves like c/sqrt(n) (it halves each time n quadruples), so a c/n
    extrapolation from n = 1024, 4096 misses the limit by 0.5% to 3%, far
    outside 1e-4."""
    rows = _limit_rows(ctx)
    fails = [f"{f} p={p}" for f, p, _, dec, by_n, _ in rows if not (dec and by_n <= EXTRAPOLATION_REL)]
    worst = max(r[4] for r in rows)
    ok = not fails
    record(5, ok, f"{len(rows) - len(fails)}/{len(rows)} sequences meet both parts; worst c/n extrapolation "
           f"error {mpmath.nstr(worst, 3)} relative (limit 1e-4); failing: {', '.join(fails)}")
    assert ok


def test_criterion_5_measured_rate(ctx):
    for family, p, errs, decreasing, by_n, by_sqrt in _limit_rows(ctx):
        if family == "odd" and p == 0:
            # exact at every n, up to rounding
            assert max(errs) <= pi_limit_target("odd", 0) * ctx.eps(16)
            continue
        assert decreasing
        with ctx.workprec():
            ratios = [a / b for a, b in zip(errs, errs[1:])]
        assert all(1.7 < r < 2.05 for r in ratios[1:]), (family, p)
        assert by_n > EXTRAPOLATION_REL
        assert by_sqrt < mpf("3e-3")


# 6 ---------------------------------------------------------------------------------


def test_criterion_6_finite_zeta_beta_limits(ctx):
    bad = []
    with ctx.workprec():
        for kind in ZETA_BETA_KINDS:
            for s in (2, 3, 4):
                target = zeta_beta_target(kind, s)
                errs = []
                for ell in ELLS:
                    v = zeta_beta_finite(kind, s, ell)
                    errs.append(abs(mpf(v.numerator) / v.denominator - target))
                if not all(b < a for a, b in zip(errs, errs[1:])):
                    bad.append(f"{kind} s={s}")
    ok = not bad
    record(6, ok, f"{12 - len(bad)}/12 families strictly approach their limits over ell = 16..2048")
    assert ok


# 7 ---------------------------------------------------------------------------------


def test_criterion_7_generating_function_machinery(ctx):
    worst = mpf(0)
    for n in range(5):
        for q in range(1, 7):
            for x in ("0.3", "0.7", "1"):
                worst = max(worst, check_lemma32(n, q, x, ctx))
    j = run_suite("lemma34", {}, ctx)
    ok = worst <= TOL_LEMMA32 and j.passed and len(j.cases) == 7 * 3 * 5
    record(7, ok, f"reconstruction residual {mpmath.nstr(worst, 3)} <= 2^-100; "
           f"closed J vs quadrature {sum(c.passed for c in j.cases)}/{len(j.cases)} within est_error")
    assert ok


# 8 ---------------------------------------------------------------------------------


def test_criterion_8_two_series_for_half_pi_squared(ctx):
    left = sum_series(SeriesSpec("eq58-left"), max_terms=SERIES_TERMS, ctx=ctx)
    right = sum_series(SeriesSpec("eq58-right"), max_terms=SERIES_TERMS, ctx=ctx)
    with ctx.workprec():
        target = mp.pi**2 / 2
        lb, rb = left.bracket(), right.bracket()
        both = lb[0] <= target <= lb[1] and rb[0] <= target <= rb[1]
        gap = abs(left.partial_sum - right.partial_sum)
        ok = both and gap < left.tail_estimate + right.tail_estimate
        ok = ok and left.terms_used == right.terms_used == SERIES_TERMS
    record(8, ok, f"both brackets hold pi^2/2; |left - right| = {mpmath.nstr(gap, 3)} < "
           f"{mpmath.nstr(left.tail_estimate + right.tail_estimate, 3)}")
    assert ok


if __name__ == "__main__":  # pragma: no cover
    c = PrecisionContext(P)
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_") and not name.endswith(("_part", "_rate")):
            try:
                fn(c)
            except AssertionError:
                pass
