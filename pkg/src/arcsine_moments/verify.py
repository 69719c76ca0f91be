"""Independent oracles and the named verification suites.

Quadrature oracles integrate in theta = arcsin t, where the integrands are
smooth up to x = 1.  The J integral has a closed form built from Chebyshev
values and a w-expansion at w = 0; the coefficient of w^(q-1) rebuilds the
arcsine-power integral without going through the symbolic closed form.

Residuals are always returned as numbers.  Pass/fail is decided only inside
:func:`run_suite`, against the tolerance recorded with each case.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

import mpmath
from mpmath import mp, mpf

from .chebyshev import chebyshev_t, chebyshev_u, lemma33_residuals
from .closed_form import arcsine_power_integral, eval_closed_form, trig_partial
from .exact_core import lemma43_rhs, lemma43_sum
from .precision import PrecisionContext, arcsin, mpf_to_str, to_mpf
from .quadrature import QuadratureReport, integrate

__all__ = [
    "WSeries",
    "QuadratureReport",
    "quadrature_I",
    "quadrature_J",
    "j_closed_form",
    "w_expand_J",
    "check_lemma32",
    "check_cor54",
    "binomial_identity_sides",
    "SUITES",
    "CaseResult",
    "SuiteReport",
    "run_suite",
]


def _unit_interval(x) -> mpf:
    xv = to_mpf(x)
    if not (0 <= xv <= 1):
        raise ValueError("x must lie in [0, 1]")
    return xv


def _quad(f, upper: mpf, ctx: PrecisionContext) -> QuadratureReport:
    rep = integrate(f, 0, upper, mpf(2) ** (-(ctx.precision + 8)))
    with mp.workprec(ctx.precision):
        return QuadratureReport(+rep.value, rep.intervals_used, +rep.est_error)


def quadrature_I(n: int, q: int, x, ctx: PrecisionContext | None = None) -> QuadratureReport:
    """int_0^x t^n arcsin(t)^q dt as int_0^(arcsin x) sin^n(th) cos(th) th^q dth."""
    ctx = ctx or PrecisionContext()
    if n < 0 or q < 0:
        raise ValueError("n and q must be >= 0")
    with ctx.workprec():
        upper = arcsin(_unit_interval(x))
        return _quad(lambda t: mpmath.sin(t) ** n * mpmath.cos(t) * t**q, upper, ctx)


def quadrature_J(n: int, x, w, ctx: PrecisionContext | None = None) -> QuadratureReport:
    """int_0^(arcsin x) sin^(n+1)(th) e^(w th) dth."""
    ctx = ctx or PrecisionContext()
    if n < 0:
        raise ValueError("n must be >= 0")
    with ctx.workprec():
        upper = arcsin(_unit_interval(x))
        wv = to_mpf(w)
        return _quad(lambda t: mpmath.sin(t) ** (n + 1) * mpmath.exp(wv * t), upper, ctx)


def _chebyshev_parts(N: int, x: mpf, s: mpf) -> tuple[mpf, mpf]:
    """(T_N(x), U_(N-1)(x) sqrt(1-x^2))."""
    return chebyshev_t(N)(x), chebyshev_u(N - 1)(x) * s


def j_closed_form(n: int, x, w, ctx: PrecisionContext | None = None) -> mpf:
    """J^(n)(x, w) from the finite Chebyshev sums, with V_N = w T_N - N U_(N-1) sqrt(1-x^2).

    The (e^(wa) - 1)/w term of odd n is replaced by its expansion a + a^2 w/2
    for |w| < 2^(-P/2), and by a at w = 0.
    """
    ctx = ctx or PrecisionContext()
    if n < 0:
        raise ValueError("n must be >= 0")
    with ctx.workprec(32):
        xv = _unit_interval(x)
        wv = to_mpf(w)
        a = arcsin(xv)
        s = mpmath.sqrt(1 - xv * xv)
        ewa = mpmath.exp(wv * a)
        total = mpf(0)
        if n % 2:
            ell = (n + 1) // 2
            if wv == 0:
                first = a
            elif abs(wv) < mpf(2) ** (-ctx.precision // 2):
                first = a + a * a * wv / 2
            else:
                first = mpmath.expm1(wv * a) / wv
            total += comb(2 * ell, ell) * first / mpf(4) ** ell
            scale = mpf(2) ** (1 - 2 * ell)
            for k in range(1, ell + 1):
                N = 2 * k
                T, R = _chebyshev_parts(N, xv, s)
                c = comb(2 * ell, ell - k)
                den = wv * wv + N * N
                total += scale * c * (ewa * (wv * T - N * R) - (-1) ** k * wv) / den
        else:
            ell = n // 2
            scale = mpf(4) ** (-ell)
            for k in range(ell + 1):
                N = 2 * k + 1
                T, R = _chebyshev_parts(N, xv, s)
                c = comb(2 * ell + 1, ell - k)
                den = wv * wv + N * N
                total += scale * c * (ewa * (wv * T - N * R) + (-1) ** k * N) / den
    with mp.workprec(ctx.precision):
        return +total


@dataclass(frozen=True)
class WSeries:
    """Taylor coefficients in w at w = 0, index = power, up to ``order`` inclusive."""

    coefficients: tuple

    def __post_init__(self) -> None:
        if len(self.coefficients) < 2:
            raise ValueError("truncation order must be >= 1")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, j: int) -> mpf:
        return self.coefficients[j]

    def __call__(self, w) -> mpf:
        return mpmath.polyval(list(reversed(self.coefficients)), to_mpf(w))


def _ratio_coeff(j: int, N: int, za: mpf, T: mpf, R: mpf) -> mpf:
    """[w^j] e^(wa) V_N(x, w) / (w^2 + N^2), with za = N a and R = U_(N-1) sqrt(1-x^2)."""
    p, odd = divmod(j, 2)
    if odd:
        return (-1) ** p * (trig_partial("cos", p)(za) * T - trig_partial("sin", p)(za) * R) / mpf(N) ** (2 * p + 2)
    return -((-1) ** p) * (trig_partial("sin", p - 1)(za) * T + trig_partial("cos", p)(za) * R) / mpf(N) ** (2 * p + 1)


def w_expand_J(n: int, x, order: int, ctx: PrecisionContext | None = None) -> WSeries:
    """Coefficients of w^0 .. w^order of J^(n)(x, w)."""
    ctx = ctx or PrecisionContext()
    if order < 1:
        raise ValueError("order must be >= 1")
    # the partial trig sums reach e^(N a) before cancelling
    extra = 32 + 2 * (n + 2)
    with ctx.workprec(extra):
        xv = _unit_interval(x)
        a = arcsin(xv)
        s = mpmath.sqrt(1 - xv * xv)
        out = []
        if n % 2:
            ell = (n + 1) // 2
            lead = mpf(comb(2 * ell, ell)) / mpf(4) ** ell
            scale = mpf(2) ** (1 - 2 * ell)
            parts = [(comb(2 * ell, ell - k), 2 * k, k) for k in range(1, ell + 1)]
            for j in range(order + 1):
                v = lead * a ** (j + 1) / factorial(j + 1)
                for c, N, k in parts:
                    T, R = _chebyshev_parts(N, xv, s)
                    v += scale * c * _ratio_coeff(j, N, N * a, T, R)
                    if j % 2:
                        i = j // 2
                        v -= scale * c * (-1) ** k * (-1) ** i / mpf(N) ** (2 * i + 2)
                out.append(v)
        else:
            ell = n // 2
            scale = mpf(4) ** (-ell)
            parts = [(comb(2 * ell + 1, ell - k), 2 * k + 1, k) for k in range(ell + 1)]
            for j in range(order + 1):
                v = mpf(0)
                for c, N, k in parts:
                    T, R = _chebyshev_parts(N, xv, s)
                    v += scale * c * _ratio_coeff(j, N, N * a, T, R)
                    if j % 2 == 0:
                        i = j // 2
                        v += scale * c * (-1) ** k * (-1) ** i / mpf(N) ** (2 * i + 1)
                out.append(v)
    with mp.workprec(ctx.precision):
        return WSeries(tuple(+v for v in out))


def check_lemma32(n: int, q: int, x, ctx: PrecisionContext | None = None) -> mpf:
    """|I_q^(n)(x) - x^(n+1) a^q/(n+1) + q!/(n+1) [w^(q-1)] J^(n)(x, w)|, I by quadrature."""
    ctx = ctx or PrecisionContext()
    if q < 1:
        raise ValueError("q must be >= 1")
    quad = quadrature_I(n, q, x, ctx)
    series = w_expand_J(n, x, max(q - 1, 1), ctx)
    with ctx.workprec():
        xv = _unit_interval(x)
        a = arcsin(xv)
        rebuilt = xv ** (n + 1) * a**q / (n + 1) - factorial(q) * series[q - 1] / (n + 1)
        r = abs(quad.value - rebuilt)
    with mp.workprec(ctx.precision):
        return +r


def binomial_identity_sides(ell: int) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Exact (left, right) pairs of the two binomial / central-binomial identities."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    left1 = 4 * sum(
        (Fraction(comb(2 * ell, ell - 2 * k - 1), (2 * k + 1) ** 2) for k in range((ell - 1) // 2 + 1)), Fraction(0)
    )
    right1 = comb(2 * ell, ell) * sum((Fraction(4**j, comb(2 * j, j) * j * j) for j in range(1, ell + 1)), Fraction(0))
    left2 = sum((Fraction(comb(2 * ell + 1, ell - k), (2 * k + 1) ** 2) for k in range(ell + 1)), Fraction(0))
    right2 = Fraction(4 ** (2 * ell), comb(2 * ell, ell) * (2 * ell + 1)) * sum(
        (Fraction(comb(2 * j, j), 4**j * (2 * j + 1)) for j in range(ell + 1)), Fraction(0)
    )
    return (left1, right1), (left2, right2)


def check_cor54(ell: int) -> tuple[bool, bool]:
    """Exact equality of both identities at ``ell``."""
    (l1, r1), (l2, r2) = binomial_identity_sides(ell)
    return l1 == r1, l2 == r2


# suites --------------------------------------------------------------------------


@dataclass
class CaseResult:
    label: str
    residual: object
    tolerance: object
    passed: bool

    def to_json(self) -> dict:
        def fmt(v):
            if isinstance(v, mpf):
                return mpmath.nstr(v, 6)
            return str(v)

        return {"case": self.label, "residual": fmt(self.residual), "tolerance": fmt(self.tolerance), "pass": self.passed}


@dataclass
class SuiteReport:
    name: str
    precision: int
    cases: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def add(self, label: str, residual, tolerance, passed: bool | None = None) -> None:
        if passed is None:
            passed = bool(residual <= tolerance)
        self.cases.append(CaseResult(label, residual, tolerance, passed))

    def to_json(self) -> str:
        body = {
            "suite": self.name,
            "precision": self.precision,
            "passed": self.passed,
            "n_cases": len(self.cases),
            "n_failed": sum(not c.passed for c in self.cases),
            "cases": [c.to_json() for c in self.cases],
        }
        return json.dumps(body, indent=2)

    def to_table(self) -> str:
        rows = [c.to_json() for c in self.cases]
        w = max([len(r["case"]) for r in rows] + [4])
        lines = [f"{'case':<{w}}  {'residual':>12}  {'tolerance':>12}  result"]
        for r in rows:
            lines.append(f"{r['case']:<{w}}  {r['residual']:>12}  {r['tolerance']:>12}  {'pass' if r['pass'] else 'FAIL'}")
        failed = sum(not c.passed for c in self.cases)
        lines.append(f"{self.name}: {len(rows) - failed}/{len(rows)} passed")
        return "\n".join(lines)


THM21_X = ("0.1", "0.3", "0.5", "sqrt2/2", "0.9", "0.99", "1")


def _suite_thm21(report: SuiteReport, ctx: PrecisionContext, params: dict) -> None:
    qmax, nmax = params.get("qmax", 8), params.get("nmax", 8)
    xs = params.get("xs", THM21_X)
    tol = mpf(2) ** params.get("tol_exp", -(ctx.precision - 16))
    for q in range(1, qmax + 1):
        for n in range(nmax + 1):
            cf = arcsine_power_integral(n, q)
            for x in xs:
                closed = eval_closed_form(cf, x, ctx)
                quad = quadrature_I(n, q, x, ctx)
                with ctx.workprec():
                    r = abs(closed - quad.value)
                report.add(f"n={n} q={q} x={x}", r, tol)


def _suite_lemma32(report: SuiteReport, ctx: PrecisionContext, params: dict) -> None:
    tol = mpf(2) ** params.get("tol_exp", -(ctx.precision - 28))
    for n in range(params.get("nmax", 4) + 1):
        for q in range(1, params.get("qmax", 6) + 1):
            for x in params.get("xs", ("0.3", "0.7", "1")):
                report.add(f"n={n} q={q} x={x}", check_lemma32(n, q, x, ctx), tol)


def _suite_lemma33(report: SuiteReport, ctx: PrecisionContext, params: dict) -> None:
    xs = params.get("xs", ("0", "0.25", "-0.25", "sqrt2/2", "-sqrt2/2", "0.99", "-0.99", "1", "-1"))
    tol = mpf(2) ** (-(ctx.precision - 8))
    for k in range(params.get("kmax", 20) + 1):
        for x in xs:
            r = max(lemma33_residuals(k, x, ctx))
            report.add(f"k={k} x={x}", r, tol)


J_GRID_W = ("-2", "-0.5", "0+", "1", "3")


def _w_value(w: str, ctx: PrecisionContext):
    # 0+ is a positive w far below the 2^(-P/2) switch of the closed form
    return mpf(2) ** (-2 * ctx.precision) if w == "0+" else w


def _suite_lemma34(report: SuiteReport, ctx: PrecisionContext, params: dict) -> None:
    for n in range(params.get("nmax", 6) + 1):
        for x in params.get("xs", ("0.3", "0.7", "1")):
            for w in params.get("ws", J_GRID_W):
                wv = _w_value(w, ctx)
                closed = j_closed_form(n, x, wv, ctx)
                quad = quadrature_J(n, x, wv, ctx)
                with ctx.workprec():
                    r = abs(closed - quad.value)
                    tol = quad.est_error + abs(quad.value) * mpf(2) ** (-ctx.precision)
                report.add(f"n={n} x={x} w={w}", r, tol)


def _suite_cor23_bridge(report: SuiteReport, ctx: PrecisionContext, params: dict) -> None:
    from .identities import unit_point_from_integral, unit_point_rhs

    for eq in ("2.9", "2.10", "2.11", "2.12"):
        for p in range(0 if eq in ("2.9", "2.10") else 1, params.get("pmax", 6) + 1):
            for ell in range(params.get("lmax", 6) + 1):
                ok = unit_point_rhs(eq, p, ell) == unit_point_from_integral(eq, p, ell)
                report.add(f"{eq} p={p} l={ell}", "exact" if ok else "differs", "exact", ok)


def _suite_lemma43(report: SuiteReport, ctx: PrecisionContext, params: dict) -> None:
    for p in range(1, params.get("pmax", 50) + 1):
        for which in (1, 2, 3, 4):
            diff = lemma43_sum(which, p) - lemma43_rhs(which, p)
            report.add(f"S{which} p={p}", diff, 0, diff == 0)


def _suite_cor54(report: SuiteReport, ctx: PrecisionContext, params: dict) -> None:
    for ell in range(1, params.get("lmax", 200) + 1):
        (l1, r1), (l2, r2) = binomial_identity_sides(ell)
        report.add(f"first l={ell}", l1 - r1, 0, l1 == r1)
        report.add(f"second l={ell}", l2 - r2, 0, l2 == r2)


PI_LIMIT_N = (16, 64, 256, 1024, 4096)


def _suite_pi_limits(report: SuiteReport, ctx: PrecisionContext, params: dict) -> None:
    """Integral and exact routes agree, and the distance to the limit never grows."""
    from .limits import pi_limit_target, pi_limit_value

    ns = params.get("ns", PI_LIMIT_N)
    pmax = params.get("pmax", 3)
    for family in ("odd", "even"):
        for p in range(0 if family == "odd" else 1, pmax + 1):
            errs = []
            for n in ns:
                v = pi_limit_value(family, p, n, ctx)
                exact = pi_limit_value(family, p, n, ctx, method="closed")
                with ctx.workprec():
                    target = pi_limit_target(family, p)
                    report.add(
                        f"{family} p={p} n={n} integral-vs-exact",
                        abs(v - exact) / abs(exact),
                        mpf(2) ** (-(ctx.precision - 16)),
                    )
                    errs.append(abs(v - target))
            with ctx.workprec():
                floor = pi_limit_target(family, p) * mpf(2) ** (-(ctx.precision - 16))
                ok = all(b <= a or b <= floor for a, b in zip(errs, errs[1:]))
            report.add(f"{family} p={p} error nonincreasing", errs[-1], errs[0], ok)


def _suite_series_all(report: SuiteReport, ctx: PrecisionContext, params: dict) -> None:
    """Every registered identity at default parameters: LHS within its tail bound of the RHS."""
    from .identities import IDENTITIES, identity_lhs, rhs_value
    from .series import SeriesSpec, sum_series

    default = {"p": 1, "ell": 2, "x": "0.5", "n": 2, "m": 1}
    extra = mpf(2) ** (-(ctx.precision - 16))
    max_terms = params.get("max_terms", 10**5)
    for ident in IDENTITIES.values():
        P = {k: default[k] for k in ident.params}
        if "p" in P:
            P["p"] = max(P["p"], ident.p_min)
        if ident.id == "1.2":
            P["n"] = 4
        if ident.id == "5.2":
            P.update(n=1, m=2, x=1)
        spec, factor = identity_lhs(ident.id, P, ctx)
        with ctx.workprec():
            res = sum_series(spec, tolerance=ctx.eps(16) / factor, max_terms=max_terms, ctx=ctx)
            lhs = res.partial_sum * factor
            rhs = rhs_value(ident.id, P, ctx)
            r = abs(lhs - rhs)
            tol = res.tail_estimate * factor + extra
        report.add(f"{ident.id} {P} terms={res.terms_used}", r, tol)
        if ident.id == "5.8":
            right = sum_series(SeriesSpec("eq58-right"), tolerance=ctx.eps(16), max_terms=max_terms, ctx=ctx)
            with ctx.workprec():
                report.add(f"5.8 right terms={right.terms_used}", abs(right.partial_sum - rhs),
                           right.tail_estimate + extra)


SUITES = {
    "thm21": _suite_thm21,
    "lemma32": _suite_lemma32,
    "lemma33": _suite_lemma33,
    "lemma34": _suite_lemma34,
    "cor23-bridge": _suite_cor23_bridge,
    "lemma43": _suite_lemma43,
    "cor54": _suite_cor54,
    "pi-limits": _suite_pi_limits,
    "series-all": _suite_series_all,
}


def run_suite(name: str, params: dict | None = None, ctx: PrecisionContext | None = None) -> SuiteReport:
    """Run one named grid of checks; cases are reported in grid order."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    ctx = ctx or PrecisionContext()
    report = SuiteReport(name, ctx.precision)
    SUITES[name](report, ctx, dict(params or {}))
    return report
