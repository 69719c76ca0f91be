"""Right-hand sides of the central-binomial series identities, keyed by id.

Every identity pairs a left-hand series (a :class:`SeriesSpec`, possibly with
a scalar factor) with a right-hand side that is either an exact
:class:`PiPoly` (x = 1 and x = sqrt2/2 families), a :class:`ClosedForm` in x,
or a plain number for the nested-radical point x = sin(pi/8).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable

import mpmath
from mpmath import mp, mpf

from .closed_form import ClosedForm, arcsine_power_integral, specialize_pi, trig_partial
from .pipoly import PiPoly, QSqrt2
from .precision import PrecisionContext, to_mpf
from .series import SeriesSpec

__all__ = [
    "Identity",
    "IDENTITIES",
    "unit_point_rhs",
    "unit_point_from_integral",
    "general_x_rhs",
    "sqrt2_point_rhs",
    "lupu_rhs",
    "lupu_series_value",
    "eq12_rhs",
    "eq13_rhs",
    "partial_fraction_rhs",
    "pi_limit_inner_exact",
    "corollary_rhs",
    "identity_lhs",
    "rhs_value",
    "pi8_point_rhs",
]


# Corollary-style exact sums at x = 1 ------------------------------------------


@lru_cache(maxsize=None)
def _odd_power_sum(ell: int, e: int, alternating: bool = False) -> Fraction:
    """sum_{k=0}^{l} C(2l+1, l-k) (+-1)^k / (2k+1)^e."""
    return sum(
        (Fraction((-1) ** k if alternating else 1, (2 * k + 1) ** e) * comb(2 * ell + 1, ell - k) for k in range(ell + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def _even_power_sum(ell: int, e: int, alternating: bool = False) -> Fraction:
    """sum_{k=1}^{l} C(2l, l-k) (+-1)^k / k^e."""
    return sum(
        (Fraction((-1) ** k if alternating else 1, k**e) * comb(2 * ell, ell - k) for k in range(1, ell + 1)),
        Fraction(0),
    )


def unit_point_rhs(eq: str, p: int, ell: int) -> PiPoly:
    """Exact x = 1 values, built from binomial-weighted power sums.

    ``2.9``:  sum b_k G_p(k) / (2k+2l+2)
    ``2.10``: sum b_k G_p(k) / (2k+2l+1)
    ``2.11``: sum 4^k H_p(k) / (C(2k,k) 2k (2k+2l+1))   (p >= 1)
    ``2.12``: sum 4^k H_p(k) / (C(2k,k) 2k (2k+2l))     (p >= 1)
    """
    if ell < 0 or p < 0:
        raise ValueError("need p >= 0 and ell >= 0")
    sign = (-1) ** (p - 1)
    out = PiPoly()
    if eq == "2.9":
        for j in range(p):
            c = Fraction(sign * (-1) ** j, 4**ell * factorial(2 * j + 1) * 2 ** (2 * j + 1))
            out = out + PiPoly.monomial(2 * j + 1, c * _odd_power_sum(ell, 2 * p - 2 * j))
        out = out + PiPoly.constant(Fraction((-1) ** p, 4**ell) * _odd_power_sum(ell, 2 * p + 1, True))
        return out
    if eq == "2.10":
        for j in range(p):
            c = Fraction(sign * (-1) ** j, 4 ** (ell + p) * factorial(2 * j + 1))
            out = out + PiPoly.monomial(2 * j + 1, c * _even_power_sum(ell, 2 * p - 2 * j))
        lead = Fraction(comb(2 * ell, ell), 2 ** (2 * ell + 2 * p + 1) * factorial(2 * p + 1))
        return out + PiPoly.monomial(2 * p + 1, lead)
    if p < 1:
        raise ValueError(f"{eq} needs p >= 1")
    if eq == "2.11":
        for j in range(p):
            c = Fraction(sign * (-1) ** j, 4**ell * factorial(2 * j) * 4**j)
            out = out + PiPoly.monomial(2 * j, c * _odd_power_sum(ell, 2 * p - 2 * j))
        return out
    if eq == "2.12":
        den = 2 ** (2 * ell + 2 * p - 1)
        for j in range(p):
            c = Fraction(sign * (-1) ** j, den * factorial(2 * j))
            out = out + PiPoly.monomial(2 * j, c * _even_power_sum(ell, 2 * p - 2 * j))
        lead = Fraction(comb(2 * ell, ell), 4 ** (ell + p) * factorial(2 * p))
        rational = Fraction((-1) ** p, den) * _even_power_sum(ell, 2 * p, True)
        return out + PiPoly.monomial(2 * p, lead) + PiPoly.constant(rational)
    raise ValueError(f"unknown x = 1 identity {eq!r}")


def unit_point_from_integral(eq: str, p: int, ell: int) -> PiPoly:
    """The same x = 1 values obtained from the arcsine-power integral at x = 1.

    For an offset 2k+n+2 (G series) or 2k+n+1 (H series) the series equals
    (a^q x^(n+1) - (n+1) I_q^(n)(x)) / q! at x = 1, a = pi/2.  Offsets that
    would need n = -1 reduce to the plain power-series values (pi/2)^q / q!.
    """
    if eq in ("2.9", "2.10"):
        q = 2 * p + 1
        n = 2 * ell if eq == "2.9" else 2 * ell - 1
    elif eq in ("2.11", "2.12"):
        if p < 1:
            raise ValueError(f"{eq} needs p >= 1")
        q = 2 * p
        n = 2 * ell if eq == "2.11" else 2 * ell - 1
    else:
        raise ValueError(f"unknown x = 1 identity {eq!r}")
    power = PiPoly.monomial(q, Fraction(1, 2**q * factorial(q)))
    if n < 0:
        return power
    integral = specialize_pi(arcsine_power_integral(n, q), "1")
    return power - integral * Fraction(n + 1, factorial(q))


def pi_limit_inner_exact(family: str, p: int, n: int) -> PiPoly:
    """Exact inner series of the pi-limit sequences at x = 1.

    odd:  sum b_k G_p(k)/(2k+n+1)             (2.10 for n = 2l, 2.9 for n = 2l+1)
    even: sum 4^k H_p(k)/(C(2k,k) k (2k+n))  (2 x 2.12 for n = 2l, 2 x 2.11 for n = 2l+1)
    """
    if family == "odd":
        return unit_point_rhs("2.10", p, n // 2) if n % 2 == 0 else unit_point_rhs("2.9", p, (n - 1) // 2)
    if family == "even":
        v = unit_point_rhs("2.12", p, n // 2) if n % 2 == 0 else unit_point_rhs("2.11", p, (n - 1) // 2)
        return v * 2
    raise ValueError("family must be 'odd' or 'even'")


# general-x forms ----------------------------------------------------------------

_X = ClosedForm.monomial(i=1)
_S = ClosedForm.monomial(j=1)
_A = ClosedForm.monomial(k=1)


def _c(p: int, m: int = 1) -> ClosedForm:
    return trig_partial("cos", p).compose_a(m)


def _s(p: int, m: int = 1) -> ClosedForm:
    return trig_partial("sin", p).compose_a(m)


def general_x_rhs(eq: str, p: int) -> ClosedForm:
    """Closed forms in (x, s, a) for the smallest-offset series at general x.

    ``2.13``: sum b_k G_p(k) x^(2k+2)/(2k+2)
    ``2.14``: sum b_k G_p(k) x^(2k+3)/(2k+3)
    ``2.15``: sum 4^k H_p(k) x^(2k+1)/(C(2k,k) 2k (2k+1))   (p >= 1)
    ``2.16``: sum 4^k H_p(k) x^(2k+2)/(C(2k,k) 2k (2k+2))   (p >= 1)
    """
    sign = (-1) ** (p - 1)
    if eq == "2.13":
        return (_s(p - 1) * _X + _c(p) * _S - 1) * sign
    if eq == "2.14":
        lead = ClosedForm.monomial(k=2 * p + 1, c=Fraction(1, 2 * factorial(2 * p + 1)))
        inner = _s(p - 1, 2) * (_X * _X * 2 - 1) + _c(p, 2) * _X * _S * 2
        return lead - inner * Fraction((-1) ** p, 2 ** (2 * p + 2))
    if p < 1:
        raise ValueError(f"{eq} needs p >= 1")
    if eq == "2.15":
        return (_c(p - 1) * _X - _s(p - 1) * _S) * sign
    if eq == "2.16":
        lead = ClosedForm.monomial(k=2 * p, c=Fraction(1, 2 * factorial(2 * p)))
        inner = _c(p - 1, 2) * (_X * _X * 2 - 1) - _s(p - 1, 2) * _X * _S * 2 + 1
        return lead - inner * Fraction((-1) ** p, 2 ** (2 * p + 1))
    raise ValueError(f"unknown general-x identity {eq!r}")


# x = sqrt2/2 ------------------------------------------------------------------


def _trig_at(kind: str, p: int, quarter_pi_multiple: Fraction) -> PiPoly:
    """c_p or s_p evaluated at (multiple) * pi, as a PiPoly."""
    out = PiPoly()
    for power, coeff in enumerate(trig_partial(kind, p).coefficients):
        if coeff:
            out = out + PiPoly.monomial(power, coeff * quarter_pi_multiple**power)
    return out


_ROOT2 = QSqrt2(0, 1)


def sqrt2_point_rhs(eq: str, p: int) -> PiPoly:
    """Exact values at x = sqrt2/2 for the 8^k / 2^k series.

    ``2.17``: sum C(2k,k) G_p(k) / (8^k (2k+2))
    ``2.18``: sum 2^k H_p(k) / (C(2k,k) 2k (2k+1))   (p >= 1)
    ``2.19``: sum C(2k,k) G_p(k) / (8^k (2k+3))
    ``2.20``: sum 2^k H_p(k) / (C(2k,k) 2k (2k+2))   (p >= 1)
    """
    q4, q2 = Fraction(1, 4), Fraction(1, 2)
    if eq == "2.17":
        total = PiPoly()
        for j in range(2 * p + 1):
            total = total + PiPoly.monomial(j, Fraction((-1) ** (j // 2), factorial(j)) * q4**j)
        return (PiPoly.constant(2) - total * _ROOT2) * (-1) ** p
    if eq == "2.19":
        lead = PiPoly.monomial(2 * p + 1, _ROOT2 * Fraction(1, factorial(2 * p + 1) * 4 ** (2 * p + 1)))
        return lead - _trig_at("cos", p, q2) * (_ROOT2 * Fraction((-1) ** p, 2 ** (2 * p + 1)))
    if p < 1:
        raise ValueError(f"{eq} needs p >= 1")
    if eq == "2.18":
        total = PiPoly()
        for j in range(2 * p):
            total = total + PiPoly.monomial(j, Fraction((-1) ** ((j + 1) // 2), factorial(j)) * q4**j)
        return total * (-1) ** (p - 1)
    if eq == "2.20":
        lead = PiPoly.monomial(2 * p, Fraction(1, factorial(2 * p) * 4 ** (2 * p)))
        return lead + (_trig_at("sin", p - 1, q2) - 1) * Fraction((-1) ** p, 4**p)
    raise ValueError(f"unknown sqrt2/2 identity {eq!r}")


# x = sin(pi/8), numeric only -------------------------------------------------


def pi8_point_rhs(eq: str, p: int) -> mpf:
    """Values at x = sqrt(2 - sqrt2)/2 at ambient precision.

    ``2.23``: sum C(2k,k) G_p(k) (2-sqrt2)^k / (16^k (2k+3))
    ``2.24``: sum H_p(k) (2-sqrt2)^k / (C(2k,k) 2k (2k+2))   (p >= 1)
    """
    r2 = mpmath.sqrt(2)
    q = mp.pi / 4
    if eq == "2.23":
        inner = (mp.pi / 8) ** (2 * p + 1) / factorial(2 * p + 1) - (-1) ** p * r2 / mpf(4) ** (p + 1) * (
            trig_partial("cos", p)(q) - trig_partial("sin", p - 1)(q)
        )
        return 4 / (2 - r2) ** (mpf(3) / 2) * inner
    if eq == "2.24":
        if p < 1:
            raise ValueError("2.24 needs p >= 1")
        cs = trig_partial("cos", p - 1)(q) + trig_partial("sin", p - 1)(q)
        return (
            (2 + r2) * (mp.pi / 8) ** (2 * p) / factorial(2 * p)
            + (-1) ** p * (1 + r2) / mpf(4) ** p * cs
            - (-1) ** p * (2 + r2) / mpf(4) ** p
        )
    raise ValueError(f"unknown identity {eq!r}")


# remarks -------------------------------------------------------------------------


def lupu_rhs(which: str, p: int) -> PiPoly:
    """Compact pi-power forms (pi/4)^(2p) / ((2p)! sqrt2) and 2 sqrt2 (pi/4)^(2p-1) / (2p-1)!.

    The series sum C(2k,k) G_p(k)/8^k equals twice the odd form, and
    sum 2^k H_p(k)/(C(2k,k) k) equals the even form divided by sqrt2; see
    :func:`lupu_series_value`.
    """
    if which in ("odd", "odd-family"):
        if p < 0:
            raise ValueError("odd family needs p >= 0")
        return PiPoly.monomial(2 * p, QSqrt2(0, Fraction(1, 2 * factorial(2 * p) * 4 ** (2 * p))))
    if which in ("even", "even-family"):
        if p < 1:
            raise ValueError("even family needs p >= 1")
        return PiPoly.monomial(2 * p - 1, QSqrt2(0, Fraction(2, factorial(2 * p - 1) * 4 ** (2 * p - 1))))
    raise ValueError("which must be 'odd' or 'even'")


def lupu_series_value(which: str, p: int) -> PiPoly:
    """Exact sums: sqrt2 (pi/4)^(2p)/(2p)!  and  2 (pi/4)^(2p-1)/(2p-1)!.

    Both follow from differentiating the arcsine power series and setting
    x = sqrt2/2.
    """
    if which in ("odd", "odd-family"):
        return lupu_rhs("odd", p) * 2
    return lupu_rhs("even", p) * QSqrt2(0, Fraction(1, 2))


def eq12_rhs(n: int) -> ClosedForm:
    """C(n, n/2)/(2x)^n (a - (s/2) sum_j (2x)^(2j+1)/((2j+1) C(2j,j))), times (2x)^n.

    The form returned is (2x)^n times the sum, i.e. free of negative powers.
    """
    if n < 0 or n % 2:
        raise ValueError("n must be even and >= 0")
    inner = ClosedForm.constant(0)
    for j in range((n - 2) // 2 + 1):
        inner = inner + ClosedForm.monomial(i=2 * j + 1, c=Fraction(2 ** (2 * j + 1), (2 * j + 1) * comb(2 * j, j)))
    return (_A - _S * inner * Fraction(1, 2)) * comb(n, n // 2)


def eq13_rhs(n: int) -> PiPoly:
    """C(n, n/2) pi / 2^(n+1) for even n."""
    if n < 0 or n % 2:
        raise ValueError("n must be even and >= 0")
    return PiPoly.monomial(1, Fraction(comb(n, n // 2), 2 ** (n + 1)))


def partial_fraction_rhs(p: int, n: int, m: int) -> ClosedForm:
    """x^(n+m) times the right side of the partial-fraction identity.

    sum b_k G_p(k) x^(2k+2) / ((2k+2+n)(2k+2+m))
      = ((n+1) x^-n I^(n) - (m+1) x^-m I^(m)) / ((n-m) (2p+1)!)
    with I^(n) = I_(2p+1)^(n)(x).
    """
    if n == m:
        raise ValueError("n must differ from m")
    q = 2 * p + 1
    In, Im = arcsine_power_integral(n, q), arcsine_power_integral(m, q)
    xm = ClosedForm.monomial(i=m)
    xn = ClosedForm.monomial(i=n)
    return (xm * In * (n + 1) - xn * Im * (m + 1)) * Fraction(1, (n - m) * factorial(q))


# registry --------------------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    params: tuple[str, ...]
    lhs: Callable[[dict], tuple[SeriesSpec, object]]
    rhs: Callable[[dict, PrecisionContext], object]
    p_min: int = 0


def _pi8_x() -> mpf:
    return mpmath.sqrt(2 - mpmath.sqrt(2)) / 2


def _cor23_lhs(eq: str):
    def lhs(P):
        ell = P["ell"]
        if eq in ("2.9", "2.10"):
            return SeriesSpec("G", {"p": P["p"], "m": 2 * ell + (2 if eq == "2.9" else 1), "x": 1}), 1
        m = 2 * ell + (1 if eq == "2.11" else 0)
        # the H shape carries one 2k factor; the extra offset supplies the other
        return SeriesSpec("H", {"p": P["p"], "m": m, "x": 1}), 1

    return lhs


IDENTITIES: dict[str, Identity] = {}


def _register(ident: Identity) -> None:
    IDENTITIES[ident.id] = ident


for _eq, _desc in (
    ("2.9", "sum C(2k,k) G_p(k) / (4^k (2k+2l+2))  at x = 1"),
    ("2.10", "sum C(2k,k) G_p(k) / (4^k (2k+2l+1))  at x = 1"),
    ("2.11", "sum 4^k H_p(k) / (C(2k,k) 2k (2k+2l+1))  at x = 1"),
    ("2.12", "sum 4^k H_p(k) / (C(2k,k) 2k (2k+2l))  at x = 1"),
):
    _register(
        Identity(
            _eq,
            _desc,
            ("p", "ell"),
            _cor23_lhs(_eq),
            (lambda e: lambda P, ctx: unit_point_rhs(e, P["p"], P["ell"]))(_eq),
            0 if _eq in ("2.9", "2.10") else 1,
        )
    )

for _eq, _desc, _fam, _m, _pmin in (
    ("2.13", "sum C(2k,k) G_p(k) x^(2k+2) / (4^k (2k+2))", "G", 2, 0),
    ("2.14", "sum C(2k,k) G_p(k) x^(2k+3) / (4^k (2k+3))", "G", 3, 0),
    ("2.15", "sum 4^k H_p(k) x^(2k+1) / (C(2k,k) 2k (2k+1))", "H", 1, 1),
    ("2.16", "sum 4^k H_p(k) x^(2k+2) / (C(2k,k) 2k (2k+2))", "H", 2, 1),
):
    _register(
        Identity(
            _eq,
            _desc,
            ("p", "x"),
            (lambda f, m: lambda P: (SeriesSpec(f, {"p": P["p"], "m": m, "x": P["x"]}), 1))(_fam, _m),
            (lambda e: lambda P, ctx: general_x_rhs(e, P["p"]))(_eq),
            _pmin,
        )
    )


def _sqrt2_lhs(fam: str, m: int, factor):
    # x = sqrt2/2: the G/H series carry x^m, which the factor removes
    return lambda P: (SeriesSpec(fam, {"p": P["p"], "m": m, "x": "sqrt2/2"}), factor)


for _eq, _desc, _fam, _m, _factor, _pmin in (
    ("2.17", "sum C(2k,k) G_p(k) / (8^k (2k+2))", "G", 2, 2, 0),
    ("2.18", "sum 2^k H_p(k) / (C(2k,k) 2k (2k+1))", "H", 1, "sqrt2", 1),
    ("2.19", "sum C(2k,k) G_p(k) / (8^k (2k+3))", "G", 3, "2sqrt2", 0),
    ("2.20", "sum 2^k H_p(k) / (C(2k,k) 2k (2k+2))", "H", 2, 2, 1),
):
    _register(
        Identity(
            _eq,
            _desc,
            ("p",),
            _sqrt2_lhs(_fam, _m, _factor),
            (lambda e: lambda P, ctx: sqrt2_point_rhs(e, P["p"]))(_eq),
            _pmin,
        )
    )

_register(
    Identity(
        "2.23",
        "sum C(2k,k) G_p(k) (2-sqrt2)^k / (16^k (2k+3))  (numeric)",
        ("p",),
        lambda P: (SeriesSpec("G", {"p": P["p"], "m": 3, "x": "sqrt(2-sqrt2)/2"}), "pi8^-3"),
        lambda P, ctx: pi8_point_rhs("2.23", P["p"]),
    )
)
_register(
    Identity(
        "2.24",
        "sum H_p(k) (2-sqrt2)^k / (C(2k,k) 2k (2k+2))  (numeric)",
        ("p",),
        lambda P: (SeriesSpec("H", {"p": P["p"], "m": 2, "x": "sqrt(2-sqrt2)/2"}), "pi8^-2"),
        lambda P, ctx: pi8_point_rhs("2.24", P["p"]),
        1,
    )
)
_register(
    Identity(
        "1.2",
        "sum C(2k,k) x^(2k+1) / (4^k (2k+n+1)), even n",
        ("n", "x"),
        lambda P: (SeriesSpec("eq12", {"n": P["n"], "x": P["x"]}), 1),
        lambda P, ctx: _eq12_value(P["n"], P["x"]),
    )
)
_register(
    Identity(
        "1.3",
        "sum C(2k,k) / (4^k (2k+n+1)), even n",
        ("n",),
        lambda P: (SeriesSpec("eq12", {"n": P["n"], "x": 1}), 1),
        lambda P, ctx: eq13_rhs(P["n"]),
    )
)
_register(
    Identity(
        "5.2",
        "sum C(2k,k) G_p(k) x^(2k+2) / (4^k (2k+2+n)(2k+2+m)), n != m",
        ("p", "n", "m", "x"),
        lambda P: (SeriesSpec("partial-fraction", {"p": P["p"], "n": P["n"], "m": P["m"], "x": P["x"]}), 1),
        lambda P, ctx: _partial_fraction_value(P),
    )
)
_register(
    Identity(
        "5.8",
        "4 sum 1/(2k+1)^2 and sum 4^j/(C(2j,j) j^2), both pi^2/2",
        (),
        lambda P: (SeriesSpec("eq58-left", {}), 1),
        lambda P, ctx: PiPoly.monomial(2, Fraction(1, 2)),
    )
)
_register(
    Identity(
        "lupu-odd",
        "sum C(2k,k) G_p(k) / 8^k",
        ("p",),
        lambda P: (SeriesSpec("lupu-odd", {"p": P["p"]}), 1),
        lambda P, ctx: lupu_series_value("odd", P["p"]),
    )
)
_register(
    Identity(
        "lupu-even",
        "sum 2^k H_p(k) / (C(2k,k) k)",
        ("p",),
        lambda P: (SeriesSpec("lupu-even", {"p": P["p"]}), 1),
        lambda P, ctx: lupu_series_value("even", P["p"]),
        1,
    )
)


def _eq12_value(n: int, x) -> mpf:
    xv = to_mpf(x)
    if xv == 0:
        return mpf(0)
    from .precision import arcsin

    s = mpmath.sqrt(1 - xv * xv)
    return eq12_rhs(n).evaluate_at(xv, s, arcsin(xv)) / (2 * xv) ** n


def _partial_fraction_value(P: dict) -> mpf:
    from .precision import arcsin

    n, m = P["n"], P["m"]
    xv = to_mpf(P["x"])
    if xv == 0:
        return mpf(0)
    s = mpmath.sqrt(1 - xv * xv)
    return partial_fraction_rhs(P["p"], n, m).evaluate_at(xv, s, arcsin(xv)) / xv ** (n + m)


def _factor_value(factor) -> mpf:
    if factor == "sqrt2":
        return mpmath.sqrt(2)
    if factor == "2sqrt2":
        return 2 * mpmath.sqrt(2)
    if factor == "pi8^-3":
        return 1 / _pi8_x() ** 3
    if factor == "pi8^-2":
        return 1 / _pi8_x() ** 2
    return to_mpf(factor)


def _check(id: str, params: dict) -> Identity:
    if id not in IDENTITIES:
        raise KeyError(f"unknown identity {id!r}; see --list")
    ident = IDENTITIES[id]
    missing = [k for k in ident.params if k not in params]
    if missing:
        raise ValueError(f"identity {id} needs parameters {missing}")
    if "p" in ident.params and params["p"] < ident.p_min:
        raise ValueError(f"identity {id} needs p >= {ident.p_min}")
    return ident


def identity_lhs(id: str, params: dict, ctx: PrecisionContext | None = None) -> tuple[SeriesSpec, mpf]:
    """The series spec and the scalar that turns its sum into the identity's left side."""
    ctx = ctx or PrecisionContext()
    ident = _check(id, params)
    spec, factor = ident.lhs(params)
    with ctx.workprec():
        return spec, _factor_value(factor)


def corollary_rhs(id: str, params: dict, ctx: PrecisionContext | None = None):
    """Right-hand side: PiPoly when exact, ClosedForm for general x, else a number."""
    ctx = ctx or PrecisionContext()
    ident = _check(id, params)
    with ctx.workprec():
        return ident.rhs(params, ctx)


def rhs_value(id: str, params: dict, ctx: PrecisionContext | None = None) -> mpf:
    """Numeric value of the right-hand side at ``ctx`` precision."""
    ctx = ctx or PrecisionContext()
    rhs = corollary_rhs(id, params, ctx)
    with ctx.workprec():
        if isinstance(rhs, PiPoly):
            v = rhs.value()
        elif isinstance(rhs, ClosedForm):
            from .precision import arcsin

            xv = to_mpf(params["x"])
            v = rhs.evaluate_at(xv, mpmath.sqrt(1 - xv * xv), arcsin(xv))
        else:
            v = to_mpf(rhs)
    with mp.workprec(ctx.precision):
        return +v
