"""Closed forms of I_q^(n)(x) = int_0^x t^n (arcsin t)^q dt.

A :class:`ClosedForm` is a sparse polynomial in three symbols

* ``x``,
* ``s = sqrt(1 - x^2)`` (kept at degree <= 1 by rewriting s^2 -> 1 - x^2),
* ``a = arcsin x``,

with Fraction coefficients.  :func:`arcsine_power_integral` builds the form
for any n >= 0, q >= 1 from Chebyshev polynomials and the Maclaurin partial
sums of cos and sin, using one of four expressions picked by the parities of
n and q.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping

import mpmath
from mpmath import mp, mpf

from .chebyshev import IntPoly, chebyshev_t, chebyshev_u
from .pipoly import PiPoly, QSqrt2
from .precision import PrecisionContext, arcsin, stable_evaluate, to_mpf

__all__ = [
    "ClosedForm",
    "TrigPartialPoly",
    "trig_partial",
    "arcsine_power_integral",
    "eval_closed_form",
    "specialize_pi",
    "POINTS",
]

Exponent = tuple[int, int, int]


class ClosedForm:
    """Immutable map (x-degree, s-degree, a-degree) -> Fraction, s-degree in {0, 1}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, object] | Iterable[tuple[Exponent, object]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for (i, j, k), c in items:
            if i < 0 or j < 0 or k < 0:
                raise ValueError("exponents must be nonnegative")
            c = c if isinstance(c, Fraction) else Fraction(c)
            if not c:
                continue
            # s^j = s^(j mod 2) * (1 - x^2)^(j // 2)
            half, rest = divmod(j, 2)
            for t in range(half + 1):
                coeff = c * comb(half, t) * (-1) ** t
                key = (i + 2 * t, rest, k)
                acc[key] = acc.get(key, Fraction(0)) + coeff
        self._terms = {key: v for key, v in acc.items() if v}

    # constructors -----------------------------------------------------------
    @classmethod
    def constant(cls, c) -> "ClosedForm":
        return cls({(0, 0, 0): c})

    @classmethod
    def from_x_poly(cls, p: IntPoly) -> "ClosedForm":
        return cls({(j, 0, 0): c for j, c in enumerate(p.coefficients)})

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, k: int = 0, c=1) -> "ClosedForm":
        return cls({(i, j, k): c})

    # accessors ---------------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][2], -kv[0][1], -kv[0][0]))

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def a_degree(self) -> int:
        return max((k for (_, _, k) in self._terms), default=0)

    def at_zero(self) -> Fraction:
        """Exact value at x = 0, where s = 1 and a = 0."""
        return sum((c for (i, _, k), c in self._terms.items() if i == 0 and k == 0), Fraction(0))

    # arithmetic ------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosedForm):
            other = ClosedForm.constant(other)
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def __add__(self, other):
        if not isinstance(other, ClosedForm):
            other = ClosedForm.constant(other)
        return ClosedForm(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return ClosedForm({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ClosedForm):
            other = ClosedForm.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ClosedForm):
            prod = []
            for (i1, j1, k1), c1 in self._terms.items():
                for (i2, j2, k2), c2 in other._terms.items():
                    prod.append(((i1 + i2, j1 + j2, k1 + k2), c1 * c2))
            return ClosedForm(prod)
        c = other if isinstance(other, Fraction) else Fraction(other)
        return ClosedForm({e: v * c for e, v in self._terms.items()})

    __rmul__ = __mul__

    def substitute_a(self, m) -> "ClosedForm":
        """Replace a by m*a (m rational)."""
        m = Fraction(m)
        return ClosedForm({(i, j, k): c * m**k for (i, j, k), c in self._terms.items()})

    # evaluation / rendering ----------------------------------------------
    def evaluate_at(self, x: mpf, s: mpf, a: mpf) -> mpf:
        """Plain evaluation at given symbol values, ambient precision."""
        xp: dict[int, mpf] = {}
        ap: dict[int, mpf] = {}
        total = mpf(0)
        for (i, j, k), c in self._terms.items():
            if i not in xp:
                xp[i] = x**i
            if k not in ap:
                ap[k] = a**k
            term = xp[i] * ap[k] * c.numerator / c.denominator
            total += term * s if j else term
        return total

    def to_json(self) -> dict:
        return {
            "terms": [
                {"x": i, "s": j, "a": k, "num": str(c.numerator), "den": str(c.denominator)}
                for (i, j, k), c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data) -> "ClosedForm":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({(t["x"], t["s"], t["a"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]})

    def __str__(self) -> str:
        return self._render(_plain_monomial, lambda c: f"({c})" if c.denominator != 1 else str(c), "*")

    def to_latex(self) -> str:
        return self._render(_latex_monomial, _latex_coeff, " ")

    def _render(self, mono_fn, coeff_fn, sep: str) -> str:
        if not self._terms:
            return "0"
        out = ""
        for n, ((i, j, k), c) in enumerate(self.items()):
            mono = mono_fn(i, j, k)
            mag = abs(c)
            if not mono:
                body = coeff_fn(mag)
            elif mag == 1:
                body = mono
            else:
                body = coeff_fn(mag) + sep + mono
            if n == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"ClosedForm({self})"


def _plain_monomial(i: int, j: int, k: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("s")
    if k:
        parts.append("a" if k == 1 else f"a^{k}")
    return "*".join(parts)


def _latex_monomial(i: int, j: int, k: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{{{i}}}")
    if j:
        parts.append(r"\sqrt{1-x^2}")
    if k:
        parts.append(r"\arcsin x" if k == 1 else rf"(\arcsin x)^{{{k}}}")
    return r"\,".join(parts)


def _latex_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


# Maclaurin partial sums ---------------------------------------------------------


@dataclass(frozen=True)
class TrigPartialPoly:
    """c_p(z) or s_p(z); ``coefficients[j]`` multiplies z**j."""

    kind: str
    p: int
    coefficients: tuple[Fraction, ...]

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def compose_a(self, m) -> ClosedForm:
        """The polynomial at z = m*a, as a ClosedForm in a."""
        m = Fraction(m)
        return ClosedForm({(0, 0, j): c * m**j for j, c in enumerate(self.coefficients)})


@lru_cache(maxsize=None)
def trig_partial(kind: str, p: int) -> TrigPartialPoly:
    """c_p(z) = sum_{j<=p} (-1)^j z^(2j)/(2j)!,  s_p(z) = sum_{j<=p} (-1)^j z^(2j+1)/(2j+1)!."""
    if kind == "cos":
        if p < 0:
            raise ValueError("cos partial sums need p >= 0")
        coeffs = [Fraction(0)] * (2 * p + 1)
        for j in range(p + 1):
            coeffs[2 * j] = Fraction((-1) ** j, factorial(2 * j))
    elif kind == "sin":
        if p < -1:
            raise ValueError("sin partial sums need p >= -1")
        coeffs = [Fraction(0)] * (2 * p + 2)
        for j in range(p + 1):
            coeffs[2 * j + 1] = Fraction((-1) ** j, factorial(2 * j + 1))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return TrigPartialPoly(kind, p, tuple(coeffs) or (Fraction(0),))


# Theorem construction ----------------------------------------------------------

_S = ClosedForm.monomial(j=1)


def _c(p: int, m: int) -> ClosedForm:
    return trig_partial("cos", p).compose_a(m)


def _s(p: int, m: int) -> ClosedForm:
    return trig_partial("sin", p).compose_a(m)


def _T(n: int) -> ClosedForm:
    return ClosedForm.from_x_poly(chebyshev_t(n))


def _U(n: int) -> ClosedForm:
    return ClosedForm.from_x_poly(chebyshev_u(n))


@lru_cache(maxsize=None)
def arcsine_power_integral(n: int, q: int) -> ClosedForm:
    """Exact closed form of int_0^x t^n (arcsin t)^q dt for n >= 0, q >= 1.

    >>> str(arcsine_power_integral(0, 1))
    'x*a + s - 1'
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if q < 1:
        raise ValueError("q must be >= 1 (q = 0 is the elementary x^(n+1)/(n+1))")
    p = q // 2
    sign_p = -1 if p % 2 else 1
    qf = factorial(q)
    total = ClosedForm()
    if n % 2 == 0:
        ell = n // 2
        lead = ClosedForm.monomial(i=2 * ell + 1, k=q, c=Fraction(1, 2 * ell + 1))
        pref = Fraction(sign_p * qf, 4**ell * (2 * ell + 1))
        for k in range(ell + 1):
            m = 2 * k + 1
            w = pref * Fraction(comb(2 * ell + 1, ell - k), m**q)
            if q % 2:
                body = _s(p - 1, m) * _T(m) + _c(p, m) * _U(2 * k) * _S - (-1) ** k
            else:
                body = _c(p - 1, m) * _T(m) - _s(p - 1, m) * _U(2 * k) * _S
            total = total + body * w
    else:
        ell = (n + 1) // 2
        lead = (ClosedForm.monomial(i=2 * ell) - Fraction(comb(2 * ell, ell), 4**ell)) * ClosedForm.monomial(
            k=q, c=Fraction(1, 2 * ell)
        )
        pref = Fraction(sign_p * qf, 2 ** (2 * ell - 1) * 2 * ell)
        for k in range(1, ell + 1):
            m = 2 * k
            w = pref * Fraction(comb(2 * ell, ell - k), m**q)
            if q % 2:
                body = _s(p - 1, m) * _T(m) + _c(p, m) * _U(m - 1) * _S
            else:
                body = _c(p - 1, m) * _T(m) - _s(p - 1, m) * _U(m - 1) * _S - (-1) ** k
            total = total + body * w
    return lead + total


def eval_closed_form(cf: ClosedForm, x, ctx: PrecisionContext | None = None) -> mpf:
    """Numeric value at x in [-1, 1], stable to ``ctx.precision`` bits."""
    ctx = ctx or PrecisionContext()

    def run():
        xv = to_mpf(x)
        if abs(xv) > 1:
            raise ValueError("|x| must be <= 1")
        return cf.evaluate_at(xv, mpmath.sqrt(1 - xv * xv), arcsin(xv))

    value = stable_evaluate(run, ctx)
    with mp.workprec(ctx.precision):
        return +value


# algebraic points: name -> (x, s) in Q(sqrt 2), a = pi * fraction
POINTS = {
    "1": (QSqrt2(1), QSqrt2(0), Fraction(1, 2)),
    "sqrt2/2": (QSqrt2(0, Fraction(1, 2)), QSqrt2(0, Fraction(1, 2)), Fraction(1, 4)),
}
_POINT_ALIASES = {"x=1": "1", "1/sqrt2": "sqrt2/2", "sqrt2_over_2": "sqrt2/2", "x=sqrt2/2": "sqrt2/2"}


def specialize_pi(cf: ClosedForm, point: str = "1") -> PiPoly:
    """Exact value at x = 1 (a = pi/2) or x = sqrt(2)/2 (a = pi/4) in Q(sqrt2)[pi]."""
    point = _POINT_ALIASES.get(str(point), str(point))
    if point not in POINTS:
        raise ValueError(f"unsupported point {point!r}; symbolic values exist only at x=1 and x=sqrt2/2")
    xv, sv, frac = POINTS[point]
    out: dict[int, QSqrt2] = {}
    for (i, j, k), c in cf.items():
        coeff = (xv**i) * (sv**j) * (c * frac**k)
        if coeff:
            out[k] = out.get(k, QSqrt2()) + coeff
    return PiPoly(out)
