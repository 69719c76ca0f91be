"""Binomial-weighted finite zeta/beta sums and the pi-limit sequences.

The pi-limit sequences are

* odd family (p >= 0):  2^(2p+n+1) (2p)! / C(n, n/2) * sum_k b_k G_p(k) / (2k+n+1)  ->  pi^(2p+1)
* even family (p >= 1): 2^(2p+n-1) (2p-1)! / C(n, n/2) * sum_k 4^k H_p(k) / (C(2k,k) k (2k+n))  ->  pi^(2p)

with C(n, n/2) read through the Gamma function for odd n.  The inner series
converge only like k^(-1/2 - 1) at x = 1, so three evaluation routes exist:

* ``integral`` (default): the inner series equals
  (1/(2p)!) int_0^(pi/2) sin^n(t) t^(2p) dt, resp.
  (2/(2p-1)!) int_0^(pi/2) sin^n(t) t^(2p-1) dt, integrated by adaptive
  Gauss-Legendre quadrature to full working precision;
* ``closed``: the exact pi-polynomial value of the inner series;
* ``series``: tail-bounded partial sums (slow, low accuracy at large n).
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, lcm

import mpmath
from mpmath import mp, mpf

from .exact_core import bernoulli, euler_number, half_integer_central_binomial
from .precision import PrecisionContext
from .quadrature import integrate

__all__ = [
    "ZETA_BETA_KINDS",
    "zeta_beta_finite",
    "zeta_beta_target",
    "zeta_even",
    "beta_odd",
    "pi_limit_prefactor",
    "pi_limit_value",
    "pi_limit_target",
    "pi_limit_inner",
]

ZETA_BETA_KINDS = ("4.9", "4.10", "4.11", "4.12")


def zeta_beta_finite(kind: str, s: int, ell: int) -> Fraction:
    """Exact normalized finite sum whose limit in ell is a zeta or beta value.

    ``4.9``:  sum_{k=1}^{l} C(2l, l-k) / k^s            over C(2l, l)
    ``4.10``: sum_{k=1}^{l} C(2l, l-k) (-1)^(k-1) / k^s over C(2l, l)
    ``4.11``: sum_{k=0}^{l} C(2l+1, l-k) / (2k+1)^s      over C(2l+1, l+1)
    ``4.12``: sum_{k=0}^{l} C(2l+1, l-k) (-1)^k / (2k+1)^s over C(2l+1, l+1)
    """
    kind = str(kind)
    if kind not in ZETA_BETA_KINDS:
        raise ValueError(f"kind must be one of {ZETA_BETA_KINDS}")
    if s < 2:
        raise ValueError("s must be >= 2")
    if ell < 0:
        raise ValueError("ell must be >= 0")
    if kind in ("4.9", "4.10"):
        ks = range(1, ell + 1)
        base = list(ks)
        weights = _binomial_run(2 * ell, ell, ell + 1)[1:]
        signs = [1] * ell if kind == "4.9" else [(-1) ** (k - 1) for k in ks]
        norm = comb(2 * ell, ell)
    else:
        ks = range(0, ell + 1)
        base = [2 * k + 1 for k in ks]
        weights = _binomial_run(2 * ell + 1, ell, ell + 1)
        signs = [1] * (ell + 1) if kind == "4.11" else [(-1) ** k for k in ks]
        norm = comb(2 * ell + 1, ell + 1)
    if not base:
        return Fraction(0)
    # one common denominator instead of len(base) Fraction additions; lcm(d^s) = lcm(d)^s
    den = lcm(*base) ** s
    num = sum(sg * w * (den // d**s) for sg, w, d in zip(signs, weights, base))
    return Fraction(num, den * norm)


def _binomial_run(n: int, top: int, count: int) -> list[int]:
    """[C(n, top), C(n, top-1), ..., C(n, top-count+1)] by the exact downward ratio."""
    c = comb(n, top)
    out = [c]
    for j in range(top, top - count + 1, -1):
        c = c * j // (n - j + 1)
        out.append(c)
    return out


def zeta_even(n: int) -> mpf:
    """zeta(2n) = (-1)^(n-1) (2 pi)^(2n) B_2n / (2 (2n)!), n >= 1."""
    B = bernoulli(2 * n)
    return (-1) ** (n - 1) * (2 * mp.pi) ** (2 * n) * (mpf(B.numerator) / B.denominator) / (2 * factorial(2 * n))


def beta_odd(n: int) -> mpf:
    """beta(2n+1) = (-1)^n pi^(2n+1) E_2n / (2^(2n+2) (2n)!), n >= 0."""
    return (-1) ** n * mp.pi ** (2 * n + 1) * euler_number(2 * n) / (mpf(2) ** (2 * n + 2) * factorial(2 * n))


def zeta_beta_target(kind: str, s: int) -> mpf:
    """Limit of :func:`zeta_beta_finite` as ell -> infinity, at ambient precision.

    Even zeta arguments and odd beta arguments use the Bernoulli/Euler closed
    forms; the rest (zeta(3), beta(2), beta(4), ...) come from mpmath.
    """
    kind = str(kind)
    if kind == "4.12":
        if s % 2:
            return beta_odd((s - 1) // 2)
        return mpmath.dirichlet(s, [0, 1, 0, -1])
    z = zeta_even(s // 2) if s % 2 == 0 else mpmath.zeta(s)
    if kind == "4.9":
        return z
    if kind == "4.10":
        return (1 - mpf(2) ** (1 - s)) * z
    if kind == "4.11":
        return (1 - mpf(2) ** (-s)) * z
    raise ValueError(f"kind must be one of {ZETA_BETA_KINDS}")


# pi-limit sequences -----------------------------------------------------------


def _check_family(family: str, p: int, n: int) -> None:
    if family not in ("odd", "even"):
        raise ValueError("family must be 'odd' or 'even'")
    if family == "odd" and p < 0:
        raise ValueError("odd family needs p >= 0")
    if family == "even" and p < 1:
        raise ValueError("even family needs p >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")


def pi_limit_prefactor(family: str, p: int, n: int) -> mpf:
    """2^(2p+n+1) (2p)! / C(n, n/2) (odd) or 2^(2p+n-1) (2p-1)! / C(n, n/2) (even).

    For odd n the central binomial is 4^n / (C(n-1, (n-1)/2) n pi), so the
    prefactor carries one power of pi.
    """
    _check_family(family, p, n)
    num = 2 ** (2 * p + n + 1) * factorial(2 * p) if family == "odd" else 2 ** (2 * p + n - 1) * factorial(2 * p - 1)
    if n % 2 == 0:
        return mpf(num) / comb(n, n // 2)
    c = half_integer_central_binomial((n - 1) // 2).coefficient
    return mpf(num * c.denominator) / c.numerator * mp.pi


def pi_limit_target(family: str, p: int) -> mpf:
    return mp.pi ** (2 * p + 1) if family == "odd" else mp.pi ** (2 * p)


def pi_limit_inner(family: str, p: int, n: int, ctx: PrecisionContext | None = None) -> mpf:
    """The inner x = 1 series of the sequence, through its integral representation."""
    ctx = ctx or PrecisionContext()
    _check_family(family, p, n)
    power = 2 * p if family == "odd" else 2 * p - 1
    scale = mpf(1) / factorial(2 * p) if family == "odd" else mpf(2) / factorial(2 * p - 1)
    with ctx.workprec(16):
        f = lambda t: mpmath.sin(t) ** n * t**power  # noqa: E731
        # the integrand is at most (pi/2)^power; ask for relative accuracy
        peak = (mp.pi / 2) ** power / mpmath.sqrt(n)
        rep = integrate(f, 0, mp.pi / 2, peak * mpf(2) ** (-ctx.working))
        return rep.value * scale


def pi_limit_value(family: str, p: int, n: int, ctx: PrecisionContext | None = None, method: str = "integral") -> mpf:
    """n-th element of the odd (-> pi^(2p+1)) or even (-> pi^(2p)) sequence."""
    ctx = ctx or PrecisionContext()
    _check_family(family, p, n)
    with ctx.workprec():
        if method == "integral":
            inner = pi_limit_inner(family, p, n, ctx)
        elif method == "closed":
            from .identities import pi_limit_inner_exact

            inner = pi_limit_inner_exact(family, p, n).value()
        elif method == "series":
            from .series import SeriesSpec, sum_series

            spec = SeriesSpec(f"pi-limit-{family}", {"p": p, "n": n})
            return _round(sum_series(spec, ctx=ctx).partial_sum, ctx)
        else:
            raise ValueError("method must be 'integral', 'closed' or 'series'")
        value = pi_limit_prefactor(family, p, n) * inner
    return _round(value, ctx)


def _round(v: mpf, ctx: PrecisionContext) -> mpf:
    with mp.workprec(ctx.precision):
        return +v
