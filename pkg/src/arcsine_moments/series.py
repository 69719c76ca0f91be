"""Tail-bounded summation of the central-binomial series families.

All infinite families reduce to one of two shapes,

* G-shape: ``sum_{k>=0} b_k G_p(k) r^k / prod_d (2k + d)``,  b_k = C(2k,k)/4^k,
* H-shape: ``sum_{k>=1} (1/b_k) H_p(k) r^k / (2k prod_d (2k + d))``,

times a scalar prefactor, with r = x^2.  Terms are produced by the
fixed-point kernels (:mod:`.kernels`) from ratio recurrences, accumulated
exactly as integers, and the harmonic weights are carried along as a
fixed-point mirror of the exact tables.

Tail model, documented per shape (k0 is the first omitted index):

* r < 1: the weight ``b_k / prod(2k+d)`` (resp. ``(1/b_k) / (2k prod)``) is
  nonincreasing, G_p(k) <= G_p(inf) = (pi/2)^(2p)/(2p)!,
  H_p(k) <= H_p(inf) = (pi/2)^(2p-2)/(2p-1)!, so the tail is at most the
  k0 term bound divided by (1 - r).
* r = 1: b_k <= 1/sqrt(pi k) and 1/b_k <= sqrt(pi (k + 1/2)); the tail is
  bounded by the integral of the resulting power of k from k0 - 1.  Needs at
  least one denominator factor.

Each per-term floor division costs at most one unit in the last place, so
``(K + 1) * (len(offsets) + 3)`` ulps are added to the reported tail.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, log2

import mpmath
from mpmath import mp, mpf

from . import kernels
from .harmonic import g_limit, h_limit
from .precision import PrecisionContext, mpf_to_str, to_mpf

__all__ = [
    "SeriesResult",
    "SeriesSpec",
    "FAMILIES",
    "central_binomial_ratio_step",
    "sum_series",
    "partial_fraction_series",
    "shape_sum",
]

FAMILIES = (
    "G",
    "H",
    "partial-fraction",
    "zeta-finite",
    "beta-finite",
    "pi-limit-odd",
    "pi-limit-even",
    "eq12",
    "eq58-left",
    "eq58-right",
    "lupu-odd",
    "lupu-even",
)


@dataclass(frozen=True)
class SeriesResult:
    partial_sum: mpf
    terms_used: int
    tail_estimate: mpf
    converged: bool

    def bracket(self) -> tuple[mpf, mpf]:
        """[partial_sum - tail, partial_sum + tail]."""
        return self.partial_sum - self.tail_estimate, self.partial_sum + self.tail_estimate

    def to_json(self, digits: int = 30) -> dict:
        return {
            "partial_sum": mpf_to_str(self.partial_sum, digits),
            "terms_used": self.terms_used,
            "tail_estimate": mpmath.nstr(self.tail_estimate, 6),
            "converged": self.converged,
        }


@dataclass(frozen=True)
class SeriesSpec:
    """A series family plus its parameters.

    ``params`` keys by family:

    * ``G``: p >= 0, m >= 1, x  -> sum b_k G_p(k) x^(2k+m)/(2k+m)
    * ``H``: p >= 1, m >= 0, x  -> sum (4^k H_p(k)/(C(2k,k) 2k)) x^(2k+m)/(2k+m)
    * ``partial-fraction``: p, n != m, x -> sum b_k G_p(k) x^(2k+2)/((2k+2+n)(2k+2+m))
    * ``zeta-finite`` / ``beta-finite``: kind in {4.9, 4.10} / {4.11, 4.12}, s, ell
    * ``pi-limit-odd`` (p >= 0) / ``pi-limit-even`` (p >= 1): p, n; the inner x = 1 series
    * ``eq12``: even n >= 0, x -> sum b_k x^(2k+1)/(2k+n+1)
    * ``eq58-left`` / ``eq58-right``: 4 sum 1/(2k+1)^2 and sum 4^j/(C(2j,j) j^2)
    * ``lupu-odd`` (p >= 0) / ``lupu-even`` (p >= 1): sum b_k G_p(k)/2^k, sum 2^k H_p(k)/(C(2k,k) k)
    """

    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown series family {self.family!r}")
        _validate(self.family, self.params)


def _need(params: dict, *names: str) -> None:
    missing = [n for n in names if n not in params]
    if missing:
        raise ValueError(f"missing parameters {missing}")


def _validate(family: str, params: dict) -> None:
    if family in ("G", "H", "partial-fraction", "eq12"):
        x = params.get("x", 1)
        with mp.workprec(64):
            if abs(to_mpf(x)) > 1:
                raise ValueError("|x| must be <= 1")
    if family == "G":
        _need(params, "p", "m")
        if params["p"] < 0 or params["m"] < 1:
            raise ValueError("G family needs p >= 0 and m >= 1")
    elif family == "H":
        _need(params, "p", "m")
        if params["p"] < 1 or params["m"] < 0:
            raise ValueError("H family needs p >= 1 and m >= 0")
    elif family == "partial-fraction":
        _need(params, "p", "n", "m")
        if params["n"] == params["m"]:
            raise ValueError("partial-fraction family needs n != m")
        if params["p"] < 0 or params["n"] < 0 or params["m"] < 0:
            raise ValueError("p, n, m must be >= 0")
    elif family in ("zeta-finite", "beta-finite"):
        _need(params, "kind", "s", "ell")
        allowed = ("4.9", "4.10") if family == "zeta-finite" else ("4.11", "4.12")
        if str(params["kind"]) not in allowed:
            raise ValueError(f"{family} kind must be one of {allowed}")
        if params["s"] < 2 or params["ell"] < 0:
            raise ValueError("need s >= 2 and ell >= 0")
    elif family in ("pi-limit-odd", "pi-limit-even"):
        _need(params, "p", "n")
        low = 0 if family == "pi-limit-odd" else 1
        if params["p"] < low or params["n"] < 1:
            raise ValueError(f"{family} needs p >= {low} and n >= 1")
    elif family == "eq12":
        _need(params, "n")
        if params["n"] < 0 or params["n"] % 2:
            raise ValueError("eq12 needs even n >= 0")
    elif family in ("lupu-odd", "lupu-even"):
        _need(params, "p")
        if params["p"] < (0 if family == "lupu-odd" else 1):
            raise ValueError("p out of range")


def central_binomial_ratio_step(k: int) -> Fraction:
    """b_{k+1} / b_k = (2k+1)/(2k+2) for b_k = C(2k,k)/4^k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return Fraction(2 * k + 1, 2 * k + 2)


# tails ------------------------------------------------------------------------


def _b(k: int) -> mpf:
    return mpmath.binomial(2 * k, k) / mpf(4) ** k


def _tail(shape: str, p: int, r: mpf, offsets: tuple[int, ...], K: int) -> mpf:
    """Bound on the omitted terms after K summed terms (before the prefactor)."""
    nd = len(offsets)
    if shape == "G":
        k0 = K
        wmax = g_limit(p)
        if r < 1:
            den = mpf(1)
            for d in offsets:
                den *= 2 * k0 + d
            if den == 0:
                return mpmath.inf
            return _b(k0) * wmax * r**k0 / (den * (1 - r))
        if nd == 0 or K < 2:
            return mpmath.inf
        return wmax / mpmath.sqrt(mp.pi) / mpf(2) ** nd * mpf(K - 1) ** (mpf(1) / 2 - nd) / (nd - mpf(1) / 2)
    k0 = K + 1
    wmax = h_limit(p)
    if r < 1:
        den = mpf(2 * k0)
        for d in offsets:
            den *= 2 * k0 + d
        return wmax / _b(k0) * r**k0 / (den * (1 - r))
    if nd == 0 or K < 1:
        return mpmath.inf
    return (
        wmax * mpmath.sqrt(mpf(3) / 2 * mp.pi) / mpf(2) ** (nd + 1) * mpf(K) ** (mpf(1) / 2 - nd) / (nd - mpf(1) / 2)
    )


def _choose_terms(tail_fn, tol: mpf, max_terms: int) -> int:
    if tail_fn(max_terms) > tol:
        return max_terms
    lo, hi = 0, 1
    while hi < max_terms and tail_fn(hi) > tol:
        lo, hi = hi, 2 * hi
    hi = min(hi, max_terms)
    while lo < hi:
        mid = (lo + hi) // 2
        if tail_fn(mid) <= tol:
            hi = mid
        else:
            lo = mid + 1
    return hi


def shape_sum(
    shape: str,
    p: int,
    r,
    offsets: tuple[int, ...],
    prefactor,
    tolerance,
    max_terms: int,
    ctx: PrecisionContext,
) -> SeriesResult:
    """Sum one G- or H-shaped series to ``tolerance`` (absolute, after the prefactor)."""
    with ctx.workprec():
        r = to_mpf(r)
        prefactor = to_mpf(prefactor)
        tol = to_mpf(tolerance)
        if not (0 <= r <= 1):
            raise ValueError("r = x^2 must lie in [0, 1]")
        scale = abs(prefactor)
        ulps = lambda K, bits: mpf(K + 1) * (len(offsets) + 3) * mpf(2) ** (-bits)  # noqa: E731

        def bits_for(K: int) -> int:
            return ctx.working + ceil(log2(K + 2)) + 8

        def total_tail(K: int) -> mpf:
            with mp.workprec(64):
                return (_tail(shape, p, r, offsets, K) + ulps(K, bits_for(K))) * scale

        K = _choose_terms(total_tail, tol, max_terms) if scale else 0
        bits = bits_for(K)
        with mp.workprec(bits + 16):
            one = mpf(2) ** bits
            r_fixed = int(mpmath.nint(r * one))
            kernel = kernels.g_sum if shape == "G" else kernels.h_sum
            acc, _ = kernel(p, r_fixed, tuple(offsets), bits, K)
            raw = mpf(acc) / one
            value = raw * prefactor
        tail = total_tail(K) if scale else mpf(0)
        if r < 1 and r_fixed != one:
            # rounding r^k to fixed point
            tail += mpf(K) ** 2 * mpf(2) ** (-bits) * scale
    with mp.workprec(ctx.precision):
        return SeriesResult(+value, K, +tail, bool(tail <= tol))


def _finite(value: mpf, ell: int) -> SeriesResult:
    return SeriesResult(value, ell, mpf(0), True)


def sum_series(
    spec: SeriesSpec,
    tolerance=None,
    max_terms: int = 10**6,
    ctx: PrecisionContext | None = None,
) -> SeriesResult:
    """Partial sum of ``spec`` with a tail bound; stops at ``tolerance`` or ``max_terms``.

    Non-convergence within ``max_terms`` is reported through ``converged``.
    """
    ctx = ctx or PrecisionContext()
    if tolerance is None:
        tolerance = ctx.eps()
    with ctx.workprec():
        if to_mpf(tolerance) <= 0:
            raise ValueError("tolerance must be > 0")
    if max_terms < 0:
        raise ValueError("max_terms must be >= 0")
    fam, P = spec.family, spec.params

    if fam in ("zeta-finite", "beta-finite"):
        from .limits import zeta_beta_finite

        with ctx.workprec():
            v = zeta_beta_finite(str(P["kind"]), P["s"], P["ell"])
            return _finite(mpf(v.numerator) / v.denominator, P["ell"])

    with ctx.workprec():
        x = to_mpf(P.get("x", 1))
        r = x * x
        if fam == "G":
            return shape_sum("G", P["p"], r, (P["m"],), x ** P["m"], tolerance, max_terms, ctx)
        if fam == "H":
            return shape_sum("H", P["p"], r, (P["m"],), x ** P["m"], tolerance, max_terms, ctx)
        if fam == "partial-fraction":
            return shape_sum("G", P["p"], r, (2 + P["n"], 2 + P["m"]), r, tolerance, max_terms, ctx)
        if fam == "eq12":
            return shape_sum("G", 0, r, (P["n"] + 1,), x, tolerance, max_terms, ctx)
        if fam == "pi-limit-odd":
            from .limits import pi_limit_prefactor

            pref = pi_limit_prefactor("odd", P["p"], P["n"])
            return shape_sum("G", P["p"], 1, (P["n"] + 1,), pref, tolerance, max_terms, ctx)
        if fam == "pi-limit-even":
            from .limits import pi_limit_prefactor

            pref = 2 * pi_limit_prefactor("even", P["p"], P["n"])
            return shape_sum("H", P["p"], 1, (P["n"],), pref, tolerance, max_terms, ctx)
        if fam == "lupu-odd":
            return shape_sum("G", P["p"], mpf(1) / 2, (), 1, tolerance, max_terms, ctx)
        if fam == "lupu-even":
            return shape_sum("H", P["p"], mpf(1) / 2, (), 2, tolerance, max_terms, ctx)
        if fam == "eq58-right":
            return shape_sum("H", 1, 1, (0,), 4, tolerance, max_terms, ctx)
        if fam == "eq58-left":
            return _eq58_left(tolerance, max_terms, ctx)
    raise AssertionError(fam)


def _eq58_left(tolerance, max_terms: int, ctx: PrecisionContext) -> SeriesResult:
    """4 sum_{k>=0} 1/(2k+1)^2 with tail 4 int_{K-1}^inf dt/(2t+1)^2 = 2/(2K-1)."""
    with ctx.workprec():
        tol = to_mpf(tolerance)

        def tail(K: int) -> mpf:
            return mpmath.inf if K < 1 else mpf(2) / (2 * K - 1) + mpf(4 * (K + 1)) * mpf(2) ** (-ctx.working)

        K = _choose_terms(tail, tol, max_terms)
        bits = ctx.working + ceil(log2(K + 2)) + 8
        acc = kernels.odd_square_sum(bits, K)
        value = 4 * mpf(acc) / mpf(2) ** bits
        t = tail(K)
    with mp.workprec(ctx.precision):
        return SeriesResult(+value, K, +t, bool(t <= tol))


def partial_fraction_series(p: int, n: int, m: int, x, tolerance=None, ctx: PrecisionContext | None = None,
                            max_terms: int = 10**6) -> SeriesResult:
    """sum_k C(2k,k) G_p(k) x^(2k+2) / (4^k (2k+2+n)(2k+2+m)), n != m."""
    spec = SeriesSpec("partial-fraction", {"p": p, "n": n, "m": m, "x": x})
    return sum_series(spec, tolerance, max_terms, ctx)
