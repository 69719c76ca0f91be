"""Working-precision plumbing for the numeric layer (mpmath underneath)."""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

__all__ = [
    "PrecisionContext",
    "DEFAULT_PRECISION",
    "to_mpf",
    "arcsin",
    "stable_evaluate",
    "mpf_to_str",
]

DEFAULT_PRECISION = int(os.environ.get("ARCSINE_MOMENTS_PREC", "128"))

# named algebraic points accepted wherever a real argument is expected
_NAMED_POINTS = {
    "sqrt2/2": lambda: mpmath.sqrt(2) / 2,
    "1/sqrt2": lambda: mpmath.sqrt(2) / 2,
    "sqrt(2)/2": lambda: mpmath.sqrt(2) / 2,
    "1/sqrt(2)": lambda: mpmath.sqrt(2) / 2,
    "sqrt(2-sqrt2)/2": lambda: mpmath.sqrt(2 - mpmath.sqrt(2)) / 2,
    "sqrt(2+sqrt2)/2": lambda: mpmath.sqrt(2 + mpmath.sqrt(2)) / 2,
}


@dataclass(frozen=True)
class PrecisionContext:
    """Target precision in bits plus the guard bits used internally."""

    precision: int = DEFAULT_PRECISION
    guard: int = 32

    def __post_init__(self) -> None:
        if self.precision < 53:
            raise ValueError("precision must be >= 53 bits")
        if self.guard < 32:
            raise ValueError("guard must be >= 32 bits")

    @property
    def working(self) -> int:
        return self.precision + self.guard

    def workprec(self, extra: int = 0):
        return mp.workprec(self.working + extra)

    def eps(self, slack: int = 0) -> mpf:
        """2^-(precision - slack)."""
        return mpf(2) ** (slack - self.precision)


def to_mpf(x) -> mpf:
    """Convert ints, Fractions, decimal strings, named points and mpf at the current precision.

    Decimal strings are rounded once at the current precision, so ``"0.3"`` is
    the nearest binary value to 3/10 rather than the double 0.3.
    """
    if isinstance(x, mpf):
        return +x
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, str):
        key = x.strip().replace(" ", "")
        if key.startswith("-"):
            return -to_mpf(key[1:])
        if key in _NAMED_POINTS:
            return _NAMED_POINTS[key]()
        if "/" in key:
            return to_mpf(Fraction(key))
        return mpf(key)
    return mpf(x)


def arcsin(x: mpf) -> mpf:
    """arcsin via atan(x / sqrt(1 - x^2)); the endpoints are special-cased."""
    if x == 1:
        return mp.pi / 2
    if x == -1:
        return -mp.pi / 2
    if abs(x) > 1:
        raise ValueError("arcsin argument outside [-1, 1]")
    return mpmath.atan(x / mpmath.sqrt(1 - x * x))


def stable_evaluate(fn, ctx: PrecisionContext, max_rounds: int = 4) -> mpf:
    """Evaluate ``fn()`` at P+guard and P+2*guard bits; accept when they agree to P bits.

    ``fn`` reads the ambient mpmath precision.  On disagreement the guard is
    doubled and the pair is recomputed.  The agreement test is absolute below
    magnitude 1 and relative above it.
    """
    guard = ctx.guard
    for _ in range(max_rounds):
        with mp.workprec(ctx.precision + guard):
            lo = fn()
        with mp.workprec(ctx.precision + 2 * guard):
            hi = fn()
        with mp.workprec(ctx.precision + 2 * guard):
            scale = max(mpf(1), abs(hi))
            if abs(hi - lo) <= scale * mpf(2) ** (-ctx.precision):
                return hi
        guard *= 2
    raise ArithmeticError("evaluation did not stabilise; increase the guard bits")


def mpf_to_str(x: mpf, digits: int) -> str:
    """Fixed number of significant digits, deterministic across runs."""
    return mpmath.nstr(x, digits, strip_zeros=False, min_fixed=-8, max_fixed=12)
