"""Exact Chebyshev polynomials T_n, U_n and the arcsine-composed identities."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import mpmath
from mpmath import mp, mpf

from .precision import PrecisionContext, arcsin, to_mpf

__all__ = [
    "IntPoly",
    "chebyshev_t",
    "chebyshev_u",
    "eval_poly",
    "lemma33_residuals",
]


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, ``coefficients[j]`` multiplies ``x**j``."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(v) for v in self.coefficients)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coefficients", c or (0,))

    @property
    def degree(self) -> int:
        if self.coefficients == (0,):
            return -1
        return len(self.coefficients) - 1

    def __call__(self, x):
        """Exact Horner evaluation for ints/Fractions; mpf inputs use the ambient precision."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        parts = []
        for j in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[j]
            if c == 0:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if mono and abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}" + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


ZERO = IntPoly((0,))


def _times_2x(p: tuple[int, ...]) -> list[int]:
    return [0] + [2 * c for c in p]


def _sub(p: list[int], q: tuple[int, ...]) -> tuple[int, ...]:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for j, c in enumerate(q):
        out[j] -= c
    return tuple(out)


@lru_cache(maxsize=None)
def _recurrence(kind: str, n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 1) if kind == "T" else (0, 2)
    return _sub(_times_2x(_recurrence(kind, n - 1)), _recurrence(kind, n - 2))


def chebyshev_t(n: int) -> IntPoly:
    """T_n from T_{n+1} = 2x T_n - T_{n-1}, T_0 = 1, T_1 = x."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for m in range(0, n, 64):  # keep recursion depth bounded
        _recurrence("T", m)
    return IntPoly(_recurrence("T", n))


def chebyshev_u(n: int) -> IntPoly:
    """U_n from the same recurrence with U_1 = 2x.  U_{-1} is the zero polynomial."""
    if n == -1:
        return ZERO
    if n < 0:
        raise ValueError("n must be >= -1")
    for m in range(0, n, 64):
        _recurrence("U", m)
    return IntPoly(_recurrence("U", n))


def eval_poly(p: IntPoly, x, ctx: PrecisionContext | None = None) -> mpf:
    """Horner evaluation at ``ctx.precision`` bits."""
    ctx = ctx or PrecisionContext()
    with mp.workprec(ctx.precision):
        xv = to_mpf(x)
        acc = mpf(0)
        for c in reversed(p.coefficients):
            acc = acc * xv + c
        return +acc


def lemma33_residuals(k: int, x, ctx: PrecisionContext | None = None) -> tuple[mpf, mpf, mpf, mpf]:
    """Residuals of the four identities tying cos/sin of multiples of arcsin x to T and U.

    Returned in order: cos(2k a) vs (-1)^k T_2k, sin((2k+1) a) vs (-1)^k T_2k+1,
    sin(2k a) vs (-1)^(k+1) U_2k-1 s, cos((2k+1) a) vs (-1)^k U_2k s, with
    a = arcsin x and s = sqrt(1 - x^2).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    ctx = ctx or PrecisionContext()
    sign = -1 if k % 2 else 1
    # Horner on T_n near |x| = 1 loses about 1.27 n bits to cancellation
    with ctx.workprec(extra=2 * (2 * k + 1)):
        xv = to_mpf(x)
        if abs(xv) > 1:
            raise ValueError("|x| must be <= 1")
        a = arcsin(xv)
        s = mpmath.sqrt(1 - xv * xv)
        r1 = mpmath.cos(2 * k * a) - sign * chebyshev_t(2 * k)(xv)
        r2 = mpmath.sin((2 * k + 1) * a) - sign * chebyshev_t(2 * k + 1)(xv)
        r3 = mpmath.sin(2 * k * a) + sign * chebyshev_u(2 * k - 1)(xv) * s
        r4 = mpmath.cos((2 * k + 1) * a) - sign * chebyshev_u(2 * k)(xv) * s
    with mp.workprec(ctx.precision):
        return (+abs(r1), +abs(r2), +abs(r3), +abs(r4))
