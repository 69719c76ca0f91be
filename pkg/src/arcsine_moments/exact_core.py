"""Exact integer/rational primitives.

Everything here works over :class:`fractions.Fraction`; nothing touches the
floating layer.  Bernoulli and Euler numbers live in memoized tables that grow
on demand under a lock and are handed out as immutable tuples.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

__all__ = [
    "BigRational",
    "RationalOverPi",
    "NumberTheoryTable",
    "binomial",
    "bernoulli",
    "euler_number",
    "number_table",
    "poly_value_half",
    "lemma43_sum",
    "lemma43_rhs",
    "half_integer_central_binomial",
]

BigRational = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class RationalOverPi:
    """The real number ``coefficient / pi``."""

    coefficient: Fraction

    def value(self, pi):
        return self.coefficient.numerator / (self.coefficient.denominator * pi)


@dataclass(frozen=True)
class NumberTheoryTable:
    bernoulli: tuple[Fraction, ...]
    euler: tuple[int, ...]


class _Tables:
    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._bern: list[Fraction] = [Fraction(1)]
        self._euler: list[int] = [1]
        self._snapshot = NumberTheoryTable((Fraction(1),), (1,))

    def snapshot(self, n: int) -> NumberTheoryTable:
        snap = self._snapshot
        if len(snap.bernoulli) > n and len(snap.euler) > n:
            return snap
        with self._lock:
            self._extend_bernoulli(n)
            self._extend_euler(n)
            self._snapshot = NumberTheoryTable(tuple(self._bern), tuple(self._euler))
            return self._snapshot

    def _extend_bernoulli(self, n: int) -> None:
        # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, i.e. the t/(e^t - 1) EGF
        b = self._bern
        for m in range(len(b), n + 1):
            s = sum((comb(m + 1, j) * b[j] for j in range(m)), Fraction(0))
            b.append(-s / (m + 1))

    def _extend_euler(self, n: int) -> None:
        # E(t) * cosh(t) = 1  =>  sum_{k} C(m, 2k) E_{m-2k} = [m == 0]
        e = self._euler
        for m in range(len(e), n + 1):
            e.append(-sum(comb(m, 2 * k) * e[m - 2 * k] for k in range(1, m // 2 + 1)))


_TABLES = _Tables()


def number_table(n: int) -> NumberTheoryTable:
    """Immutable snapshot holding at least B_0..B_n and E_0..E_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _TABLES.snapshot(n)


def bernoulli(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    return number_table(n).bernoulli[n]


def euler_number(n: int) -> int:
    """E_n from 1/cosh(t) = sum E_n t^n / n!."""
    return number_table(n).euler[n]


def poly_value_half(kind: str, n: int) -> Fraction:
    """B_n(1/2) or E_n(1/2), evaluated from the full polynomial sums.

    The Euler polynomial is reached through Bernoulli numbers,
    ``E_n(x) = 2/(n+1) * sum_j C(n+1, j) (1 - 2^j) B_j x^(n+1-j)``,
    so the closed values ``(2^(1-n) - 1) B_n`` and ``2^-n E_n`` stay
    available as independent checks.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    half = Fraction(1, 2)
    if kind == "bernoulli":
        B = number_table(n).bernoulli
        return sum((comb(n, j) * B[j] * half ** (n - j) for j in range(n + 1)), Fraction(0))
    if kind == "euler":
        m = n + 1
        B = number_table(m).bernoulli
        s = sum((comb(m, j) * (1 - 2**j) * B[j] * half ** (m - j) for j in range(m + 1)), Fraction(0))
        return Fraction(2, m) * s
    raise ValueError(f"unknown kind {kind!r}")


def lemma43_sum(which: int, p: int) -> Fraction:
    """Left-hand side S_which(p) of the four Bernoulli summation formulas, term by term."""
    if p < 1:
        raise ValueError("p must be >= 1")
    B = number_table(2 * p).bernoulli
    total = Fraction(0)
    for j in range(p):
        d = 2 * p - 2 * j
        if which == 1:
            total += comb(2 * p + 1, 2 * j + 1) * 2**d * B[d]
        elif which == 2:
            total += comb(2 * p + 1, 2 * j + 1) * 2**d * (2**d - 1) * B[d]
        elif which == 3:
            total += comb(2 * p, 2 * j) * 2**d * B[d]
        elif which == 4:
            total += comb(2 * p, 2 * j) * 2**d * (2**d - 1) * B[d]
        else:
            raise ValueError("which must be 1, 2, 3 or 4")
    return total


def lemma43_rhs(which: int, p: int) -> Fraction:
    """Closed right-hand sides: 2p, (2p+1)(1-E_2p), 2p-1+(2-4^p)B_2p, 2p."""
    if which in (1, 4):
        return Fraction(2 * p)
    if which == 2:
        return Fraction((2 * p + 1) * (1 - euler_number(2 * p)))
    if which == 3:
        return 2 * p - 1 + (2 - 4**p) * bernoulli(2 * p)
    raise ValueError("which must be 1, 2, 3 or 4")


def half_integer_central_binomial(ell: int) -> RationalOverPi:
    """C(2l+1, l+1/2) = Gamma(2l+2)/Gamma(l+3/2)^2 = 4^(2l+1) / (C(2l,l) (2l+1) pi)."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    return RationalOverPi(Fraction(4 ** (2 * ell + 1), comb(2 * ell, ell) * (2 * ell + 1)))
