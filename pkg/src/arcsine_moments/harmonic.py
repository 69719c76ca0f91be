"""Exact tables of the nested sums G_p(k) and H_p(k).

G_p(k) sums 1/((2n_1+1)^2 ... (2n_p+1)^2) over k > n_1 > n_2 > ... > n_p >= 0,
H_{p+1}(k) sums 1/((2n_1)^2 ... (2n_p)^2) over k > n_1 > ... > n_p >= 1.
Both are built column by column from the one-step recurrences below and
stored as Fractions, including the structural zeros.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "HarmonicTable",
    "g_table",
    "h_table",
    "g_limit",
    "h_limit",
    "fixed_point_mirror",
]


@dataclass(frozen=True)
class HarmonicTable:
    kind: str
    values: tuple[tuple[Fraction, ...], ...]
    p_min: int
    p_max: int
    k_max: int

    def __getitem__(self, pk: tuple[int, int]) -> Fraction:
        p, k = pk
        if not (self.p_min <= p <= self.p_max and 0 <= k <= self.k_max):
            raise IndexError(f"({p}, {k}) outside table")
        return self.values[p - self.p_min][k]

    def row(self, p: int) -> tuple[Fraction, ...]:
        return self.values[p - self.p_min]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "k", "numerator", "denominator"])
        for p in range(self.p_min, self.p_max + 1):
            for k, v in enumerate(self.row(p)):
                if self.kind == "H" and k == 0:
                    continue
                w.writerow([p, k, v.numerator, v.denominator])
        return buf.getvalue()


def g_table(p_max: int, k_max: int) -> HarmonicTable:
    """G_p(k) for 0 <= p <= p_max, 0 <= k <= k_max.

    G_p(k) = G_p(k-1) + G_{p-1}(k-1) / (2k-1)^2 with G_p(0) = [p == 0].
    """
    if p_max < 0 or k_max < 0:
        raise ValueError("p_max and k_max must be >= 0")
    rows = [[Fraction(1)] * (k_max + 1)]
    for p in range(1, p_max + 1):
        prev = rows[-1]
        row = [Fraction(0)] * (k_max + 1)
        for k in range(1, k_max + 1):
            row[k] = row[k - 1] + prev[k - 1] / (2 * k - 1) ** 2
        rows.append(row)
    return HarmonicTable("G", tuple(tuple(r) for r in rows), 0, p_max, k_max)


def h_table(p_max: int, k_max: int) -> HarmonicTable:
    """H_p(k) for 1 <= p <= p_max, 1 <= k <= k_max (column k = 0 is a zero placeholder).

    H_{p+1}(k) = H_{p+1}(k-1) + H_p(k-1) / (2(k-1))^2, H_{p+1}(1) = 0, H_1(k) = 1.
    """
    if p_max < 1 or k_max < 1:
        raise ValueError("p_max and k_max must be >= 1")
    rows = [[Fraction(0)] + [Fraction(1)] * k_max]
    for _ in range(2, p_max + 1):
        prev = rows[-1]
        row = [Fraction(0)] * (k_max + 1)
        for k in range(2, k_max + 1):
            row[k] = row[k - 1] + prev[k - 1] / (2 * (k - 1)) ** 2
        rows.append(row)
    return HarmonicTable("H", tuple(tuple(r) for r in rows), 1, p_max, k_max)


def g_limit(p: int):
    """sup_k G_p(k) = (pi/2)^(2p) / (2p)!  (elementary symmetric sums of 1/(2j+1)^2)."""
    import mpmath

    return (mpmath.pi / 2) ** (2 * p) / mpmath.factorial(2 * p)


def h_limit(p: int):
    """sup_k H_p(k) = (pi/2)^(2p-2) / (2p-1)!  for p >= 1."""
    import mpmath

    return (mpmath.pi / 2) ** (2 * p - 2) / mpmath.factorial(2 * p - 1)


def fixed_point_mirror(table: HarmonicTable, bits: int) -> tuple[tuple[int, ...], ...]:
    """Round-to-nearest integer images ``round(v * 2**bits)`` of every entry."""
    out = []
    for row in table.values:
        out.append(tuple((v.numerator * (1 << bits) * 2 + v.denominator) // (2 * v.denominator) for v in row))
    return tuple(out)
