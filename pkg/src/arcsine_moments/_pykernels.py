"""Pure-Python fixed-point series kernels.

Every quantity is an integer scaled by 2**bits.  ``_ckernels.pyx`` is a
line-for-line typed copy; both must return identical integers.
"""
from __future__ import annotations


def g_sum(p, x2, offsets, bits, K):
    """sum_{k=0}^{K-1} b_k G_p(k) x2^k / prod_d (2k + d), with b_k = C(2k,k)/4^k.

    Returns ``(sum, b_K)``; ``x2`` is the fixed-point image of x^2.
    """
    one = 1 << bits
    unit = x2 == one
    b = one
    g = [one] + [0] * p
    xp = one
    acc = 0
    for k in range(K):
        if g[p]:
            t = (b * g[p]) >> bits
            if not unit:
                t = (t * xp) >> bits
            den = 1
            for d in offsets:
                den *= 2 * k + d
            acc += t // den
        sq = (2 * k + 1) * (2 * k + 1)
        for j in range(p, 0, -1):
            g[j] += g[j - 1] // sq
        b = b * (2 * k + 1) // (2 * k + 2)
        if not unit:
            xp = (xp * x2) >> bits
    return acc, b


def h_sum(p, x2, offsets, bits, K):
    """sum_{k=1}^{K} (4^k / C(2k,k)) H_p(k) x2^k / (2k * prod_d (2k + d)).

    Returns ``(sum, 4^(K+1)/C(2K+2,K+1))``.
    """
    one = 1 << bits
    unit = x2 == one
    ib = 2 * one
    h = [0, one] + [0] * (p - 1)
    xp = x2
    acc = 0
    for k in range(1, K + 1):
        if h[p]:
            t = (ib * h[p]) >> bits
            if not unit:
                t = (t * xp) >> bits
            den = 2 * k
            for d in offsets:
                den *= 2 * k + d
            acc += t // den
        sq = 4 * k * k
        for j in range(p - 1, 0, -1):
            h[j + 1] += h[j] // sq
        ib = ib * (2 * k + 2) // (2 * k + 1)
        if not unit:
            xp = (xp * x2) >> bits
    return acc, ib


def odd_square_sum(bits, K):
    """sum_{k=0}^{K-1} 1/(2k+1)^2."""
    one = 1 << bits
    acc = 0
    for k in range(K):
        acc += one // ((2 * k + 1) * (2 * k + 1))
    return acc
