# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fixed-point series kernels; mirrors _pykernels.py exactly."""


def g_sum(int p, object x2, tuple offsets, int bits, long K):
    cdef long k, d
    cdef int j
    cdef bint unit
    cdef object one = (<object>1) << bits
    cdef object b = one
    cdef object xp = one
    cdef object acc = 0
    cdef object t, den, sq
    cdef list g = [one] + [0] * p
    unit = x2 == one
    for k in range(K):
        if g[p]:
            t = (b * g[p]) >> bits
            if not unit:
                t = (t * xp) >> bits
            den = 1
            for d in offsets:
                den = den * (2 * k + d)
            acc += t // den
        sq = (2 * k + 1) * (2 * k + 1)
        for j in range(p, 0, -1):
            g[j] = g[j] + g[j - 1] // sq
        b = b * (2 * k + 1) // (2 * k + 2)
        if not unit:
            xp = (xp * x2) >> bits
    return acc, b


def h_sum(int p, object x2, tuple offsets, int bits, long K):
    cdef long k, d
    cdef int j
    cdef bint unit
    cdef object one = (<object>1) << bits
    cdef object ib = 2 * one
    cdef object xp = x2
    cdef object acc = 0
    cdef object t, den, sq
    cdef list h = [0, one] + [0] * (p - 1)
    unit = x2 == one
    for k in range(1, K + 1):
        if h[p]:
            t = (ib * h[p]) >> bits
            if not unit:
                t = (t * xp) >> bits
            den = 2 * k
            for d in offsets:
                den = den * (2 * k + d)
            acc += t // den
        sq = 4 * k * k
        for j in range(p - 1, 0, -1):
            h[j + 1] = h[j + 1] + h[j] // sq
        ib = ib * (2 * k + 2) // (2 * k + 1)
        if not unit:
            xp = (xp * x2) >> bits
    return acc, ib


def odd_square_sum(int bits, long K):
    cdef long k
    cdef object one = (<object>1) << bits
    cdef object acc = 0
    for k in range(K):
        acc += one // ((2 * k + 1) * (2 * k + 1))
    return acc
