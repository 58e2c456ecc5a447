# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled big-integer series kernels.

Signature-compatible twin of ``_series_py``.  Coefficients stay arbitrary-
precision Python ints (the arithmetic itself is object arithmetic); the win
comes from compiling away the interpreter loop overhead, which dominates for
these kernels.
"""


def partition_series(Py_ssize_t limit):
    """p(0..limit) by Euler's pentagonal recurrence."""
    cdef list p = [0] * (limit + 1)
    cdef Py_ssize_t n, k, g
    cdef object s
    p[0] = 1
    for n in range(1, limit + 1):
        s = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > n:
                break
            if k & 1:
                s = s + <object>p[n - g]
                if g + k <= n:
                    s = s + <object>p[n - g - k]
            else:
                s = s - <object>p[n - g]
                if g + k <= n:
                    s = s - <object>p[n - g - k]
            k += 1
        p[n] = s
    return p


def euler_factor(Py_ssize_t cap):
    """Coefficients of prod_{n>=1} (1 - x^n) through degree cap."""
    cdef list e = [0] * (cap + 1)
    cdef Py_ssize_t k = 1, g
    cdef int sign
    e[0] = 1
    while True:
        g = k * (3 * k - 1) // 2
        if g > cap:
            break
        sign = -1 if k & 1 else 1
        e[g] = sign
        if g + k <= cap:
            e[g + k] = sign
        k += 1
    return e


def poly_mul_trunc(list a, list b, Py_ssize_t cap):
    """Product of coefficient lists a, b truncated at degree cap."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t top = la + lb - 1
    if top > cap + 1:
        top = cap + 1
    cdef list out = [0] * top
    cdef Py_ssize_t i, j, jmax
    cdef object ai, bj
    for i in range(la):
        ai = a[i]
        if ai == 0 or i >= top:
            continue
        jmax = lb
        if jmax > top - i:
            jmax = top - i
        for j in range(jmax):
            bj = b[j]
            if bj != 0:
                out[i + j] = <object>out[i + j] + ai * bj
    return out


def core_series_from_inner(list inner, Py_ssize_t t, list p, Py_ssize_t limit):
    """c_t(0..limit) from the stride-t inner factor and the p-series."""
    cdef list out = [0] * (limit + 1)
    cdef Py_ssize_t n, j, jt, li = len(inner)
    cdef object s, cj
    for n in range(limit + 1):
        s = 0
        jt = 0
        j = 0
        while jt <= n and j < li:
            cj = inner[j]
            if cj != 0:
                s = s + cj * <object>p[n - jt]
            j += 1
            jt += t
        out[n] = s
    return out


def core_single_from_inner(list inner, Py_ssize_t t, list p, Py_ssize_t n):
    """c_t(n) alone: one sparse dot product against the p-series."""
    cdef object s = 0, cj
    cdef Py_ssize_t j = 0, jt = 0, li = len(inner)
    while jt <= n and j < li:
        cj = inner[j]
        if cj != 0:
            s = s + cj * <object>p[n - jt]
        j += 1
        jt += t
    return s
