# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the numpy kernels in ``pyimpl``.

The map evaluation mirrors ``pyimpl.eval_family`` branch for branch so
the two backends agree bit-for-bit on the piecewise-linear families (the
exponential in the Ricker map may differ from numpy's by an ulp).
"""
from libc.math cimport exp, fabs


cdef inline double _feval(int code, double p0, double p1, double x) noexcept nogil:
    if code == 0:                      # linear
        return p0 * x
    elif code == 1:                    # dead zone
        if x <= -p1:
            return p0 * (x + p1)
        elif x >= p1:
            return p0 * (x - p1)
        return 0.0
    elif code == 2:                    # saturated
        if x < -p1:
            return p0 * (-p1)
        elif x > p1:
            return p0 * p1
        return p0 * x
    elif code == 3:                    # half line
        if x < 0.0:
            return 0.0
        return -p0 * x
    elif code == 4:                    # two slope
        if x < 0.0:
            return -p1 * x
        return -p0 * x
    elif code == 5:                    # absolute value
        return p0 * fabs(x)
    elif code == 6:                    # quadratic
        return p0 * x * x
    else:                              # ricker
        return (x + p0) * exp(-x) - p0


def dp_relax(double[::1] cin, double[:, ::1] tmat, double[::1] cout,
             long long[::1] amin):
    cdef Py_ssize_t n = tmat.shape[0]
    cdef Py_ssize_t m = tmat.shape[1]
    cdef Py_ssize_t i, j, bi
    cdef double best, v
    with nogil:
        for j in range(n):
            best = cin[0] + tmat[j, 0]
            bi = 0
            for i in range(1, m):
                v = cin[i] + tmat[j, i]
                if v < best:
                    best = v
                    bi = i
            cout[j] = best
            amin[j] = bi


def exit_scan(double[::1] x, double[:, ::1] noise, int code, double p0,
              double p1, double eps, double h, long long[::1] out):
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t k = noise.shape[1]
    cdef Py_ssize_t i, j
    cdef double xi
    with nogil:
        for i in range(n):
            xi = x[i]
            out[i] = 0
            for j in range(k):
                xi = _feval(code, p0, p1, xi) + eps * noise[i, j]
                if xi >= h or xi <= -h:
                    out[i] = j + 1
                    break
            x[i] = xi
