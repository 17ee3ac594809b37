# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Mirrors ``_pykernels`` exactly.

Integer kernels stay on Python ints (no fixed-width path); the gain comes
from typed loop indices and avoiding interpreter dispatch. The Jacobi
kernel runs on a C double buffer.
"""
from libc.math cimport sqrt, fabs, copysign
from libc.stdlib cimport malloc, free

BACKEND = "compiled"


def bareiss_det(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, r
    cdef list a, rk, ri
    cdef int sign = 1
    cdef object prev = 1, akk, aik
    if n == 0:
        return 1
    a = [list(x) for x in rows]
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = a[k]
        akk = rk[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def principal_minors(rows, masks):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i
    cdef list out = [], keep, sub
    for mask in masks:
        keep = [i for i in range(n) if (mask >> i) & 1]
        sub = [[rows[i][j] for j in keep] for i in keep]
        out.append(bareiss_det(sub))
    return out


def faddeev_leverrier(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, l, k
    cdef list coeffs = [0] * (n + 1)
    cdef list m = [[0] * n for _ in range(n)]
    cdef list am, row_a, row_out
    cdef object acc, c_prev, trace
    coeffs[n] = 1
    for k in range(1, n + 1):
        am = []
        for i in range(n):
            row_a = rows[i]
            row_out = []
            for j in range(n):
                acc = 0
                for l in range(n):
                    acc += row_a[l] * m[l][j]
                row_out.append(acc)
            am.append(row_out)
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            am[i][i] = am[i][i] + c_prev
        m = am
        trace = 0
        for i in range(n):
            row_a = rows[i]
            for j in range(n):
                trace += row_a[j] * m[j][i]
        q, rem = divmod(-trace, k)
        if rem:
            raise ArithmeticError(f"Faddeev-LeVerrier step {k} is not an exact division")
        coeffs[n - k] = q
    return coeffs


def jacobi_eigenvalues(rows, double tol, int max_sweeps):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, p, q, k, sweep
    cdef double off, apq, theta, t, c, s, x, y
    cdef double *a = <double *> malloc(n * n * sizeof(double)) if n > 0 else NULL
    if n > 0 and a == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(n):
                a[i * n + j] = float(rows[i][j])
        for sweep in range(max_sweeps):
            off = 0.0
            for i in range(n):
                for j in range(n):
                    if i != j:
                        off += a[i * n + j] * a[i * n + j]
            if sqrt(off) < tol:
                return sorted([a[i * n + i] for i in range(n)])
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p * n + q]
                    if apq == 0.0:
                        continue
                    theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq)
                    t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        x = a[k * n + p]
                        y = a[k * n + q]
                        a[k * n + p] = c * x - s * y
                        a[k * n + q] = s * x + c * y
                    for k in range(n):
                        x = a[p * n + k]
                        y = a[q * n + k]
                        a[p * n + k] = c * x - s * y
                        a[q * n + k] = s * x + c * y
                    a[p * n + q] = 0.0
                    a[q * n + p] = 0.0
        raise ArithmeticError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    finally:
        free(a)
