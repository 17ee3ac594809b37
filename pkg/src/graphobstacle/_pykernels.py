"""Pure-Python hot kernels. Same API as the compiled ``_ckernels`` module.

All integer kernels take square ``list[list[int]]`` input, never mutate it,
and work on arbitrary-precision Python ints throughout.
"""
from __future__ import annotations

import math

BACKEND = "python"


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def principal_minors(rows: list[list[int]], masks: list[int]) -> list[int]:
    """Determinant of the principal submatrix selected by each bitmask."""
    n = len(rows)
    out = []
    for mask in masks:
        keep = [i for i in range(n) if mask >> i & 1]
        out.append(bareiss_det([[rows[i][j] for j in keep] for i in keep]))
    return out


def faddeev_leverrier(rows: list[list[int]]) -> list[int]:
    """Coefficients of det(t*I - A), constant term first; leading coefficient 1."""
    n = len(rows)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = _matmul(rows, m)
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            am[i][i] += c_prev
        m = am
        trace = sum(rows[i][j] * m[j][i] for i in range(n) for j in range(n))
        q, r = divmod(-trace, k)
        if r:
            raise ArithmeticError(f"Faddeev-LeVerrier step {k} is not an exact division")
        coeffs[n - k] = q
    return coeffs


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(a[i], cols[j])) for j in range(n)] for i in range(n)]


def jacobi_eigenvalues(rows: list[list[float]], tol: float, max_sweeps: int) -> list[float]:
    """Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below ``tol``."""
    n = len(rows)
    a = [[float(x) for x in r] for r in rows]
    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[i][j] * a[i][j] for i in range(n) for j in range(n) if i != j))
        if off < tol:
            return sorted(a[i][i] for i in range(n))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
                a[p][q] = a[q][p] = 0.0
    raise ArithmeticError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
