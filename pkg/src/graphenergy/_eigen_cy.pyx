# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled eigensolver kernel: Householder reduction + implicit-shift QL.

Hot twin of graphenergy._eigen_py; identical algorithm and contracts. Both
loops release the GIL, so distinct matrices can be solved concurrently.
"""

from libc.math cimport copysign, fabs, hypot, sqrt
from libc.float cimport DBL_EPSILON

import numpy as np


def tridiagonalize(double[:, ::1] a):
    """Reduce symmetric a to tridiagonal form by Householder similarity.

    a is destroyed. Returns (d, e): diagonal and subdiagonal (e[0] == 0,
    e[i] couples rows i-1 and i). Each column is normalized by its 1-norm
    before the reflector is formed, so columns at denormal scale cannot
    overflow the reflector coefficients.
    """
    cdef Py_ssize_t n = a.shape[0]
    d_arr = np.empty(n)
    e_arr = np.zeros(n)
    w_arr = np.empty(n)
    p_arr = np.empty(n)
    q_arr = np.empty(n)
    cdef double[::1] d = d_arr
    cdef double[::1] e = e_arr
    cdef double[::1] w = w_arr
    cdef double[::1] p = p_arr
    cdef double[::1] q = q_arr
    cdef Py_ssize_t k, i, j, m
    cdef double scale, sigma, x0, alpha, beta, acc, corr, qi, wi
    with nogil:
        for k in range(n - 2):
            m = n - k - 1
            scale = 0.0
            for i in range(k + 1, n):
                scale += fabs(a[i, k])
            if scale == 0.0:
                continue
            for j in range(m):
                w[j] = a[k + 1 + j, k] / scale
            sigma = 0.0
            for j in range(1, m):
                sigma += w[j] * w[j]
            x0 = w[0]
            if sigma == 0.0:
                e[k + 1] = a[k + 1, k]
                continue
            alpha = -copysign(sqrt(x0 * x0 + sigma), x0)
            w[0] = x0 - alpha
            beta = 2.0 / (w[0] * w[0] + sigma)
            for i in range(m):
                acc = 0.0
                for j in range(m):
                    acc += a[k + 1 + i, k + 1 + j] * w[j]
                p[i] = beta * acc
            corr = 0.0
            for i in range(m):
                corr += w[i] * p[i]
            corr *= 0.5 * beta
            for i in range(m):
                q[i] = p[i] - corr * w[i]
            for i in range(m):
                qi = q[i]
                wi = w[i]
                for j in range(m):
                    a[k + 1 + i, k + 1 + j] -= qi * w[j] + wi * q[j]
            e[k + 1] = scale * alpha
        if n >= 2:
            e[n - 1] = a[n - 1, n - 2]
        for i in range(n):
            d[i] = a[i, i]
    return d_arr, e_arr


def tridiag_eigenvalues(double[::1] d, double[::1] e, long sweep_cap):
    """QL iteration with implicit Wilkinson shifts on (d, e).

    d is overwritten with the (unsorted) eigenvalues. An off-diagonal entry
    is treated as negligible once |e_i| <= EPS * (|d_i| + |d_{i+1}|), with an
    absolute floor of EPS^2 times the matrix scale so that roundoff residue
    next to exact-zero diagonal entries cannot stall the iteration.
    Returns 0 on convergence, 1 if the total sweep budget is exhausted.
    """
    cdef Py_ssize_t n = d.shape[0]
    if n == 1:
        return 0
    work = np.empty(n)
    cdef double[::1] ee = work
    cdef Py_ssize_t l, m, i
    cdef long sweeps = 0
    cdef bint early
    cdef int status = 0
    cdef double g, r, s, c, pp, f, b, grid, scale_t, floor
    with nogil:
        for i in range(n - 1):
            ee[i] = e[i + 1]
        ee[n - 1] = 0.0
        scale_t = 0.0
        for i in range(n):
            if fabs(d[i]) > scale_t:
                scale_t = fabs(d[i])
            if fabs(ee[i]) > scale_t:
                scale_t = fabs(ee[i])
        floor = DBL_EPSILON * DBL_EPSILON * scale_t
        for l in range(n):
            if status:
                break
            while True:
                m = l
                while m < n - 1:
                    grid = fabs(d[m]) + fabs(d[m + 1])
                    if fabs(ee[m]) <= DBL_EPSILON * grid + floor:
                        break
                    m += 1
                if m == l:
                    break
                sweeps += 1
                if sweeps > sweep_cap:
                    status = 1
                    break
                g = (d[l + 1] - d[l]) / (2.0 * ee[l])
                r = hypot(g, 1.0)
                g = d[m] - d[l] + ee[l] / (g + copysign(r, g))
                s = 1.0
                c = 1.0
                pp = 0.0
                early = False
                i = m - 1
                while i >= l:
                    f = s * ee[i]
                    b = c * ee[i]
                    r = hypot(f, g)
                    ee[i + 1] = r
                    if r == 0.0:
                        # rotation annihilated early; restart the search
                        d[i + 1] -= pp
                        ee[m] = 0.0
                        early = True
                        break
                    s = f / r
                    c = g / r
                    g = d[i + 1] - pp
                    r = (d[i] - g) * s + 2.0 * c * b
                    pp = s * r
                    d[i + 1] = g + pp
                    g = c * r - b
                    i -= 1
                if not early:
                    d[l] -= pp
                    ee[l] = g
                    ee[m] = 0.0
    return status
