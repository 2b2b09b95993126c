"""Pure-Python eigensolver kernel: Householder reduction + implicit-shift QL.

Fallback twin of the compiled kernel in _eigen_cy; same algorithm, same
contracts. The Householder sweep leans on numpy level-2 operations, the QL
iteration runs in plain Python, so expect roughly an order of magnitude
slower than the extension at n ~ 1000.
"""

from __future__ import annotations

import math

import numpy as np

EPS = float(np.finfo(np.float64).eps)


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce symmetric a to tridiagonal form by Householder similarity.

    a is destroyed. Returns (d, e): diagonal and subdiagonal (e[0] == 0,
    e[i] couples rows i-1 and i). Each column is normalized by its 1-norm
    before the reflector is formed, so columns at denormal scale cannot
    overflow the reflector coefficients.
    """
    n = a.shape[0]
    e = np.zeros(n)
    for k in range(n - 2):
        x = a[k + 1 :, k]
        scale = float(np.abs(x).sum())
        if scale == 0.0:
            continue
        u = x / scale
        tail = u[1:]
        sigma = float(tail @ tail)
        x0 = float(u[0])
        if sigma == 0.0:
            e[k + 1] = float(x[0])
            continue
        alpha = -math.copysign(math.sqrt(x0 * x0 + sigma), x0)
        u[0] = x0 - alpha
        beta = 2.0 / (u[0] * u[0] + sigma)
        sub = a[k + 1 :, k + 1 :]
        p = beta * (sub @ u)
        q = p - (0.5 * beta * float(u @ p)) * u
        sub -= np.outer(q, u)
        sub -= np.outer(u, q)
        e[k + 1] = scale * alpha
    if n >= 2:
        e[n - 1] = a[n - 1, n - 2]
    return np.diagonal(a).copy(), e


def tridiag_eigenvalues(d: np.ndarray, e: np.ndarray, sweep_cap: int) -> int:
    """QL iteration with implicit Wilkinson shifts on (d, e).

    d is overwritten with the (unsorted) eigenvalues. An off-diagonal entry
    is treated as negligible once |e_i| <= EPS * (|d_i| + |d_{i+1}|), with an
    absolute floor of EPS^2 times the matrix scale so that roundoff residue
    next to exact-zero diagonal entries cannot stall the iteration.
    Returns 0 on convergence, 1 if the total sweep budget is exhausted.
    """
    n = d.shape[0]
    if n == 1:
        return 0
    dd_ = d.tolist()
    # shift so ee[i] couples dd_[i] and dd_[i+1]
    ee = e[1:].tolist()
    ee.append(0.0)
    scale_t = max(max(abs(v) for v in dd_), max(abs(v) for v in ee))
    floor = EPS * EPS * scale_t
    sweeps = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                grid = abs(dd_[m]) + abs(dd_[m + 1])
                if abs(ee[m]) <= EPS * grid + floor:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > sweep_cap:
                return 1
            g = (dd_[l + 1] - dd_[l]) / (2.0 * ee[l])
            r = math.hypot(g, 1.0)
            g = dd_[m] - dd_[l] + ee[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            while i >= l:
                f = s * ee[i]
                b = c * ee[i]
                r = math.hypot(f, g)
                ee[i + 1] = r
                if r == 0.0:
                    # rotation annihilated early; restart the search
                    dd_[i + 1] -= p
                    ee[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = dd_[i + 1] - p
                r = (dd_[i] - g) * s + 2.0 * c * b
                p = s * r
                dd_[i + 1] = g + p
                g = c * r - b
                i -= 1
            else:
                dd_[l] -= p
                ee[l] = g
                ee[m] = 0.0
    d[:] = dd_
    return 0
