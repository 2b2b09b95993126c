"""Adaptive Simpson quadrature.

Serves as the independent numeric oracle for the closed-form expressions in
:mod:`graphenergy.laws` (elliptic integrals, semicircle identities, the
bipartite energy constant). Integrands with square-root endpoint behavior
should be fed through a trigonometric substitution by the caller; the
recursion also copes with them directly, just more slowly.
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import NumericalError


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = 50,
    min_depth: int = 6,
) -> float:
    """Integrate f over [a, b] to absolute tolerance ~tol.

    The first min_depth levels subdivide unconditionally so that a
    coincidental agreement of coarse estimates (aliasing on oscillatory or
    symmetric integrands) cannot trigger early acceptance.
    """
    if not b > a:
        if b == a:
            return 0.0
        raise ValueError("integration bounds must satisfy a <= b")
    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth, min_depth)


def _simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth, force):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if force <= 0 and (abs(delta) <= 15.0 * tol or (b - a) < 1e-300):
        return left + right + delta / 15.0
    if depth <= 0:
        raise NumericalError(
            f"adaptive Simpson: subdivision limit reached on [{a}, {b}]"
        )
    return _simpson_rec(
        f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, force - 1
    ) + _simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, force - 1)


def sqrt_band_integral(g: Callable[[float], float], lo: float, hi: float, tol: float = 1e-10) -> float:
    """Integrate g over [lo, hi] when g vanishes like a square root at both ends.

    Applies x = lo + (hi - lo) sin^2(u), which turns sqrt((hi-x)(x-lo))-type
    factors into smooth functions of u, then integrates over u in [0, pi/2].
    g must be finite at lo and hi.
    """
    if hi <= lo:
        return 0.0
    width = hi - lo

    def integrand(u: float) -> float:
        s = math.sin(u)
        x = lo + width * s * s
        return g(x) * width * math.sin(2.0 * u)

    return adaptive_simpson(integrand, 0.0, 0.5 * math.pi, tol=tol)
