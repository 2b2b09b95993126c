"""Closed-form limiting laws and asymptotic energy coefficients.

Covers the semicircle family (Erdos-Renyi and balanced multipartite limits),
the Marchenko-Pastur law for the bipartite case, complete elliptic integrals
by AGM iteration, and the energy coefficients and bounds built from them.
All energy coefficients are the limits of E / n^{3/2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DegenerateLawError, ParameterError

_AGM_RTOL = 1e-12


def _check_probability(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"probability must lie in [0, 1], got {p}")
    return p


def _check_open_probability(p: float) -> float:
    p = _check_probability(p)
    if p in (0.0, 1.0):
        raise DegenerateLawError(
            f"law degenerates at p={p}: edge variance p(1-p) vanishes"
        )
    return p


def _check_sigma(sigma: float) -> float:
    sigma = float(sigma)
    if sigma <= 0.0:
        raise ParameterError(f"scale sigma must be positive, got {sigma}")
    return sigma


# ---------------------------------------------------------------------------
# semicircle family
# ---------------------------------------------------------------------------

def semicircle_density(sigma: float, x: float) -> float:
    """Density (1 / (2 pi sigma^2)) sqrt(4 sigma^2 - x^2) on [-2 sigma, 2 sigma]."""
    sigma = _check_sigma(sigma)
    x = float(x)
    supp = 4.0 * sigma * sigma - x * x
    if supp <= 0.0:
        return 0.0
    return math.sqrt(supp) / (2.0 * math.pi * sigma * sigma)


def semicircle_cdf(sigma: float, x: float) -> float:
    """Closed-form integral of the semicircle density."""
    sigma = _check_sigma(sigma)
    x = float(x)
    if x <= -2.0 * sigma:
        return 0.0
    if x >= 2.0 * sigma:
        return 1.0
    root = math.sqrt(4.0 * sigma * sigma - x * x)
    return (
        0.5
        + x * root / (4.0 * math.pi * sigma * sigma)
        + math.asin(x / (2.0 * sigma)) / math.pi
    )


def er_energy_coeff(p: float) -> float:
    """(8 / 3 pi) sqrt(p(1-p)): limit of E(G(n,p)) / n^{3/2}."""
    p = _check_probability(p)
    return 8.0 / (3.0 * math.pi) * math.sqrt(p * (1.0 - p))


def balanced_multipartite_coeff(p: float, m: int) -> float:
    """Energy coefficient for m equal parts: (8 / 3 pi) sqrt((m-1)/m p(1-p)).

    Increasing in m; tends to er_energy_coeff(p) as m grows.
    """
    p = _check_probability(p)
    if int(m) != m or m < 2:
        raise ParameterError(f"part count must be an integer >= 2, got {m}")
    return 8.0 / (3.0 * math.pi) * math.sqrt((m - 1.0) / m * p * (1.0 - p))


def vanishing_parts_coeff(p: float) -> float:
    """Energy coefficient when the largest part fraction tends to zero.

    Coincides with the Erdos-Renyi coefficient: with all parts small, the
    forbidden within-part pairs are a vanishing share of all pairs.
    """
    return er_energy_coeff(p)


def multipartite_variance(sigma_within: float, sigma_cross: float, m: int) -> float:
    """Variance (sigma1^2 + (m-1) sigma2^2) / m of the balanced m-part limit law.

    sigma_within is 0 for adjacency matrices (within-part entries are fixed
    zeros), leaving ((m-1)/m) sigma_cross^2.
    """
    if int(m) != m or m < 2:
        raise ParameterError(f"part count must be an integer >= 2, got {m}")
    s1 = float(sigma_within)
    s2 = float(sigma_cross)
    if s1 < 0.0 or s2 < 0.0:
        raise ParameterError("standard deviations must be nonnegative")
    return (s1 * s1 + (m - 1.0) * s2 * s2) / m


# ---------------------------------------------------------------------------
# complete elliptic integrals (parameter convention: t multiplies sin^2 theta)
# ---------------------------------------------------------------------------

def _agm_sequence(t: float) -> tuple[float, float]:
    """Run the AGM for parameter t; returns (agm, side_sum) with
    side_sum = sum_j 2^{j-1} c_j^2 used by the second-kind integral."""
    a = 1.0
    b = math.sqrt(1.0 - t)
    c = math.sqrt(t)
    total = 0.5 * c * c
    power = 1.0
    while abs(a - b) > _AGM_RTOL * a:
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        total += power * c * c
        power *= 2.0
    return a, total


def elliptic_k(t: float) -> float:
    """Complete elliptic integral of the first kind, K(t) = pi / (2 AGM(1, sqrt(1-t)))."""
    t = float(t)
    if not 0.0 <= t < 1.0:
        raise ParameterError(
            f"elliptic_k requires 0 <= t < 1 (diverges at 1), got {t}"
        )
    agm, _ = _agm_sequence(t)
    return 0.5 * math.pi / agm


def elliptic_e(t: float) -> float:
    """Complete elliptic integral of the second kind; E(1) = 1 exactly."""
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ParameterError(f"elliptic_e requires 0 <= t <= 1, got {t}")
    if t == 1.0:
        return 1.0
    agm, side = _agm_sequence(t)
    return 0.5 * math.pi / agm * (1.0 - side)


# ---------------------------------------------------------------------------
# Marchenko-Pastur law (aspect ratio y, edge variance p(1-p))
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MpLaw:
    """Marchenko-Pastur law with ratio y > 0 and Bernoulli variance p(1-p).

    Continuous density on [a, b], a/b = p(1-p)(1 -/+ sqrt(y))^2, plus a point
    mass 1 - 1/y at the origin when y > 1.
    """

    y: float
    p: float
    a: float = field(init=False)
    b: float = field(init=False)

    def __post_init__(self) -> None:
        y = float(self.y)
        if y <= 0.0:
            raise ParameterError(f"aspect ratio y must be positive, got {y}")
        p = _check_open_probability(self.p)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "p", p)
        var = p * (1.0 - p)
        root = math.sqrt(y)
        object.__setattr__(self, "a", var * (1.0 - root) ** 2)
        object.__setattr__(self, "b", var * (1.0 + root) ** 2)


def mp_density(law: MpLaw, x: float) -> float:
    """Continuous part of the MP density; unbounded at x=0 when y=1."""
    x = float(x)
    if x < law.a or x > law.b:
        return 0.0
    var = law.p * (1.0 - law.p)
    num = math.sqrt(max((law.b - x) * (x - law.a), 0.0))
    if x == 0.0:
        return math.inf if num > 0.0 or law.a == 0.0 else 0.0
    return num / (2.0 * math.pi * var * x * law.y)


def mp_point_mass(law: MpLaw) -> float:
    """Mass at the origin: max(0, 1 - 1/y)."""
    return max(0.0, 1.0 - 1.0 / law.y)


def mp_sqrt_mean(y: float, p: float) -> float:
    """Mean of sqrt(X) under MpLaw(y, p), via complete elliptic integrals.

    This is the constant governing the sum of positive eigenvalues of a
    centered bipartite sample; equal to the integral of
    sqrt((b - x^2)(x^2 - a)) / (pi p(1-p) y) over x in [sqrt(a), sqrt(b)].
    """
    law = MpLaw(y, p)
    var = law.p * (1.0 - law.p)
    a, b = law.a, law.b
    if a == 0.0:
        # y == 1: the first-kind term drops out and E(1) = 1
        return b ** 1.5 / (3.0 * math.pi * var * law.y)
    t = 1.0 - a / b
    value = math.sqrt(b) * ((a + b) * elliptic_e(t) - 2.0 * a * elliptic_k(t))
    return value / (3.0 * math.pi * var * law.y)


def bipartite_coeff(nu1: float, nu2: float, p: float) -> float:
    """Energy coefficient 2 nu2 sqrt(nu1) * mp_sqrt_mean(nu2/nu1, p) for two parts."""
    nu1 = float(nu1)
    nu2 = float(nu2)
    if not (0.0 < nu1 < 1.0 and 0.0 < nu2 < 1.0):
        raise ParameterError("part fractions must lie in (0, 1)")
    if abs(nu1 + nu2 - 1.0) > 1e-9:
        raise ParameterError(f"part fractions must sum to 1, got {nu1 + nu2!r}")
    return 2.0 * nu2 * math.sqrt(nu1) * mp_sqrt_mean(nu2 / nu1, p)


def unbalanced_bounds(linear_fractions: list[float], p: float) -> tuple[float, float]:
    """Bracket ((1-S)c, (1+S)c) on the energy coefficient of an unbalanced
    multipartite graph, with S the sum of fraction^{3/2} over the parts of
    linear size and c the Erdos-Renyi coefficient. The lower bound is
    positive because S < 1 for any valid fraction list.
    """
    fractions = [float(v) for v in linear_fractions]
    if not fractions:
        raise ParameterError("at least one linear part fraction required")
    if any(not 0.0 < v < 1.0 for v in fractions):
        raise ParameterError("part fractions must lie strictly in (0, 1)")
    if sum(fractions) > 1.0 + 1e-9:
        raise ParameterError("part fractions cannot sum beyond 1")
    s = sum(v**1.5 for v in fractions)
    c = er_energy_coeff(p)
    return (1.0 - s) * c, (1.0 + s) * c


def koolen_moulton(n: int) -> float:
    """Deterministic energy bound n (sqrt(n) + 1) / 2 for any simple graph."""
    n = int(n)
    if n < 1:
        raise ParameterError("graph order must be at least 1")
    return 0.5 * n * (math.sqrt(n) + 1.0)
