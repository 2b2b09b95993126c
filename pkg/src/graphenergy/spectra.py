"""Spectra, graph energy, empirical spectral distribution, and matrix checks.

A spectrum is a sorted 1-D float64 array; the empirical spectral
distribution (ESD) it carries is the step function with jump 1/n at each
eigenvalue, '<=' inclusive.
"""

from __future__ import annotations

import math
from typing import Callable, TextIO

import numpy as np

from . import eigen
from .errors import ParameterError


def eigenvalues_sym(m: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a dense symmetric matrix."""
    return eigen.eigenvalues(m)


def energy(m: np.ndarray) -> float:
    """Sum of absolute eigenvalues. For an adjacency matrix, the graph energy."""
    return float(np.abs(eigenvalues_sym(m)).sum())


def scaled_spectrum(m: np.ndarray) -> np.ndarray:
    """Spectrum of n^{-1/2} M, the scaling under which bulk laws converge."""
    m = np.asarray(m)
    return eigenvalues_sym(m) / math.sqrt(m.shape[0])


def esd_eval(spectrum: np.ndarray, x: float) -> float:
    """Fraction of eigenvalues <= x (right-continuous step function)."""
    s = np.asarray(spectrum)
    return float(np.searchsorted(s, x, side="right")) / s.size


def moment(spectrum: np.ndarray, k: int) -> float:
    """k-th spectral moment (1/n) sum lambda_i^k."""
    if int(k) != k or k < 1:
        raise ParameterError(f"moment order must be a positive integer, got {k}")
    s = np.asarray(spectrum, dtype=np.float64)
    return float(np.mean(s ** int(k)))


def ks_distance(spectrum: np.ndarray, cdf: Callable[[float], float]) -> float:
    """Kolmogorov-Smirnov distance between the ESD and a reference CDF.

    Evaluated at the jump points: the ESD from the right against cdf(x), and
    from the left against the CDF's left limit (cdf just below x), so a
    spectrum concentrated on the jumps of a step CDF scores 0.
    """
    s = np.sort(np.asarray(spectrum, dtype=np.float64))
    n = s.size
    hi = np.searchsorted(s, s, side="right") / n
    lo = np.searchsorted(s, s, side="left") / n
    dist = 0.0
    for value, f_hi, f_lo in zip(s, hi, lo):
        c = cdf(float(value))
        c_left = cdf(float(np.nextafter(value, -np.inf)))
        dist = max(dist, abs(f_hi - c), abs(f_lo - c_left))
    return dist


def kyfan_gap(x: np.ndarray, y: np.ndarray) -> float:
    """energy(X) + energy(Y) - energy(X + Y); nonnegative up to roundoff."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise ParameterError(f"order mismatch: {x.shape} vs {y.shape}")
    return energy(x) + energy(y) - energy(x + y)


def symmetry_defect(spectrum: np.ndarray) -> float:
    """max |lambda_i + lambda_{n+1-i}|: zero iff the spectrum is symmetric about 0."""
    s = np.sort(np.asarray(spectrum, dtype=np.float64))
    return float(np.abs(s + s[::-1]).max())


def write_spectrum(spectrum: np.ndarray, out: TextIO) -> None:
    """One eigenvalue per line at 17 significant digits."""
    for value in np.asarray(spectrum):
        out.write(f"{value:.17g}\n")
