"""Backend selection and the public dense symmetric eigenvalue routine.

The compiled kernel (graphenergy._eigen_cy) is preferred; the pure-Python
twin is used when the extension was not built. Both expose the same two
functions (tridiagonalize, tridiag_eigenvalues) and produce matching
spectra; benchmarks/bench_eigen.py compares them head to head.
"""

from __future__ import annotations

from types import ModuleType

import numpy as np

from . import _eigen_py
from .errors import ConsistencyError, NumericalError

try:
    from . import _eigen_cy  # type: ignore[attr-defined]

    _DEFAULT_KERNEL: ModuleType = _eigen_cy
    BACKEND = "compiled"
except ImportError:  # extension not built; fall back to the Python twin
    _eigen_cy = None
    _DEFAULT_KERNEL = _eigen_py
    BACKEND = "python"

SYMMETRY_RTOL = 1e-12
SWEEPS_PER_ROW = 30


def available_backends() -> dict[str, ModuleType]:
    backends = {"python": _eigen_py}
    if _eigen_cy is not None:
        backends["compiled"] = _eigen_cy
    return backends


def symmetry_gap(a: np.ndarray) -> float:
    """max |a - a^T|, the symmetry defect of a square matrix."""
    return float(np.abs(a - a.T).max()) if a.size else 0.0


def eigenvalues(
    a: np.ndarray,
    kernel: ModuleType | None = None,
    sweep_cap: int | None = None,
) -> np.ndarray:
    """Ascending eigenvalues of a dense real symmetric matrix.

    Raises ConsistencyError when the symmetry defect exceeds
    SYMMETRY_RTOL * max|a_ij|, and NumericalError if the QL iteration does
    not converge within the sweep budget (default 30 per row).
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ConsistencyError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        raise ConsistencyError("matrix order must be at least 1")
    scale = float(np.abs(a).max()) if a.size else 0.0
    if symmetry_gap(a) > SYMMETRY_RTOL * scale:
        raise ConsistencyError(
            f"matrix is not symmetric (defect {symmetry_gap(a):.3e}, scale {scale:.3e})"
        )
    kern = kernel if kernel is not None else _DEFAULT_KERNEL
    work = np.array(a, dtype=np.float64, order="C", copy=True)
    d, e = kern.tridiagonalize(work)
    d = np.ascontiguousarray(d)
    e = np.ascontiguousarray(e)
    cap = sweep_cap if sweep_cap is not None else SWEEPS_PER_ROW * n
    status = kern.tridiag_eigenvalues(d, e, cap)
    if status != 0:
        raise NumericalError(
            f"QL iteration did not converge within {cap} sweeps (n={n})"
        )
    d.sort()
    return d
