"""Seeded sampling of random graphs and multipartite structure.

Matrices are dense numpy float64 arrays. Adjacency samples are exactly
symmetric with zero diagonal and entries in {0.0, 1.0}; reproducibility is
bit-exact for a given (parameters, seed) pair because every edge draw
consumes one uniform from a PCG64 stream in row-major upper-triangle order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from .errors import ConsistencyError, InvalidPartitionError, ParameterError

_SEED_MAX = 2**64 - 1
_FRACTION_SUM_TOL = 1e-9


def _check_probability(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"probability must lie in [0, 1], got {p}")
    return p


def _check_seed(seed: int) -> int:
    if not isinstance(seed, (int, np.integer)):
        raise ParameterError(f"seed must be an integer, got {type(seed).__name__}")
    seed = int(seed)
    if not 0 <= seed <= _SEED_MAX:
        raise ParameterError("seed must be an unsigned 64-bit integer")
    return seed


@dataclass(frozen=True)
class PartitionSpec:
    """Fractional part sizes of a multipartite vertex set.

    fractions must have at least two entries, each positive, summing to 1
    within 1e-9.
    """

    fractions: tuple[float, ...]

    def __init__(self, fractions: Iterable[float]) -> None:
        fracs = tuple(float(v) for v in fractions)
        if len(fracs) < 2:
            raise InvalidPartitionError("a partition needs at least two parts")
        if any(not 0.0 < v <= 1.0 for v in fracs):
            raise InvalidPartitionError("part fractions must lie in (0, 1]")
        if abs(sum(fracs) - 1.0) > _FRACTION_SUM_TOL:
            raise InvalidPartitionError(
                f"part fractions must sum to 1, got {sum(fracs)!r}"
            )
        object.__setattr__(self, "fractions", fracs)

    @property
    def m(self) -> int:
        return len(self.fractions)

    @classmethod
    def equal(cls, m: int) -> "PartitionSpec":
        if m < 2:
            raise InvalidPartitionError("a partition needs at least two parts")
        return cls([1.0 / m] * m)

    @classmethod
    def from_ratio(cls, y: float) -> "PartitionSpec":
        """Two parts with size ratio y = nu2/nu1."""
        y = float(y)
        if y <= 0.0:
            raise ParameterError("part ratio must be positive")
        return cls([1.0 / (1.0 + y), y / (1.0 + y)])


@dataclass(frozen=True)
class PartSizes:
    """Integer realization of a partition; vertices are assigned in blocks."""

    sizes: tuple[int, ...]

    def __init__(self, sizes: Iterable[int]) -> None:
        vals = tuple(int(v) for v in sizes)
        if not vals:
            raise InvalidPartitionError("at least one part required")
        if any(v < 0 for v in vals):
            raise InvalidPartitionError("part sizes must be nonnegative")
        object.__setattr__(self, "sizes", vals)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def m(self) -> int:
        return len(self.sizes)

    @classmethod
    def singletons(cls, n: int) -> "PartSizes":
        return cls((1,) * n)

    def labels(self) -> np.ndarray:
        """Part index of each vertex, shape (n,)."""
        return np.repeat(np.arange(self.m), self.sizes)


def partition_sizes(n: int, spec: PartitionSpec) -> PartSizes:
    """Round n * fractions to integers summing to n.

    Largest-remainder rounding; remainder ties go to the lowest index, so the
    result is deterministic. Every size differs from its exact quota n*nu_i
    by strictly less than 1.
    """
    n = int(n)
    if n < spec.m:
        raise InvalidPartitionError(
            f"cannot split {n} vertices into {spec.m} nonempty parts"
        )
    quotas = [n * f for f in spec.fractions]
    base = [int(q) for q in quotas]
    leftover = n - sum(base)
    # sort by descending remainder, index ascending for ties
    order = sorted(range(spec.m), key=lambda i: (-(quotas[i] - base[i]), i))
    for i in order[:leftover]:
        base[i] += 1
    return PartSizes(base)


def sample_er(n: int, p: float, seed: int) -> np.ndarray:
    """Adjacency matrix of an Erdos-Renyi G(n, p) sample."""
    n = int(n)
    if n < 1:
        raise ParameterError("graph order must be at least 1")
    p = _check_probability(p)
    rng = np.random.Generator(np.random.PCG64(_check_seed(seed)))
    draws = rng.random(n * (n - 1) // 2)
    a = np.zeros((n, n))
    a[np.triu_indices(n, 1)] = (draws < p).astype(np.float64)
    a += a.T
    return a


def sample_multipartite(
    n: int, spec: PartitionSpec, p: float, seed: int
) -> tuple[np.ndarray, PartSizes]:
    """Adjacency sample of a random multipartite graph and its realized parts.

    Consumes the same uniform stream as sample_er (one draw per vertex pair);
    draws landing inside a part are discarded, so cross-part edges remain
    independent Bernoulli(p).
    """
    parts = partition_sizes(n, spec)
    a = sample_er(n, p, seed)
    labels = parts.labels()
    a[labels[:, None] == labels[None, :]] = 0.0
    return a, parts


def quasi_unit(parts: PartSizes) -> np.ndarray:
    """Block-diagonal all-ones matrix over the parts, zero across parts."""
    labels = parts.labels()
    return (labels[:, None] == labels[None, :]).astype(np.float64)


def complete_multipartite(parts: PartSizes) -> np.ndarray:
    """Adjacency of the complete multipartite graph on the given parts (J - I_{n,m})."""
    return 1.0 - quasi_unit(parts)


def center(a: np.ndarray, p: float, parts: PartSizes) -> np.ndarray:
    """Subtract the entrywise mean p over cross-part pairs.

    For singleton parts this is A - p(J - I). The input must already be zero
    on every within-part entry (diagonal blocks), else ConsistencyError.
    """
    p = _check_probability(p)
    a = np.asarray(a, dtype=np.float64)
    if a.shape != (parts.n, parts.n):
        raise ConsistencyError(
            f"matrix order {a.shape} does not match partition order {parts.n}"
        )
    labels = parts.labels()
    same = labels[:, None] == labels[None, :]
    if np.any(a[same] != 0.0):
        raise ConsistencyError("within-part entries must be zero before centering")
    return a - p * (~same).astype(np.float64)


def edge_count(a: np.ndarray) -> int:
    return int(round(np.triu(a, 1).sum()))


def write_matrix(a: np.ndarray, out: TextIO) -> None:
    """Text format: first line n, then n whitespace-separated rows."""
    n = a.shape[0]
    out.write(f"{n}\n")
    for row in a:
        out.write(" ".join(f"{v:.17g}" for v in row))
        out.write("\n")


def read_matrix(inp: TextIO) -> np.ndarray:
    tokens = inp.read().split()
    if not tokens:
        raise ParameterError("empty matrix file")
    try:
        n = int(tokens[0])
        values = [float(t) for t in tokens[1 : 1 + n * n]]
    except ValueError as exc:
        raise ParameterError(f"malformed matrix file: {exc}") from exc
    if n < 1 or len(values) != n * n:
        raise ParameterError(
            f"matrix file promises {n}x{n} entries, found {len(tokens) - 1}"
        )
    return np.array(values).reshape(n, n)


def write_edges(a: np.ndarray, out: TextIO) -> None:
    """One '0-based i j' line per edge, row-major upper triangle order."""
    rows, cols = np.nonzero(np.triu(a, 1))
    for i, j in zip(rows, cols):
        out.write(f"{i} {j}\n")


def edge_list(a: np.ndarray) -> list[tuple[int, int]]:
    rows, cols = np.nonzero(np.triu(a, 1))
    return [(int(i), int(j)) for i, j in zip(rows, cols)]


def parse_fractions(text: str | Sequence[float]) -> PartitionSpec:
    """Parse 'nu1,nu2,...' (or an iterable of floats) into a PartitionSpec."""
    if isinstance(text, str):
        try:
            values = [float(tok) for tok in text.split(",") if tok.strip()]
        except ValueError as exc:
            raise InvalidPartitionError(f"bad fraction list {text!r}") from exc
    else:
        values = list(text)
    return PartitionSpec(values)
