"""Monte Carlo harness: energy-coefficient runs, ESD convergence studies,
table reproduction, property sweeps, and persisted run records.

Trials are embarrassingly parallel; each draws its own seed from the base
seed via a splitmix64 hash, so records are identical for identical
(config, seed) regardless of thread count or execution order. The worker
count defaults to the hardware parallelism, capped by the SPECTRAL_THREADS
environment variable.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from . import __version__, graphs, laws, spectra
from .errors import ParameterError, RecordError

RECORD_FORMAT = "graphenergy-run"
KINDS = ("er", "multipartite", "bipartite", "convergence", "table", "kyfan")

_MASK64 = (1 << 64) - 1


def derive_seed(base: int, index: int) -> int:
    """Per-trial seed: splitmix64 finalizer of base + (index+1) * golden gamma."""
    z = (int(base) + (int(index) + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def worker_count() -> int:
    env = os.environ.get("SPECTRAL_THREADS")
    if env:
        try:
            value = int(env)
        except ValueError as exc:
            raise ParameterError(f"SPECTRAL_THREADS must be an integer, got {env!r}") from exc
        return max(1, value)
    return os.cpu_count() or 1


def _run_trials(count: int, fn: Callable[[int], "TrialStat"]) -> list["TrialStat"]:
    workers = min(worker_count(), count)
    if workers <= 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(count)))


# ---------------------------------------------------------------------------
# configuration and records
# ---------------------------------------------------------------------------

@dataclass
class ExperimentConfig:
    kind: str
    n: int = 0
    p: float = 0.5
    trials: int = 1
    seed: int = 0
    tolerance: float = 0.05
    fractions: tuple[float, ...] | None = None
    y: float | None = None
    n_ladder: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ParameterError(f"unknown experiment kind {self.kind!r}")
        if self.fractions is not None:
            self.fractions = tuple(float(v) for v in self.fractions)
        if self.n_ladder is not None:
            self.n_ladder = tuple(int(v) for v in self.n_ladder)
        self.n = int(self.n)
        self.trials = int(self.trials)
        self.seed = int(self.seed)
        self.p = float(self.p)
        self.tolerance = float(self.tolerance)
        if self.trials < 1:
            raise ParameterError("trials must be at least 1")
        if self.tolerance <= 0.0:
            raise ParameterError("tolerance must be positive")
        if not 0.0 <= self.p <= 1.0:
            raise ParameterError(f"probability must lie in [0, 1], got {self.p}")
        if self.kind in ("er", "multipartite", "bipartite", "kyfan") and self.n < 4:
            raise ParameterError(f"n must be at least 4, got {self.n}")
        if self.kind == "multipartite" and self.fractions is None:
            raise ParameterError("multipartite experiments need part fractions")
        if self.kind == "bipartite":
            if self.fractions is None:
                if self.y is None:
                    raise ParameterError("bipartite experiments need fractions or y")
                spec = graphs.PartitionSpec.from_ratio(self.y)
                self.fractions = spec.fractions
            elif len(self.fractions) != 2:
                raise ParameterError("bipartite experiments take exactly two fractions")
        if self.kind == "convergence":
            if not self.n_ladder:
                raise ParameterError("convergence studies need an n ladder")
            if any(v < 4 for v in self.n_ladder):
                raise ParameterError("every ladder size must be at least 4")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "p": self.p,
            "trials": self.trials,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "fractions": list(self.fractions) if self.fractions else None,
            "y": self.y,
            "n_ladder": list(self.n_ladder) if self.n_ladder else None,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        if "kind" not in data:
            raise ParameterError("experiment config is missing 'kind'")
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ParameterError(f"unknown config fields: {sorted(unknown)}")
        kwargs = dict(data)
        for key in ("fractions", "n_ladder"):
            if kwargs.get(key) is not None:
                kwargs[key] = tuple(kwargs[key])
        return cls(**kwargs)


@dataclass
class TrialStat:
    index: int
    energy: float
    coefficient: float
    ks: float | None
    seconds: float
    extra: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "energy": self.energy,
            "coefficient": self.coefficient,
            "ks": self.ks,
            "seconds": self.seconds,
            "extra": dict(self.extra),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TrialStat":
        try:
            return cls(
                index=int(data["index"]),
                energy=float(data["energy"]),
                coefficient=float(data["coefficient"]),
                ks=None if data.get("ks") is None else float(data["ks"]),
                seconds=float(data["seconds"]),
                extra=dict(data.get("extra", {})),
            )
        except KeyError as exc:
            raise RecordError(f"trial entry is missing field {exc.args[0]!r}") from exc


@dataclass
class RunRecord:
    config: ExperimentConfig
    trials: list[TrialStat]
    metric: str
    mean: float
    std: float
    min: float
    max: float
    theory: float
    theory_source: str
    passed: bool
    version: str
    timestamp: str
    extra: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def metric_series(self) -> list[float]:
        if self.metric in ("coefficient", "ks"):
            values = [getattr(t, self.metric) for t in self.trials]
        else:
            values = [t.extra[self.metric] for t in self.trials]
        if any(v is None for v in values):
            raise RecordError(f"metric {self.metric!r} missing from some trials")
        return [float(v) for v in values]

    def to_dict(self) -> dict:
        return {
            "format": RECORD_FORMAT,
            "version": self.version,
            "timestamp": self.timestamp,
            "config": self.config.to_dict(),
            "metric": self.metric,
            "aggregate": {
                "mean": self.mean,
                "std": self.std,
                "min": self.min,
                "max": self.max,
            },
            "theory": self.theory,
            "theory_source": self.theory_source,
            "passed": self.passed,
            "extra": self.extra,
            "warnings": list(self.warnings),
            "trial_stats": [t.to_dict() for t in self.trials],
        }

    def to_csv(self, out) -> None:
        out.write("trial,energy,coefficient,ks,seconds\n")
        for t in self.trials:
            ks = "" if t.ks is None else f"{t.ks:.17g}"
            out.write(
                f"{t.index},{t.energy:.17g},{t.coefficient:.17g},{ks},{t.seconds:.17g}\n"
            )


def _aggregate(values: list[float]) -> tuple[float, float, float, float]:
    arr = np.asarray(values, dtype=np.float64)
    std = float(arr.std(ddof=1)) if arr.size > 1 else 0.0
    return float(arr.mean()), std, float(arr.min()), float(arr.max())


def _make_record(
    config: ExperimentConfig,
    trials: list[TrialStat],
    metric: str,
    theory: float,
    theory_source: str,
    passed: bool,
    extra: dict | None = None,
) -> RunRecord:
    series = [
        float(t.extra[metric]) if metric not in ("coefficient", "ks") else float(getattr(t, metric))
        for t in trials
    ]
    mean, std, lo, hi = _aggregate(series)
    return RunRecord(
        config=config,
        trials=trials,
        metric=metric,
        mean=mean,
        std=std,
        min=lo,
        max=hi,
        theory=theory,
        theory_source=theory_source,
        passed=passed,
        version=__version__,
        timestamp=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        extra=extra or {},
    )


def _tolerance_pass(mean: float, theory: float, tolerance: float) -> bool:
    if theory == 0.0:
        return abs(mean) <= tolerance
    return abs(mean - theory) / theory <= tolerance


# ---------------------------------------------------------------------------
# experiment runners
# ---------------------------------------------------------------------------

def run_er(config: ExperimentConfig) -> RunRecord:
    """Energy of Erdos-Renyi samples against the closed-form coefficient."""
    if config.kind != "er":
        raise ParameterError(f"run_er got kind {config.kind!r}")

    def one(i: int) -> TrialStat:
        t0 = time.perf_counter()
        a = graphs.sample_er(config.n, config.p, derive_seed(config.seed, i))
        e = spectra.energy(a)
        return TrialStat(
            index=i,
            energy=e,
            coefficient=e / config.n**1.5,
            ks=None,
            seconds=time.perf_counter() - t0,
        )

    trials = _run_trials(config.trials, one)
    theory = laws.er_energy_coeff(config.p)
    mean = float(np.mean([t.coefficient for t in trials]))
    return _make_record(
        config,
        trials,
        "coefficient",
        theory,
        f"er_energy_coeff(p={config.p})",
        _tolerance_pass(mean, theory, config.tolerance),
    )


def _equal_fractions(fractions: tuple[float, ...]) -> bool:
    return max(fractions) - min(fractions) <= 1e-12


def run_multipartite(config: ExperimentConfig) -> RunRecord:
    """Energy of equal-part multipartite samples against the matching limit.

    With m parts of fraction 1/m each, the limit coefficient depends on the
    regime: for m >= sqrt(n) the parts are treated as vanishing (the
    Erdos-Renyi coefficient applies), otherwise the balanced m-part
    coefficient is used.
    """
    if config.kind != "multipartite":
        raise ParameterError(f"run_multipartite got kind {config.kind!r}")
    spec = graphs.PartitionSpec(config.fractions)
    if not _equal_fractions(spec.fractions):
        raise ParameterError(
            "no exact limit coefficient for unequal parts; use kind='bipartite' "
            "for two parts or unbalanced_bounds for a bracket"
        )

    def one(i: int) -> TrialStat:
        t0 = time.perf_counter()
        a, _ = graphs.sample_multipartite(
            config.n, spec, config.p, derive_seed(config.seed, i)
        )
        e = spectra.energy(a)
        return TrialStat(
            index=i,
            energy=e,
            coefficient=e / config.n**1.5,
            ks=None,
            seconds=time.perf_counter() - t0,
        )

    trials = _run_trials(config.trials, one)
    if spec.m >= math.isqrt(config.n):
        theory = laws.vanishing_parts_coeff(config.p)
        source = f"vanishing_parts_coeff(p={config.p})"
    else:
        theory = laws.balanced_multipartite_coeff(config.p, spec.m)
        source = f"balanced_multipartite_coeff(p={config.p}, m={spec.m})"
    mean = float(np.mean([t.coefficient for t in trials]))
    return _make_record(
        config,
        trials,
        "coefficient",
        theory,
        source,
        _tolerance_pass(mean, theory, config.tolerance),
    )


def run_bipartite(config: ExperimentConfig) -> RunRecord:
    """Energy of two-part samples against the elliptic-integral coefficient.

    Also records the unbalanced-coefficient bracket and requires the
    measured mean to fall inside [lo * 0.95, hi * 1.05].
    """
    if config.kind != "bipartite":
        raise ParameterError(f"run_bipartite got kind {config.kind!r}")
    nu1, nu2 = config.fractions
    spec = graphs.PartitionSpec([nu1, nu2])

    def one(i: int) -> TrialStat:
        t0 = time.perf_counter()
        a, _ = graphs.sample_multipartite(
            config.n, spec, config.p, derive_seed(config.seed, i)
        )
        e = spectra.energy(a)
        return TrialStat(
            index=i,
            energy=e,
            coefficient=e / config.n**1.5,
            ks=None,
            seconds=time.perf_counter() - t0,
        )

    trials = _run_trials(config.trials, one)
    theory = laws.bipartite_coeff(nu1, nu2, config.p)
    lo, hi = laws.unbalanced_bounds([nu1, nu2], config.p)
    mean = float(np.mean([t.coefficient for t in trials]))
    in_bracket = lo * 0.95 <= mean <= hi * 1.05
    return _make_record(
        config,
        trials,
        "coefficient",
        theory,
        f"bipartite_coeff(nu1={nu1}, nu2={nu2}, p={config.p})",
        _tolerance_pass(mean, theory, config.tolerance) and in_bracket,
        extra={"lower_bound": lo, "upper_bound": hi, "bracket_ok": in_bracket},
    )


def convergence_study(
    n_list: list[int],
    p: float,
    trials: int,
    seed: int,
    fractions: tuple[float, ...] | None = None,
    tolerance: float = 0.05,
) -> RunRecord:
    """KS distance of centered scaled spectra against the limiting semicircle
    along a ladder of sizes. Passes when the final mean KS is below the
    tolerance and the per-size means decrease with at most one inversion.
    """
    config = ExperimentConfig(
        kind="convergence",
        n=max(n_list),
        p=p,
        trials=trials,
        seed=seed,
        tolerance=tolerance,
        fractions=fractions,
        n_ladder=tuple(n_list),
    )
    if fractions is not None:
        spec = graphs.PartitionSpec(fractions)
        if not _equal_fractions(spec.fractions):
            raise ParameterError("convergence studies support equal parts only")
        sigma = math.sqrt(
            laws.multipartite_variance(0.0, math.sqrt(p * (1.0 - p)), spec.m)
        )
    else:
        spec = None
        sigma = math.sqrt(p * (1.0 - p))
    if sigma == 0.0:
        raise ParameterError("convergence study needs 0 < p < 1")
    cdf = lambda x: laws.semicircle_cdf(sigma, x)

    def one(flat: int) -> TrialStat:
        size = config.n_ladder[flat // trials]
        t0 = time.perf_counter()
        trial_seed = derive_seed(config.seed, flat)
        if spec is None:
            a = graphs.sample_er(size, p, trial_seed)
            parts = graphs.PartSizes.singletons(size)
        else:
            a, parts = graphs.sample_multipartite(size, spec, p, trial_seed)
        centered = graphs.center(a, p, parts)
        scaled = spectra.scaled_spectrum(centered)
        ks = spectra.ks_distance(scaled, cdf)
        energy_centered = float(np.abs(scaled).sum()) * math.sqrt(size)
        return TrialStat(
            index=flat,
            energy=energy_centered,
            coefficient=energy_centered / size**1.5,
            ks=ks,
            seconds=time.perf_counter() - t0,
            extra={"n": float(size)},
        )

    stats = _run_trials(len(config.n_ladder) * trials, one)
    ks_by_n = {
        str(size): float(
            np.mean([t.ks for t in stats if t.extra["n"] == size])
        )
        for size in config.n_ladder
    }
    means = [ks_by_n[str(size)] for size in config.n_ladder]
    inversions = sum(1 for a, b in zip(means, means[1:]) if b >= a)
    passed = means[-1] <= tolerance and inversions <= 1
    return _make_record(
        config,
        stats,
        "ks",
        0.0,
        f"semicircle_cdf(sigma={sigma})",
        passed,
        extra={"ks_by_n": ks_by_n, "inversions": inversions, "sigma": sigma},
    )


def kyfan_suite(count: int, max_n: int, seed: int) -> RunRecord:
    """Energy triangle inequality sweep over random symmetric pairs.

    Passes when every gap energy(X) + energy(Y) - energy(X+Y) clears
    -1e-8 * (||X||_F + ||Y||_F).
    """
    config = ExperimentConfig(kind="kyfan", n=max_n, trials=count, seed=seed)

    def one(i: int) -> TrialStat:
        t0 = time.perf_counter()
        rng = np.random.Generator(np.random.PCG64(derive_seed(config.seed, i)))
        size = int(rng.integers(2, max_n + 1))
        x = rng.uniform(-1.0, 1.0, size=(size, size))
        y = rng.uniform(-1.0, 1.0, size=(size, size))
        x = np.triu(x) + np.triu(x, 1).T
        y = np.triu(y) + np.triu(y, 1).T
        ex, ey = spectra.energy(x), spectra.energy(y)
        gap = ex + ey - spectra.energy(x + y)
        scale = float(np.linalg.norm(x) + np.linalg.norm(y))
        return TrialStat(
            index=i,
            energy=ex + ey,
            coefficient=(ex + ey) / size**1.5,
            ks=None,
            seconds=time.perf_counter() - t0,
            extra={"gap": gap, "scale": scale, "n": float(size)},
        )

    trials = _run_trials(count, one)
    passed = all(t.extra["gap"] >= -1e-8 * t.extra["scale"] for t in trials)
    return _make_record(
        config,
        trials,
        "gap",
        0.0,
        "energy triangle inequality",
        passed,
        extra={"min_gap": min(t.extra["gap"] for t in trials)},
    )


# ---------------------------------------------------------------------------
# deterministic table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    y: float
    theory_coeff: float
    lower_bound: float


def reproduce_table(p: float, y_list: list[float]) -> list[TableRow]:
    """Energy coefficient and its lower bound for two parts at ratio y, per y."""
    rows = []
    for y in y_list:
        nu1 = 1.0 / (1.0 + y)
        nu2 = y / (1.0 + y)
        coeff = laws.bipartite_coeff(nu1, nu2, p)
        lo, _ = laws.unbalanced_bounds([nu1, nu2], p)
        rows.append(TableRow(y=float(y), theory_coeff=coeff, lower_bound=lo))
    return rows


def table_csv(rows: list[TableRow], out, digits: int = 10) -> None:
    out.write("y,theory_coeff,lower_bound\n")
    for row in rows:
        out.write(
            f"{row.y:.{digits}g},{row.theory_coeff:.{digits}g},{row.lower_bound:.{digits}g}\n"
        )


def _run_table(config: ExperimentConfig) -> RunRecord:
    """Deterministic table as a record; n_ladder doubles as the y list (default 1..10)."""
    y_list = list(config.n_ladder) if config.n_ladder else list(range(1, 11))
    rows = reproduce_table(config.p, [float(v) for v in y_list])
    trials = [
        TrialStat(
            index=i,
            energy=0.0,
            coefficient=row.theory_coeff,
            ks=None,
            seconds=0.0,
            extra={"y": row.y, "lower_bound": row.lower_bound},
        )
        for i, row in enumerate(rows)
    ]
    return _make_record(
        config,
        trials,
        "coefficient",
        0.0,
        "reproduce_table (deterministic)",
        True,
    )


def run(config: ExperimentConfig) -> RunRecord:
    """Dispatch an experiment configuration to its runner."""
    if config.kind == "er":
        return run_er(config)
    if config.kind == "multipartite":
        return run_multipartite(config)
    if config.kind == "bipartite":
        return run_bipartite(config)
    if config.kind == "convergence":
        return convergence_study(
            list(config.n_ladder),
            config.p,
            config.trials,
            config.seed,
            fractions=config.fractions,
            tolerance=config.tolerance,
        )
    if config.kind == "kyfan":
        return kyfan_suite(config.trials, config.n, config.seed)
    if config.kind == "table":
        return _run_table(config)
    raise ParameterError(f"unknown experiment kind {config.kind!r}")


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------

def save_record(record: RunRecord, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(record.to_dict(), handle, indent=2)
        handle.write("\n")


def load_record(path: str) -> RunRecord:
    """Load a run record; malformed files raise RecordError with diagnostics,
    a version mismatch only appends a warning to the loaded record."""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise RecordError(
                f"{path}: invalid record syntax at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
    if not isinstance(data, dict):
        raise RecordError(f"{path}: expected a top-level object")
    if data.get("format") != RECORD_FORMAT:
        raise RecordError(
            f"{path}: missing or unexpected 'format' field {data.get('format')!r}"
        )
    required = (
        "version",
        "timestamp",
        "config",
        "metric",
        "aggregate",
        "theory",
        "theory_source",
        "passed",
        "trial_stats",
    )
    for key in required:
        if key not in data:
            raise RecordError(f"{path}: missing field {key!r}")
    try:
        config = ExperimentConfig.from_dict(data["config"])
    except ParameterError as exc:
        raise RecordError(f"{path}: bad config: {exc}") from exc
    aggregate = data["aggregate"]
    for key in ("mean", "std", "min", "max"):
        if key not in aggregate:
            raise RecordError(f"{path}: aggregate is missing {key!r}")
    record = RunRecord(
        config=config,
        trials=[TrialStat.from_dict(t) for t in data["trial_stats"]],
        metric=str(data["metric"]),
        mean=float(aggregate["mean"]),
        std=float(aggregate["std"]),
        min=float(aggregate["min"]),
        max=float(aggregate["max"]),
        theory=float(data["theory"]),
        theory_source=str(data["theory_source"]),
        passed=bool(data["passed"]),
        version=str(data["version"]),
        timestamp=str(data["timestamp"]),
        extra=dict(data.get("extra", {})),
        warnings=list(data.get("warnings", [])),
    )
    if record.version != __version__:
        record.warnings.append(
            f"record version {record.version} differs from library version {__version__}"
        )
    return record
