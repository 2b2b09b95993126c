"""Command-line surface: generation, spectra, laws, table, experiments, self-check.

Exit codes: 0 success / all-pass, 1 tolerance or check failure, 2 usage or
config error, 3 numerical error. Every sampling command prints its effective
configuration, including the resolved seed, to stderr so ad-hoc runs stay
reproducible after the fact.
"""

from __future__ import annotations

import argparse
import json
import math
import secrets
import sys
import time

import numpy as np

from . import __version__, eigen, experiments, graphs, laws, quadrature, reference, spectra
from .errors import GraphEnergyError, NumericalError, ParameterError


def _fmt(value: float, full: bool) -> str:
    return f"{value:.17g}" if full else f"{value:.10g}"


def _echo_config(name: str, **fields) -> None:
    parts = " ".join(f"{k}={v}" for k, v in fields.items() if v is not None)
    print(f"config: {name} {parts}", file=sys.stderr)


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return int(args.seed)
    return secrets.randbits(64)


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _generate(args, seed: int) -> tuple[np.ndarray, graphs.PartSizes]:
    if args.parts:
        spec = graphs.parse_fractions(args.parts)
        return graphs.sample_multipartite(args.n, spec, args.p, seed)
    a = graphs.sample_er(args.n, args.p, seed)
    return a, graphs.PartSizes.singletons(args.n)


def _load_or_generate(args, seed: int) -> tuple[np.ndarray, graphs.PartSizes]:
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="utf-8") as handle:
            a = graphs.read_matrix(handle)
        if args.parts:
            spec = graphs.parse_fractions(args.parts)
            parts = graphs.partition_sizes(a.shape[0], spec)
        else:
            parts = graphs.PartSizes.singletons(a.shape[0])
        return a, parts
    if args.n is None:
        raise ParameterError("provide --in FILE or generation flags (--n, --p, ...)")
    return _generate(args, seed)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    seed = _resolve_seed(args)
    _echo_config(
        "gen", n=args.n, p=args.p, parts=args.parts, seed=seed,
        format=args.format, out=args.out or "-",
    )
    a, _ = _generate(args, seed)
    out, close = _open_out(args.out)
    try:
        if args.format == "matrix":
            graphs.write_matrix(a, out)
        else:
            graphs.write_edges(a, out)
    finally:
        if close:
            out.close()
    print(f"edges={graphs.edge_count(a)}", file=sys.stderr)
    return 0


def cmd_spectrum(args) -> int:
    seed = _resolve_seed(args)
    _echo_config(
        "spectrum", infile=getattr(args, "infile", None), n=args.n, p=args.p,
        parts=args.parts, seed=seed, centered=args.centered, scaled=args.scaled,
    )
    a, parts = _load_or_generate(args, seed)
    if args.centered:
        a = graphs.center(a, args.p, parts)
    s = spectra.scaled_spectrum(a) if args.scaled else spectra.eigenvalues_sym(a)
    out, close = _open_out(args.out)
    try:
        spectra.write_spectrum(s, out)
    finally:
        if close:
            out.close()
    return 0


def cmd_energy(args) -> int:
    seed = _resolve_seed(args)
    _echo_config(
        "energy", infile=getattr(args, "infile", None), n=args.n, p=args.p,
        parts=args.parts, seed=seed, centered=args.centered,
    )
    a, parts = _load_or_generate(args, seed)
    if args.centered:
        a = graphs.center(a, args.p, parts)
    value = spectra.energy(a)
    print(f"energy={_fmt(value, args.full_precision)}")
    if args.coeff:
        n = a.shape[0]
        print(f"coefficient={_fmt(value / n**1.5, args.full_precision)}")
    return 0


def cmd_law(args) -> int:
    full = args.full_precision
    _echo_config("law", law=args.law, p=args.p, m=args.m, y=args.y, at=args.at)
    if args.lam:
        if args.y is None:
            raise ParameterError("--lambda needs --y")
        print(_fmt(laws.mp_sqrt_mean(args.y, args.p), full))
        return 0
    if args.law is None:
        raise ParameterError("choose --law {semicircle,psi,mp} or --lambda")
    if args.law == "semicircle":
        sigma = math.sqrt(args.p * (1.0 - args.p))
        if args.coeff:
            print(_fmt(laws.er_energy_coeff(args.p), full))
        elif args.at is not None:
            print(f"density={_fmt(laws.semicircle_density(sigma, args.at), full)}")
            print(f"cdf={_fmt(laws.semicircle_cdf(sigma, args.at), full)}")
        else:
            raise ParameterError("semicircle law takes --at X or --coeff")
    elif args.law == "psi":
        if args.m is None:
            raise ParameterError("psi law needs --m")
        if args.coeff:
            print(_fmt(laws.balanced_multipartite_coeff(args.p, args.m), full))
        elif args.at is not None:
            var = laws.multipartite_variance(
                0.0, math.sqrt(args.p * (1.0 - args.p)), args.m
            )
            sigma = math.sqrt(var)
            print(f"density={_fmt(laws.semicircle_density(sigma, args.at), full)}")
            print(f"cdf={_fmt(laws.semicircle_cdf(sigma, args.at), full)}")
        else:
            raise ParameterError("psi law takes --at X or --coeff")
    else:  # mp
        if args.y is None:
            raise ParameterError("mp law needs --y")
        law = laws.MpLaw(args.y, args.p)
        if args.pointmass:
            print(_fmt(laws.mp_point_mass(law), full))
        elif args.at is not None:
            print(f"density={_fmt(laws.mp_density(law, args.at), full)}")
        elif args.coeff:
            nu1 = 1.0 / (1.0 + args.y)
            print(_fmt(laws.bipartite_coeff(nu1, 1.0 - nu1, args.p), full))
        else:
            raise ParameterError("mp law takes --at X, --coeff or --pointmass")
    return 0


def cmd_table(args) -> int:
    _echo_config("table", p=args.p, ymax=args.ymax, out=args.out or "-")
    rows = experiments.reproduce_table(args.p, list(range(1, args.ymax + 1)))
    out, close = _open_out(args.out)
    try:
        experiments.table_csv(rows, out, digits=17 if args.full_precision else 10)
    finally:
        if close:
            out.close()
    return 0


def cmd_experiment(args) -> int:
    if args.config:
        with open(args.config, "r", encoding="utf-8") as handle:
            try:
                data = json.load(handle)
            except json.JSONDecodeError as exc:
                raise ParameterError(
                    f"{args.config}: invalid config syntax at line {exc.lineno}: {exc.msg}"
                ) from exc
        if not isinstance(data, dict):
            raise ParameterError(f"{args.config}: expected a JSON object")
        config = experiments.ExperimentConfig.from_dict(data)
        if args.seed is not None:
            config.seed = int(args.seed)
    else:
        if args.kind is None:
            raise ParameterError("provide --config FILE or --kind KIND")
        seed = _resolve_seed(args)
        fractions = (
            graphs.parse_fractions(args.parts).fractions if args.parts else None
        )
        ladder = (
            tuple(int(v) for v in args.ladder.split(",")) if args.ladder else None
        )
        config = experiments.ExperimentConfig(
            kind=args.kind,
            n=args.n or 0,
            p=args.p,
            trials=args.trials,
            seed=seed,
            tolerance=args.tolerance,
            fractions=fractions,
            y=args.y,
            n_ladder=ladder,
        )
    _echo_config("experiment", **config.to_dict())
    record = experiments.run(config)
    if args.out:
        experiments.save_record(record, args.out)
    print(f"kind={config.kind} metric={record.metric}")
    print(f"mean={_fmt(record.mean, args.full_precision)}")
    print(f"theory={_fmt(record.theory, args.full_precision)} source={record.theory_source}")
    print(f"passed={'yes' if record.passed else 'no'}")
    return 0 if record.passed else 1


# ---------------------------------------------------------------------------
# self-check suite
# ---------------------------------------------------------------------------

def _check_eigensolver(perturb: float) -> tuple[bool, str]:
    rng = np.random.default_rng(20240517)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(1, 7))
        m = rng.integers(-3, 4, size=(n, n))
        m = np.triu(m) + np.triu(m, 1).T
        ours = eigen.eigenvalues(m.astype(float)) + perturb
        ref = reference.eigenvalues_by_charpoly(m)
        worst = max(worst, float(np.max(np.abs(ours - ref))))
    for n in (2, 10, 25, 50):
        full = np.ones((n, n)) - np.eye(n)
        expected = np.array([-1.0] * (n - 1) + [n - 1.0])
        got = eigen.eigenvalues(full) + perturb
        worst = max(worst, float(np.max(np.abs(got - expected))))
    return worst < 1e-8, f"max deviation {worst:.2e}"


def _check_kyfan() -> tuple[bool, str]:
    record = experiments.kyfan_suite(100, 10, seed=7)
    return record.passed, f"min gap {record.extra['min_gap']:.2e}"


def _check_elliptic() -> tuple[bool, str]:
    worst = 0.0
    for i in range(10):
        t = i / 10.0
        kq = quadrature.adaptive_simpson(
            lambda th: 1.0 / math.sqrt(1.0 - t * math.sin(th) ** 2),
            0.0, 0.5 * math.pi, tol=1e-12,
        )
        eq = quadrature.adaptive_simpson(
            lambda th: math.sqrt(1.0 - t * math.sin(th) ** 2),
            0.0, 0.5 * math.pi, tol=1e-12,
        )
        worst = max(worst, abs(laws.elliptic_k(t) - kq), abs(laws.elliptic_e(t) - eq))
    ok = worst < 1e-10 and abs(laws.elliptic_e(1.0) - 1.0) <= 1e-12
    return ok, f"max deviation {worst:.2e}"


def _check_sqrt_mean_oracle() -> tuple[bool, str]:
    worst = 0.0
    for y in (1.0, 2.0, 5.0):
        for p in (0.3, 0.5):
            law = laws.MpLaw(y, p)
            var = p * (1.0 - p)
            integrand = lambda x: math.sqrt(
                max((law.b - x * x) * (x * x - law.a), 0.0)
            ) / (math.pi * var * y)
            q = quadrature.sqrt_band_integral(
                integrand, math.sqrt(law.a), math.sqrt(law.b), tol=1e-12
            )
            worst = max(worst, abs(laws.mp_sqrt_mean(y, p) - q) / q)
    return worst < 1e-7, f"max relative deviation {worst:.2e}"


def _check_table() -> tuple[bool, str]:
    rows = experiments.reproduce_table(0.5, [row[0] for row in reference.TABLE_P_HALF])
    worst_units = 0.0
    for row, (_, coeff_str, lower_str) in zip(rows, reference.TABLE_P_HALF):
        for got, quoted in ((row.theory_coeff, coeff_str), (row.lower_bound, lower_str)):
            unit = reference.quoted_unit(quoted)
            worst_units = max(worst_units, abs(got - float(quoted)) / unit)
    return worst_units <= 1.0 + 1e-9, f"worst offset {worst_units:.3f} last-digit units"


def _check_semicircle_mean() -> tuple[bool, str]:
    worst = 0.0
    for sigma in (0.1, 0.25, 0.5, 1.0):
        q = quadrature.sqrt_band_integral(
            lambda x: abs(x) * laws.semicircle_density(sigma, x),
            -2.0 * sigma, 2.0 * sigma, tol=1e-12,
        )
        worst = max(worst, abs(q - 8.0 * sigma / (3.0 * math.pi)))
    return worst < 1e-9, f"max deviation {worst:.2e}"


def cmd_check(args) -> int:
    perturb = 1e-6 if args.perturb_eigensolver else 0.0
    checks = [
        ("eigensolver-oracle", lambda: _check_eigensolver(perturb)),
        ("kyfan-sweep", _check_kyfan),
        ("elliptic-oracle", _check_elliptic),
        ("sqrt-mean-oracle", _check_sqrt_mean_oracle),
        ("table-reproduction", _check_table),
        ("semicircle-mean", _check_semicircle_mean),
    ]
    _echo_config("check", backend=eigen.BACKEND, version=__version__)
    all_ok = True
    for name, fn in checks:
        start = time.perf_counter()
        ok, detail = fn()
        all_ok &= ok
        status = "PASS" if ok else "FAIL"
        print(f"check {name}: {status} ({detail}, {time.perf_counter() - start:.2f}s)")
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_generation_flags(sub, require_n: bool) -> None:
    sub.add_argument("--n", type=int, default=None, required=require_n,
                     help="graph order")
    sub.add_argument("--p", type=float, default=0.5, help="edge probability")
    sub.add_argument("--parts", type=str, default=None,
                     help="comma-separated part fractions; omitted = Erdos-Renyi")
    sub.add_argument("--seed", type=int, default=None,
                     help="64-bit seed; omitted: fresh random value, printed to stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphenergy",
        description="Sample random graphs, compute exact spectra and energy, "
        "and compare against the limiting laws.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return subs.add_parser(
            name, formatter_class=argparse.ArgumentDefaultsHelpFormatter, **kwargs
        )

    gen = add_parser("gen", help="sample a graph and write it to a file")
    _add_generation_flags(gen, require_n=True)
    gen.add_argument("--out", type=str, default=None, help="output file; omitted: stdout")
    gen.add_argument("--format", choices=("edges", "matrix"), default="edges")
    gen.set_defaults(func=cmd_gen)

    spec = add_parser("spectrum", help="write the sorted spectrum, one eigenvalue per line")
    spec.add_argument("--in", dest="infile", type=str, default=None, help="matrix file to read")
    _add_generation_flags(spec, require_n=False)
    spec.add_argument("--centered", action="store_true", help="subtract the entrywise mean first")
    spec.add_argument("--scaled", action="store_true", help="divide eigenvalues by sqrt(n)")
    spec.add_argument("--out", type=str, default=None)
    spec.set_defaults(func=cmd_spectrum)

    energy = add_parser("energy", help="print the energy of a graph or matrix")
    energy.add_argument("--in", dest="infile", type=str, default=None, help="matrix file to read")
    _add_generation_flags(energy, require_n=False)
    energy.add_argument("--centered", action="store_true", help="subtract the entrywise mean first")
    energy.add_argument("--coeff", action="store_true", help="also print energy / n^{3/2}")
    energy.add_argument("--full-precision", action="store_true")
    energy.set_defaults(func=cmd_energy)

    law = add_parser("law", help="evaluate limiting laws and coefficients")
    law.add_argument("--law", choices=("semicircle", "psi", "mp"), default=None)
    law.add_argument("--p", type=float, default=0.5)
    law.add_argument("--m", type=int, default=None, help="part count for the psi law")
    law.add_argument("--y", type=float, default=None, help="part ratio for the mp law")
    law.add_argument("--at", type=float, default=None, help="evaluate density/CDF at x")
    law.add_argument("--coeff", action="store_true", help="print the energy coefficient")
    law.add_argument("--lambda", dest="lam", action="store_true",
                     help="print the sqrt-mean constant of the mp law")
    law.add_argument("--pointmass", action="store_true", help="print the mp mass at 0")
    law.add_argument("--full-precision", action="store_true")
    law.set_defaults(func=cmd_law)

    table = add_parser("table", help="emit the y,theory_coeff,lower_bound table as CSV")
    table.add_argument("--p", type=float, default=0.5)
    table.add_argument("--ymax", type=int, default=10)
    table.add_argument("--out", type=str, default=None)
    table.add_argument("--full-precision", action="store_true")
    table.set_defaults(func=cmd_table)

    exp = add_parser("experiment", help="run a Monte Carlo experiment")
    exp.add_argument("--config", type=str, default=None, help="JSON config file")
    exp.add_argument("--kind", choices=experiments.KINDS, default=None)
    exp.add_argument("--n", type=int, default=None)
    exp.add_argument("--p", type=float, default=0.5)
    exp.add_argument("--parts", type=str, default=None)
    exp.add_argument("--y", type=float, default=None)
    exp.add_argument("--ladder", type=str, default=None,
                     help="comma-separated n ladder for convergence studies")
    exp.add_argument("--trials", type=int, default=8)
    exp.add_argument("--seed", type=int, default=None)
    exp.add_argument("--tolerance", type=float, default=0.05)
    exp.add_argument("--out", type=str, default=None, help="write the run record here")
    exp.add_argument("--full-precision", action="store_true")
    exp.set_defaults(func=cmd_experiment)

    check = add_parser("check", help="fast self-check of solvers against their oracles")
    check.add_argument("--perturb-eigensolver", action="store_true", help=argparse.SUPPRESS)
    check.set_defaults(func=cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except (GraphEnergyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
