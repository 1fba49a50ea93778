"""Command line front end.

Verbs: ``eval``, ``family``, ``sample``, ``schmidt`` and ``export``.

Exit codes: 0 success, 1 I/O or parse error (including bad command lines),
2 domain or validation error.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .config import DEFAULT_TOL
from .criteria import evaluate, operator_schmidt
from .io import StateFormatError, dumps_state, fmt15, read_state
from .linalg import ConvergenceError
from .states import (
    DomainError,
    ValidationError,
    horodecki_3x3,
    isotropic,
    random_ginibre,
    werner_qubit,
)

EXIT_OK, EXIT_IO, EXIT_DOMAIN = 0, 1, 2

CSV_HEADER = "family,param,ccnr_value,ppt_min_eig,ccnr_entangled,ppt_entangled"

FAMILIES = {
    "werner2": werner_qubit,
    "isotropic2": lambda f: isotropic(2, f),
    "isotropic3": lambda f: isotropic(3, f),
    "horodecki3x3": horodecki_3x3,
}
FAMILY_DOMAIN = {name: (0.0, 1.0) for name in FAMILIES}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class ScanRow:
    family: str
    param: float
    ccnr_value: float
    ppt_min_eig: float
    ccnr_entangled: int
    ppt_entangled: int

    def csv(self) -> str:
        return ",".join(
            [
                self.family,
                fmt15(self.param),
                fmt15(self.ccnr_value),
                fmt15(self.ppt_min_eig),
                str(self.ccnr_entangled),
                str(self.ppt_entangled),
            ]
        )


@dataclass(frozen=True)
class EnsembleSummary:
    samples: int
    detectedCcnr: int
    detectedPpt: int
    detectedBoth: int
    detectedOnlyCcnr: int
    detectedOnlyPpt: int


def _positive_tol(text: str) -> float:
    try:
        tol = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not np.isfinite(tol):
        raise argparse.ArgumentTypeError("tolerance must be finite")
    return tol


def _check_tol(tol: float) -> None:
    if tol <= 0:
        raise CliError(f"tolerance must be positive, got {tol!r}", EXIT_DOMAIN)


def _map(func, items, workers: int):
    if workers <= 1:
        return [func(x) for x in items]
    # Executor.map yields results in submission order
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * workers))))


def _load(path: str):
    try:
        return read_state(path)
    except (OSError, StateFormatError) as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO)


def _grid(lo: float, hi: float, steps: int) -> list[float]:
    out = [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]
    out[-1] = hi
    return out


def scan_point(job: tuple[str, float, float]) -> ScanRow:
    family, param, tol = job
    rep = evaluate(FAMILIES[family](param), tol)
    return ScanRow(
        family,
        param,
        rep.ccnr_value,
        rep.ppt_min_eig,
        int(rep.ccnr_entangled),
        int(rep.ppt_entangled),
    )


def scan_family(family: str, lo: float, hi: float, steps: int, tol: float = DEFAULT_TOL, workers: int = 1) -> list[ScanRow]:
    """Evaluate both criteria on a uniform parameter grid of a named family."""
    if family not in FAMILIES:
        raise CliError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}", EXIT_IO)
    _check_tol(tol)
    dom_lo, dom_hi = FAMILY_DOMAIN[family]
    if steps < 2:
        raise CliError(f"steps must be >= 2, got {steps}", EXIT_DOMAIN)
    if not lo < hi:
        raise CliError(f"need from < to, got {lo!r} and {hi!r}", EXIT_DOMAIN)
    if lo < dom_lo or hi > dom_hi:
        raise CliError(f"{family} parameter must lie in [{dom_lo}, {dom_hi}]", EXIT_DOMAIN)
    return _map(scan_point, [(family, x, tol) for x in _grid(lo, hi, steps)], workers)


def sample_point(job: tuple[int, int, int, int, float]) -> tuple[bool, bool]:
    dim_a, dim_b, rank, seed, tol = job
    rep = evaluate(random_ginibre(dim_a, dim_b, rank, seed), tol)
    return rep.ccnr_entangled, rep.ppt_entangled


def sample_ensemble(
    dim_a: int, dim_b: int, rank: int | None, samples: int, seed: int, tol: float = DEFAULT_TOL, workers: int = 1
) -> EnsembleSummary:
    """Draw ``samples`` Ginibre states (sample ``i`` seeded with ``seed + i``) and count detections."""
    _check_tol(tol)
    if dim_a < 1 or dim_b < 1:
        raise CliError(f"dimensions must be positive, got ({dim_a}, {dim_b})", EXIT_DOMAIN)
    d = dim_a * dim_b
    rank = d if rank is None else rank
    if not 1 <= rank <= d:
        raise CliError(f"rank must lie in [1, {d}], got {rank}", EXIT_DOMAIN)
    if samples < 1:
        raise CliError(f"samples must be >= 1, got {samples}", EXIT_DOMAIN)
    if seed < 0:
        raise CliError(f"seed must be non-negative, got {seed}", EXIT_DOMAIN)
    flags = _map(sample_point, [(dim_a, dim_b, rank, seed + i, tol) for i in range(samples)], workers)
    ccnr = sum(c for c, _ in flags)
    ppt = sum(p for _, p in flags)
    both = sum(c and p for c, p in flags)
    return EnsembleSummary(samples, ccnr, ppt, both, ccnr - both, ppt - both)


def cmd_eval(args) -> int:
    _check_tol(args.tol)
    rep = evaluate(_load(args.state), args.tol)
    if args.format == "json":
        print(json.dumps(rep.to_json_dict()))
    else:
        rows = [
            ("ccnr_value", fmt15(rep.ccnr_value)),
            ("ccnr_entangled", str(rep.ccnr_entangled).lower()),
            ("ppt_min_eig", fmt15(rep.ppt_min_eig)),
            ("ppt_entangled", str(rep.ppt_entangled).lower()),
            ("tolerance", fmt15(rep.tolerance)),
        ]
        width = max(len(k) for k, _ in rows)
        for k, v in rows:
            print(f"{k.ljust(width)}  {v}")
    return EXIT_OK


def cmd_family(args) -> int:
    rows = scan_family(args.family, args.start, args.stop, args.steps, args.tol, args.workers)
    if args.format == "json":
        print(json.dumps([asdict(r) for r in rows]))
    else:
        print(CSV_HEADER)
        for r in rows:
            print(r.csv())
    return EXIT_OK


def cmd_sample(args) -> int:
    summary = sample_ensemble(args.dim_a, args.dim_b, args.rank, args.samples, args.seed, args.tol, args.workers)
    print(json.dumps(asdict(summary)))
    return EXIT_OK


def cmd_schmidt(args) -> int:
    if args.k is not None and args.k < 1:
        raise CliError(f"k must be >= 1, got {args.k}", EXIT_DOMAIN)
    sigmas = operator_schmidt(_load(args.state)).sigmas
    shown = sigmas if args.full else sigmas[: args.k or 4]
    if args.format == "json":
        print(json.dumps({"sigmas": [float(s) for s in shown], "sum": float(np.sum(shown))}))
    else:
        for i, s in enumerate(shown, 1):
            print(f"sigma_{i} {fmt15(s)}")
        print(f"sum {fmt15(np.sum(shown))}")
    return EXIT_OK


def cmd_export(args) -> int:
    if args.family == "ginibre":
        if args.dims is None:
            raise CliError("ginibre export needs --dims DIMA DIMB", EXIT_IO)
        try:
            rho = random_ginibre(args.dims[0], args.dims[1], args.rank, args.seed)
        except (DomainError, ValueError) as exc:
            raise CliError(str(exc), EXIT_DOMAIN)
    else:
        if args.param is None:
            raise CliError(f"{args.family} export needs a parameter", EXIT_IO)
        try:
            rho = FAMILIES[args.family](args.param)
        except (DomainError, ValueError) as exc:
            raise CliError(str(exc), EXIT_DOMAIN)
    text = dumps_state(rho)
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {args.output}: {exc}", EXIT_IO)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=_positive_tol, default=DEFAULT_TOL, help="verdict tolerance (default 1e-9)")

    parser = _Parser(prog="ccnr", description="Realignment (CCNR) and PPT separability tests.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate both criteria on a state file")
    p.add_argument("state", help="state JSON file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("family", parents=[common], help="scan a named state family, CSV on stdout")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("start", type=float, metavar="from")
    p.add_argument("stop", type=float, metavar="to")
    p.add_argument("steps", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sample", parents=[common], help="count detections over random Ginibre states")
    p.add_argument("dim_a", type=int)
    p.add_argument("dim_b", type=int)
    p.add_argument("--rank", type=int, default=None, help="Ginibre rank (default full)")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("schmidt", help="print the largest operator Schmidt coefficients")
    p.add_argument("state", help="state JSON file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("-k", type=int, default=None, help="number of coefficients (default 4)")
    group.add_argument("--full", action="store_true", help="print every coefficient")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_schmidt)

    p = sub.add_parser("export", help="write a state file for a family member or a random state")
    p.add_argument("family", choices=sorted(FAMILIES) + ["ginibre"])
    p.add_argument("param", type=float, nargs="?")
    p.add_argument("--dims", type=int, nargs=2, metavar=("DIMA", "DIMB"))
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, usage errors exit EXIT_IO
        return exc.code if isinstance(exc.code, int) else EXIT_IO
    try:
        return args.func(args)
    except CliError as exc:
        print(f"ccnr: {exc}", file=sys.stderr)
        return exc.code
    except ValidationError as exc:
        print(f"ccnr: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"ccnr: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
