"""Command-line front end.

Subcommands: simulate, identify, predict, observability, spectrum,
montecarlo. Exit codes: 0 success, 1 domain errors (singular Hankel,
unobservable system, ...), 2 usage or parse errors. The CLI performs no
arithmetic of its own; it only parses, dispatches and serializes.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import io
from .errors import EmptySeries, LinIdentError, ParseError
from .dynsys import SystemSpec, TimeSeries, is_observable, sample_continuous, simulate_discrete
from .ident import identify, identify_affine, predict, recover_continuous_spectrum
from .experiments import PROPERTIES, SamplingBox, TrialConfig, mc_estimate

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="RNG seed (u64)")
    common.add_argument("--tol", type=float, default=1e-6, help="tolerance where applicable")
    common.add_argument("--out", default=None, help="output path (default: stdout)")

    parser = argparse.ArgumentParser(prog="linident",
                                     description="Linear prediction-model identification from time series")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", parents=[common], help="simulate a system to a series file")
    p.add_argument("--system", required=True, help="system spec file")
    p.add_argument("--x0", required=True, help="initial state, comma-separated floats")
    p.add_argument("--len", dest="length", type=int, required=True, help="number of samples")
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="sampling step override (continuous systems)")

    p = sub.add_parser("identify", parents=[common], help="identify a prediction model")
    p.add_argument("--series", required=True, help="series file")
    p.add_argument("--n", type=int, required=True, help="model order")
    p.add_argument("--k", type=int, default=0, help="window start index")
    p.add_argument("--affine", action="store_true", help="identify an affine offset too")
    p.add_argument("--overdetermined", action="store_true",
                   help="least-squares over all available windows")

    p = sub.add_parser("predict", parents=[common], help="continue a series from a model")
    p.add_argument("--model", required=True, help="model file")
    p.add_argument("--seed-window", required=True, help="last n observed values, comma-separated")
    p.add_argument("--steps", type=int, required=True, help="number of future samples")

    p = sub.add_parser("observability", parents=[common], help="rank report for a system")
    p.add_argument("--system", required=True, help="system spec file")

    p = sub.add_parser("spectrum", parents=[common], help="recover continuous-time eigenvalues")
    p.add_argument("--model", required=True, help="model file (must carry a step)")

    p = sub.add_parser("montecarlo", parents=[common], help="measure-1 Monte Carlo estimate")
    p.add_argument("--property", required=True, choices=PROPERTIES, dest="prop")
    p.add_argument("--n", type=int, required=True, help="system dimension")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--box", default="-1,1", help="sampling box as lo,hi")
    p.add_argument("--cond-cap", type=float, default=1e10,
                   help="condition cutoff for numerical rejection")
    return parser


def _csv_floats(text: str, what: str) -> np.ndarray:
    try:
        return np.array([float(tok) for tok in text.split(",") if tok.strip() != ""])
    except ValueError as exc:
        raise UsageError(f"bad {what}: {text!r}") from exc


class UsageError(Exception):
    pass


def _emit(doc: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(doc)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(doc)


def _emit_series(series: TimeSeries, out_path) -> None:
    lines = []
    if series.step is not None:
        lines.append(f"# step={format(series.step, '.17g')}")
    lines.extend(format(v, ".17g") for v in series.values)
    _emit("\n".join(lines) + "\n", out_path)


def _run_simulate(args) -> None:
    spec = io.read_system(args.system)
    if args.lam is not None:
        spec = SystemSpec(spec.kind, spec.a, spec.c, b=spec.b, step=args.lam)
    x0 = _csv_floats(args.x0, "--x0")
    if spec.kind == "discrete":
        series = simulate_discrete(spec, x0, args.length)
    else:
        series = sample_continuous(spec, x0, args.length)
    _emit_series(series, args.out)


def _run_identify(args) -> None:
    series = io.read_series(args.series)
    if args.affine:
        report = identify_affine(series, args.n, k=args.k)
    else:
        report = identify(series, args.n, k=args.k, overdetermined=args.overdetermined)
    _emit(io.dumps(io.model_to_dict(report)), args.out)


def _run_predict(args) -> None:
    model = io.read_model(args.model)
    window = _csv_floats(args.seed_window, "--seed-window")
    if window.size != model.order:
        raise UsageError(f"--seed-window needs exactly {model.order} values, got {window.size}")
    series = predict(model, window, args.steps)
    _emit_series(series, args.out)


def _run_observability(args) -> None:
    spec = io.read_system(args.system)
    flag, rank = is_observable(spec.a, spec.c)
    doc = {"format_version": io.FORMAT_VERSION, "rank": rank,
           "order": spec.order, "observable": flag}
    _emit(io.dumps(doc), args.out)


def _run_spectrum(args) -> None:
    model = io.read_model(args.model)
    spectrum = recover_continuous_spectrum(model)
    doc = {
        "format_version": io.FORMAT_VERSION,
        "eigenvalues": [[z.real, z.imag] for z in spectrum.values],
        "aliasing_risk": spectrum.aliasing_risk,
        "step": model.step,
    }
    _emit(io.dumps(doc), args.out)


def _run_montecarlo(args) -> None:
    box_vals = _csv_floats(args.box, "--box")
    if box_vals.size != 2:
        raise UsageError(f"--box needs exactly two values, got {args.box!r}")
    config = TrialConfig(n=args.n, trials=args.trials, seed=args.seed,
                         box=SamplingBox(float(box_vals[0]), float(box_vals[1])),
                         success_tol=args.tol, cond_cap=args.cond_cap)
    report = mc_estimate(args.prop, config)
    doc = report.to_dict()
    doc["format_version"] = io.FORMAT_VERSION
    _emit(io.dumps(doc), args.out)


_DISPATCH = {
    "simulate": _run_simulate,
    "identify": _run_identify,
    "predict": _run_predict,
    "observability": _run_observability,
    "spectrum": _run_spectrum,
    "montecarlo": _run_montecarlo,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        _DISPATCH[args.command](args)
    except (UsageError, ParseError, EmptySeries) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        print(f"usage: linident {args.command} --help for details", file=sys.stderr)
        return 2
    except LinIdentError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"IoError: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
