"""Command-line surface: dynamics traces, ratio sweeps, disorder ensembles
and spectra, written as plot-ready CSV (plus a JSON sidecar) or as a single
JSON document.

Exit codes: 0 success, 2 argument error, 1 runtime error.  Output files
are written atomically (temp file + rename), and every file embeds the
fully resolved configuration and a schema version.
"""

import argparse
import csv
import json
import os
import sys
import tempfile

import numpy as np

from . import __version__
from ._kernels import BACKEND
from .chain import (build_clean_chain, build_sector_hamiltonian,
                    closed_form_spectrum, diagonalize)
from .disorder import DisorderConfig, run_ensemble
from .dynamics import trace_dynamics
from .experiments import find_arch_peaks, ratio_sweep
from .trimer import trimer_fidelity

SCHEMA_VERSION = 1

_KIND_ALIASES = {"offdiag": "off_diagonal", "diag": "diagonal"}


def _fmt(x):
    return format(float(x), ".17g")


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv_text(columns, rows):
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow("" if v is None else _fmt(v) for v in row)
    return buf.getvalue()


def _sidecar_path(out):
    base, _ = os.path.splitext(out)
    return base + ".meta.json"


def _emit(args, columns, rows, metadata):
    metadata = {"schema_version": SCHEMA_VERSION,
                "package_version": __version__,
                "kernel_backend": BACKEND,
                **metadata}
    if args.format == "json":
        doc = {**metadata, "columns": columns,
               "rows": [[None if v is None else float(v) for v in row]
                        for row in rows]}
        _atomic_write(args.out, json.dumps(doc, indent=2) + "\n")
    else:
        _atomic_write(args.out, _csv_text(columns, rows))
        _atomic_write(_sidecar_path(args.out),
                      json.dumps(metadata, indent=2) + "\n")
    return 0


def _parse_levels(text):
    try:
        a, b, n = text.split(":")
        levels = np.linspace(float(a), float(b), int(n))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"levels must look like 'a:b:n' (got {text!r})"
        )
    if np.any(levels < 0.0):
        raise argparse.ArgumentTypeError("disorder levels must be nonnegative")
    return levels


def _check_ratio(parser, ratio):
    if not 0.0 <= ratio <= 1.0:
        parser.error(f"--ratio must lie in [0, 1] (got {ratio})")


def cmd_dynamics(parser, args):
    _check_ratio(parser, args.ratio)
    if args.steps < 2:
        parser.error("--steps must be at least 2")
    spec = build_clean_chain(args.n_sites, args.ratio)
    trace = trace_dynamics(spec, args.protocol, args.steps)
    trimer_fid = trimer_fidelity(trace.times, trace.eta)
    rows = list(zip(trace.times, trace.fidelity, trace.eof, trimer_fid))
    return _emit(
        args,
        ["time", "fidelity", "eof", "trimer_fidelity"],
        rows,
        {
            "command": "dynamics",
            "config": {"protocol": args.protocol, "ratio": args.ratio,
                       "n_sites": args.n_sites, "steps": args.steps},
            "t_E": trace.t_E, "eof_max": trace.eof_max,
            "t_F": trace.t_F, "eta": trace.eta,
        },
    )


def cmd_sweep(parser, args):
    if not 0.0 < args.ratio_min < args.ratio_max <= 1.0:
        parser.error("need 0 < --ratio-min < --ratio-max <= 1")
    if args.points < 2:
        parser.error("--points must be at least 2")
    sweep = ratio_sweep(args.protocol, args.ratio_min, args.ratio_max,
                        args.points, n_sites=args.n_sites)
    peaks = find_arch_peaks(sweep)
    rows = list(zip(sweep.ratios, sweep.t_E, sweep.eof_max,
                    sweep.eof_at_half_tF, sweep.half_tF))
    return _emit(
        args,
        ["ratio", "t_E", "eof_max", "eof_at_half_tF", "half_tF"],
        rows,
        {
            "command": "sweep",
            "config": {"protocol": args.protocol,
                       "ratio_min": args.ratio_min,
                       "ratio_max": args.ratio_max,
                       "points": args.points, "n_sites": args.n_sites},
            "arch_peaks": peaks,
        },
    )


def cmd_disorder(parser, args):
    _check_ratio(parser, args.ratio)
    if args.realizations < 1:
        parser.error("--realizations must be at least 1")
    spec = build_clean_chain(args.n_sites, args.ratio)
    config = DisorderConfig(
        kind=_KIND_ALIASES[args.kind],
        realizations=args.realizations,
        master_seed=args.seed,
    )
    stats = run_ensemble(spec, args.protocol, config, args.levels)
    rows = list(zip(stats.levels, stats.mean_at_tE, stats.std_at_tE,
                    stats.sem_at_tE, stats.mean_max, stats.std_max,
                    stats.sem_max))
    return _emit(
        args,
        ["level", "mean_at_tE", "std_at_tE", "sem_at_tE",
         "mean_max", "std_max", "sem_max"],
        rows,
        {
            "command": "disorder",
            "config": {"protocol": args.protocol, "ratio": args.ratio,
                       "n_sites": args.n_sites, "kind": args.kind,
                       "levels": [float(v) for v in args.levels],
                       "realizations": args.realizations,
                       "seed": args.seed},
            "clean_t_E": stats.clean_t_E, "clean_t_F": stats.clean_t_F,
        },
    )


def cmd_spectrum(parser, args):
    _check_ratio(parser, args.ratio)
    spec = build_clean_chain(args.n_sites, args.ratio)
    rows = []
    closed = (closed_form_spectrum(args.ratio)
              if args.n_sites == 7 else None)
    for n_exc in (1, 2):
        spectral = diagonalize(build_sector_hamiltonian(spec, n_exc))
        for i, energy in enumerate(spectral.eigenvalues):
            analytic = closed[i] if (closed is not None and n_exc == 1) else None
            rows.append((n_exc, i, energy, analytic))
    return _emit(
        args,
        ["sector", "index", "energy_numeric", "energy_closed_form"],
        rows,
        {
            "command": "spectrum",
            "config": {"ratio": args.ratio, "n_sites": args.n_sites},
        },
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="eprchain",
        description="Bell-pair generation on dimerized ABC spin chains",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, protocol=True):
        if protocol:
            p.add_argument("--protocol", choices=("single", "pair"),
                           default="single")
        p.add_argument("--n-sites", type=int, default=7)
        p.add_argument("--out", required=True, help="output file path")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("dynamics", help="fidelity/EOF trace over one window")
    p.add_argument("--ratio", type=float, required=True)
    p.add_argument("--steps", type=int, default=4000)
    common(p)

    p = sub.add_parser("sweep", help="coupling-ratio sweep of t_E and EOF_max")
    p.add_argument("--ratio-min", type=float, default=0.05)
    p.add_argument("--ratio-max", type=float, default=0.55)
    p.add_argument("--points", type=int, default=500)
    common(p)

    p = sub.add_parser("disorder", help="seeded disorder-robustness ensemble")
    p.add_argument("--ratio", type=float, required=True)
    p.add_argument("--kind", choices=("offdiag", "diag"), required=True)
    p.add_argument("--levels", type=_parse_levels,
                   default=np.linspace(0.0, 0.5, 11),
                   help="disorder levels as 'a:b:n'")
    p.add_argument("--realizations", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    common(p)

    p = sub.add_parser("spectrum", help="sector spectra, numeric vs closed form")
    p.add_argument("--ratio", type=float, required=True)
    common(p, protocol=False)

    return parser


_HANDLERS = {
    "dynamics": cmd_dynamics,
    "sweep": cmd_sweep,
    "disorder": cmd_disorder,
    "spectrum": cmd_spectrum,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](parser, args)
    except SystemExit:
        raise
    except (ValueError, OSError) as err:
        print(f"eprchain: error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
