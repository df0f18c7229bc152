"""Command-line interface: evolve, decompose, px, qfunc, lg.

Times on the command line are rational strings "p/q" in units of pi/W.  The
magnitude of the nonlinear rate defaults to 1 (observables at rational phase
times depend only on the product W t); --omega-sign exposes the direction of
evolution.  Structured results are written as JSON, gridded data as CSV, all
atomically (temp file + rename).

Exit codes: 0 success, 2 validation failure, 3 file I/O failure, 4 internal
numerical failure (e.g. a clipped sampling window).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

import numpy as np

from .decomposition import decompose
from .dynamics import HamiltonianSpec, RationalPhaseTime, evolve
from .fock import TruncationPolicy, choose_truncation, make_coherent
from .leggett_garg import (
    CSV_HEADER,
    LgProtocol,
    OutcomeAssignment,
    PRESETS,
    lg_value,
    mixture_lg_value,
)
from .phase_space import QuadratureSpec, p_x_curve, q_function

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_NUMERICAL = 4


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".kerrcat-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _policy(args) -> TruncationPolicy:
    tail = args.tail_tol if args.tail_tol is not None else 1e-12
    if args.n_max is not None:
        return TruncationPolicy(args.n_max, tail)
    return choose_truncation(args.alpha, tail)


def _spec(args) -> HamiltonianSpec:
    return HamiltonianSpec(k=args.k, omega_nl=float(args.omega_sign))


def _time(args) -> RationalPhaseTime:
    if args.time is None:
        raise ValueError("--time is required (a rational 'p/q' in units of pi/W)")
    return RationalPhaseTime.parse(args.time)


def _state(args):
    policy = _policy(args)
    state = make_coherent(args.alpha, policy)
    return evolve(state, _spec(args), _time(args))


def _parse_pair(text: str, sep: str = ":"):
    parts = text.split(sep)
    if len(parts) != 2:
        raise ValueError(f"expected 'a{sep}b', got {text!r}")
    return float(parts[0]), float(parts[1])


def cmd_evolve(args) -> int:
    state = _state(args)
    if args.out:
        _atomic_write(args.out, state.to_json() + "\n")
    print(f"norm: {np.sqrt(state.norm_squared()):.12f}")
    print(f"mean_photon_number: {state.mean_photon_number():.12f}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    sup = decompose(args.alpha, _spec(args), _time(args))
    if args.out:
        _atomic_write(args.out, sup.to_json() + "\n")
    print(f"{'magnitude':>12}  {'phase/pi':>10}  {'component':>24}")
    for coeff, amp in sup.terms:
        print(
            f"{abs(coeff):12.8f}  {np.angle(coeff) / np.pi:10.6f}  "
            f"{amp.real:+.6f}{amp.imag:+.6f}j"
        )
    return EXIT_OK


def cmd_px(args) -> int:
    state = _state(args)
    if args.window:
        window = _parse_pair(args.window)
    else:
        reach = np.sqrt(2.0 * state.mean_photon_number()) + 8.0
        window = (-reach, reach)
    curve = p_x_curve(
        state, QuadratureSpec(args.theta), window, args.resolution
    )
    if args.out:
        _atomic_write(args.out, curve.to_csv())
    print(f"window: {window[0]:.6f} {window[1]:.6f}")
    print(f"integral: {curve.integral:.12f}")
    return EXIT_OK


def cmd_qfunc(args) -> int:
    state = _state(args)
    if args.grid_extent is not None:
        extents = (-args.grid_extent, args.grid_extent)
        grid = q_function(state, extents, extents, args.grid_resolution)
    else:
        grid = q_function(state, resolution=args.grid_resolution)
    if args.out:
        _atomic_write(args.out, grid.to_csv())
        _atomic_write(args.out + ".json", grid.sidecar_json() + "\n")
    print(f"max_q: {grid.values.max():.12f}")
    print(f"integral: {grid.integral():.12f}")
    return EXIT_OK


def _parse_assignments(text: str):
    triples = text.split(";")
    if len(triples) != 3:
        raise ValueError("expected three assignments 'p1,m1;p2,m2;p3,m3'")
    out = []
    for part in triples:
        plus, minus = _parse_pair(part, sep=",")
        out.append(OutcomeAssignment(plus, minus))
    return tuple(out)


def _protocol(args) -> LgProtocol:
    if args.preset:
        if args.preset not in PRESETS:
            raise ValueError(
                f"unknown preset {args.preset!r}; available: {sorted(PRESETS)}"
            )
        return PRESETS[args.preset](args.alpha)
    if args.times is None or args.assignments is None:
        raise ValueError("either --preset or both --times and --assignments required")
    times = tuple(RationalPhaseTime.parse(t) for t in args.times.split(","))
    if len(times) != 3:
        raise ValueError("--times needs three comma-separated rationals")
    return LgProtocol(
        spec=HamiltonianSpec(k=args.k, omega_nl=float(args.omega_sign)),
        alpha0=args.alpha,
        times=times,
        assignments=_parse_assignments(args.assignments),
        partition_angle=args.partition_angle,
        quad=QuadratureSpec(args.theta),
    )


def cmd_lg(args) -> int:
    evaluate = mixture_lg_value if args.mixture else lg_value

    if args.sweep_alpha:
        lo, hi, step = (float(v) for v in args.sweep_alpha.split(":"))
        if step <= 0 or hi < lo:
            raise ValueError(f"bad sweep range {args.sweep_alpha!r}")
        rows = [CSV_HEADER]
        alpha = lo
        while alpha <= hi + 1e-12:
            args.alpha = alpha
            report = evaluate(_protocol(args))
            rows.append(report.csv_row(args.preset or "custom", alpha))
            alpha += step
        text = "\n".join(rows) + "\n"
        if args.out:
            _atomic_write(args.out, text)
        else:
            print(text, end="")
        return EXIT_OK

    report = evaluate(_protocol(args))
    if args.out:
        _atomic_write(args.out, report.to_json() + "\n")
    print(f"c12: {report.c12:.6f}")
    print(f"c23: {report.c23:.6f}")
    print(f"c13: {report.c13:.6f}")
    print(f"lg_value: {report.lg_value:.6f}")
    print(f"violated: {str(report.violated).lower()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kerrcat",
        description="Anharmonic-oscillator cat-state dynamics and Leggett-Garg tests",
    )
    parser.add_argument("--config", help="JSON file with defaults mirroring the flags")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--alpha", type=float, default=3.0, help="initial coherent amplitude")
        p.add_argument("--k", type=int, default=2, help="nonlinearity order")
        p.add_argument("--omega-sign", type=int, choices=(-1, 1), default=1)
        # not argparse-required so that --config may supply it
        p.add_argument("--time", default=None, help="evolution time p/q in units of pi/W")
        p.add_argument("--theta", type=float, default=0.0, help="quadrature angle")
        p.add_argument("--out", help="output path")
        p.add_argument("--n-max", type=int, default=None, help="basis cutoff override")
        p.add_argument("--tail-tol", type=float, default=None, help="tail tolerance")

    p_evolve = sub.add_parser("evolve", help="write the evolved state as JSON")
    common(p_evolve)
    p_evolve.set_defaults(func=cmd_evolve)

    p_dec = sub.add_parser("decompose", help="coherent-superposition form (JSON)")
    common(p_dec)
    p_dec.set_defaults(func=cmd_decompose)

    p_px = sub.add_parser("px", help="quadrature density curve (CSV)")
    common(p_px)
    p_px.add_argument("--window", help="sampling window 'lo:hi'")
    p_px.add_argument("--resolution", type=int, default=801)
    p_px.set_defaults(func=cmd_px)

    p_q = sub.add_parser("qfunc", help="Husimi grid (CSV + JSON sidecar)")
    common(p_q)
    p_q.add_argument("--grid-extent", type=float, default=None,
                     help="half-width of the square grid (default: auto)")
    p_q.add_argument("--grid-resolution", type=int, default=161)
    p_q.set_defaults(func=cmd_qfunc)

    p_lg = sub.add_parser("lg", help="Leggett-Garg report (JSON)")
    common(p_lg)
    p_lg.add_argument("--preset", help="named protocol: " + ", ".join(sorted(PRESETS)))
    p_lg.add_argument("--times", help="three rationals 't1,t2,t3' for a custom protocol")
    p_lg.add_argument("--assignments", help="outcome values 'p1,m1;p2,m2;p3,m3'")
    p_lg.add_argument("--partition-angle", type=float, default=0.0)
    p_lg.add_argument("--mixture", action="store_true",
                      help="evaluate the classical branch mixture instead")
    p_lg.add_argument("--sweep-alpha", help="'a:b:step' emits CSV summary rows")
    p_lg.set_defaults(func=cmd_lg)

    parser.subcommands = {
        "evolve": p_evolve,
        "decompose": p_dec,
        "px": p_px,
        "qfunc": p_q,
        "lg": p_lg,
    }
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()

    # --config supplies defaults; explicit flags win because they re-parse on top.
    # Subparsers hold their own defaults, so the config lands on each of them.
    probe, _ = parser.parse_known_args(argv)
    if probe.config:
        try:
            with open(probe.config) as handle:
                defaults = json.load(handle)
        except OSError as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return EXIT_IO
        except json.JSONDecodeError as exc:
            print(f"error: bad config: {exc}", file=sys.stderr)
            return EXIT_VALIDATION
        defaults = {k.replace("-", "_"): v for k, v in defaults.items()}
        known = {
            action.dest
            for p in parser.subcommands.values()
            for action in p._actions
        }
        unknown = sorted(set(defaults) - known)
        if unknown:
            print(f"error: unknown config keys: {unknown}", file=sys.stderr)
            return EXIT_VALIDATION
        for p in parser.subcommands.values():
            p.set_defaults(**defaults)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
