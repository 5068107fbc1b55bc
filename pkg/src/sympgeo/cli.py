"""Command-line front end.

Five subcommands drive the library end to end: ``identities`` fuzzes the
algebraic identities with a seeded generator, ``intersect`` and
``tangents`` run the closed-form constructions, ``crank`` sweeps the
mechanism, and ``oscillator`` integrates the phase flow.  Reports are
JSON by default (CSV for the tabular subcommands), deterministic for a
fixed command line apart from the wall-time field.

Exit codes: 0 success (an empty solution set is still success), 1 usage
error, 2 geometric degeneracy, 3 numerical singularity.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
import time

from .core import Vec2, identity_residuals, norm, tilde
from .dynamics import (
    EXPLICIT_EULER,
    LEAPFROG,
    SYMPLECTIC_EULER,
    OscillatorParams,
    PhaseState,
    Trajectory,
    analytic_oscillator,
    ellipse_residual,
    hamiltonian,
    simulate,
)
from .errors import DegeneracyError, SingularityError
from .geometry import Circle, Line, Tangent, circle_tangents, intersect_lines, tangent_distance_error
from .kinematics import CrankConfig, SweepEntry, crank_sweep, loop_residuals
from .svgplot import PALETTE, SvgPlot

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DEGENERATE = 2
EXIT_SINGULAR = 3

#: Scaled tolerance factor for the seeded identity fuzz runs.
IDENTITY_RTOL = 1e-9

_METHOD_NAMES = {
    "euler": EXPLICIT_EULER,
    "symplectic-euler": SYMPLECTIC_EULER,
    "leapfrog": LEAPFROG,
}

_DEG = math.pi / 180.0


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage failures exit with code 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_vec(text: str) -> Vec2:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y, got {text!r}")
    try:
        return Vec2(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parse_circle(text: str) -> Circle:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected x,y,r, got {text!r}")
    try:
        return Circle(Vec2(float(parts[0]), float(parts[1])), float(parts[2]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _vec_json(v: Vec2) -> list[float]:
    return [v.x, v.y]


def _fmt(x: float) -> str:
    """Full-precision decimal: 17 significant digits round-trip exactly."""
    return format(x, ".17g")


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _build_parser() -> _Parser:
    parser = _Parser(prog="sympgeo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p_id = sub.add_parser("identities",
                          help="fuzz the five product identities with seeded random vectors")
    p_id.add_argument("--samples", type=_positive_int, default=1000)
    p_id.add_argument("--seed", type=int, default=0)
    p_id.add_argument("--range", type=float, default=10.0, dest="span",
                      help="components drawn uniformly from [-range, range]")
    fmt = p_id.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true", help="one row per identity family")

    p_int = sub.add_parser("intersect",
                           help="intersect two lines given as point and direction")
    p_int.add_argument("--a", type=_parse_vec, required=True, help="anchor of line 1 (x,y)")
    p_int.add_argument("--u", type=_parse_vec, required=True, help="direction of line 1 (x,y)")
    p_int.add_argument("--b", type=_parse_vec, required=True, help="anchor of line 2 (x,y)")
    p_int.add_argument("--v", type=_parse_vec, required=True, help="direction of line 2 (x,y)")

    p_tan = sub.add_parser("tangents",
                           help="common tangents of two circles")
    p_tan.add_argument("--c1", type=_parse_circle, required=True, help="first circle (x,y,r)")
    p_tan.add_argument("--c2", type=_parse_circle, required=True, help="second circle (x,y,r)")
    p_tan.add_argument("--svg", metavar="PATH", help="write a construction diagram")

    p_crank = sub.add_parser("crank",
                             help="sweep the inverted slider crank over a crank-angle interval")
    p_crank.add_argument("--length", type=float, required=True, help="crank length")
    p_crank.add_argument("--pivot", type=_parse_vec, required=True, help="pivot block (x,y)")
    p_crank.add_argument("--phidot", type=float, required=True, help="drive rate")
    p_crank.add_argument("--from", type=float, required=True, dest="phi_from",
                         help="first crank angle")
    p_crank.add_argument("--to", type=float, required=True, dest="phi_to",
                         help="last crank angle")
    p_crank.add_argument("--steps", type=_positive_int, required=True)
    p_crank.add_argument("--degrees", action="store_true",
                         help="angles in degrees on input and output")
    p_crank.add_argument("--csv", action="store_true", help="CSV table instead of JSON")
    p_crank.add_argument("--svg", metavar="PATH", help="write curves of s, psi, and derivatives")

    p_osc = sub.add_parser("oscillator",
                           help="integrate the harmonic oscillator in phase space")
    p_osc.add_argument("--mass", type=float, required=True)
    p_osc.add_argument("--stiffness", type=float, required=True)
    p_osc.add_argument("--q0", type=float, required=True)
    p_osc.add_argument("--p0", type=float, required=True)
    p_osc.add_argument("--dt", type=float, required=True)
    p_osc.add_argument("--steps", type=_positive_int, required=True)
    p_osc.add_argument("--method", choices=sorted(_METHOD_NAMES), required=True)
    p_osc.add_argument("--csv", action="store_true", help="CSV table instead of JSON")
    p_osc.add_argument("--svg", metavar="PATH", help="write a phase portrait")

    return parser


def _run_identities(args: argparse.Namespace) -> tuple[dict, str | None, int]:
    rng = random.Random(args.seed)
    span = args.span
    names = ("jacobi", "grassmann_full", "lagrange", "grassmann_reduced", "binet_cauchy")
    maxima = dict.fromkeys(names, 0.0)
    within = True
    for _ in range(args.samples):
        vectors = [Vec2(rng.uniform(-span, span), rng.uniform(-span, span)) for _ in range(4)]
        a, b, c, d = vectors
        magnitudes = identity_residuals(a, b, c, d).magnitudes()
        tol = IDENTITY_RTOL * (1.0 + norm(a) * norm(b) * norm(c) * norm(d))
        for name, value in magnitudes.items():
            if value > maxima[name]:
                maxima[name] = value
            if value > tol:
                within = False
    report = {
        "subcommand": "identities",
        "input": {"samples": args.samples, "seed": args.seed, "range": span},
        "results": {"samples": args.samples, "within_tolerance": within},
        "residuals": maxima,
    }
    csv_text = None
    if args.csv:
        csv_text = _csv_text(["identity", "max_residual"],
                             [[name, _fmt(maxima[name])] for name in names])
    return report, csv_text, EXIT_OK if within else EXIT_SINGULAR


def _run_intersect(args: argparse.Namespace) -> tuple[dict, str | None, int]:
    line1 = Line(args.a, args.u)
    line2 = Line(args.b, args.v)
    result = intersect_lines(line1, line2)
    closure = (line2.point - line1.point) + args.v * result.mu - args.u * result.lam
    report = {
        "subcommand": "intersect",
        "input": {"a": _vec_json(args.a), "u": _vec_json(args.u),
                  "b": _vec_json(args.b), "v": _vec_json(args.v)},
        "results": {"point": _vec_json(result.point), "lambda": result.lam, "mu": result.mu},
        "residuals": {"loop_closure": norm(closure)},
    }
    return report, None, EXIT_OK


def _tangents_svg(c1: Circle, c2: Circle, tangents: list[Tangent], path: str) -> None:
    plot = SvgPlot("common tangents")
    plot.circle(c1.center.x, c1.center.y, c1.radius, color="#1f77b4", label="circle 1")
    plot.circle(c2.center.x, c2.center.y, c2.radius, color="#2ca02c", label="circle 2")
    seen_kinds: set[str] = set()
    for t in tangents:
        color = "#d62728" if t.kind == "inner" else "#ff7f0e"
        along = tilde(t.direction_e) * (0.15 * t.lam)
        p1 = t.touch1 - along
        p2 = t.touch2 + along
        label = t.kind if t.kind not in seen_kinds else None
        seen_kinds.add(t.kind)
        plot.segment(p1.x, p1.y, p2.x, p2.y, color=color, width=1.2, label=label)
        plot.marker(t.touch1.x, t.touch1.y, color="#333333")
        plot.marker(t.touch2.x, t.touch2.y, color="#333333")
    plot.write(path)


def _run_tangents(args: argparse.Namespace) -> tuple[dict, str | None, int]:
    tangents = circle_tangents(args.c1, args.c2)
    max_error = 0.0
    entries = []
    for t in tangents:
        max_error = max(max_error, tangent_distance_error(t, args.c1, args.c2))
        entries.append({
            "kind": t.kind,
            "lambda": t.lam,
            "touch1": _vec_json(t.touch1),
            "touch2": _vec_json(t.touch2),
            "e": _vec_json(t.direction_e),
        })
    if args.svg:
        _tangents_svg(args.c1, args.c2, tangents, args.svg)
    report = {
        "subcommand": "tangents",
        "input": {
            "c1": [args.c1.center.x, args.c1.center.y, args.c1.radius],
            "c2": [args.c2.center.x, args.c2.center.y, args.c2.radius],
            "svg": args.svg,
        },
        "results": {"count": len(tangents), "tangents": entries},
        "residuals": {"max_tangency_error": max_error},
    }
    return report, None, EXIT_OK


_CRANK_COLUMNS = ("phi", "s", "psi", "psi_unwrapped", "s_dot", "psi_dot", "s_ddot", "psi_ddot")
_CRANK_ANGULAR = {"phi", "psi", "psi_unwrapped", "psi_dot", "psi_ddot"}


def _crank_entry_values(entry: SweepEntry, degrees: bool) -> dict[str, float | None]:
    """Column values for one sweep entry, angles converted on the way out."""
    state = entry.state
    if state is None:
        values: dict[str, float | None] = dict.fromkeys(_CRANK_COLUMNS, None)
        values["phi"] = entry.phi
    else:
        values = {
            "phi": entry.phi,
            "s": state.s,
            "psi": state.psi,
            "psi_unwrapped": entry.psi_unwrapped,
            "s_dot": state.s_dot,
            "psi_dot": state.psi_dot,
            "s_ddot": state.s_ddot,
            "psi_ddot": state.psi_ddot,
        }
    if degrees:
        for name in _CRANK_ANGULAR:
            if values[name] is not None:
                values[name] = values[name] / _DEG
    return values


def _crank_svg(entries: list[SweepEntry], degrees: bool, path: str) -> None:
    plot = SvgPlot("slider-crank sweep")
    series = ("s", "psi_unwrapped", "s_dot", "psi_dot", "s_ddot", "psi_ddot")
    for name, color in zip(series, PALETTE):
        runs: list[list[tuple[float, float]]] = [[]]
        for entry in entries:
            values = _crank_entry_values(entry, degrees)
            if values[name] is None:
                if runs[-1]:
                    runs.append([])
                continue
            runs[-1].append((values["phi"], values[name]))
        labeled = False
        for run in runs:
            if len(run) < 2:
                continue
            plot.polyline(run, color=color, label=None if labeled else name)
            labeled = True
    plot.write(path)


def _run_crank(args: argparse.Namespace) -> tuple[dict, str | None, int]:
    cfg = CrankConfig(args.length, args.pivot, args.phidot)
    phi_from = args.phi_from * _DEG if args.degrees else args.phi_from
    phi_to = args.phi_to * _DEG if args.degrees else args.phi_to
    entries = crank_sweep(cfg, phi_from, phi_to, args.steps)
    max_residuals = [0.0, 0.0, 0.0]
    rows = []
    for entry in entries:
        if entry.state is not None:
            residuals = loop_residuals(cfg, entry.state)
            max_residuals = [max(m, r) for m, r in zip(max_residuals, residuals)]
        values = _crank_entry_values(entry, args.degrees)
        row = dict(values)
        row["singular"] = entry.singular
        row["near_singular"] = entry.near_singular
        rows.append(row)
    if args.svg:
        _crank_svg(entries, args.degrees, args.svg)
    report = {
        "subcommand": "crank",
        "input": {
            "length": args.length, "pivot": _vec_json(args.pivot), "phidot": args.phidot,
            "from": args.phi_from, "to": args.phi_to, "steps": args.steps,
            "degrees": args.degrees, "svg": args.svg,
        },
        "results": {"entries": rows},
        "residuals": {
            "max_position_closure": max_residuals[0],
            "max_velocity_closure": max_residuals[1],
            "max_acceleration_closure": max_residuals[2],
        },
    }
    csv_text = None
    if args.csv:
        header = list(_CRANK_COLUMNS) + ["singular", "near_singular"]
        csv_rows = []
        for row in rows:
            csv_row = ["" if row[c] is None else _fmt(row[c]) for c in _CRANK_COLUMNS]
            csv_row.append("true" if row["singular"] else "false")
            csv_row.append("true" if row["near_singular"] else "false")
            csv_rows.append(csv_row)
        csv_text = _csv_text(header, csv_rows)
    return report, csv_text, EXIT_OK


def _oscillator_svg(trajectory: Trajectory, path: str) -> None:
    plot = SvgPlot("phase portrait")
    initial = trajectory.states[0]
    period = 2.0 * math.pi / trajectory.params.omega
    ellipse = []
    for i in range(257):
        s = analytic_oscillator(period * i / 256.0, initial, trajectory.params)
        ellipse.append((s.q, s.p))
    plot.polyline(ellipse, color="#7f7f7f", width=1.0, label="energy ellipse")
    plot.polyline([(s.q, s.p) for s in trajectory.states], color="#1f77b4",
                  label=trajectory.integrator)
    plot.marker(initial.q, initial.p, color="#d62728", label="initial state")
    plot.write(path)


def _run_oscillator(args: argparse.Namespace) -> tuple[dict, str | None, int]:
    params = OscillatorParams(args.mass, args.stiffness)
    initial = PhaseState(args.q0, args.p0, 0.0)
    trajectory = simulate(initial, params, args.dt, args.steps, _METHOD_NAMES[args.method])
    max_drift = 0.0
    for state in trajectory.states:
        max_drift = max(max_drift, abs(ellipse_residual(state, initial, params)))
    if args.svg:
        _oscillator_svg(trajectory, args.svg)
    final = trajectory.states[-1]
    report = {
        "subcommand": "oscillator",
        "input": {
            "mass": args.mass, "stiffness": args.stiffness, "q0": args.q0, "p0": args.p0,
            "dt": args.dt, "steps": args.steps, "method": args.method, "svg": args.svg,
        },
        "results": {
            "final": {"t": final.t, "q": final.q, "p": final.p,
                      "energy": hamiltonian(final, params)},
            "states": [[s.t, s.q, s.p] for s in trajectory.states],
        },
        "residuals": {"max_energy_drift": max_drift},
    }
    csv_text = None
    if args.csv:
        csv_rows = [
            [_fmt(s.t), _fmt(s.q), _fmt(s.p), _fmt(hamiltonian(s, params))]
            for s in trajectory.states
        ]
        csv_text = _csv_text(["t", "q", "p", "energy"], csv_rows)
    return report, csv_text, EXIT_OK


_RUNNERS = {
    "identities": _run_identities,
    "intersect": _run_intersect,
    "tangents": _run_tangents,
    "crank": _run_crank,
    "oscillator": _run_oscillator,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    started = time.perf_counter()
    try:
        report, csv_text, exit_code = _RUNNERS[args.subcommand](args)
    except DegeneracyError as exc:
        print(f"sympgeo: geometric degeneracy: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except SingularityError as exc:
        print(f"sympgeo: numerical singularity: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ValueError as exc:
        print(f"sympgeo: invalid value: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"sympgeo: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        report["wall_time_ms"] = (time.perf_counter() - started) * 1000.0
        print(json.dumps(report, indent=2))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
