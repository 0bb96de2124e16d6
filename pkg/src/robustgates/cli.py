"""Command-line front end: infidelity tables, fidelity sweeps, phase solving,
Ising-gate evaluation and the high-order-axis scan.

Angles are degrees at this surface and radians inside.  Data goes to stdout
or to the requested file; diagnostics go to stderr; the exit status is 0
exactly when the command completed.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import analysis, ising, phases, pulseprogram, sequences
from .pulses import ErrorModel, sequence_quaternion
from .quaternions import fidelity, from_axis_angle
from .sequences import bb1_not_infidelity_series, naive_not_infidelity_series

TABLE_ROWS = (0.1, 0.03, 0.01, 0.003, 0.001)
#: rows at or below this error are evaluated from the leading-order series
SERIES_THRESHOLD = 0.003

AXIS_VECTORS = {
    "x": (1.0, 0.0, 0.0), "-x": (-1.0, 0.0, 0.0),
    "y": (0.0, 1.0, 0.0), "-y": (0.0, -1.0, 0.0),
    "z": (0.0, 0.0, 1.0), "-z": (0.0, 0.0, -1.0),
}


def _not_infidelities(g: float) -> tuple[float, float]:
    """Directly simulated naive and broadband-composite NOT infidelities at error g."""
    error = ErrorModel(length_error=g)
    ideal = from_axis_angle(np.pi, [1.0, 0.0, 0.0])
    naive_f = fidelity(sequence_quaternion(sequences.naive(np.pi), error), ideal)
    bb1_f = fidelity(sequence_quaternion(sequences.bb1(np.pi), error), ideal)
    return 1.0 - naive_f, 1.0 - bb1_f


def _cmd_table1(args) -> int:
    rows = list(TABLE_ROWS) + list(args.extra_row or [])
    print(f"{'g':>8}  {'naive':>9}  {'BB1':>9}  method")
    for g in rows:
        if abs(g) <= SERIES_THRESHOLD:
            naive_inf = naive_not_infidelity_series(g)
            bb1_inf = bb1_not_infidelity_series(g)
            method = "series"
        else:
            naive_inf, bb1_inf = _not_infidelities(g)
            method = "simulated"
        print(f"{g:8.4f}  {naive_inf:9.1e}  {bb1_inf:9.1e}  {method}")
    return 0


def _sweep_gate(args):
    theta = np.radians(args.theta)
    phase = np.radians(args.phase)
    if args.sequence == "naive":
        return analysis.gate_family(sequences.naive(theta, phase))
    if args.sequence == "conventional":
        return analysis.gate_family(sequences.conventional_inversion())
    if args.sequence == "bb1":
        return analysis.gate_family(sequences.bb1(theta, phase, args.cluster))
    if args.sequence == "ising-simple":
        return ising.simple_ising_gate
    return ising.robust_ising_gate


def _cmd_sweep(args) -> int:
    if args.sequence.startswith("ising-") and args.metric != "propagator":
        raise ValueError(f"the {args.sequence} sequence supports only the propagator metric")
    initial_state = None
    if args.metric == "state":
        initial_state = AXIS_VECTORS[args.initial_axis]
    curve = analysis.fidelity_sweep(
        _sweep_gate(args), (args.gmin, args.gmax, args.steps),
        metric=args.metric, initial_state=initial_state, name=args.sequence,
    )
    lines = [f"g,{args.metric}"]
    lines += [f"{float(g)!r},{float(value)!r}" for g, value in zip(curve.g, curve.fidelity)]
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {len(curve.g)} samples to {args.out}", file=sys.stderr)
    return 0


def _cmd_solve(args) -> int:
    theta = np.radians(args.theta)
    phi1, phi2 = phases.solve_bb1_phases(theta)
    reference = sequences.bb1_phase(theta)
    print(f"target angle: {args.theta:g} deg")
    print(f"solver:      phi1 = {np.degrees(phi1):.6f} deg, phi2 = {np.degrees(phi2):.6f} deg")
    print(f"closed form: phi1 = {np.degrees(reference):.6f} deg, "
          f"phi2 = {np.degrees(3 * reference):.6f} deg")
    print(f"difference:  {abs(np.degrees(phi1 - reference)):.3e} deg")
    return 0


def _cmd_ising(args) -> int:
    kind = "robust" if args.robust else "simple"
    gate = ising.robust_ising_gate(args.g) if args.robust else ising.simple_ising_gate(args.g)
    value = ising.propagator_fidelity(gate, ising.simple_ising_gate(0.0))
    print(f"{kind} Ising controlled-phase gate at coupling error g = {args.g:g}")
    print(f"propagator fidelity vs ideal: {value!r}")
    if args.export is not None:
        if args.robust:
            elements = ising.robust_ising_elements()
        else:
            elements = [ising.IsingDelay(np.pi / 2)]
        pulseprogram.save_program(elements, args.export)
        print(f"wrote pulse program to {args.export}", file=sys.stderr)
    return 0


def _cmd_axes(args) -> int:
    found = analysis.find_high_order_axes(sequences.bb1(np.pi), args.resolution)
    print("high-order initial-state axes of the broadband NOT composite (xz plane):")
    for item in found:
        print(f"  {item.angle_deg:8.3f} deg from +z: "
              f"exponent {item.estimate.exponent:.2f}, "
              f"coefficient {item.estimate.coefficient:.3e}, "
              f"fit window g in [{item.estimate.g_min:g}, {item.estimate.g_max:g}]")
    print(f"({len(found)} axes; an axis and its negation behave identically)")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="robustgates",
        description="Composite-pulse quantum gates under systematic errors: "
                    "tables, sweeps, phase solving and pulse-program export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table1", help="naive vs broadband NOT-gate infidelity table")
    table.add_argument("--extra-row", type=float, action="append", metavar="G",
                       help="append a row at error fraction G (repeatable)")
    table.set_defaults(func=_cmd_table1)

    sweep = sub.add_parser("sweep", help="write a fidelity-vs-error curve as CSV")
    sweep.add_argument("--sequence", required=True,
                       choices=["naive", "conventional", "bb1", "ising-simple", "ising-robust"])
    sweep.add_argument("--theta", type=float, default=180.0,
                       help="target rotation angle in degrees (single-qubit sequences)")
    sweep.add_argument("--phase", type=float, default=0.0,
                       help="target phase in degrees (single-qubit sequences)")
    sweep.add_argument("--cluster", type=float, default=0.5,
                       help="bb1 cluster position in [0, 1]")
    sweep.add_argument("--metric", default="quaternion",
                       choices=["quaternion", "propagator", "inversion", "state"])
    sweep.add_argument("--initial-axis", default="z", choices=sorted(AXIS_VECTORS),
                       help="initial state for the state metric (use --initial-axis=-x forms)")
    sweep.add_argument("--gmin", type=float, default=-1.0)
    sweep.add_argument("--gmax", type=float, default=1.0)
    sweep.add_argument("--steps", type=int, default=401)
    sweep.add_argument("--out", required=True, help="output CSV path, or - for stdout")
    sweep.set_defaults(func=_cmd_sweep)

    solve = sub.add_parser("solve", help="rediscover the broadband phase angles numerically")
    solve.add_argument("--theta", type=float, required=True,
                       help="target rotation angle in degrees, in (0, 360]")
    solve.set_defaults(func=_cmd_solve)

    gate = sub.add_parser("ising", help="evaluate the Ising controlled-phase gate")
    gate.add_argument("--g", type=float, default=0.0, help="fractional coupling error")
    gate.add_argument("--robust", action="store_true", help="use the composite gate")
    gate.add_argument("--export", metavar="PATH", help="write the pulse program to PATH")
    gate.set_defaults(func=_cmd_ising)

    axes = sub.add_parser("axes", help="scan xz-plane initial states for high-order axes")
    axes.add_argument("--resolution", type=float, default=1.0,
                      help="angular scan step in degrees (at most 1)")
    axes.set_defaults(func=_cmd_axes)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
