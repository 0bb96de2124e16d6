"""Fidelity sweeps, power-law error-order estimation and state surveys.

A "gate family" here is any callable mapping the error fraction g to a
unitary; :func:`gate_family` adapts a single-qubit pulse sequence, and the
two-qubit gates are usable directly.  Infidelities are fitted as
``1 - F = c * g^p`` by least squares on log-log axes over a window chosen
to sit above the double-precision noise floor and inside the leading-order
regime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import quaternions
from .ising import propagator_fidelity
from .pulses import ErrorModel, Pulse, apply_to_state, sequence_unitary

GateFamily = Callable[[float], np.ndarray]

METRICS = ("quaternion", "propagator", "inversion", "state")

#: infidelities below this are indistinguishable from rounding noise
NOISE_FLOOR = 1e-12
#: infidelities above this leave the leading-order regime
WINDOW_CEILING = 1e-2

CARDINAL_AXES = (
    ("+x", np.array([1.0, 0.0, 0.0])),
    ("-x", np.array([-1.0, 0.0, 0.0])),
    ("+y", np.array([0.0, 1.0, 0.0])),
    ("-y", np.array([0.0, -1.0, 0.0])),
    ("+z", np.array([0.0, 0.0, 1.0])),
    ("-z", np.array([0.0, 0.0, -1.0])),
)


class WindowExhausted(RuntimeError):
    """Too few samples between the noise floor and the leading-order ceiling."""


def gate_family(pulses: Sequence[Pulse]) -> GateFamily:
    """Adapt a pulse sequence into a callable g -> unitary (pulse-length error only)."""
    pulses = list(pulses)
    return lambda g: sequence_unitary(pulses, ErrorModel(length_error=g))


@dataclass(frozen=True)
class FidelityCurve:
    """Sampled metric-vs-error curve with the sequence and metric names attached."""

    g: np.ndarray
    fidelity: np.ndarray
    sequence: str = ""
    metric: str = "quaternion"

    def __post_init__(self):
        g = np.asarray(self.g, dtype=float)
        values = np.asarray(self.fidelity, dtype=float)
        if g.shape != values.shape or g.ndim != 1:
            raise ValueError("g and fidelity must be 1-D arrays of equal length")
        if np.any(np.diff(g) <= 0):
            raise ValueError("g samples must be strictly increasing")
        # the inversion metric legitimately spans [-1, 1]; the others are
        # fidelities in [0, 1]
        lower = -1.0 if self.metric == "inversion" else 0.0
        if np.any(values < lower - 1e-9) or np.any(values > 1.0 + 1e-9):
            raise ValueError(f"{self.metric} values outside [{lower}, 1]")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "fidelity", values)


def _metric_value(u: np.ndarray, u_ideal: np.ndarray, metric: str,
                  initial_state, ideal_quaternion, ideal_state) -> float:
    if metric == "quaternion":
        return quaternions.fidelity(quaternions.from_unitary(u), ideal_quaternion)
    if metric == "propagator":
        return propagator_fidelity(u, u_ideal)
    if metric == "inversion":
        return float(-apply_to_state(u, [0.0, 0.0, 1.0])[2])
    if metric == "state":
        return float(apply_to_state(u, initial_state) @ ideal_state)
    raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")


def _metric_context(gate: GateFamily, metric: str, initial_state):
    u_ideal = gate(0.0)
    ideal_quaternion = None
    ideal_state = None
    if metric == "quaternion":
        ideal_quaternion = quaternions.from_unitary(u_ideal)
    if metric == "state":
        if initial_state is None:
            raise ValueError("the state metric needs an initial Bloch vector")
        initial_state = np.asarray(initial_state, dtype=float)
        ideal_state = apply_to_state(u_ideal, initial_state)
    return u_ideal, ideal_quaternion, ideal_state, initial_state


def fidelity_sweep(gate: GateFamily, grid, metric: str = "quaternion",
                   initial_state=None, name: str = "") -> FidelityCurve:
    """Evaluate a metric over an error grid.

    ``grid`` is either an array of g values or a (g_min, g_max, steps)
    triple with steps >= 2; duplicate samples (g_min == g_max) collapse to
    a single point.  The sweep is deterministic: identical inputs give
    bit-identical curves.
    """
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")
    if isinstance(grid, tuple):
        g_min, g_max, steps = grid
        if steps < 2:
            raise ValueError(f"grid needs at least 2 steps, got {steps}")
        if g_max < g_min:
            raise ValueError(f"empty grid: g_max = {g_max} < g_min = {g_min}")
        gs = np.linspace(g_min, g_max, int(steps))
    else:
        gs = np.asarray(grid, dtype=float)
    gs = np.unique(gs)
    u_ideal, ideal_q, ideal_state, initial_state = _metric_context(gate, metric, initial_state)
    values = np.array([
        _metric_value(gate(g), u_ideal, metric, initial_state, ideal_q, ideal_state)
        for g in gs
    ])
    return FidelityCurve(g=gs, fidelity=values, sequence=name, metric=metric)


@dataclass(frozen=True)
class OrderEstimate:
    """Power-law fit 1 - F = coefficient * g^exponent over [g_min, g_max]."""

    exponent: float
    coefficient: float
    g_min: float
    g_max: float
    residual: float
    samples: int


def _infidelities(gate: GateFamily, gs: np.ndarray, metric: str, initial_state) -> np.ndarray:
    u_ideal, ideal_q, ideal_state, initial_state = _metric_context(gate, metric, initial_state)
    return np.array([
        1.0 - _metric_value(gate(g), u_ideal, metric, initial_state, ideal_q, ideal_state)
        for g in gs
    ])


def _fit_power_law(gs: np.ndarray, errors: np.ndarray,
                   floor: float = NOISE_FLOOR, ceiling: float = WINDOW_CEILING) -> OrderEstimate:
    usable = (errors > floor) & (errors < ceiling)
    if np.count_nonzero(usable) < 4:
        raise WindowExhausted(
            f"only {np.count_nonzero(usable)} samples with infidelity in "
            f"({floor:.0e}, {ceiling:.0e}); the error order is too high (or too low) "
            "to resolve on this grid in working precision"
        )
    x = np.log(gs[usable])
    y = np.log(errors[usable])
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return OrderEstimate(exponent=float(slope), coefficient=float(np.exp(intercept)),
                         g_min=float(gs[usable].min()), g_max=float(gs[usable].max()),
                         residual=residual, samples=int(np.count_nonzero(usable)))


def estimate_error_order(gate: GateFamily, metric: str = "quaternion",
                         initial_state=None, hint: float | None = None,
                         grid=None) -> OrderEstimate:
    """Fit the leading error order of a gate family under one metric.

    The fit window keeps samples with 1e-12 < 1 - F < 1e-2.  Orders beyond
    ~8 leave too little signal above the rounding floor at small g, so a
    high ``hint`` shifts the sample grid toward larger errors (g in
    [0.05, 0.3]) where the power law is still resolvable.
    """
    if grid is not None:
        gs = np.asarray(grid, dtype=float)
    elif hint is not None and hint >= 8:
        gs = np.geomspace(0.05, 0.3, 25)
    else:
        gs = np.geomspace(1e-3, 0.5, 61)
    errors = _infidelities(gate, gs, metric, initial_state)
    return _fit_power_law(gs, errors)


def state_error_survey(pulses: Sequence[Pulse]):
    """Error order of a sequence on each of the six cardinal initial states.

    The per-state error is one minus the overlap of the final Bloch vector
    with its ideal image.  States the sequence maps exactly (error never
    above the noise floor for any g) are reported as the string "exact";
    other window exhaustions are reported as "unresolved" rather than
    raising.
    """
    gate = gate_family(pulses)
    gs = np.geomspace(1e-3, 0.5, 61)
    results = []
    for label, axis in CARDINAL_AXES:
        errors = _infidelities(gate, gs, "state", axis)
        try:
            results.append((label, _fit_power_law(gs, errors)))
        except WindowExhausted:
            verdict = "exact" if np.max(errors) <= NOISE_FLOOR else "unresolved"
            results.append((label, verdict))
    return results


@dataclass(frozen=True)
class HighOrderAxis:
    """An xz-plane initial state whose error order peaks far above the bulk.

    ``angle_deg`` is measured from +z toward +x in [0, 360).  These states
    always come in antipodal pairs: the overlap error is exactly even under
    Bloch-vector negation, so the axis at angle_deg + 180 behaves
    identically.
    """

    angle_deg: float
    axis: np.ndarray
    estimate: OrderEstimate


def _xz_axis(angle_rad: float) -> np.ndarray:
    return np.array([np.sin(angle_rad), 0.0, np.cos(angle_rad)])


#: fit window for orders near the precision floor (the g^10 axes)
HIGH_ORDER_FIT_RANGE = (0.05, 0.3)


def find_high_order_axes(pulses: Sequence[Pulse], resolution_deg: float = 1.0,
                         order_floor: float = 8.0) -> list[HighOrderAxis]:
    """Scan xz-plane initial states for axes whose error order peaks far above the bulk.

    The full circle is scanned at ``resolution_deg`` (at most 1 degree) and
    local maxima of the fitted exponent above ``order_floor`` are kept.
    Each maximum is then refined: near a high-order axis the error at a
    fixed small g has a sharp dip (the leading coefficient crosses zero),
    but the dip location drifts with g^2 as higher orders shift the zero,
    so the dip is located at two reference errors and Richardson-
    extrapolated to g = 0.  The returned estimates are fitted over g in
    [0.05, 0.3], large enough that an order-10 law still clears the
    rounding floor.  For the broadband NOT composite exactly two axes
    emerge from the order-6 bulk, one antipodal pair.
    """
    if resolution_deg > 1.0:
        raise ValueError(f"resolution must be <= 1 degree, got {resolution_deg}")
    pulses = list(pulses)
    gs = np.geomspace(*HIGH_ORDER_FIT_RANGE, 13)
    u_ideal = sequence_unitary(pulses)
    us = [sequence_unitary(pulses, ErrorModel(length_error=g)) for g in gs]

    def state_errors(angle_rad: float) -> np.ndarray:
        axis = _xz_axis(angle_rad)
        ideal_state = apply_to_state(u_ideal, axis)
        return np.array([1.0 - apply_to_state(u, axis) @ ideal_state for u in us])

    def fitted_exponent(angle_rad: float) -> float:
        try:
            return _fit_power_law(gs, state_errors(angle_rad), floor=1e-13, ceiling=1.0).exponent
        except WindowExhausted:
            return np.inf

    angles = np.arange(0.0, 360.0, resolution_deg)
    exponents = np.array([fitted_exponent(np.radians(a)) for a in angles])

    n = len(angles)
    peak_angles = [
        angles[i] for i in range(n)
        if exponents[i] > order_floor
        and exponents[i] > exponents[(i - 1) % n]
        and exponents[i] > exponents[(i + 1) % n]
    ]

    # an axis and its negation carry the same error curve; refine each
    # line once and report both members of the pair
    lines: list[float] = []
    for angle in sorted(a % 180.0 for a in peak_angles):
        if not any(abs(angle - seen) < 1.5 * resolution_deg for seen in lines):
            lines.append(angle)

    golden = (np.sqrt(5.0) - 1.0) / 2.0

    def dip_location(center: float, g_ref: float) -> float:
        u_ref = sequence_unitary(pulses, ErrorModel(length_error=g_ref))

        def reference_error(angle_deg: float) -> float:
            axis = _xz_axis(np.radians(angle_deg))
            return float(1.0 - apply_to_state(u_ref, axis) @ apply_to_state(u_ideal, axis))

        lo, hi = center - 1.5 * resolution_deg, center + 1.5 * resolution_deg
        while hi - lo > 1e-7:
            a = hi - golden * (hi - lo)
            b = lo + golden * (hi - lo)
            if reference_error(a) < reference_error(b):
                hi = b
            else:
                lo = a
        return (lo + hi) / 2.0

    results = []
    for line in lines:
        dip_small = dip_location(line, 0.05)
        dip_large = dip_location(line, 0.10)
        best = (4.0 * dip_small - dip_large) / 3.0
        for angle in (best % 180.0, best % 180.0 + 180.0):
            estimate = _fit_power_law(gs, state_errors(np.radians(angle)),
                                      floor=1e-13, ceiling=1.0)
            results.append(HighOrderAxis(angle_deg=angle,
                                         axis=_xz_axis(np.radians(angle)),
                                         estimate=estimate))
    results.sort(key=lambda item: item.angle_deg)
    return results
