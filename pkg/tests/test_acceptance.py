"""Acceptance suite: every headline claim at its stated tolerance.

Each test prints one pass/fail line (run with ``pytest -s`` to see them all)
and then asserts, so the suite doubles as a readable report.
"""

import math

import numpy as np
from scipy.linalg import expm

from robustgates import quaternions as quat
from robustgates.analysis import find_high_order_axes, gate_family, state_error_survey, \
    estimate_error_order
from robustgates.ising import (CNOT, cnot_from_cphase, elements_unitary,
                               propagator_fidelity, robust_ising_elements, robust_ising_gate,
                               simple_ising_gate, tilted_evolution, tilted_generator)
from robustgates.phases import solve_bb1_phases
from robustgates.pulses import (ErrorModel, Pulse, inversion_efficiency, pulse_unitary,
                                sequence_quaternion)
from robustgates.pulseprogram import load_program, save_program
from robustgates.sequences import (bb1, bb1_fidelity_closed_form, bb1_not_infidelity_series,
                                   conventional_inversion, naive, naive_not_infidelity_series)

IDEAL_NOT = quat.Quaternion(0.0, [1.0, 0.0, 0.0])
IDEAL_GATE = simple_ising_gate(0.0)
GRID_401 = np.linspace(-1.0, 1.0, 401)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def report(number: int, description: str, passed: bool) -> None:
    print(f"criterion {number:2d} [{'PASS' if passed else 'FAIL'}] {description}")
    assert passed, f"criterion {number} failed: {description}"


def round_2sf(value: float) -> float:
    if value == 0.0:
        return 0.0
    return round(value, -int(math.floor(math.log10(abs(value)))) + 1)


def not_fidelity(seq, g):
    return quat.fidelity(sequence_quaternion(seq, ErrorModel(length_error=g)), IDEAL_NOT)


def test_criterion_01_infidelity_table():
    expected = {0.1: (1.2e-2, 4.6e-6), 0.03: (1.1e-3, 3.4e-9), 0.01: (1.2e-4, 4.7e-12)}
    ok = True
    for g, (naive_ref, bb1_ref) in expected.items():
        naive_inf = 1 - not_fidelity(naive(np.pi), g)
        bb1_inf = 1 - not_fidelity(bb1(np.pi), g)
        ok &= round_2sf(naive_inf) == naive_ref
        ok &= round_2sf(bb1_inf) == bb1_ref
    series_expected = {0.003: (1.1e-5, 3.4e-15), 0.001: (1.2e-6, 4.7e-18)}
    for g, (naive_ref, bb1_ref) in series_expected.items():
        ok &= round_2sf(naive_not_infidelity_series(g)) == naive_ref
        ok &= round_2sf(bb1_not_infidelity_series(g)) == bb1_ref
    report(1, "infidelity table reproduced to 2 significant figures", ok)


def test_criterion_02_bb1_closed_form():
    sim = np.array([not_fidelity(bb1(np.pi), g) for g in GRID_401])
    worst = np.max(np.abs(sim - bb1_fidelity_closed_form(GRID_401)))
    report(2, f"BB1 NOT fidelity matches its closed form (worst {worst:.2e})", worst < 1e-12)


def test_criterion_03_conventional_equals_naive():
    worst = max(abs(not_fidelity(conventional_inversion(), g) - abs(np.cos(g * np.pi / 2)))
                for g in GRID_401)
    report(3, f"conventional composite fidelity equals cos(g pi/2) (worst {worst:.2e})",
           worst < 1e-12)


def test_criterion_04_inversion_efficiency():
    worst = max(abs(inversion_efficiency(conventional_inversion(), g)
                    - (np.cos(np.pi * g) + 0.5 * np.sin(np.pi * g) ** 2))
                for g in GRID_401)
    report(4, f"composite inversion efficiency matches closed form (worst {worst:.2e})",
           worst < 1e-12)


def test_criterion_05_cluster_placement_and_time_symmetry():
    gs = np.arange(-1.0, 1.0001, 0.05)
    reference = np.array([not_fidelity(bb1(np.pi, 0.0, 0.5), g) for g in gs])
    worst_shift = max(
        np.max(np.abs(np.array([not_fidelity(bb1(np.pi, 0.0, p), g) for g in gs]) - reference))
        for p in (0.0, 0.25, 1.0))
    worst_vz = max(abs(sequence_quaternion(bb1(np.pi), ErrorModel(length_error=g)).vector[2])
                   for g in gs)
    report(5, f"cluster placement invariant ({worst_shift:.2e}) and v_z = 0 ({worst_vz:.2e})",
           worst_shift < 1e-12 and worst_vz < 1e-12)


def test_criterion_06_phase_solver():
    ok = True
    for theta in (np.pi / 4, np.pi / 2, np.pi, 2 * np.pi):
        phi1, _ = solve_bb1_phases(theta)
        ok &= abs(phi1 - np.arccos(-theta / (4 * np.pi))) < 1e-6
    phi1_not, _ = solve_bb1_phases(np.pi)
    ok &= abs(np.degrees(phi1_not) - 104.4775) < 1e-3
    phi1_90, _ = solve_bb1_phases(np.pi / 2)
    ok &= abs(np.degrees(phi1_90) - 97.2) < 0.05
    report(6, "solver recovers arccos(-theta/4pi) within 1e-6 rad", ok)


def test_criterion_07_error_orders():
    ok = True
    ok &= abs(estimate_error_order(gate_family(naive(np.pi))).exponent - 2.0) < 0.1
    ok &= abs(estimate_error_order(gate_family(bb1(np.pi))).exponent - 6.0) < 0.2
    for axis in ([0, 0, 1], [0, 0, -1]):
        estimate = estimate_error_order(gate_family(conventional_inversion()),
                                        metric="state", initial_state=axis)
        ok &= abs(estimate.exponent - 4.0) < 0.2
    for _label, result in state_error_survey(bb1(np.pi)):
        ok &= not isinstance(result, str) and abs(result.exponent - 6.0) < 0.3
    axes = find_high_order_axes(bb1(np.pi), 1.0)
    ok &= len(axes) == 2
    ok &= abs((axes[1].angle_deg - axes[0].angle_deg) - 180.0) < 1e-6
    ok &= all(item.estimate.exponent >= 9.5 for item in axes)
    report(7, "fitted error orders: 2 / 4 / 6 / 6 and two g^10 axes", ok)


def test_criterion_08_robust_ising_gate():
    infid = lambda gate: 1 - propagator_fidelity(gate, IDEAL_GATE)
    ok = all(infid(robust_ising_gate(g)) < 1e-6 for g in np.arange(-0.1, 0.1001, 0.002))
    # simple gate needs |g| <= ~0.0018 for the same quality: >50x tighter
    ok &= infid(simple_ising_gate(0.0018)) < 1e-6
    ok &= infid(simple_ising_gate(0.0019)) > 1e-6
    ok &= 0.1 / 0.0019 > 50
    for g in np.arange(0.02, 0.1001, 0.002):
        series = 63 * np.pi**6 * g**6 / 65536
        ok &= abs(infid(robust_ising_gate(g)) - series) / series < 0.10
        ok &= abs(infid(robust_ising_gate(-g)) - series) / series < 0.10
    report(8, "robust gate < 1e-6 infidelity over +-10% coupling error", ok)


def test_criterion_09_fidelity_gain_transfer():
    ideal_q = quat.from_axis_angle(np.pi / 2, [1.0, 0.0, 0.0])
    worst = 0.0
    for g in GRID_401:
        two = propagator_fidelity(robust_ising_gate(g), IDEAL_GATE)
        one = quat.fidelity(sequence_quaternion(bb1(np.pi / 2), ErrorModel(length_error=g)),
                            ideal_q)
        worst = max(worst, abs(two - one))
    report(9, f"Ising fidelity equals single-qubit BB1(90deg) (worst {worst:.2e})",
           worst < 1e-10)


def test_criterion_10_cnot_identity():
    value = propagator_fidelity(cnot_from_cphase(0.0), CNOT)
    robust_value = propagator_fidelity(cnot_from_cphase(0.0, robust=True), CNOT)
    report(10, f"controlled-NOT assembly exact at zero error (F = {value:.15f})",
           value > 1 - 1e-12 and robust_value > 1 - 1e-12)


def test_criterion_11_expm_oracle_agreement():
    rng = np.random.default_rng(2023)
    worst = 0.0
    for _ in range(300):
        angle = rng.uniform(0, 3 * np.pi)
        phase = rng.uniform(0, 2 * np.pi)
        g, f = rng.uniform(-1, 1), rng.uniform(-1, 1)
        closed = pulse_unitary(Pulse(angle, phase), ErrorModel(max(g, -1.0), f))
        generator = (1 + max(g, -1.0)) * (np.cos(phase) * SX + np.sin(phase) * SY) / 2 \
            + f * SZ / 2
        worst = max(worst, np.max(np.abs(closed - expm(-1j * angle * generator))))
    for _ in range(200):
        theta = rng.uniform(0, 2 * np.pi)
        phi = rng.uniform(0, 2 * np.pi)
        g = rng.uniform(-1, 1)
        built = tilted_evolution(theta, phi, g)
        oracle = expm(-1j * theta * (1 + g) * tilted_generator(phi))
        worst = max(worst, np.max(np.abs(built - oracle)))
    report(11, f"closed forms match scaling-and-squaring oracle on 500 draws "
               f"(worst {worst:.2e})", worst < 1e-10)


def test_criterion_12_round_trips(tmp_path):
    path = tmp_path / "robust.pulseprog"
    save_program(robust_ising_elements(), path)
    loaded = load_program(path)
    worst = max(
        abs(propagator_fidelity(robust_ising_gate(g), IDEAL_GATE)
            - propagator_fidelity(elements_unitary(loaded, coupling_error=g), IDEAL_GATE))
        for g in (-0.4, 0.05, 0.1, 0.8))

    csv_path = tmp_path / "curve.csv"
    from robustgates.cli import main
    code = main(["sweep", "--sequence", "bb1", "--steps", "101", "--out", str(csv_path)])
    from robustgates.analysis import fidelity_sweep
    curve = fidelity_sweep(gate_family(bb1(np.pi)), (-1.0, 1.0, 101))
    rows = [line.split(",") for line in csv_path.read_text().splitlines()[1:]]
    csv_exact = all(float(g_text) == g and float(f_text) == f
                    for (g_text, f_text), g, f in zip(rows, curve.g, curve.fidelity))
    report(12, f"pulse program re-simulates identically ({worst:.2e}) and CSV is bit-exact",
           code == 0 and worst < 1e-12 and csv_exact)
