"""Series estimation and numerical rediscovery of the broadband phase angles."""

import numpy as np
import pytest

from robustgates import quaternions as quat
from robustgates.phases import (GaugeError, estimate_series, solve_bb1_phases,
                                solve_bb1_phases_free)
from robustgates.pulses import ErrorModel, sequence_quaternion
from robustgates.sequences import bb1_template, naive


def naive_builder(_phi1, _phi2):
    return naive(np.pi)


def bb1_not_builder(phi1, phi2):
    return bb1_template(np.pi, phi1, phi2)


class TestEstimateSeries:
    def test_naive_first_order_scalar(self):
        # d/dg cos((1+g) pi / 2) at 0 is -pi/2
        series = estimate_series(naive_builder, (0.0, 0.0))
        assert abs(series.first[0] + np.pi / 2) < 1e-8

    def test_bb1_solution_coefficients_vanish(self):
        phi1 = np.arccos(-0.25)
        series = estimate_series(bb1_not_builder, (phi1, 3 * phi1))
        assert abs(series.first[0]) < 1e-8
        assert abs(series.first[2]) < 1e-8

    @pytest.mark.parametrize("phi1", [1.9, 2.2, 2.8])
    def test_generic_phase_scalar_coefficient(self, phi1):
        # with phi2 = 3 phi1 the first-order scalar term is -pi(1+4cos(phi1))/2
        series = estimate_series(bb1_not_builder, (phi1, 3 * phi1))
        assert abs(series.first[0] + 0.5 * np.pi * (1 + 4 * np.cos(phi1))) < 1e-6

    def test_stable_under_step_halving(self):
        coarse = estimate_series(naive_builder, (0.0, 0.0), step=1e-4)
        fine = estimate_series(naive_builder, (0.0, 0.0), step=5e-5)
        relative = abs(coarse.first[0] - fine.first[0]) / abs(fine.first[0])
        assert relative < 1e-6

    def test_second_order(self):
        # v_x = sin((1+g) pi / 2) has second derivative -(pi/2)^2 at g = 0
        series = estimate_series(naive_builder, (0.0, 0.0), order=2)
        assert series.second is not None
        assert abs(series.second[1] + (np.pi / 2) ** 2) < 1e-5

    def test_order_validated(self):
        with pytest.raises(ValueError):
            estimate_series(naive_builder, (0.0, 0.0), order=3)

    def test_degenerate_gauge_reported(self):
        # a y-axis pulse has v_x = 0: the v_x > 0 gauge cannot anchor
        def y_pulse(_phi1, _phi2):
            return naive(np.pi, np.pi / 2)

        with pytest.raises(GaugeError):
            estimate_series(y_pulse, (0.0, 0.0))


class TestSolver:
    @pytest.mark.parametrize("theta", [np.pi / 4, np.pi / 2, np.pi, 1.0, 2.5, 2 * np.pi])
    def test_matches_closed_form(self, theta):
        phi1, phi2 = solve_bb1_phases(theta)
        assert abs(phi1 - np.arccos(-theta / (4 * np.pi))) < 1e-9
        assert abs(phi2 - 3 * phi1) < 1e-12

    def test_not_gate_in_degrees(self):
        phi1, _ = solve_bb1_phases(np.pi)
        assert abs(np.degrees(phi1) - 104.4775) < 1e-3

    def test_small_angle_limit(self):
        phi1, _ = solve_bb1_phases(1e-3)
        assert abs(phi1 - np.pi / 2) < 1e-4

    def test_domain_validated(self):
        with pytest.raises(ValueError):
            solve_bb1_phases(0.0)
        with pytest.raises(ValueError):
            solve_bb1_phases(2 * np.pi + 0.1)

    def test_solution_invariant_under_step_halving(self):
        coarse = solve_bb1_phases(np.pi, step=1e-4)[0]
        fine = solve_bb1_phases(np.pi, step=5e-5)[0]
        assert abs(coarse - fine) < 1e-9

    def test_infidelity_series_low_orders_cancelled(self):
        # fit 1 - F = c2 g^2 + c4 g^4 + c6 g^6 over g in [1e-3, 1e-2]:
        # at the solution both low-order coefficients are negligible
        phi1, phi2 = solve_bb1_phases(np.pi)
        seq = bb1_template(np.pi, phi1, phi2)
        ideal = sequence_quaternion(seq)
        gs = np.geomspace(1e-3, 1e-2, 12)
        infidelity = np.array([
            1 - quat.fidelity(sequence_quaternion(seq, ErrorModel(length_error=g)), ideal)
            for g in gs
        ])
        design = np.stack([gs**2, gs**4, gs**6], axis=1)
        (c2, c4, c6), *_ = np.linalg.lstsq(design, infidelity, rcond=None)
        assert abs(c2) < 1e-6
        assert abs(c4) < 1e-6
        assert abs(c6 - 5 * np.pi**6 / 1024) / (5 * np.pi**6 / 1024) < 0.05

    def test_negative_branch_equivalent(self):
        # mirroring all cluster phases leaves the fidelity curve unchanged
        phi1, phi2 = solve_bb1_phases(np.pi)
        ideal = quat.Quaternion(0.0, [1.0, 0.0, 0.0])
        for g in np.linspace(-0.9, 0.9, 19):
            error = ErrorModel(length_error=g)
            positive = quat.fidelity(
                sequence_quaternion(bb1_template(np.pi, phi1, phi2), error), ideal)
            negative = quat.fidelity(
                sequence_quaternion(bb1_template(np.pi, -phi1, -phi2), error), ideal)
            assert abs(positive - negative) < 1e-12


class TestFreeSearch:
    def test_recovers_phase_relation(self):
        phi1, phi2 = solve_bb1_phases_free(np.pi)
        residual = (phi2 - 3 * phi1) % (2 * np.pi)
        residual = min(residual, 2 * np.pi - residual)
        assert residual < 1e-4
        assert abs(phi1 - np.arccos(-0.25)) < 1e-4
