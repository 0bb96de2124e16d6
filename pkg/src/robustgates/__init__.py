"""Composite-pulse quantum logic gates robust against systematic errors.

Construction, simulation and verification of single-qubit broadband (BB1)
composite rotations and the matching robust two-qubit Ising controlled-
phase gate, under fractional pulse-length, off-resonance and coupling-
strength errors.
"""

from .analysis import (FidelityCurve, HighOrderAxis, OrderEstimate, WindowExhausted,
                       estimate_error_order, fidelity_sweep, find_high_order_axes,
                       gate_family, state_error_survey)
from .ising import (CNOT, CONTROLLED_PHASE, IsingDelay, SpinPulse, cnot_from_cphase,
                    controlled_phase, ising_evolution, propagator_fidelity,
                    robust_ising_elements, robust_ising_gate, simple_ising_gate,
                    tilted_evolution)
from .phases import (GaugeError, SeriesCoefficients, SolverError, estimate_series,
                     solve_bb1_phases, solve_bb1_phases_free)
from .pulses import (ErrorModel, Pulse, apply_to_state, inversion_efficiency,
                     pulse_unitary, sequence_quaternion, sequence_unitary,
                     state_from_angles)
from .pulseprogram import load_program, save_program
from .quaternions import Quaternion
from .sequences import (SequenceFamily, bb1, bb1_fidelity_closed_form, bb1_phase,
                        bb1_template, conventional_inversion, naive,
                        naive_not_fidelity, relative_durations)

__version__ = "0.1.0"

__all__ = [
    "CNOT", "CONTROLLED_PHASE", "ErrorModel", "FidelityCurve", "GaugeError",
    "HighOrderAxis", "IsingDelay", "OrderEstimate", "Pulse", "Quaternion",
    "SequenceFamily", "SeriesCoefficients", "SolverError", "SpinPulse",
    "WindowExhausted", "apply_to_state", "bb1", "bb1_fidelity_closed_form",
    "bb1_phase", "bb1_template", "cnot_from_cphase", "controlled_phase",
    "conventional_inversion", "estimate_error_order", "estimate_series",
    "fidelity_sweep", "find_high_order_axes", "gate_family", "inversion_efficiency",
    "ising_evolution", "load_program", "naive", "naive_not_fidelity",
    "propagator_fidelity", "pulse_unitary", "relative_durations",
    "robust_ising_elements", "robust_ising_gate", "save_program",
    "sequence_quaternion", "sequence_unitary", "simple_ising_gate",
    "solve_bb1_phases", "solve_bb1_phases_free", "state_error_survey",
    "state_from_angles", "tilted_evolution",
]
