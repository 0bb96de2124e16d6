"""Two-qubit gates built from Ising coupling, with fractional coupling errors.

The two spins are labelled I and S and the 4x4 matrices act on the basis
|aa>, |ab>, |ba>, |bb> (first label = spin I).  Free evolution under the
coupling rotates about the 2 I_z S_z axis; a fractional error g in the
coupling strength scales every evolution angle by (1 + g), exactly like a
pulse-length error on a single-qubit rotation.

A tilted evolution by ``theta`` about ``2 I_z S_z cos(phi) + 2 I_z S_x
sin(phi)`` is realised by sandwiching the bare evolution between single-
spin y rotations of -phi (before) and +phi (after); with that order the
sandwich equals the direct exponential of the tilted generator exactly,
which a unit test pins.  Chaining the tilted evolutions with angles
(pi/4, pi, 2 pi, pi, pi/4) and tilts (0, phi, 3 phi, phi, 0) at
phi = arccos(-1/8) and cancelling the back-to-back sandwich rotations
yields the robust controlled-phase gate: five delays in the exact ratios
1:4:8:4:1 of the unit time t = 1/4J, interleaved with six y rotations of
angle phi.  Its propagator fidelity under coupling errors is identical to
the single-qubit broadband composite for a 90-degree rotation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import sequences
from .pulses import (IDENTITY2, SIGMA_X, SIGMA_Z, ErrorModel, Pulse,
                     pulse_unitary, rotation_unitary, sequence_unitary)

IDENTITY4 = np.eye(4, dtype=complex)

#: z-parity of the basis states |aa>, |ab>, |ba>, |bb>
_PARITY = np.array([1.0, -1.0, -1.0, 1.0])

#: coupling generator 2 I_z S_z
ZZ_GENERATOR = np.diag(_PARITY).astype(complex) / 2.0
#: tilt partner 2 I_z S_x
ZX_GENERATOR = np.kron(SIGMA_Z, SIGMA_X).astype(complex) / 2.0

HADAMARD = (SIGMA_X + SIGMA_Z) / np.sqrt(2.0)

CONTROLLED_PHASE = np.diag([1.0, 1.0, 1.0, -1.0]).astype(complex)
CNOT = np.array([[1, 0, 0, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1],
                 [0, 0, 1, 0]], dtype=complex)

#: pulse phases selecting the +y / -y rotation axes
PLUS_Y = np.pi / 2
MINUS_Y = 3 * np.pi / 2

#: evolution angle accumulated in one unit time t = 1/4J
ANGLE_PER_UNIT_TIME = np.pi / 4

# Local z rotations by -pi/2 on both spins turn the bare pi/2 coupling
# evolution into the controlled-phase gate, up to a global phase exp(i pi/4).
_RZ_DRESS = rotation_unitary(-np.pi / 2, [0.0, 0.0, 1.0])
CPHASE_DRESSING = np.kron(_RZ_DRESS, _RZ_DRESS)

_HADAMARD_ON_S = np.kron(IDENTITY2, HADAMARD)


def _check_coupling_error(g: float) -> float:
    g = float(g)
    if not np.isfinite(g) or g < -1.0:
        raise ValueError(f"coupling error must be finite and >= -1, got {g}")
    return g


@dataclass(frozen=True)
class IsingDelay:
    """Free evolution under the coupling for the given angle at nominal strength."""

    angle: float

    @property
    def time_multiple(self) -> int | None:
        """Duration as an integer multiple of t = 1/4J, or None if non-commensurate."""
        multiple = self.angle / ANGLE_PER_UNIT_TIME
        nearest = round(multiple)
        if nearest >= 0 and abs(multiple - nearest) < 1e-9:
            return int(nearest)
        return None


@dataclass(frozen=True)
class SpinPulse:
    """Single-spin rotation: ``angle`` about the xy-plane axis at ``phase`` on spin I or S."""

    spin: str
    angle: float
    phase: float

    def __post_init__(self):
        if self.spin not in ("I", "S"):
            raise ValueError(f"spin must be 'I' or 'S', got {self.spin!r}")


IsingElement = IsingDelay | SpinPulse


def ising_evolution(angle: float, coupling_error: float = 0.0) -> np.ndarray:
    """exp(-i angle (1+g) 2 I_z S_z): diagonal phases -+ angle (1+g) / 2 by basis parity."""
    g = _check_coupling_error(coupling_error)
    phases = np.exp(-1j * angle * (1.0 + g) / 2.0 * _PARITY)
    return np.diag(phases)


def spin_unitary(spin: str, u2: np.ndarray) -> np.ndarray:
    """Embed a single-qubit unitary on spin 'I' or 'S' into the two-spin space."""
    if spin == "I":
        return np.kron(u2, IDENTITY2)
    if spin == "S":
        return np.kron(IDENTITY2, u2)
    raise ValueError(f"spin must be 'I' or 'S', got {spin!r}")


def spin_pulse_unitary(pulse: SpinPulse, pulse_length_error: float = 0.0,
                       robust_pulses: bool = False) -> np.ndarray:
    """4x4 unitary of a single-spin pulse, optionally replaced by its BB1 composite.

    With ``robust_pulses`` the rotation is implemented as the five-pulse
    broadband composite for its own angle and phase, so the gate stays
    accurate even when the single-qubit pulses carry their own
    (independent) length error.
    """
    error = ErrorModel(length_error=pulse_length_error)
    if robust_pulses:
        u2 = sequence_unitary(sequences.bb1(pulse.angle, pulse.phase), error)
    else:
        u2 = pulse_unitary(Pulse(pulse.angle, pulse.phase), error)
    return spin_unitary(pulse.spin, u2)


def tilted_generator(phi: float) -> np.ndarray:
    """Generator 2 I_z S_z cos(phi) + 2 I_z S_x sin(phi) of a tilted evolution."""
    return np.cos(phi) * ZZ_GENERATOR + np.sin(phi) * ZX_GENERATOR


def tilted_evolution(theta: float, phi: float, coupling_error: float = 0.0,
                     spin: str = "S") -> np.ndarray:
    """Evolution by ``theta`` about the axis tilted from zz by ``phi`` toward zx.

    Realised as (-phi) y rotation, coupling delay, (+phi) y rotation; only
    the delay angle scales with the coupling error, the sandwich rotations
    are error-free.  At any error the result equals the direct exponential
    of the tilted generator for the scaled angle.
    """
    before = spin_pulse_unitary(SpinPulse(spin, phi, MINUS_Y))
    after = spin_pulse_unitary(SpinPulse(spin, phi, PLUS_Y))
    return after @ ising_evolution(theta, coupling_error) @ before


def simple_ising_gate(coupling_error: float = 0.0) -> np.ndarray:
    """The bare pi/2 coupling evolution (free evolution for a time 2t = 1/2J)."""
    return ising_evolution(np.pi / 2, coupling_error)


def robust_ising_elements(spin: str = "S") -> list[IsingElement]:
    """Element list of the robust controlled-phase gate, in time order.

    Delays of 1, 4, 8, 4, 1 units of t = 1/4J interleaved with six y
    rotations of angle arccos(-1/8): the survivors after the back-to-back
    rotations of adjacent tilted-evolution sandwiches annihilate or merge
    (each merged 2 phi rotation is written as two phi boxes).
    """
    phi = sequences.bb1_phase(np.pi / 2)
    unit = ANGLE_PER_UNIT_TIME
    minus = SpinPulse(spin, phi, MINUS_Y)
    plus = SpinPulse(spin, phi, PLUS_Y)
    return [
        IsingDelay(1 * unit),
        minus,
        IsingDelay(4 * unit),
        minus,
        minus,
        IsingDelay(8 * unit),
        plus,
        plus,
        IsingDelay(4 * unit),
        plus,
        IsingDelay(1 * unit),
    ]


def element_unitary(element: IsingElement, coupling_error: float = 0.0,
                    pulse_length_error: float = 0.0,
                    robust_pulses: bool = False) -> np.ndarray:
    if isinstance(element, IsingDelay):
        return ising_evolution(element.angle, coupling_error)
    return spin_pulse_unitary(element, pulse_length_error, robust_pulses)


def elements_unitary(elements, coupling_error: float = 0.0,
                     pulse_length_error: float = 0.0,
                     robust_pulses: bool = False) -> np.ndarray:
    """Time-ordered product of element unitaries (later elements on the left)."""
    u = IDENTITY4.copy()
    for element in elements:
        u = element_unitary(element, coupling_error, pulse_length_error, robust_pulses) @ u
    return u


def robust_ising_gate(coupling_error: float = 0.0, robust_pulses: bool = False,
                      pulse_length_error: float = 0.0, spin: str = "S") -> np.ndarray:
    """The composite pi/2 coupling evolution, robust to coupling-strength errors.

    At zero error it collapses to :func:`simple_ising_gate` exactly.  The
    ``pulse_length_error`` channel perturbs the sandwich rotations
    independently of the coupling error; setting ``robust_pulses`` replaces
    each of them by its own broadband composite so that the whole gate is
    built from robust components.
    """
    return elements_unitary(robust_ising_elements(spin), coupling_error,
                            pulse_length_error, robust_pulses)


def propagator_fidelity(v, u) -> float:
    """|Tr(V U^dag)| / Tr(U U^dag): global-phase-invariant overlap of propagators."""
    v = np.asarray(v, dtype=complex)
    u = np.asarray(u, dtype=complex)
    if v.shape != u.shape or v.ndim != 2 or v.shape[0] != v.shape[1]:
        raise ValueError(f"expected equal square matrices, got {v.shape} and {u.shape}")
    overlap = abs(np.trace(v @ u.conj().T))
    return float(min(overlap / np.trace(u @ u.conj().T).real, 1.0))


def controlled_phase(coupling_error: float = 0.0, robust: bool = False,
                     robust_pulses: bool = False, pulse_length_error: float = 0.0,
                     spin: str = "S") -> np.ndarray:
    """Controlled-phase gate: the (simple or robust) pi/2 coupling evolution
    dressed with error-free local -pi/2 z rotations on both spins."""
    if robust:
        gate = robust_ising_gate(coupling_error, robust_pulses, pulse_length_error, spin)
    else:
        gate = simple_ising_gate(coupling_error)
    return CPHASE_DRESSING @ gate


def cnot_from_cphase(coupling_error: float = 0.0, robust: bool = False,
                     robust_pulses: bool = False, pulse_length_error: float = 0.0,
                     spin: str = "S") -> np.ndarray:
    """Controlled-NOT (control I, target S): Hadamards on S around the controlled-phase."""
    cphase = controlled_phase(coupling_error, robust, robust_pulses, pulse_length_error, spin)
    return _HADAMARD_ON_S @ cphase @ _HADAMARD_ON_S
