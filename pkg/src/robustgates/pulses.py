"""Single-qubit pulses with systematic errors and Bloch-vector dynamics.

Rotation convention: a rotation by ``theta`` about a unit axis ``n`` acts
on states as ``exp(-i theta (n . sigma) / 2)``, so with product operators
``I_k = sigma_k / 2`` an ideal 90-degree y pulse maps I_z to I_x
(excitation) and an ideal 180-degree x pulse maps I_z to -I_z (inversion).
Both facts are pinned by sign-convention tests; every other sign in the
package follows from them.

A real pulse of nominal angle ``theta`` and phase ``phi`` under the error
model (``length_error`` g, ``off_resonance`` f) evolves under the tilted,
rescaled generator

    (1 + g) (I_x cos phi + I_y sin phi) + f I_z

for the nominal angle: it rotates by ``theta * sqrt((1+g)^2 + f^2)`` about
the unit vector along ``((1+g) cos phi, (1+g) sin phi, f)``.  The same
(g, f) pair applies to every pulse of a sequence -- the errors are
systematic, not random.  Bloch vectors are plain length-3 float arrays
holding the (I_x, I_y, I_z) coefficients of the state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import quaternions
from .quaternions import Quaternion

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY2 = np.eye(2, dtype=complex)

Z_AXIS = np.array([0.0, 0.0, 1.0])

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class ErrorModel:
    """Systematic pulse errors: fractional rotation-rate error and off-resonance fraction.

    ``length_error`` scales every rotation angle by (1 + length_error) and
    must be >= -1 (the rotation rate cannot go negative); ``off_resonance``
    tilts the rotation axis out of the xy plane toward +z.
    """

    length_error: float = 0.0
    off_resonance: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.length_error) or not np.isfinite(self.off_resonance):
            raise ValueError("error fractions must be finite")
        if self.length_error < -1.0:
            raise ValueError(f"length_error must be >= -1, got {self.length_error}")


NO_ERROR = ErrorModel()


@dataclass(frozen=True)
class Pulse:
    """One sequence element: an rf pulse (axis in the xy plane) or a free-evolution delay.

    ``angle`` is the nominal rotation angle in radians (>= 0).  For rf
    pulses ``phase`` sets the rotation axis azimuth (0 = +x, pi/2 = +y) and
    is stored reduced to [0, 2*pi).  A ``delay`` element is an exact z
    rotation by ``angle``, untouched by either error channel.
    """

    angle: float
    phase: float = 0.0
    kind: str = "rf"

    def __post_init__(self):
        if self.kind not in ("rf", "delay"):
            raise ValueError(f"unknown pulse kind {self.kind!r}")
        if not np.isfinite(self.angle) or self.angle < 0:
            raise ValueError(f"nominal angle must be finite and >= 0, got {self.angle}")
        object.__setattr__(self, "angle", float(self.angle))
        object.__setattr__(self, "phase", float(self.phase) % TWO_PI)


def rotation_unitary(angle: float, axis) -> np.ndarray:
    """Closed-form ``exp(-i angle (axis . sigma) / 2)`` for a unit axis."""
    c = np.cos(0.5 * angle)
    s = np.sin(0.5 * angle)
    nx, ny, nz = axis
    return np.array([[c - 1j * s * nz, -s * (ny + 1j * nx)],
                     [s * (ny - 1j * nx), c + 1j * s * nz]])


def state_from_angles(theta: float, phi: float) -> np.ndarray:
    """Bloch vector (sin t cos p, sin t sin p, cos t) of the state at polar angles (theta, phi)."""
    st = np.sin(theta)
    return np.array([st * np.cos(phi), st * np.sin(phi), np.cos(theta)])


def pulse_unitary(pulse: Pulse, error: ErrorModel = NO_ERROR) -> np.ndarray:
    """2x2 unitary implemented by one pulse under the given systematic errors.

    The tilted generator is exponentiated in closed form (half-angle
    formula for traceless 2x2 Hermitian generators); a scaling-and-squaring
    matrix exponential is kept test-side as an independent oracle.
    """
    if pulse.kind == "delay":
        return rotation_unitary(pulse.angle, Z_AXIS)
    g = error.length_error
    f = error.off_resonance
    field = np.array([(1.0 + g) * np.cos(pulse.phase), (1.0 + g) * np.sin(pulse.phase), f])
    magnitude = float(np.linalg.norm(field))
    if pulse.angle == 0.0 or magnitude == 0.0:
        return IDENTITY2.copy()
    return rotation_unitary(pulse.angle * magnitude, field / magnitude)


def sequence_unitary(pulses: Sequence[Pulse], error: ErrorModel = NO_ERROR) -> np.ndarray:
    """Time-ordered product of the element unitaries (later pulses multiply on the left)."""
    if len(pulses) == 0:
        raise ValueError("pulse sequence must not be empty")
    u = IDENTITY2.copy()
    for pulse in pulses:
        u = pulse_unitary(pulse, error) @ u
    return u


def sequence_quaternion(pulses: Sequence[Pulse], error: ErrorModel = NO_ERROR) -> Quaternion:
    """Quaternion of the net rotation a pulse sequence implements."""
    return quaternions.from_unitary(sequence_unitary(pulses, error))


def apply_to_state(u, bloch) -> np.ndarray:
    """Bloch vector of ``u rho u^dag`` for the state with Bloch vector ``bloch``."""
    u = np.asarray(u, dtype=complex)
    if np.max(np.abs(u @ u.conj().T - np.eye(2))) > quaternions.INPUT_TOL:
        raise ValueError("matrix is not unitary")
    x, y, z = np.asarray(bloch, dtype=float)
    rho = 0.5 * (IDENTITY2 + x * SIGMA_X + y * SIGMA_Y + z * SIGMA_Z)
    rho = u @ rho @ u.conj().T
    return np.array([np.trace(rho @ SIGMA_X).real,
                     np.trace(rho @ SIGMA_Y).real,
                     np.trace(rho @ SIGMA_Z).real])


def inversion_efficiency(pulses: Sequence[Pulse], length_error: float) -> float:
    """Component of the final state along -I_z when the sequence acts on I_z.

    The initial state is the north pole (0, 0, 1); only the pulse-length
    error channel is active.  A perfect inversion scores 1, doing nothing
    scores -1.
    """
    u = sequence_unitary(pulses, ErrorModel(length_error=length_error))
    return float(-apply_to_state(u, Z_AXIS)[2])
