"""Builders for named composite rotation sequences.

Three families are provided:

* ``naive``: the bare single pulse.
* ``conventional_inversion``: the classic 90y 180x 90y composite.  It
  improves inversion of I_z but leaves the gate fidelity exactly equal to
  the naive pulse -- it redistributes errors over the Bloch sphere rather
  than removing them.
* ``bb1``: the broadband BB1 family.  A theta pulse is replaced by

      (theta*p)_0  180_phi  360_{3 phi}  180_phi  (theta*(1-p))_0

  with phi = arccos(-theta / 4 pi) (positive branch) and p the cluster
  position.  At zero error the central 180/360/180 cluster collapses to
  the identity; with pulse-length errors its net effect cancels the
  second- and fourth-order error terms of the outer rotation.  The cluster
  may sit anywhere inside the base pulse without changing the fidelity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .pulses import Pulse

FAMILY_NAMES = ("naive", "conventional_inversion", "bb1")


def naive(theta: float, phase: float = 0.0) -> list[Pulse]:
    """Single-pulse sequence [theta_phase]."""
    return [Pulse(theta, phase)]


def conventional_inversion() -> list[Pulse]:
    """The 90y 180x 90y composite inversion sequence, in time order."""
    half = np.pi / 2
    return [Pulse(half, half), Pulse(np.pi, 0.0), Pulse(half, half)]


def bb1_phase(theta: float) -> float:
    """BB1 phase angle arccos(-theta / 4 pi), positive branch, for theta in [0, 2 pi]."""
    if not 0.0 <= theta <= 2.0 * np.pi:
        raise ValueError(f"target angle must lie in [0, 2 pi], got {theta}")
    return float(np.arccos(-theta / (4.0 * np.pi)))


def bb1_template(theta: float, phi1: float, phi2: float, phase: float = 0.0,
                 cluster_position: float = 0.5) -> list[Pulse]:
    """BB1-shaped five-pulse sequence with free cluster phases.

    The base theta rotation at ``phase`` is split at ``cluster_position``
    around the 180/360/180 cluster, whose phases are ``phi1`` and ``phi2``
    shifted rigidly by ``phase``.  Used directly by the phase solver, which
    treats (phi1, phi2) as unknowns.
    """
    if not np.isfinite(theta) or theta < 0:
        raise ValueError(f"target angle must be finite and >= 0, got {theta}")
    if not 0.0 <= cluster_position <= 1.0:
        raise ValueError(f"cluster position must lie in [0, 1], got {cluster_position}")
    return [
        Pulse(theta * cluster_position, phase),
        Pulse(np.pi, phi1 + phase),
        Pulse(2.0 * np.pi, phi2 + phase),
        Pulse(np.pi, phi1 + phase),
        Pulse(theta * (1.0 - cluster_position), phase),
    ]


def bb1(theta: float, phase: float = 0.0, cluster_position: float = 0.5) -> list[Pulse]:
    """BB1 composite for a theta rotation at ``phase``, phases phi and 3 phi."""
    phi1 = bb1_phase(theta)
    return bb1_template(theta, phi1, 3.0 * phi1, phase, cluster_position)


def _match_scalar(g, values):
    return float(values) if np.ndim(g) == 0 else values


def naive_not_fidelity(g):
    """Quaternion fidelity |cos(pi g / 2)| of a naive 180x pulse used as a NOT gate."""
    return _match_scalar(g, np.abs(np.cos(np.pi * np.asarray(g) / 2.0)))


def bb1_fidelity_closed_form(g):
    """Closed-form quaternion fidelity of the BB1 NOT gate (theta = pi).

    Equals (150 cos(g pi/2) - 25 cos(3 g pi/2) + 3 cos(5 g pi/2)) / 128 in
    magnitude; both the g^2 and g^4 terms of its expansion vanish, leaving
    a leading infidelity of 5 pi^6 g^6 / 1024.
    """
    x = np.pi * np.asarray(g) / 2.0
    value = (150.0 * np.cos(x) - 25.0 * np.cos(3.0 * x) + 3.0 * np.cos(5.0 * x)) / 128.0
    return _match_scalar(g, np.abs(value))


def naive_not_infidelity_series(g):
    """Leading-order infidelity pi^2 g^2 / 8 of the naive NOT gate."""
    return _match_scalar(g, np.pi**2 * np.asarray(g) ** 2 / 8.0)


def bb1_not_infidelity_series(g):
    """Leading-order infidelity 5 pi^6 g^6 / 1024 of the BB1 NOT gate."""
    return _match_scalar(g, 5.0 * np.pi**6 * np.asarray(g) ** 6 / 1024.0)


def relative_durations(pulses) -> list[int] | None:
    """Element durations as integer multiples of a common unit, or None.

    Durations are proportional to the nominal angles (one rf amplitude for
    the whole sequence).  Returns the smallest integer multiples when all
    angles are commensurate -- e.g. the BB1 90-degree composite comes out as
    [1, 4, 8, 4, 1] -- and None when they are not, which flags a sequence
    whose relative pulse timings cannot sit on a common clock grid.
    """
    fractions = []
    for pulse in pulses:
        frac = Fraction(pulse.angle / np.pi).limit_denominator(384)
        if abs(float(frac) - pulse.angle / np.pi) > 1e-9:
            return None
        fractions.append(frac)
    denominator = 1
    for frac in fractions:
        denominator = denominator * frac.denominator // gcd(denominator, frac.denominator)
    counts = [int(frac * denominator) for frac in fractions]
    unit = 0
    for count in counts:
        unit = gcd(unit, count)
    if unit == 0:
        return counts
    return [count // unit for count in counts]


@dataclass(frozen=True)
class SequenceFamily:
    """A named composite family plus its target rotation parameters.

    ``cluster_position`` only matters for the bb1 family; the conventional
    inversion composite ignores the target parameters (it is defined for
    the 180x inversion only).
    """

    name: str
    target_angle: float = np.pi
    target_phase: float = 0.0
    cluster_position: float = 0.5

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise ValueError(f"unknown sequence family {self.name!r}")

    def build(self) -> list[Pulse]:
        if self.name == "naive":
            return naive(self.target_angle, self.target_phase)
        if self.name == "conventional_inversion":
            return conventional_inversion()
        return bb1(self.target_angle, self.target_phase, self.cluster_position)
