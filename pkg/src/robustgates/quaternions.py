"""Unit-quaternion algebra for single-qubit rotations.

A rotation by ``theta`` about a unit axis ``a`` is stored as the pair
``{scalar, vector} = {cos(theta/2), sin(theta/2) * a}``.  The sign-flipped
pair ``{-s, -v}`` describes the same physical rotation (the angles differ
by a full turn), which is why :func:`fidelity` takes an absolute value.

Composition takes its arguments in time order: ``compose(q1, q2)`` is the
rotation "q1 first, then q2" and corresponds to the unitary product
``u2 @ u1`` under the map of :func:`to_unitary`.  With the axis-angle
convention above this is the Hamilton product of q2 with q1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: tolerance met by the algebraic identities of this module
ALGEBRA_TOL = 1e-12
#: tolerance used when validating caller-supplied inputs
INPUT_TOL = 1e-9
#: unitarity tolerance for matrices entering :func:`from_unitary`
UNITARY_TOL = 1e-10


@dataclass(frozen=True)
class Quaternion:
    """Rotation quaternion with a real scalar part and a real 3-vector part."""

    scalar: float
    vector: np.ndarray

    def __post_init__(self):
        vec = np.asarray(self.vector, dtype=float)
        if vec.shape != (3,):
            raise ValueError(f"vector part must have shape (3,), got {vec.shape}")
        object.__setattr__(self, "scalar", float(self.scalar))
        object.__setattr__(self, "vector", vec.copy())

    @property
    def components(self) -> np.ndarray:
        """The four components as the array (scalar, x, y, z)."""
        return np.array([self.scalar, *self.vector])

    def norm(self) -> float:
        return float(np.sqrt(self.scalar**2 + self.vector @ self.vector))

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.scalar, -self.vector)


def _require_unit(q: Quaternion, name: str) -> None:
    if abs(q.norm() - 1.0) > INPUT_TOL:
        raise ValueError(f"{name} must be a unit quaternion, got |q| = {q.norm():.12g}")


def from_axis_angle(theta: float, axis) -> Quaternion:
    """Quaternion of the rotation by ``theta`` radians about unit ``axis``."""
    axis = np.asarray(axis, dtype=float)
    if axis.shape != (3,):
        raise ValueError(f"axis must be a 3-vector, got shape {axis.shape}")
    length = float(np.linalg.norm(axis))
    if abs(length - 1.0) > INPUT_TOL:
        raise ValueError(f"rotation axis must be a unit vector, got |axis| = {length:.12g}")
    half = 0.5 * theta
    return Quaternion(np.cos(half), np.sin(half) * axis)


def compose(first: Quaternion, second: Quaternion) -> Quaternion:
    """Quaternion of the rotation "``first``, then ``second``".

    Matches the unitary product ``to_unitary(second) @ to_unitary(first)``,
    i.e. later rotations multiply on the left, exactly as pulse sequences
    are applied in time order.
    """
    _require_unit(first, "first")
    _require_unit(second, "second")
    s1, v1 = first.scalar, first.vector
    s2, v2 = second.scalar, second.vector
    return Quaternion(s1 * s2 - v1 @ v2, s1 * v2 + s2 * v1 + np.cross(v2, v1))


def fidelity(q1: Quaternion, q2: Quaternion) -> float:
    """Rotation overlap ``|s1*s2 + v1 . v2|`` in [0, 1].

    The absolute value is essential: it makes the sign-equivalent pairs
    {s, v} and {-s, -v} compare as the identical rotation.
    """
    _require_unit(q1, "q1")
    _require_unit(q2, "q2")
    return float(min(abs(q1.scalar * q2.scalar + q1.vector @ q2.vector), 1.0))


def to_unitary(q: Quaternion) -> np.ndarray:
    """The SU(2) matrix ``s*1 - i v.sigma`` of the rotation ``q``."""
    s = q.scalar
    x, y, z = q.vector
    return np.array([[s - 1j * z, -y - 1j * x],
                     [y - 1j * x, s + 1j * z]])


def from_unitary(u) -> Quaternion:
    """Quaternion of the rotation a 2x2 unitary implements.

    The global phase is removed by dividing by a square root of the
    determinant.  The branch of the square root leaves an overall sign
    ambiguity; it is fixed deterministically (first non-negligible
    component made positive) and is physically irrelevant because
    :func:`fidelity` takes an absolute value.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {u.shape}")
    if np.max(np.abs(u @ u.conj().T - np.eye(2))) > UNITARY_TOL:
        raise ValueError("matrix is not unitary")
    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    su = u / np.sqrt(det)
    s = 0.5 * (su[0, 0] + su[1, 1]).real
    v = np.array([
        -0.5 * (su[0, 1] + su[1, 0]).imag,
        0.5 * (su[1, 0] - su[0, 1]).real,
        0.5 * (su[1, 1] - su[0, 0]).imag,
    ])
    for component in (s, v[0], v[1], v[2]):
        if abs(component) > 1e-12:
            if component < 0:
                s, v = -s, -v
            break
    return Quaternion(s, v)
