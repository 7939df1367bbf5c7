"""The two rotation pipelines: SU(2) conjugation and 3x3 Euler matrices.

Both pipelines realise the same z-y-z rotation and are interchangeable:

* ``rotate_su2(v, su2_from_euler(a))`` conjugates the qubit matrix of ``v``
  by the unitary U(phi, theta, psi).
* ``rotate_euler(v, euler_matrix(a))`` multiplies ``v`` as a row vector
  onto S(phi, theta, psi) = S3(psi) @ S2(theta) @ S1(phi).

The correspondence was pinned down numerically: conjugation by U equals the
row-vector action v @ S exactly (not the transposed action).  The anchor is
the single rotation (0, 0.2, 0) applied to (1, 0, 0), which both pipelines
send to (cos 0.2, 0, -sin 0.2) = (0.980067, 0, -0.198669).  Equivalently,
as an operator on column vectors both pipelines apply
Rz(phi) @ Ry(theta) @ Rz(psi).
"""

from __future__ import annotations

from math import cos, sin

import numpy as np

from .bloch import matrix_to_cartesian, qubit_to_matrix

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

AXIS_NORM_TOL = 1e-12


def su2_from_euler(angles) -> np.ndarray:
    """SU(2) matrix U(phi, theta, psi) for a z-y-z rotation."""
    phi, theta, psi = (float(a) for a in angles)
    c, s = cos(theta / 2.0), sin(theta / 2.0)
    return np.array(
        [
            [np.exp(-0.5j * (phi + psi)) * c, -np.exp(-0.5j * (phi - psi)) * s],
            [np.exp(0.5j * (phi - psi)) * s, np.exp(0.5j * (phi + psi)) * c],
        ]
    )


def su2_from_axis(axis, angle: float) -> np.ndarray:
    """SU(2) rotation about a unit axis: cos(a/2) I - i sin(a/2) (n . sigma)."""
    n = np.asarray(axis, dtype=float)
    norm = float(np.linalg.norm(n))
    if abs(norm - 1.0) > AXIS_NORM_TOL:
        raise ValueError(f"rotation axis must be unit norm, got |n| = {norm!r}")
    half = float(angle) / 2.0
    n_dot_sigma = n[0] * SIGMA_X + n[1] * SIGMA_Y + n[2] * SIGMA_Z
    return cos(half) * SIGMA_0 - 1j * sin(half) * n_dot_sigma


def rotate_su2(v, u: np.ndarray) -> np.ndarray:
    """Rotate a unit vector by conjugating its qubit matrix: U M U^dagger."""
    m = qubit_to_matrix(v)
    u = np.asarray(u, dtype=complex)
    return matrix_to_cartesian(u @ m @ u.conj().T)


def _z_factor(a: float) -> np.ndarray:
    return np.array(
        [[cos(a), sin(a), 0.0], [-sin(a), cos(a), 0.0], [0.0, 0.0, 1.0]]
    )


def _y_factor(a: float) -> np.ndarray:
    return np.array(
        [[cos(a), 0.0, -sin(a)], [0.0, 1.0, 0.0], [sin(a), 0.0, cos(a)]]
    )


def euler_matrix(angles) -> np.ndarray:
    """Three-factor z-y-z rotation matrix S3(psi) @ S2(theta) @ S1(phi).

    Acts on row vectors: w = v @ S.
    """
    phi, theta, psi = (float(a) for a in angles)
    return _z_factor(psi) @ _y_factor(theta) @ _z_factor(phi)


def rotate_euler(v, s: np.ndarray) -> np.ndarray:
    """Row-vector rotation w = v @ S."""
    return np.asarray(v, dtype=float) @ np.asarray(s, dtype=float)
