"""Coordinates, qubit matrices, and angle arithmetic on the Bloch sphere.

Conventions used throughout the package:

* Spherical coordinates follow ISO 80000-2: ``r`` is the vector norm,
  ``theta_el`` is the elevation (polar) angle measured from the +z axis in
  [0, pi], and ``phi_az`` is the azimuth measured from the +x axis in the
  atan2 range (-pi, pi].
* Within ``POLE_EPS`` of a pole the azimuth is defined to be exactly 0, so
  downstream discrepancy values stay deterministic.
* Angles are compared on the circle: ``angle_distance`` returns the shorter
  arc between two directions and is therefore bounded by pi.
"""

from __future__ import annotations

from math import atan2, cos, hypot, pi, sin
from typing import NamedTuple

import numpy as np

# Radius below which a vector's xy-projection counts as "on the pole".
POLE_EPS = 1e-12

# Validation tolerance for preconditions (unit norm, Hermiticity).
VALIDATION_TOL = 1e-9


class Spherical(NamedTuple):
    """ISO 80000-2 spherical triple (r, theta_el, phi_az)."""

    r: float
    theta_el: float
    phi_az: float


class EulerAngles(NamedTuple):
    """z-y-z rotation triple (phi, theta, psi), radians.

    Canonical ranges (0 <= phi <= 2pi, 0 <= theta <= pi, 0 <= psi <= 4pi)
    are documented but not enforced: the extrema search deliberately sweeps
    all three over [0, 2pi).
    """

    phi: float
    theta: float
    psi: float


def cartesian_to_spherical(v) -> Spherical:
    """Convert a 3-vector to ISO spherical coordinates.

    The zero vector maps to Spherical(0, 0, 0); this degenerate result is
    documented rather than an error.
    """
    x, y, z = (float(c) for c in v)
    rho = hypot(x, y)
    r = hypot(rho, z)
    if r == 0.0:
        return Spherical(0.0, 0.0, 0.0)
    theta_el = atan2(rho, z)
    phi_az = 0.0 if rho < POLE_EPS else atan2(y, x)
    return Spherical(r, theta_el, phi_az)


def spherical_to_cartesian(s) -> np.ndarray:
    """Inverse of cartesian_to_spherical; accepts any (r, theta_el, phi_az)."""
    r, theta_el, phi_az = (float(c) for c in s)
    st = sin(theta_el)
    return np.array([r * st * cos(phi_az), r * st * sin(phi_az), r * cos(theta_el)])


def qubit_to_matrix(v) -> np.ndarray:
    """Matrix form of a Bloch vector: M = [[z, x-iy], [x+iy, -z]].

    The input must be unit norm (a pure state); M is then Hermitian and
    traceless with eigenvalues +-1.
    """
    x, y, z = (float(c) for c in v)
    norm = hypot(hypot(x, y), z)
    if abs(norm - 1.0) > VALIDATION_TOL:
        raise ValueError(f"qubit vector must be unit norm, got |v| = {norm!r}")
    return np.array([[z, x - 1j * y], [x + 1j * y, -z]])


def matrix_to_cartesian(m) -> np.ndarray:
    """Recover the Bloch vector from a Hermitian traceless 2x2 matrix.

    q1 = Re(m12 + m21)/2, q2 = Re((m21 - m12)/2i), q3 = Re(m11).
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if (
        abs(m[0, 0] - np.conj(m[0, 0])) > VALIDATION_TOL
        or abs(m[1, 1] - np.conj(m[1, 1])) > VALIDATION_TOL
        or abs(m[0, 1] - np.conj(m[1, 0])) > VALIDATION_TOL
        or abs(m[0, 0] + m[1, 1]) > VALIDATION_TOL
    ):
        raise ValueError("matrix is not Hermitian traceless")
    q1 = ((m[0, 1] + m[1, 0]) / 2.0).real
    q2 = ((m[1, 0] - m[0, 1]) / 2j).real
    q3 = m[0, 0].real
    return np.array([q1, q2, q3])


def angle_distance(a: float, b: float) -> float:
    """Shorter arc between two directions: min(|a-b| mod 2pi, 2pi - that).

    Symmetric, bounded by pi, invariant under adding 2*pi*k to either
    argument, and a metric on the circle.
    """
    d = abs(a - b) % (2.0 * pi)
    return min(d, 2.0 * pi - d)
